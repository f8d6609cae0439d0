#include "entcorr/mixed.hpp"

#include <cmath>
#include <stdexcept>

namespace entcorr {

namespace {

Eigen::Matrix2cd pauli_matrix(Axis axis) {
    Eigen::Matrix2cd m;
    switch (axis) {
        case Axis::X: m << 0, 1, 1, 0; break;
        case Axis::Y: m << 0, cplx{0, -1}, cplx{0, 1}, 0; break;
        case Axis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// product observable with identity padding; factors[q-1] may be empty
Eigen::MatrixXcd product_operator(int n_qubits,
                                  const std::vector<Eigen::Matrix2cd>& factors) {
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 1; q <= n_qubits; ++q) op = kron(op, factors[q - 1]);
    return op;
}

double real_trace_product(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& op,
                          double imag_tol) {
    const cplx t = (rho * op).trace();
    if (std::abs(t.imag()) > imag_tol)
        throw std::logic_error("trace has imaginary residue");
    return t.real();
}

}  // namespace

double m_value_rho(const DensityMatrix& rho, const PauliAssignment& assignment) {
    const int n = rho.n_qubits();
    assignment.validate(n);

    std::vector<Eigen::Matrix2cd> factors(n, Eigen::Matrix2cd::Identity());
    for (const auto& [q, axis] : assignment.entries) {
        std::vector<Eigen::Matrix2cd> single(n, Eigen::Matrix2cd::Identity());
        single[q - 1] = pauli_matrix(axis);
        const double lambda =
            real_trace_product(rho.entries(), product_operator(n, single), 1e-10);
        factors[q - 1] = pauli_matrix(axis) - lambda * Eigen::Matrix2cd::Identity();
    }
    return real_trace_product(rho.entries(), product_operator(n, factors), 1e-10);
}

DensityMatrix werner(double fidelity) {
    if (fidelity < 0.0 || fidelity > 1.0)
        throw std::invalid_argument("Werner fidelity must lie in [0, 1]");
    Eigen::Vector4cd singlet;
    const double r = 1.0 / std::sqrt(2.0);
    singlet << 0, r, -r, 0;
    const Eigen::Matrix4cd proj = singlet * singlet.adjoint();
    const Eigen::Matrix4cd rho =
        fidelity * proj + (1.0 - fidelity) / 3.0 * (Eigen::Matrix4cd::Identity() - proj);
    return DensityMatrix::make(2, rho);
}

std::vector<WernerPoint> werner_scan(const std::vector<double>& grid) {
    std::vector<WernerPoint> out;
    out.reserve(grid.size());
    for (double f : grid) {
        const DensityMatrix rho = werner(f);
        double best = 0.0;
        for (Axis a : {Axis::X, Axis::Y, Axis::Z})
            for (Axis b : {Axis::X, Axis::Y, Axis::Z}) {
                // two entries, so M' coincides with M
                const double v =
                    m_value_rho(rho, PauliAssignment::of({{1, a}, {2, b}}));
                best = std::max(best, std::abs(v));
            }
        out.push_back(WernerPoint{f, best});
    }
    return out;
}

}  // namespace entcorr
