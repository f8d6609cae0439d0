#include "entcorr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <Eigen/SVD>

namespace entcorr {

namespace {

void validate_proper_subset(const std::vector<int>& subset, int n_qubits) {
    if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
    if (static_cast<int>(subset.size()) >= n_qubits)
        throw std::invalid_argument("subset must be a proper subset of 1..n");
    int prev = 0;
    for (int q : subset) {
        if (q <= prev)
            throw std::invalid_argument("subset labels must be strictly increasing");
        if (q > n_qubits) throw std::out_of_range("qubit label out of range");
        prev = q;
    }
}

// Amplitude matrix of the bipartition: rows indexed by the subset's bits,
// columns by the complement's bits, both in ascending label order.
Eigen::MatrixXcd amplitude_matrix(const PureState& state,
                                  const std::vector<int>& subset) {
    const int n = state.n_qubits();
    std::vector<int> complement;
    for (int q = 1; q <= n; ++q)
        if (!std::binary_search(subset.begin(), subset.end(), q))
            complement.push_back(q);

    const auto rows = Eigen::Index{1} << subset.size();
    const auto cols = Eigen::Index{1} << complement.size();
    Eigen::MatrixXcd a(rows, cols);
    for (std::size_t b = 0; b < state.dim(); ++b) {
        Eigen::Index r = 0, c = 0;
        for (int q : subset) r = (r << 1) | state.bit_value(b, q);
        for (int q : complement) c = (c << 1) | state.bit_value(b, q);
        a(r, c) = state.amplitudes()[b];
    }
    return a;
}

}  // namespace

DensityMatrix DensityMatrix::make(int n_qubits, Eigen::MatrixXcd entries) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
    const auto dim = Eigen::Index{1} << n_qubits;
    if (entries.rows() != dim || entries.cols() != dim)
        throw std::invalid_argument("density matrix must be 2^n x 2^n");
    if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("density matrix is not Hermitian within 1e-10");
    if (std::abs(entries.trace() - cplx{1.0, 0.0}) > 1e-10)
        throw std::invalid_argument("density matrix trace must be 1 within 1e-10");
    return DensityMatrix(n_qubits, std::move(entries));
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_,
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix reduced_density(const PureState& state,
                              const std::vector<int>& subset) {
    validate_proper_subset(subset, state.n_qubits());
    const Eigen::MatrixXcd a = amplitude_matrix(state, subset);
    Eigen::MatrixXcd rho = a * a.adjoint();
    // clean the tiny trace drift so the constructor invariant is exact
    rho /= rho.trace().real();
    return DensityMatrix::make(static_cast<int>(subset.size()), std::move(rho));
}

double purity(const DensityMatrix& dm) {
    // tr(rho^2) = squared Frobenius norm for Hermitian rho
    return dm.entries().squaredNorm();
}

bool is_product_across(const PureState& state, const std::vector<int>& subset,
                       double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    return purity(reduced_density(state, subset)) >= 1.0 - eps;
}

EntanglementPartition oracle_partition(const PureState& state, double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    const int n = state.n_qubits();
    std::vector<std::vector<int>> blocks;

    // Smallest product factor first, then recurse into both sides.
    std::function<void(const std::vector<int>&)> split =
        [&](const std::vector<int>& group) {
            const int g = static_cast<int>(group.size());
            if (g == 1) {
                blocks.push_back(group);
                return;
            }
            std::vector<int> pick;
            for (int k = 1; k <= g / 2; ++k) {
                pick.assign(k, 0);
                std::iota(pick.begin(), pick.end(), 0);
                while (true) {
                    std::vector<int> sub(k);
                    for (int i = 0; i < k; ++i) sub[i] = group[pick[i]];
                    if (is_product_across(state, sub, eps)) {
                        std::vector<int> rest;
                        for (int q : group)
                            if (!std::binary_search(sub.begin(), sub.end(), q))
                                rest.push_back(q);
                        split(sub);
                        split(rest);
                        return;
                    }
                    int i = k - 1;
                    while (i >= 0 && pick[i] == g - (k - i)) --i;
                    if (i < 0) break;
                    ++pick[i];
                    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                }
            }
            blocks.push_back(group);  // no product split: entangled block
        };

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    if (n == 1)
        blocks.push_back(all);
    else
        split(all);

    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return EntanglementPartition{n, std::move(blocks), eps};
}

SchmidtSplit schmidt_split(const PureState& state, const std::vector<int>& subset,
                           double rank_threshold) {
    validate_proper_subset(subset, state.n_qubits());
    const Eigen::MatrixXcd a = amplitude_matrix(state, subset);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& sv = svd.singularValues();
    std::vector<double> coefficients(sv.data(), sv.data() + sv.size());
    int rank = 0;
    for (double c : coefficients)
        if (c > rank_threshold) ++rank;
    return SchmidtSplit{subset, std::move(coefficients), rank};
}

DensityMatrix pure_projector(const PureState& state) {
    const Eigen::Map<const Eigen::VectorXcd> v(state.amplitudes().data(),
                                               static_cast<Eigen::Index>(state.dim()));
    Eigen::MatrixXcd rho = v * v.adjoint();
    return DensityMatrix::make(state.n_qubits(), std::move(rho));
}

}  // namespace entcorr
