// Independent reference implementations used only by the tests: dense-operator
// expectation values via Eigen and brute-force set-partition enumeration.
// Shares no code with the bitwise and recursive paths under test.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "entcorr/state.hpp"

namespace testsupport {

using entcorr::Axis;
using entcorr::AxisEntry;
using entcorr::cplx;
using entcorr::PureState;

inline Eigen::VectorXcd to_vector(const PureState& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s.amplitudes()[i];
    }
    return v;
}

inline Eigen::Matrix2cd pauli(Axis a) {
    Eigen::Matrix2cd m;
    switch (a) {
        case Axis::X:
            m << cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0};
            break;
        case Axis::Y:
            m << cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0};
            break;
        default:
            m << cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-1, 0};
            break;
    }
    return m;
}

// Full 2^n x 2^n embedding of a single-qubit operator; qubit 1 is the leftmost
// tensor factor, matching the big-endian amplitude order.
inline Eigen::MatrixXcd embed(int n, int qubit, const Eigen::Matrix2cd& op) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 1; q <= n; ++q) {
        const Eigen::MatrixXcd factor =
            (q == qubit) ? Eigen::MatrixXcd(op)
                         : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity());
        out = Eigen::kroneckerProduct(out, factor).eval();
    }
    return out;
}

inline double expectation(const PureState& s, const Eigen::MatrixXcd& op) {
    const Eigen::VectorXcd v = to_vector(s);
    return ((v.adjoint() * op * v)(0, 0)).real();
}

inline double lambda_ref(const PureState& s, int qubit, Axis a) {
    return expectation(s, embed(s.n_qubits(), qubit, pauli(a)));
}

// M built literally: the dense operator product of (sigma - lambda I).
inline double m_ref(const PureState& s, const std::vector<AxisEntry>& entries) {
    const int n = s.n_qubits();
    const auto dim = static_cast<Eigen::Index>(s.dim());
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& [q, a] : entries) {
        const double lam = lambda_ref(s, q, a);
        acc = acc * (embed(n, q, pauli(a)) -
                     lam * Eigen::MatrixXcd::Identity(dim, dim));
    }
    return expectation(s, acc);
}

using Partition = std::vector<std::vector<int>>;

// Every set partition, generated by assigning each element to an existing
// block or a fresh one (restricted growth strings).
inline std::vector<Partition> all_partitions(const std::vector<int>& xs) {
    std::vector<Partition> out;
    std::vector<int> assign(xs.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == xs.size()) {
            Partition blocks(used);
            for (std::size_t j = 0; j < xs.size(); ++j) {
                blocks[assign[j]].push_back(xs[j]);
            }
            out.push_back(std::move(blocks));
            return;
        }
        for (int b = 0; b <= used; ++b) {
            assign[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

inline std::vector<Partition> partitions_min2_ref(const std::vector<int>& xs) {
    std::vector<Partition> out;
    for (auto& p : all_partitions(xs)) {
        if (p.size() < 2) continue;
        const bool ok = std::all_of(p.begin(), p.end(), [](const auto& b) {
            return b.size() >= 2;
        });
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

// Recursive correction: every partition block enters with its own corrected
// value, so the result vanishes on block-factorized states.
inline double m_prime_ref(const PureState& s,
                          const std::vector<AxisEntry>& entries) {
    double val = m_ref(s, entries);
    std::vector<int> pos(entries.size());
    std::iota(pos.begin(), pos.end(), 0);
    for (const Partition& p : partitions_min2_ref(pos)) {
        double prod = 1.0;
        for (const auto& blk : p) {
            std::vector<AxisEntry> sub;
            sub.reserve(blk.size());
            for (int i : blk) sub.push_back(entries[i]);
            prod *= m_prime_ref(s, sub);
        }
        val -= prod;
    }
    return val;
}

// Sorted-blocks, sorted-list canonical form for order-insensitive comparison.
inline Partition canon(Partition blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

}  // namespace testsupport
