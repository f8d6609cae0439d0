// correlation.hpp
// Quantum correlation tensors: single-qubit expectations lambda, the
// covariance-style tensor M = <prod (sigma - lambda)>, and the
// partition-corrected tensor M' that subtracts every factorized contribution
// (all disjoint partitions of the index set into blocks of size >= 2, each
// block contributing its own corrected M').

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entcorr/state.hpp"

namespace entcorr {

// Ordered Pauli index list (i_1..i_k on qubits a_1 < a_2 < ... < a_k).
struct PauliAssignment {
    std::vector<AxisEntry> entries;

    std::size_t size() const { return entries.size(); }

    // strictly increasing labels, all within 1..n
    void validate(int n_qubits) const;

    static PauliAssignment of(std::vector<AxisEntry> entries);
    // e.g. from_axes({1,2,4}, "xzy")
    static PauliAssignment from_axes(const std::vector<int>& qubits,
                                     std::string_view axes);
};

enum class TensorKind { M, MPrime };

std::string to_string(TensorKind kind);

// Dense real tensor over all 3^|subset| axis choices, lexicographic order
// x < y < z with the first subset qubit as the most significant digit.
struct CorrelationTensor {
    std::vector<int> subset;
    TensorKind kind;
    std::vector<double> values;
    double epsilon;  // zero threshold used by consumers

    std::size_t index_of(const std::vector<Axis>& axes) const;
    double at(std::string_view axes) const;

    // flat index -> axis word, e.g. 5 -> "xyz" for k = 3
    static std::string axes_string(std::size_t flat_index, std::size_t k);
};

// One disjoint partition of assignment positions into blocks.
struct BlockPartition {
    std::vector<std::vector<int>> blocks;
};

// <sigma_axis(qubit)> (local Bloch-vector component)
double lambda_value(const PureState& state, int qubit, Axis axis);

// <prod_j (sigma_{i_j}(a_j) - lambda_{i_j}(a_j))>, evaluated by the
// inclusion-exclusion expansion over sub-assignments. Identically 0 for a
// single entry.
double m_value(const PureState& state, const PauliAssignment& assignment);

// All partitions of the given positions into >= 2 blocks, each of size >= 2.
// Empty for k = 2 and k = 3 (hence M' = M there). Deterministic order.
std::vector<BlockPartition> partitions_min2(const std::vector<int>& positions);

// M minus the sum over partitions_min2 of products of the blocks' own M'
// values. The blocks enter corrected (recursively), which is what makes M'
// vanish identically on states that factorize across the subset; feeding the
// blocks' plain M breaks that from k = 6 upward (a 4 + 2 product split keeps
// residual pair-pair-pair terms).
double m_prime_value(const PureState& state,
                     const PauliAssignment& assignment);

struct ScanOptions {
    double epsilon = 1e-9;
    // Evaluate grid entries on multiple threads. Entry values are identical
    // to the serial path bit for bit; order of the output array is fixed.
    bool parallel = false;
};

// Dense tensor of all 3^|subset| values for the subset, |subset| >= 2.
CorrelationTensor tensor_scan(const PureState& state, std::vector<int> subset,
                              TensorKind kind, const ScanOptions& opts = {});

// 0 iff all entries are exactly 0.
double max_abs(const CorrelationTensor& tensor);

}  // namespace entcorr
