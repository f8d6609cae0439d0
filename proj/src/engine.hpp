// engine.hpp -- internal caching layer for correlation tensor evaluation.
// Caches only memoize results of deterministic computations, so any mix of
// shared or per-thread engines produces bit-identical values.

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "entcorr/state.hpp"

namespace entcorr::detail {

// 2 bits per qubit label: 0 = identity, 1 = x, 2 = y, 3 = z.
using AssignmentCode = std::uint64_t;

inline AssignmentCode encode_entry(int qubit, Axis axis) {
    return static_cast<AssignmentCode>(static_cast<int>(axis) + 1)
           << (2 * (qubit - 1));
}

inline AssignmentCode encode(const std::vector<AxisEntry>& entries) {
    AssignmentCode code = 0;
    for (const auto& [q, axis] : entries) code |= encode_entry(q, axis);
    return code;
}

class CorrelationEngine {
public:
    explicit CorrelationEngine(const PureState& state) : state_(&state) {
        lambdas_.assign(static_cast<std::size_t>(3) * state.n_qubits(), kUnset);
    }

    const PureState& state() const { return *state_; }

    double lambda(int qubit, Axis axis);

    // <prod sigma> for the encoded assignment
    double raw(AssignmentCode code);

    // covariance tensor entry M; entries must be strictly increasing labels
    double m(const std::vector<AxisEntry>& entries);

    // M minus, over every partition of the positions into >= 2 blocks each of
    // size >= 2, the product of the blocks' own M' values. The recursion makes
    // M' vanish identically on block-factorized states; with plain M block
    // factors that property breaks first at k = 6 against a 4 + 2 split.
    double m_prime(const std::vector<AxisEntry>& entries);

private:
    static constexpr double kUnset = -2.0;  // lambdas lie in [-1, 1]

    const std::vector<std::vector<std::vector<int>>>& partitions_for(int k);

    const PureState* state_;
    std::vector<double> lambdas_;
    std::unordered_map<AssignmentCode, double> raw_cache_;
    std::unordered_map<AssignmentCode, double> m_cache_;
    std::unordered_map<AssignmentCode, double> mp_cache_;
    std::unordered_map<int, std::vector<std::vector<std::vector<int>>>>
        partitions_cache_;
};

// Partitions of {0..k-1} into >= 2 blocks, each of size >= 2, in a fixed
// deterministic order. Blocks are sorted; the first block holds element 0.
std::vector<std::vector<std::vector<int>>> canonical_partitions_min2(int k);

}  // namespace entcorr::detail
