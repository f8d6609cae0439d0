// classify.hpp
// Sequential separability classification: scan M' over qubit subsets from
// large to small, merge correlated subsets with union-find, and report the
// finest partition of the qubits into entangled blocks.

#pragma once

#include <string>
#include <vector>

#include "entcorr/correlation.hpp"
#include "entcorr/state.hpp"

namespace entcorr {

struct EntanglementPartition {
    int n_qubits;
    // disjoint sorted label lists covering 1..n, ordered by first label
    std::vector<std::vector<int>> blocks;
    double epsilon;
};

bool same_blocks(const EntanglementPartition& a,
                 const EntanglementPartition& b);

struct ClassLabel {
    enum class Kind { TotallyEntangled, PartiallySeparable, CompletelySeparable };
    Kind kind;
    std::vector<int> block_sizes;  // nonincreasing

    // "TotallyEntangled", "PartiallySeparable(3,1)", "CompletelySeparable"
    std::string to_string() const;
};

struct ClassifyOptions {
    double epsilon = 1e-9;
    // Fail-fast guard: the subset scan costs sum over subsets of 3^|S|
    // entries; n = 8 is the documented worst case.
    int max_qubits = 10;
    bool parallel = false;
};

// true iff max |M'| on the subset exceeds eps
bool is_correlated(const PureState& state, const std::vector<int>& subset,
                   double eps);

// Two qubits share a block iff they co-occur in some subset S with
// is_correlated(S). Subsets are scanned in decreasing size (lexicographic
// within a size); subsets already inside one block are skipped.
EntanglementPartition finest_partition(const PureState& state,
                                       const ClassifyOptions& opts = {});

ClassLabel label(const EntanglementPartition& partition);

// One maximal-magnitude M' entry per entangled block.
struct Witness {
    std::vector<int> subset;
    std::string axes;
    double value;
};

std::vector<Witness> witnesses(const PureState& state,
                               const EntanglementPartition& partition);

}  // namespace entcorr
