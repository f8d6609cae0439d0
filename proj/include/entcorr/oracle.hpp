// oracle.hpp
// Criterion-free separability oracle: reduced-density purity and Schmidt
// coefficients across bipartitions. Used to cross-validate the correlation
// tensor classifier; shares no code with it.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "entcorr/classify.hpp"
#include "entcorr/state.hpp"

namespace entcorr {

class DensityMatrix {
public:
    // Checks Hermiticity and unit trace within 1e-10.
    static DensityMatrix make(int n_qubits, Eigen::MatrixXcd entries);

    int n_qubits() const { return n_qubits_; }
    const Eigen::MatrixXcd& entries() const { return entries_; }

    // smallest eigenvalue; >= -1e-10 for a valid density matrix
    double min_eigenvalue() const;

private:
    DensityMatrix(int n_qubits, Eigen::MatrixXcd entries)
        : n_qubits_(n_qubits), entries_(std::move(entries)) {}

    int n_qubits_;
    Eigen::MatrixXcd entries_;
};

struct SchmidtSplit {
    std::vector<int> subset;
    std::vector<double> coefficients;  // nonincreasing, squares sum to 1
    int rank;                          // count above threshold

    // rank 1 <=> the state is product across the bipartition
};

// Partial trace over the complement of subset.
DensityMatrix reduced_density(const PureState& state,
                              const std::vector<int>& subset);

// tr(rho^2), in [2^-n, 1]
double purity(const DensityMatrix& dm);

// true iff purity(reduced_density(state, subset)) >= 1 - eps
bool is_product_across(const PureState& state, const std::vector<int>& subset,
                       double eps);

// Finest partition into blocks such that the state is product across every
// block/complement split. Smallest subsets first, first product split found
// is accepted, then both factors are searched recursively.
EntanglementPartition oracle_partition(const PureState& state, double eps);

// Singular values of the amplitude matrix reshaped along the bipartition.
SchmidtSplit schmidt_split(const PureState& state,
                           const std::vector<int>& subset,
                           double rank_threshold = 1e-9);

// |state><state| as a density matrix (pure-state consistency checks).
DensityMatrix pure_projector(const PureState& state);

}  // namespace entcorr
