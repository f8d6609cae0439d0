// measure.hpp
// Entanglement magnitude B^(m): the sum of squared M' entries over a qubit
// subset, optionally normalized by the GHZ value for the same subset size.

#pragma once

#include <vector>

#include "entcorr/correlation.hpp"
#include "entcorr/state.hpp"

namespace entcorr {

struct MeasureReport {
    std::vector<int> subset;
    double raw;
    double normalized;
    double reference;  // GHZ value used for normalization
};

// sum of squares of all 3^|subset| M' entries, |subset| >= 2
double b_measure(const PureState& state, const std::vector<int>& subset);

// b_measure of GHZ(m) on all m qubits; computed, never hard-coded, so the
// normalization tracks the adopted partition-sum reading.
double ghz_reference(int m);

double b_normalized(const PureState& state, const std::vector<int>& subset);

MeasureReport measure_report(const PureState& state,
                             const std::vector<int>& subset);

}  // namespace entcorr
