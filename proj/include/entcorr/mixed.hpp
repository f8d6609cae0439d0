// mixed.hpp
// Density-operator form of the correlation tensor and the two-qubit Werner
// family. Demonstrates the documented mixed-state caveat: the naive M'
// criterion reports correlations inside the separable Werner region
// (nonzero throughout 1/4 < F <= 1/2, vanishing only at F = 1/4).

#pragma once

#include <vector>

#include "entcorr/correlation.hpp"
#include "entcorr/oracle.hpp"

namespace entcorr {

// tr[rho * prod (sigma - lambda)] with lambda_i(a) = tr[rho * sigma_i(a)].
// Agrees with m_value when rho projects onto a pure state.
double m_value_rho(const DensityMatrix& rho, const PauliAssignment& assignment);

// F * |singlet><singlet| + (1-F)/3 * (I - |singlet><singlet|), F in [0,1]
DensityMatrix werner(double fidelity);

struct WernerPoint {
    double fidelity;
    double max_abs_m;  // max |M'| over the 9 two-qubit assignments
};

// Closed form: max_abs_m = |4F - 1| / 3.
std::vector<WernerPoint> werner_scan(const std::vector<double>& grid);

}  // namespace entcorr
