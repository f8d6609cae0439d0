#include "entcorr/measure.hpp"

#include <numeric>
#include <stdexcept>

namespace entcorr {

double b_measure(const PureState& state, const std::vector<int>& subset) {
    const auto tensor = tensor_scan(state, subset, TensorKind::MPrime);
    double sum = 0.0;
    for (double v : tensor.values) sum += v * v;
    return sum;
}

double ghz_reference(int m) {
    if (m < 2) throw std::invalid_argument("GHZ reference needs m >= 2");
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 1);
    return b_measure(ghz_state(m), all);
}

double b_normalized(const PureState& state, const std::vector<int>& subset) {
    return b_measure(state, subset) / ghz_reference(static_cast<int>(subset.size()));
}

MeasureReport measure_report(const PureState& state,
                             const std::vector<int>& subset) {
    const double raw = b_measure(state, subset);
    const double reference = ghz_reference(static_cast<int>(subset.size()));
    return MeasureReport{subset, raw, raw / reference, reference};
}

}  // namespace entcorr
