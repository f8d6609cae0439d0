#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "entcorr/measure.hpp"
#include "entcorr/state.hpp"

using namespace entcorr;
using doctest::Approx;

TEST_CASE("raw reference values") {
    for (int v = 1; v <= 4; ++v) {
        CHECK(b_measure(bell_state(v), {1, 2}) == Approx(3.0).epsilon(1e-10));
    }
    CHECK(b_measure(ghz_state(3), {1, 2, 3}) == Approx(4.0).epsilon(1e-10));
    CHECK(b_measure(ghz_state(4), {1, 2, 3, 4}) ==
          Approx(12.0).epsilon(1e-10));
}

TEST_CASE("normalized values for the named four-qubit states") {
    const std::vector<int> all = {1, 2, 3, 4};
    CHECK(b_normalized(ghz_state(4), all) == Approx(1.0).epsilon(1e-9));
    CHECK(b_normalized(w_state(4), all) ==
          Approx(51.0 / 256.0).epsilon(1e-9));
    CHECK(b_normalized(dicke_state(4, 2), all) ==
          Approx(7.0 / 27.0).epsilon(1e-9));
    CHECK(b_normalized(phi4_cluster_state(), all) ==
          Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("ghz_reference is the measure of the GHZ state itself") {
    for (const int m : {2, 3, 4, 5}) {
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 1);
        CHECK(ghz_reference(m) ==
              Approx(b_measure(ghz_state(m), all)).epsilon(1e-12));
    }
    CHECK(ghz_reference(2) == Approx(3.0).epsilon(1e-10));
    CHECK_THROWS_AS(ghz_reference(1), std::invalid_argument);
}

TEST_CASE("b_measure on sub-subsets") {
    const PureState prod = tensor_product(bell_state(1), bell_state(1));
    CHECK(b_measure(prod, {1, 2}) == Approx(3.0).epsilon(1e-10));
    CHECK(b_measure(prod, {3, 4}) == Approx(3.0).epsilon(1e-10));
    CHECK(b_measure(prod, {1, 3}) <= 1e-15);
    // all cross correlations are partition-corrected away
    CHECK(b_measure(prod, {1, 2, 3, 4}) <= 1e-15);

    CHECK_THROWS_AS(b_measure(prod, {1}), std::invalid_argument);
    CHECK_THROWS_AS(b_measure(prod, {}), std::invalid_argument);
}

TEST_CASE("invariance under local unitaries") {
    const std::vector<int> all = {1, 2, 3, 4};
    for (const PureState& s : {ghz_state(4), w_state(4), dicke_state(4, 2),
                               phi4_cluster_state()}) {
        const double base = b_measure(s, all);
        PureState rotated = s;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const int qubit = static_cast<int>(seed % 4) + 1;
            rotated = apply_local_unitary(
                rotated, random_local_unitary(qubit, seed * 1000 + qubit));
            CHECK(b_measure(rotated, all) == Approx(base).epsilon(1e-9));
        }
    }
}

TEST_CASE("measure_report bundles raw and normalized values") {
    const MeasureReport r = measure_report(w_state(4), {1, 2, 3, 4});
    CHECK(r.subset == std::vector<int>{1, 2, 3, 4});
    CHECK(r.raw == Approx(51.0 / 256.0 * 12.0).epsilon(1e-9));
    CHECK(r.reference == Approx(12.0).epsilon(1e-10));
    CHECK(r.normalized == Approx(r.raw / r.reference).epsilon(1e-14));
}
