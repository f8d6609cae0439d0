#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "entcorr/correlation.hpp"
#include "entcorr/state.hpp"
#include "support.hpp"

using namespace entcorr;
using doctest::Approx;

namespace {

std::vector<Axis> axes_of(std::size_t flat, std::size_t k) {
    std::vector<Axis> axes(k);
    for (std::size_t j = k; j-- > 0;) {
        axes[j] = static_cast<Axis>(flat % 3);
        flat /= 3;
    }
    return axes;
}

}  // namespace

TEST_CASE("PauliAssignment validation") {
    CHECK_NOTHROW(PauliAssignment::of({{1, Axis::X}, {3, Axis::Z}}).validate(3));
    CHECK_THROWS_AS(PauliAssignment::of({}).validate(2), std::invalid_argument);
    CHECK_THROWS_AS(
        PauliAssignment::of({{2, Axis::X}, {1, Axis::Z}}).validate(3),
        std::invalid_argument);
    CHECK_THROWS_AS(
        PauliAssignment::of({{1, Axis::X}, {1, Axis::Z}}).validate(3),
        std::invalid_argument);
    CHECK_THROWS_AS(PauliAssignment::of({{1, Axis::X}, {4, Axis::Z}}).validate(3),
                    std::out_of_range);
    CHECK_THROWS_AS(PauliAssignment::from_axes({1, 2}, "x"),
                    std::invalid_argument);
    CHECK_THROWS_AS(PauliAssignment::from_axes({1, 2}, "xq"),
                    std::invalid_argument);
    const PauliAssignment a = PauliAssignment::from_axes({1, 2, 4}, "xzy");
    CHECK(a.entries ==
          std::vector<AxisEntry>{{1, Axis::X}, {2, Axis::Z}, {4, Axis::Y}});
}

TEST_CASE("lambda_value matches the dense oracle") {
    for (const int n : {2, 3}) {
        const PureState s = haar_random_state(n, 20 + n);
        for (int q = 1; q <= n; ++q) {
            for (const Axis a : {Axis::X, Axis::Y, Axis::Z}) {
                CHECK(lambda_value(s, q, a) ==
                      Approx(testsupport::lambda_ref(s, q, a)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("m_value: single entries vanish, pairs match known Bell values") {
    const PureState s = haar_random_state(3, 31);
    for (int q = 1; q <= 3; ++q) {
        for (const Axis a : {Axis::X, Axis::Y, Axis::Z}) {
            CHECK(m_value(s, PauliAssignment::of({{q, a}})) == 0.0);
        }
    }

    const PureState phi = bell_state(1);
    CHECK(m_value(phi, PauliAssignment::from_axes({1, 2}, "xx")) == Approx(1.0));
    CHECK(m_value(phi, PauliAssignment::from_axes({1, 2}, "yy")) == Approx(-1.0));
    CHECK(m_value(phi, PauliAssignment::from_axes({1, 2}, "zz")) == Approx(1.0));
    CHECK(std::abs(m_value(phi, PauliAssignment::from_axes({1, 2}, "xz"))) <=
          1e-15);
}

TEST_CASE("m_value matches the dense operator oracle") {
    for (const std::uint64_t seed : {41ull, 42ull}) {
        const PureState s = haar_random_state(4, seed);
        const std::vector<std::vector<int>> subsets = {
            {1, 2}, {2, 4}, {1, 2, 3}, {1, 3, 4}, {1, 2, 3, 4}};
        for (const auto& subset : subsets) {
            std::size_t grid = 1;
            for (std::size_t j = 0; j < subset.size(); ++j) grid *= 3;
            for (std::size_t flat = 0; flat < grid; flat += 5) {
                std::vector<AxisEntry> entries;
                const auto axes = axes_of(flat, subset.size());
                for (std::size_t j = 0; j < subset.size(); ++j) {
                    entries.push_back({subset[j], axes[j]});
                }
                CHECK(m_value(s, PauliAssignment::of(entries)) ==
                      Approx(testsupport::m_ref(s, entries)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("partitions_min2 matches brute-force enumeration") {
    CHECK(partitions_min2({1, 2}).empty());
    CHECK(partitions_min2({1, 2, 3}).empty());
    CHECK_THROWS_AS(partitions_min2({1}), std::invalid_argument);

    const std::map<int, std::size_t> counts = {
        {4, 3}, {5, 10}, {6, 40}, {7, 161}, {8, 714}};
    for (const auto& [k, want] : counts) {
        std::vector<int> xs(k);
        std::iota(xs.begin(), xs.end(), 0);
        const auto got = partitions_min2(xs);
        CHECK(got.size() == want);
        CHECK(testsupport::partitions_min2_ref(xs).size() == want);
    }

    // same partitions as the oracle, not just the same count
    for (const int k : {4, 5, 6}) {
        std::vector<int> xs(k);
        std::iota(xs.begin(), xs.end(), 0);
        std::vector<testsupport::Partition> got;
        for (const BlockPartition& p : partitions_min2(xs)) {
            got.push_back(testsupport::canon(p.blocks));
        }
        std::vector<testsupport::Partition> want;
        for (const auto& p : testsupport::partitions_min2_ref(xs)) {
            want.push_back(testsupport::canon(p));
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }

    // k = 6 block-shape census: (2,4) 15, (3,3) 10, (2,2,2) 15
    std::vector<int> xs(6);
    std::iota(xs.begin(), xs.end(), 0);
    std::map<std::vector<std::size_t>, int> shapes;
    for (const BlockPartition& p : partitions_min2(xs)) {
        std::vector<std::size_t> shape;
        for (const auto& b : p.blocks) shape.push_back(b.size());
        std::sort(shape.begin(), shape.end());
        ++shapes[shape];
    }
    CHECK(shapes[{2, 4}] == 15);
    CHECK(shapes[{3, 3}] == 10);
    CHECK(shapes[{2, 2, 2}] == 15);
}

TEST_CASE("m_prime_value subtracts factorized correlations") {
    SUBCASE("equals M for two and three entries") {
        const PureState s = haar_random_state(3, 77);
        const auto a2 = PauliAssignment::from_axes({1, 3}, "yz");
        const auto a3 = PauliAssignment::from_axes({1, 2, 3}, "xyz");
        CHECK(m_prime_value(s, a2) == Approx(m_value(s, a2)).epsilon(1e-14));
        CHECK(m_prime_value(s, a3) == Approx(m_value(s, a3)).epsilon(1e-14));
    }

    SUBCASE("four entries: the three pair-pair products are removed") {
        const PureState s = haar_random_state(4, 78);
        const std::vector<int> q = {1, 2, 3, 4};
        for (const char* axes : {"xxxx", "zyxz", "yyzz"}) {
            const auto a = PauliAssignment::from_axes(q, axes);
            auto pair = [&](int i, int j) {
                return m_value(s, PauliAssignment::of(
                                      {a.entries[i - 1], a.entries[j - 1]}));
            };
            const double want = m_value(s, a) - pair(1, 2) * pair(3, 4) -
                                pair(1, 3) * pair(2, 4) -
                                pair(1, 4) * pair(2, 3);
            CHECK(m_prime_value(s, a) == Approx(want).epsilon(1e-12));
        }
    }

    SUBCASE("vanishes on a 4 + 2 product state at k = 6") {
        // the reading that feeds plain M for partition blocks leaves residual
        // pair-pair-pair terms here; the recursive correction cancels exactly
        const PureState s =
            tensor_product(haar_random_state(4, 600), haar_random_state(2, 601));
        for (const char* axes : {"xxxxxx", "zyxzyx", "yyzzxy"}) {
            const auto a = PauliAssignment::from_axes({1, 2, 3, 4, 5, 6}, axes);
            CHECK(std::abs(m_prime_value(s, a)) < 1e-12);
        }
    }

    SUBCASE("matches the dense oracle on random words") {
        for (const std::uint64_t seed : {80ull, 81ull}) {
            const PureState s = haar_random_state(4, seed);
            for (const char* axes : {"xyzx", "zzzz", "yxxz"}) {
                const auto a = PauliAssignment::from_axes({1, 2, 3, 4}, axes);
                CHECK(m_prime_value(s, a) ==
                      Approx(testsupport::m_prime_ref(s, a.entries))
                          .epsilon(1e-10));
            }
        }
        const PureState s5 = haar_random_state(5, 82);
        const auto a5 = PauliAssignment::from_axes({1, 2, 3, 4, 5}, "xyzzy");
        CHECK(m_prime_value(s5, a5) ==
              Approx(testsupport::m_prime_ref(s5, a5.entries)).epsilon(1e-10));
    }

    CHECK_THROWS_AS(
        m_prime_value(ghz_state(2), PauliAssignment::of({{1, Axis::X}})),
        std::invalid_argument);
}

TEST_CASE("tensor_scan enumerates the dense grid in lexicographic order") {
    const PureState s = haar_random_state(3, 90);

    const CorrelationTensor m = tensor_scan(s, {1, 2, 3}, TensorKind::M);
    const CorrelationTensor mp =
        tensor_scan(s, {1, 2, 3}, TensorKind::MPrime);
    REQUIRE(m.values.size() == 27);
    REQUIRE(mp.values.size() == 27);
    CHECK(m.kind == TensorKind::M);
    CHECK(mp.kind == TensorKind::MPrime);
    CHECK(m.epsilon == 1e-9);

    CHECK(CorrelationTensor::axes_string(0, 3) == "xxx");
    CHECK(CorrelationTensor::axes_string(5, 3) == "xyz");
    CHECK(CorrelationTensor::axes_string(7, 3) == "xzy");
    CHECK(CorrelationTensor::axes_string(26, 3) == "zzz");

    for (std::size_t flat = 0; flat < 27; ++flat) {
        const auto axes = axes_of(flat, 3);
        CHECK(m.index_of(axes) == flat);
        std::vector<AxisEntry> entries;
        for (std::size_t j = 0; j < 3; ++j) {
            entries.push_back({static_cast<int>(j + 1), axes[j]});
        }
        CHECK(m.values[flat] ==
              Approx(m_value(s, PauliAssignment::of(entries))).epsilon(1e-14));
        CHECK(mp.values[flat] ==
              Approx(m_prime_value(s, PauliAssignment::of(entries)))
                  .epsilon(1e-14));
        CHECK(m.at(CorrelationTensor::axes_string(flat, 3)) == m.values[flat]);
    }

    CHECK(max_abs(mp) > 0.0);

    SUBCASE("subset validation") {
        CHECK_THROWS_AS(tensor_scan(s, {1}, TensorKind::M),
                        std::invalid_argument);
        CHECK_THROWS_AS(tensor_scan(s, {2, 1}, TensorKind::M),
                        std::invalid_argument);
        CHECK_THROWS_AS(tensor_scan(s, {1, 4}, TensorKind::M),
                        std::out_of_range);
    }

    SUBCASE("sub-subset scans use the subset's own grid") {
        const CorrelationTensor pair = tensor_scan(s, {1, 3}, TensorKind::M);
        REQUIRE(pair.values.size() == 9);
        CHECK(pair.at("yz") ==
              Approx(m_value(s, PauliAssignment::from_axes({1, 3}, "yz")))
                  .epsilon(1e-14));
    }
}

TEST_CASE("parallel tensor_scan is bit-identical to serial") {
    const PureState s = haar_random_state(4, 91);
    ScanOptions serial;
    ScanOptions parallel;
    parallel.parallel = true;
    for (const TensorKind kind : {TensorKind::M, TensorKind::MPrime}) {
        const CorrelationTensor a = tensor_scan(s, {1, 2, 3, 4}, kind, serial);
        const CorrelationTensor b =
            tensor_scan(s, {1, 2, 3, 4}, kind, parallel);
        CHECK(a.values == b.values);
    }
}
