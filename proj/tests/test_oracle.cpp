#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "entcorr/oracle.hpp"
#include "entcorr/state.hpp"

using namespace entcorr;
using doctest::Approx;

TEST_CASE("DensityMatrix validation") {
    Eigen::MatrixXcd ok = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
    CHECK_NOTHROW(DensityMatrix::make(1, ok));
    CHECK(DensityMatrix::make(1, ok).min_eigenvalue() == Approx(0.5));

    Eigen::MatrixXcd wrong_dim = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
    CHECK_THROWS_AS(DensityMatrix::make(1, wrong_dim), std::invalid_argument);

    Eigen::MatrixXcd not_herm = ok;
    not_herm(0, 1) = cplx{0.1, 0.0};
    CHECK_THROWS_AS(DensityMatrix::make(1, not_herm), std::invalid_argument);

    Eigen::MatrixXcd bad_trace = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(DensityMatrix::make(1, bad_trace), std::invalid_argument);
}

TEST_CASE("pure_projector is a rank-one density matrix") {
    const DensityMatrix rho = pure_projector(ghz_state(2));
    CHECK(rho.n_qubits() == 2);
    CHECK(rho.entries().trace().real() == Approx(1.0));
    CHECK(purity(rho) == Approx(1.0).epsilon(1e-12));
    CHECK(rho.min_eigenvalue() > -1e-10);
}

TEST_CASE("reduced_density of a Bell pair is maximally mixed") {
    const DensityMatrix rho = reduced_density(bell_state(1), {1});
    CHECK(rho.entries().rows() == 2);
    CHECK(std::abs(rho.entries()(0, 0) - cplx{0.5, 0}) < 1e-12);
    CHECK(std::abs(rho.entries()(1, 1) - cplx{0.5, 0}) < 1e-12);
    CHECK(std::abs(rho.entries()(0, 1)) < 1e-12);
    CHECK(purity(rho) == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("purity is symmetric across a bipartition") {
    for (const std::uint64_t seed : {3ull, 4ull, 5ull}) {
        const PureState s = haar_random_state(4, seed);
        const std::vector<std::vector<int>> subsets = {{1}, {2, 4}, {1, 2, 3}};
        for (const auto& subset : subsets) {
            std::vector<int> complement;
            for (int q = 1; q <= 4; ++q) {
                if (std::find(subset.begin(), subset.end(), q) == subset.end())
                    complement.push_back(q);
            }
            CHECK(purity(reduced_density(s, subset)) ==
                  Approx(purity(reduced_density(s, complement)))
                      .epsilon(1e-10));
        }
    }
}

TEST_CASE("purity equals the Schmidt moment sum") {
    const PureState s = haar_random_state(4, 6);
    for (const std::vector<int>& subset :
         {std::vector<int>{1}, {1, 3}, {2, 3, 4}}) {
        const SchmidtSplit split = schmidt_split(s, subset);
        double sum4 = 0.0;
        for (const double c : split.coefficients) sum4 += c * c * c * c;
        CHECK(purity(reduced_density(s, subset)) ==
              Approx(sum4).epsilon(1e-10));
    }
}

TEST_CASE("is_product_across detects bipartite factorization") {
    const PureState prod = tensor_product(bell_state(1), bell_state(1));
    CHECK(is_product_across(prod, {1, 2}, 1e-9));
    CHECK_FALSE(is_product_across(prod, {1, 3}, 1e-9));
    CHECK_FALSE(is_product_across(prod, {1}, 1e-9));
    CHECK_FALSE(is_product_across(ghz_state(3), {2}, 1e-9));
    CHECK(is_product_across(basis_state("010"), {2}, 1e-9));
    CHECK_THROWS_AS(is_product_across(prod, {1, 2}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("subset validation for reductions") {
    const PureState s = ghz_state(3);
    CHECK_THROWS_AS(reduced_density(s, {}), std::invalid_argument);
    CHECK_THROWS_AS(reduced_density(s, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(reduced_density(s, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(reduced_density(s, {1, 4}), std::out_of_range);
}

TEST_CASE("schmidt_split on known states") {
    const double r2 = 1.0 / std::sqrt(2.0);

    const SchmidtSplit bell = schmidt_split(bell_state(1), {1});
    REQUIRE(bell.coefficients.size() == 2);
    CHECK(bell.coefficients[0] == Approx(r2));
    CHECK(bell.coefficients[1] == Approx(r2));
    CHECK(bell.rank == 2);

    const SchmidtSplit ghz = schmidt_split(ghz_state(3), {1});
    CHECK(ghz.rank == 2);
    CHECK(ghz.coefficients[0] == Approx(r2));

    const SchmidtSplit w = schmidt_split(w_state(4), {1, 2});
    CHECK(w.rank == 2);
    CHECK(w.coefficients[0] == Approx(r2));
    CHECK(w.coefficients[1] == Approx(r2));

    const SchmidtSplit prod =
        schmidt_split(tensor_product(basis_state("0"), ghz_state(2)), {1});
    CHECK(prod.rank == 1);
    CHECK(prod.coefficients[0] == Approx(1.0));

    // nonincreasing, squares sum to one
    const SchmidtSplit rnd = schmidt_split(haar_random_state(4, 9), {1, 2});
    double sum2 = 0.0;
    for (std::size_t i = 0; i < rnd.coefficients.size(); ++i) {
        sum2 += rnd.coefficients[i] * rnd.coefficients[i];
        if (i > 0) CHECK(rnd.coefficients[i] <= rnd.coefficients[i - 1]);
    }
    CHECK(sum2 == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("oracle_partition on structured states") {
    using Blocks = std::vector<std::vector<int>>;
    CHECK(oracle_partition(tensor_product(ghz_state(3), basis_state("0")),
                           1e-9)
              .blocks == Blocks{{1, 2, 3}, {4}});
    CHECK(oracle_partition(tensor_product(bell_state(1), bell_state(1)), 1e-9)
              .blocks == Blocks{{1, 2}, {3, 4}});
    CHECK(oracle_partition(basis_state("0000"), 1e-9).blocks ==
          Blocks{{1}, {2}, {3}, {4}});
    CHECK(oracle_partition(ghz_state(4), 1e-9).blocks == Blocks{{1, 2, 3, 4}});
    CHECK(oracle_partition(w_state(4), 1e-9).blocks == Blocks{{1, 2, 3, 4}});
    CHECK(oracle_partition(basis_state("0"), 1e-9).blocks == Blocks{{1}});
    CHECK_THROWS_AS(oracle_partition(ghz_state(2), -1.0),
                    std::invalid_argument);
}

TEST_CASE("oracle_partition recovers planted product structure") {
    for (const std::uint64_t seed : {21ull, 22ull, 23ull}) {
        for (const int n : {2, 3, 4, 5}) {
            const PlantedState p = random_planted_state(n, seed * 31 + n);
            CHECK(oracle_partition(p.state, 1e-7).blocks == p.blocks);
        }
    }
}
