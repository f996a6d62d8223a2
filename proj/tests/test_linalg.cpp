#include <random>

#include "doctest.h"
#include "trignum/linalg.hpp"

using namespace trignum;

namespace {

std::vector<Integer> col(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("rank and nullspace of small systems") {
    auto rn = rank_nullspace({col({1, 0}), col({0, 1}), col({1, 1})});
    CHECK(rn.rank == 2);
    REQUIRE(rn.nullspace.size() == 1);
    CHECK(rn.nullspace[0] == col({1, 1, -1}));

    CHECK(rank_of({col({0, 0, 0})}) == 0);
    CHECK(rank_of({col({2, 4}), col({1, 2})}) == 1);

    auto dep = rank_nullspace({col({2, 4}), col({1, 2})});
    REQUIRE(dep.nullspace.size() == 1);
    CHECK(dep.nullspace[0] == col({1, -2}));
}

TEST_CASE("canonical integer normalization") {
    CHECK(canonical_integer_vector({make_rational(1, 2), make_rational(-1, 3)}) == col({3, -2}));
    CHECK(canonical_integer_vector({Rational(-2), Rational(4)}) == col({1, -2}));
    CHECK(canonical_integer_vector({Rational(0), Rational(0)}) == col({0, 0}));
}

TEST_CASE("nullspace vectors annihilate the columns") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        size_t dim = 1 + rng() % 5, k = 1 + rng() % 6;
        std::vector<std::vector<Integer>> cols(k, std::vector<Integer>(dim));
        for (auto& c : cols)
            for (auto& x : c) x = entry(rng);
        auto rn = rank_nullspace(cols);
        CHECK(rn.rank + static_cast<long>(rn.nullspace.size()) == static_cast<long>(k));
        for (const auto& lambda : rn.nullspace) {
            bool nonzero = false;
            for (const auto& x : lambda) nonzero = nonzero || x != 0;
            CHECK(nonzero);
            for (size_t i = 0; i < dim; ++i) {
                Integer acc(0);
                for (size_t j = 0; j < k; ++j) acc += lambda[j] * cols[j][i];
                CHECK(acc == 0);
            }
        }
    }
}
