#include "chaincactus/polynomial.hpp"

#include "oracle.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <random>

using namespace chaincactus;

TEST_SUITE("polynomial") {

TEST_CASE("add") {
    CHECK(add(UniPoly{1, 1}, UniPoly{1, 2}) == UniPoly{2, 3});
    const UniPoly p{3, 0, 7};
    CHECK(add(p, UniPoly{}) == p);
    CHECK(add(UniPoly{1, 4, 3}, UniPoly{1, 5, 6, 1}) == UniPoly{2, 9, 9, 1});
}

TEST_CASE("sub") {
    CHECK(sub(UniPoly{2, 3}, UniPoly{1, 1}) == UniPoly{1, 2});
    const UniPoly p{1, 6, 9, 2};
    CHECK(sub(p, p).is_zero());
    CHECK(sub(p, p).coeffs().empty());
    CHECK(sub(UniPoly{1, 2}, UniPoly{1, 4}) == UniPoly{0, -2});
}

TEST_CASE("mul") {
    CHECK(mul(UniPoly{1, 1}, UniPoly{1, 1}) == UniPoly{1, 2, 1});
    const UniPoly p{1, 6, 9, 2};
    CHECK(mul(p, UniPoly::one()) == p);
    CHECK(mul(p, UniPoly{}).is_zero());
}

TEST_CASE("mul matches the subset oracle on two disjoint P_4") {
    oracle::EdgeList two_paths;
    two_paths.vertices = 8;
    two_paths.edges = {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}};
    const auto counted = test_support::from_counts(oracle::count_by_subset(two_paths));
    const UniPoly expected{1, 8, 22, 24, 9};
    CHECK(counted == expected);
    CHECK(mul(UniPoly{1, 4, 3}, UniPoly{1, 4, 3}) == expected);
}

TEST_CASE("shift and unshift") {
    CHECK(shift(UniPoly{1, 1}, 1) == UniPoly{0, 1, 1});
    const UniPoly p{5, 0, 2};
    CHECK(shift(p, 0) == p);
    CHECK(shift(UniPoly::one(), 2) == UniPoly{0, 0, 1});
    CHECK(shift(UniPoly{}, 3).is_zero());
    CHECK(unshift(UniPoly{0, 0, 4, 1}, 2) == UniPoly{4, 1});
    CHECK_THROWS_AS(unshift(UniPoly{1, 1}, 1), std::domain_error);
}

TEST_CASE("eval_at_one") {
    CHECK(eval_at_one(UniPoly{1, 6, 9, 2}) == 18);
    CHECK(eval_at_one(UniPoly{}) == 0);
    CHECK(eval_at_one(UniPoly{1, 4, 3}) == 8);
}

TEST_CASE("degree_and_leading") {
    auto d = degree_and_leading(UniPoly{1, 6, 9, 2});
    CHECK(d.degree == 3);
    CHECK(d.leading == 2);
    d = degree_and_leading(UniPoly::one());
    CHECK(d.degree == 0);
    CHECK(d.leading == 1);
    d = degree_and_leading(UniPoly{1, 5, 5});
    CHECK(d.degree == 2);
    CHECK(d.leading == 5);
    CHECK_THROWS_WITH_AS(degree_and_leading(UniPoly{}), "degree undefined", std::domain_error);
}

TEST_CASE("dominates") {
    CHECK(dominates(UniPoly{1, 4, 3}, UniPoly{1, 5, 6, 1}) == Dominance::strictly_dominated);
    CHECK(dominates(UniPoly{1, 5, 6, 1}, UniPoly{1, 4, 3}) == Dominance::strictly_dominates);
    CHECK(dominates(UniPoly{1, 4, 3}, UniPoly{1, 4, 3}) == Dominance::equal);
    CHECK(dominates(UniPoly{1, 2}, UniPoly{2, 1}) == Dominance::incomparable);
    // zero padding: a negative top term on the longer side
    CHECK(dominates(UniPoly{1, 1}, UniPoly{1, 1, -1}) == Dominance::strictly_dominates);
    CHECK(is_dominated(UniPoly{1, 4, 3}, UniPoly{1, 4, 3}));
    CHECK_FALSE(is_dominated(UniPoly{1, 2}, UniPoly{2, 1}));
}

TEST_CASE("text rendering") {
    CHECK(to_string(UniPoly{1, 6, 9, 2}) == "1 + 6*x + 9*x^2 + 2*x^3");
    CHECK(to_string(UniPoly{0, -2}) == "-2*x");
    CHECK(to_string(UniPoly{1, 0, -3}) == "1 - 3*x^2");
    CHECK(to_string(UniPoly{}) == "0");
}

TEST_CASE("big coefficients do not overflow") {
    UniPoly p{1, 1};
    for (int i = 0; i < 7; ++i) p = p * p; // (1+x)^128
    CHECK(p.coeff(64).get_str() == "23951146041928082866135587776380551750");  // C(128,64)
    CHECK(eval_at_one(p) == BigInt(1) << 128);
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937_64 rng(20261014);
    for (int iter = 0; iter < 300; ++iter) {
        const auto a = test_support::random_poly(rng, 8, 50);
        const auto b = test_support::random_poly(rng, 8, 50);
        const auto c = test_support::random_poly(rng, 8, 50);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
        CHECK((a - b) + b == a);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(degree_and_leading(a * b).degree == degree_and_leading(a).degree + degree_and_leading(b).degree);
        }
    }
}

TEST_CASE("strict dominance of nonnegative polynomials implies a smaller value at one") {
    std::mt19937_64 rng(7);
    int strict = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        auto a = test_support::random_poly(rng, 5, 3);
        auto b = test_support::random_poly(rng, 5, 3);
        std::vector<BigInt> ca = a.coeffs(), cb = b.coeffs();
        for (auto& v : ca) v = abs(v);
        for (auto& v : cb) v = abs(v);
        a = UniPoly(ca);
        b = UniPoly(cb);
        if (dominates(a, b) == Dominance::strictly_dominated) {
            ++strict;
            CHECK(eval_at_one(a) < eval_at_one(b));
        }
    }
    CHECK(strict > 20);
}

TEST_CASE("independence polynomial boundary check") {
    CHECK(is_independence_polynomial(UniPoly{1, 6, 9, 2}, 6));
    CHECK_FALSE(is_independence_polynomial(UniPoly{1, 6, 9, 2}, 5));
    CHECK_FALSE(is_independence_polynomial(UniPoly{1, 2, -1}, 2));
    CHECK(is_independence_polynomial(UniPoly::one(), 0));
}

}
