#include "doctest.h"
#include "logcave/poly.hpp"

using namespace logcave;

namespace {
IntPolynomial poly(std::vector<long> c) {
    std::vector<Int> w(c.begin(), c.end());
    return IntPolynomial(std::move(w));
}
}  // namespace

TEST_CASE("arithmetic and normalization") {
    IntPolynomial p = poly({1, 2}) * poly({-1, 1});  // (1+2q)(q-1) = -1 - q + 2q^2
    CHECK(p == poly({-1, -1, 2}));
    CHECK((p - p).is_zero());
    CHECK(poly({1, 1}) + poly({1, -1}) == poly({2}));
    CHECK(p.evaluate(3) == 14);
    CHECK(IntPolynomial().degree() == -1);
}

TEST_CASE("division by q-1") {
    IntPolynomial p = poly({-1, 1}) * poly({-2, 1}) * poly({-1, 1});
    IntPolynomial q = divide_by_q_minus_1(p);
    CHECK(q == poly({-1, 1}) * poly({-2, 1}));
    CHECK_THROWS_AS(divide_by_q_minus_1(poly({1, 1})), NotDivisible);
    CHECK(divide_by_q_minus_1(IntPolynomial()).is_zero());
}

TEST_CASE("interpolation") {
    IntPolynomial p = poly({3, 0, -2, 1});
    std::vector<std::pair<Int, Int>> pts;
    for (long q = 0; q < 4; ++q) pts.emplace_back(q, p.evaluate(q));
    CHECK(interpolate(pts) == p);

    std::vector<std::pair<Int, Int>> half{{0, 0}, {2, 1}};
    CHECK_THROWS_AS(interpolate(half), NonIntegerCoefficients);

    std::vector<std::pair<Int, Int>> dup{{1, 1}, {1, 2}};
    CHECK_THROWS_AS(interpolate(dup), std::invalid_argument);
}
