#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "logcave/numeric.hpp"

namespace logcave {

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("polynomial is not divisible by (q - 1)") {}
};

struct NonIntegerCoefficients : std::runtime_error {
    NonIntegerCoefficients() : std::runtime_error("interpolation produced non-integer coefficients") {}
};

// Univariate polynomial with exact integer coefficients, stored dense in
// ascending powers of q. The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(Int c);
    // q^k with the given leading coefficient.
    static IntPolynomial monomial(Int c, size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }

    Int evaluate(const Int& q) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    void normalize();
    std::vector<Int> coeffs_;
};

// Exact division by (q - 1). Throws NotDivisible when p(1) != 0.
IntPolynomial divide_by_q_minus_1(const IntPolynomial& p);

// Unique polynomial of degree < #points through the given points.
// Throws NonIntegerCoefficients if the result is not integral, and
// std::invalid_argument on duplicate abscissae.
IntPolynomial interpolate(const std::vector<std::pair<Int, Int>>& points);

}  // namespace logcave
