#include "logcave/poly.hpp"

#include <algorithm>

namespace logcave {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::constant(Int c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(Int c, size_t k) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPolynomial::evaluate(const Int& q) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial divide_by_q_minus_1(const IntPolynomial& p) {
    if (p.is_zero()) return IntPolynomial();
    if (p.evaluate(1) != 0) throw NotDivisible();
    // Synthetic division at q = 1, quotient in descending order.
    const auto& c = p.coeffs();
    std::vector<Int> quot(c.size() - 1, Int(0));
    Int carry = c.back();
    for (size_t k = c.size() - 1; k > 0; --k) {
        quot[k - 1] = carry;
        carry += c[k - 1];
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial interpolate(const std::vector<std::pair<Int, Int>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate requires at least one point");
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate requires distinct abscissae");
        }
    }
    // Newton's divided differences, exact rationals throughout.
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rat(points[i].second);
    std::vector<std::vector<Rat>> table(1, dd);
    for (size_t level = 1; level < n; ++level) {
        std::vector<Rat> next(n - level);
        for (size_t i = 0; i + level < n; ++i) {
            Rat num = table[level - 1][i + 1] - table[level - 1][i];
            Rat den = Rat(points[i + level].first - points[i].first);
            next[i] = num / den;
        }
        table.push_back(std::move(next));
    }
    // Expand sum dd_k * (q - x_0)...(q - x_{k-1}).
    std::vector<Rat> acc(n, Rat(0));
    std::vector<Rat> basis(1, Rat(1));  // running Newton basis product
    for (size_t k = 0; k < n; ++k) {
        const Rat& lead = table[k][0];
        for (size_t i = 0; i < basis.size(); ++i) acc[i] += lead * basis[i];
        if (k + 1 < n) {
            std::vector<Rat> nb(basis.size() + 1, Rat(0));
            Rat x(points[k].first);
            for (size_t i = 0; i < basis.size(); ++i) {
                nb[i + 1] += basis[i];
                nb[i] -= x * basis[i];
            }
            basis = std::move(nb);
        }
    }
    std::vector<Int> coeffs(n);
    for (size_t i = 0; i < n; ++i) {
        acc[i].canonicalize();
        if (acc[i].get_den() != 1) throw NonIntegerCoefficients();
        coeffs[i] = acc[i].get_num();
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace logcave
