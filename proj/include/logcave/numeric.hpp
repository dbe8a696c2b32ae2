#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace logcave {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline std::string to_decimal(const Rat& v) {
    Rat c(v);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "p/q" or a plain integer string. Throws std::invalid_argument on junk.
Rat parse_rational(const std::string& s);

std::vector<std::string> to_decimal_strings(const std::vector<Int>& values);

}  // namespace logcave
