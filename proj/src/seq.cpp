#include "logcave/seq.hpp"

#include <stdexcept>

namespace logcave {

Sequence::Sequence(std::vector<Int> v, long off) : values(std::move(v)), offset(off) {
    if (values.empty()) throw std::invalid_argument("Sequence must be nonempty");
}

bool is_log_concave(const Sequence& s) {
    const auto& a = s.values;
    for (size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i - 1] * a[i + 1] > a[i] * a[i]) return false;
    }
    return true;
}

bool has_no_internal_zeros(const Sequence& s) {
    const auto& a = s.values;
    size_t lo = 0, hi = a.size();
    while (lo < hi && a[lo] == 0) ++lo;
    while (hi > lo && a[hi - 1] == 0) --hi;
    for (size_t i = lo; i < hi; ++i) {
        if (a[i] == 0) return false;
    }
    return true;
}

bool is_unimodal(const Sequence& s) {
    const auto& a = s.values;
    size_t i = 1;
    while (i < a.size() && a[i - 1] <= a[i]) ++i;
    while (i < a.size() && a[i - 1] >= a[i]) ++i;
    return i >= a.size();
}

bool is_sign_alternating(const Sequence& s) {
    const auto& a = s.values;
    size_t lo = 0, hi = a.size();
    while (lo < hi && a[lo] == 0) ++lo;
    while (hi > lo && a[hi - 1] == 0) --hi;
    if (lo == hi) return true;  // all zero
    int first = sgn(a[lo]);
    for (size_t i = lo; i < hi; ++i) {
        int expected = ((i - lo) % 2 == 0) ? first : -first;
        if (sgn(a[i]) != expected) return false;
    }
    return true;
}

bool power_inequality_holds(const Sequence& s) {
    const auto& a = s.values;
    for (const auto& v : a) {
        if (v < 0) throw std::domain_error("power_inequality_holds requires nonnegative entries");
    }
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                Int lhs = int_pow(a[i], k - j) * int_pow(a[k], j - i);
                Int rhs = int_pow(a[j], k - i);
                if (lhs > rhs) return false;
            }
        }
    }
    return true;
}

}  // namespace logcave
