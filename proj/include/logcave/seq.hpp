#pragma once

#include <vector>

#include "logcave/numeric.hpp"

namespace logcave {

// A finite nonempty integer sequence. `offset` is the index of the first
// entry; the predicates below only depend on the values, not the offset.
struct Sequence {
    std::vector<Int> values;
    long offset = 0;

    explicit Sequence(std::vector<Int> v, long off = 0);
};

// a_{i-1} * a_{i+1} <= a_i^2 for every interior index.
bool is_log_concave(const Sequence& s);

// Nonzero entries occupy a contiguous index range. All-zero sequences pass.
bool has_no_internal_zeros(const Sequence& s);

// Weakly rises then weakly falls.
bool is_unimodal(const Sequence& s);

// Nonzero entries carry sign (-1)^i up to a fixed global sign; zeros are
// allowed only at the ends.
bool is_sign_alternating(const Sequence& s);

// e_i^{k-j} e_k^{j-i} <= e_j^{k-i} for all i < j < k.
// Requires nonnegative entries; throws std::domain_error otherwise.
bool power_inequality_holds(const Sequence& s);

}  // namespace logcave
