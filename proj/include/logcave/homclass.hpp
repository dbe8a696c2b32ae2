#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "logcave/numeric.hpp"
#include "logcave/monomial.hpp"

namespace logcave {

// Class sum_i e_i [P^{k-i} x P^i] in H_*(P^n x P^m); the valid index range
// is max(0, k-n) <= i <= min(m, k).
struct HomologyClass {
    HomologyClass(int n, int m, int k, std::map<int, Int> coefficients);

    int min_index() const { return std::max(0, k - n); }
    int max_index() const { return std::min(m, k); }
    Int coefficient(int i) const;

    int n, m, k;
    std::map<int, Int> coefficients;
};

enum class Verdict {
    RepresentableExactly,
    NotRepresentable,
    RepresentableUpToMultiple,
    NotRepresentableUpToAnyMultiple,
};

const char* to_string(Verdict v);

struct Witness {
    std::vector<long> lambda;                 // descending positive
    Int multiple;                             // e^r / e_p
    std::vector<Exponents> map_exponents;     // components of the monomial map
    std::vector<Int> predicted_degrees;       // e^i * e_{p+i} / e_p
    int support_offset = 0;                   // p, for embedding bookkeeping
};

// Representability classification: exceptional corner classes are representable
// iff their coefficient is 1; otherwise the verdict is read off the
// nonzero/log-concave/no-internal-zero predicates on the e_i.
Verdict classify(const HomologyClass& xi);

// Monomial-map witness for a RepresentableUpToMultiple class with at least
// two nonzero coefficients. Single-support non-exceptional classes get a
// verdict only (the hypersurface witness is not monomial) and throw here.
Witness construct_witness(const HomologyClass& xi);

// Recomputes the degrees by the monomial-engine and mixed-volume routes and
// compares both against the prediction.
bool verify_witness(const Witness& w);

}  // namespace logcave
