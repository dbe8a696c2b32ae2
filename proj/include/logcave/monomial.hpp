#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "logcave/numeric.hpp"

namespace logcave {

struct NonStable : std::runtime_error {
    NonStable()
        : std::runtime_error(
              "mixed multiplicity extraction did not stabilize under base-point doubling") {}
};

using Exponents = std::vector<int>;

// Monomial ideal in num_vars ring variables, held as its unique minimal
// (antichain) generating set. The zero ideal is rejected.
class MonomialIdeal {
public:
    MonomialIdeal(int num_vars, std::vector<Exponents> generators);

    int num_vars() const { return num_vars_; }
    const std::vector<Exponents>& gens() const { return gens_; }
    int min_degree() const;
    int max_degree() const;
    bool is_equigenerated() const { return min_degree() == max_degree(); }
    bool is_unit() const;
    bool contains(const Exponents& monomial) const;

    static MonomialIdeal unit(int num_vars);
    // The ideal of all variables.
    static MonomialIdeal irrelevant(int num_vars);

    bool operator==(const MonomialIdeal& o) const {
        return num_vars_ == o.num_vars_ && gens_ == o.gens_;
    }

private:
    int num_vars_;
    std::vector<Exponents> gens_;
};

// Reduce a generating set to the minimal (antichain) generators.
std::vector<Exponents> antichain_reduce(std::vector<Exponents> candidates);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);

// Number of minimal monomial generators of m^u * prod J_k^{v_k}.
// dim I/mI equals the minimal generator count by graded Nakayama, which is
// what makes mixed multiplicities computable from antichains alone.
Int min_gen_count(int u, const std::vector<MonomialIdeal>& ideals, const std::vector<int>& powers);

// Numerator N(t) of the Hilbert series of S/I, as dense coefficients;
// H_{S/I}(T) = sum_j N_j * C(T - j + nvars - 1, nvars - 1).
std::vector<long long> hilbert_numerator(const std::vector<Exponents>& gens, int num_vars);

// dim of the degree-T graded piece of the ideal (not the quotient).
Int ideal_dimension_at(const std::vector<Exponents>& gens, int num_vars, long T);

struct MixedOptions {
    // Base points for the finite-difference probe; 0 selects the default
    // heuristics. The u (irrelevant-ideal) direction must clear the
    // regularity of the J-powers, so it scales with the generator degrees;
    // the v directions stay small and only pay for ideal powers.
    int base_point = 0;
    int v_base_point = 0;
    int max_doublings = 3;  // doublings of both bases tried before NonStable
};

struct MixedMultiplicityProfile {
    int total_degree = 0;                // n = num_vars - 1
    std::map<std::vector<int>, Int> values;  // multi-index (i0..is) -> e_i

    // Diagonal view e_0..e_n for a single ideal (s = 1).
    std::vector<Int> diagonal() const;
};

// All mixed multiplicities e_i(m | J_1..J_s), |i| = n, by mixed finite
// differences of the minimal-generator Hilbert function, certified stable
// under base-point doubling.
MixedMultiplicityProfile mixed_multiplicities(const std::vector<MonomialIdeal>& ideals,
                                              const MixedOptions& opts = {});

// Single multi-index variant.
Int mixed_multiplicity(const std::vector<MonomialIdeal>& ideals, const std::vector<int>& index,
                       const MixedOptions& opts = {});

// Ideal generated by the partial derivatives of the monomial z^h.
MonomialIdeal jacobian_ideal_of_monomial(const Exponents& h_exponents);

}  // namespace logcave
