#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "logcave/matroid.hpp"
#include "logcave/monomial.hpp"
#include "logcave/polytope.hpp"

namespace logcave {

enum class MuRoute { Arrangement, Monomial, GenericIsolated };

// Milnor-number profile (mu^0..mu^n) of a homogeneous h, tagged with the
// computation route; mu^0 = 1 always.
struct MuProfile {
    std::vector<Int> values;
    int ambient_dim = 0;  // n
    MuRoute route = MuRoute::Monomial;
};

// Central hyperplane arrangement given by linear forms in n+1 coordinates.
// Forms must be nonzero and pairwise non-proportional (reduced input).
struct Arrangement {
    explicit Arrangement(std::vector<std::vector<Rat>> linear_forms);

    int num_coords() const { return static_cast<int>(forms[0].size()); }
    std::vector<std::vector<Rat>> forms;
};

// mu^i from the arrangement's matroid: chi_M, deconed by (q-1), absolute
// coefficients top-down, zero-padded when the arrangement is not essential.
MuProfile mu_arrangement(const Arrangement& a);

// mu^i = e_i(m | J_h) for a monomial h, via the mixed multiplicity engine.
MuProfile mu_monomial(const Exponents& h_exponents);

// Projective degree-d hypersurface with isolated singularities:
// mu^i = (d-1)^i below the top, mu^n corrected by the local Milnor numbers.
MuProfile mu_generic_isolated(long d, int n, const std::vector<Int>& local_milnor_numbers);

// Coefficients (c_0..c_n) of sum_i (-1)^i mu^i H^i (1+H)^{n-i} mod H^{n+1}.
std::vector<Int> csm_class(const MuProfile& mu);

Int euler_characteristic(const MuProfile& mu);

struct KouchnirenkoRow {
    std::optional<Int> lower;  // b_i when known
    Int mu;
    Int upper;  // MV_n(Delta^{n-i}, Delta_h^i)
    bool lower_ok = true;  // vacuously true when lower is absent
    bool upper_ok = false;
};

struct KouchnirenkoReport {
    std::vector<KouchnirenkoRow> rows;
    bool all_pass = false;
};

// Audits b_i <= mu^i <= MV_n(Delta^{n-i}, Delta_h^i). Betti numbers are
// taken from the caller, or from the profile itself on the arrangement
// route where equality is a theorem.
KouchnirenkoReport kouchnirenko_audit(const MuProfile& mu, const LatticePolytope& delta_h,
                                      const std::optional<std::vector<Int>>& betti = std::nullopt);

// Deletion/restriction triple: mu^i(h) = mu^i(h') + mu^{i-1}(h'') for all
// 0 < i <= n, where h' drops the distinguished form and h'' restricts the
// rest to its hyperplane.
bool triple_recursion_check(const Arrangement& a, int distinguished_form_index);

}  // namespace logcave
