#include "logcave/milnor.hpp"

#include <algorithm>

namespace logcave {

namespace {

bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    // a, b nonzero: proportional iff a_i b_j = a_j b_i for all i < j.
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

Matroid arrangement_matroid(const Arrangement& a) {
    // Ground set = forms; matrix columns are the form vectors.
    const int nc = a.num_coords();
    std::vector<std::vector<Rat>> rows(nc, std::vector<Rat>(a.forms.size()));
    for (size_t c = 0; c < a.forms.size(); ++c) {
        for (int r = 0; r < nc; ++r) rows[r][c] = a.forms[c][r];
    }
    return from_matrix(rows);
}

MuProfile profile_from_reduced(const IntPolynomial& reduced, int n, MuRoute route) {
    // reduced = chi_M / (q-1), degree r-1; mu^i is |coeff of q^{r-1-i}|,
    // zero-padded for non-essential arrangements.
    MuProfile p;
    p.ambient_dim = n;
    p.route = route;
    p.values.assign(n + 1, Int(0));
    long deg = reduced.degree();
    for (long i = 0; i <= deg && i <= n; ++i) p.values[i] = abs(reduced.coeff(deg - i));
    return p;
}

}  // namespace

Arrangement::Arrangement(std::vector<std::vector<Rat>> linear_forms)
    : forms(std::move(linear_forms)) {
    if (forms.empty()) throw std::invalid_argument("empty arrangement");
    const size_t nc = forms[0].size();
    if (nc == 0) throw std::invalid_argument("forms need at least one coordinate");
    for (const auto& f : forms) {
        if (f.size() != nc) throw std::invalid_argument("form arity mismatch");
        if (std::all_of(f.begin(), f.end(), [](const Rat& x) { return x == 0; }))
            throw std::invalid_argument("zero form");
    }
    for (size_t i = 0; i < forms.size(); ++i) {
        for (size_t j = i + 1; j < forms.size(); ++j) {
            if (proportional(forms[i], forms[j]))
                throw std::invalid_argument("proportional forms (arrangement must be reduced)");
        }
    }
}

MuProfile mu_arrangement(const Arrangement& a) {
    const int n = a.num_coords() - 1;
    IntPolynomial chi = characteristic_polynomial(arrangement_matroid(a));
    return profile_from_reduced(divide_by_q_minus_1(chi), n, MuRoute::Arrangement);
}

MuProfile mu_monomial(const Exponents& h_exponents) {
    const int n = static_cast<int>(h_exponents.size()) - 1;
    MonomialIdeal J = jacobian_ideal_of_monomial(h_exponents);
    MuProfile p;
    p.ambient_dim = n;
    p.route = MuRoute::Monomial;
    p.values = mixed_multiplicities({J}).diagonal();
    return p;
}

MuProfile mu_generic_isolated(long d, int n, const std::vector<Int>& local_milnor_numbers) {
    if (d < 1 || n < 1) throw std::invalid_argument("need d >= 1 and n >= 1");
    Int local_sum = 0;
    for (const Int& m : local_milnor_numbers) {
        if (m <= 0) throw std::invalid_argument("local Milnor numbers must be positive");
        local_sum += m;
    }
    MuProfile p;
    p.ambient_dim = n;
    p.route = MuRoute::GenericIsolated;
    p.values.reserve(n + 1);
    for (int i = 0; i < n; ++i) p.values.push_back(int_pow(Int(d - 1), i));
    Int top = int_pow(Int(d - 1), n) - local_sum;
    if (top < 0) throw std::invalid_argument("local Milnor numbers exceed (d-1)^n");
    p.values.push_back(top);
    return p;
}

std::vector<Int> csm_class(const MuProfile& mu) {
    const int n = mu.ambient_dim;
    std::vector<Int> c(n + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        for (int k = i; k <= n; ++k) {
            Int term = mu.values[i] * binomial(n - i, k - i);
            c[k] += i % 2 == 0 ? term : -term;
        }
    }
    return c;
}

Int euler_characteristic(const MuProfile& mu) {
    Int e = 0;
    for (size_t i = 0; i < mu.values.size(); ++i) e += i % 2 == 0 ? mu.values[i] : -mu.values[i];
    return e;
}

KouchnirenkoReport kouchnirenko_audit(const MuProfile& mu, const LatticePolytope& delta_h,
                                      const std::optional<std::vector<Int>>& betti) {
    const int n = mu.ambient_dim;
    if (delta_h.dim_ambient() != n)
        throw std::invalid_argument("Newton polytope dimension must match the profile");
    std::optional<std::vector<Int>> lower = betti;
    if (!lower && mu.route == MuRoute::Arrangement) lower = mu.values;
    KouchnirenkoReport report;
    report.all_pass = true;
    LatticePolytope simplex = standard_simplex(n);
    for (int i = 0; i <= n; ++i) {
        KouchnirenkoRow row;
        row.mu = mu.values[i];
        std::vector<LatticePolytope> arg;
        arg.reserve(n);
        for (int k = 0; k < n - i; ++k) arg.push_back(simplex);
        for (int k = 0; k < i; ++k) arg.push_back(delta_h);
        Rat mv = n == 0 ? Rat(1) : mixed_volume(arg);
        row.upper = mv.get_num();  // mixed volumes of lattice polytopes here are integers
        if (mv.get_den() != 1) throw std::logic_error("non-integral normalized mixed volume");
        row.upper_ok = row.mu <= row.upper;
        if (lower) {
            row.lower = (*lower)[i];
            row.lower_ok = *row.lower <= row.mu;
        }
        report.all_pass = report.all_pass && row.upper_ok && row.lower_ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool triple_recursion_check(const Arrangement& a, int distinguished_form_index) {
    const int d = static_cast<int>(a.forms.size());
    if (d < 2) throw std::invalid_argument("triple recursion needs at least two forms");
    if (distinguished_form_index < 0 || distinguished_form_index >= d)
        throw std::invalid_argument("form index out of range");
    const int nc = a.num_coords();
    const std::vector<Rat>& g = a.forms[distinguished_form_index];

    MuProfile full = mu_arrangement(a);

    std::vector<std::vector<Rat>> del_forms;
    for (int i = 0; i < d; ++i) {
        if (i != distinguished_form_index) del_forms.push_back(a.forms[i]);
    }
    MuProfile deleted = mu_arrangement(Arrangement(del_forms));

    // Restriction: eliminate one coordinate along g, drop it, dedupe
    // proportional images. Non-proportionality to g keeps every image nonzero.
    int pivot = 0;
    while (g[pivot] == 0) ++pivot;
    std::vector<std::vector<Rat>> res_forms;
    for (int i = 0; i < d; ++i) {
        if (i == distinguished_form_index) continue;
        const auto& f = a.forms[i];
        Rat scale = f[pivot] / g[pivot];
        std::vector<Rat> r;
        r.reserve(nc - 1);
        for (int c = 0; c < nc; ++c) {
            if (c != pivot) r.push_back(f[c] - scale * g[c]);
        }
        bool dup = std::any_of(res_forms.begin(), res_forms.end(),
                               [&](const auto& other) { return proportional(other, r); });
        if (!dup) res_forms.push_back(std::move(r));
    }
    if (nc - 1 == 0) throw std::invalid_argument("restriction degenerate");
    MuProfile restricted = mu_arrangement(Arrangement(res_forms));

    auto at = [](const MuProfile& p, int i) {
        return i >= 0 && i < static_cast<int>(p.values.size()) ? p.values[i] : Int(0);
    };
    for (int i = 1; i <= full.ambient_dim; ++i) {
        if (at(full, i) != at(deleted, i) + at(restricted, i - 1)) return false;
    }
    return true;
}

}  // namespace logcave
