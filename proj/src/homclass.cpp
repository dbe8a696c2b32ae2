#include "logcave/homclass.hpp"

#include <algorithm>

#include "logcave/polytope.hpp"
#include "logcave/seq.hpp"

namespace logcave {

HomologyClass::HomologyClass(int n_, int m_, int k_, std::map<int, Int> coeffs)
    : n(n_), m(m_), k(k_), coefficients(std::move(coeffs)) {
    if (n < 0 || m < 0 || k < 0 || k > n + m) throw std::invalid_argument("malformed class degrees");
    for (const auto& [i, e] : coefficients) {
        if (i < min_index() || i > max_index())
            throw std::invalid_argument("coefficient index outside the valid range");
    }
}

Int HomologyClass::coefficient(int i) const {
    auto it = coefficients.find(i);
    return it == coefficients.end() ? Int(0) : it->second;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::RepresentableExactly: return "RepresentableExactly";
        case Verdict::NotRepresentable: return "NotRepresentable";
        case Verdict::RepresentableUpToMultiple: return "RepresentableUpToMultiple";
        case Verdict::NotRepresentableUpToAnyMultiple: return "NotRepresentableUpToAnyMultiple";
    }
    return "?";
}

Verdict classify(const HomologyClass& xi) {
    std::vector<int> support;
    for (int i = xi.min_index(); i <= xi.max_index(); ++i) {
        if (xi.coefficient(i) != 0) support.push_back(i);
    }
    if (support.size() == 1) {
        int i = support[0];
        int a = xi.k - i, b = i;
        bool corner = (a == xi.n || a == 0) && (b == xi.m || b == 0);
        if (corner) {
            Int c = xi.coefficient(i);
            if (c == 1) return Verdict::RepresentableExactly;
            return Verdict::NotRepresentable;
        }
    }
    std::vector<Int> window;
    for (int i = xi.min_index(); i <= xi.max_index(); ++i) window.push_back(xi.coefficient(i));
    bool nonzero = !support.empty();
    bool nonneg = std::all_of(window.begin(), window.end(), [](const Int& v) { return v >= 0; });
    if (!nonzero || !nonneg) return Verdict::NotRepresentableUpToAnyMultiple;
    Sequence seq{window, 0};
    if (!has_no_internal_zeros(seq) || !is_log_concave(seq))
        return Verdict::NotRepresentableUpToAnyMultiple;
    return Verdict::RepresentableUpToMultiple;
}

Witness construct_witness(const HomologyClass& xi) {
    if (classify(xi) != Verdict::RepresentableUpToMultiple)
        throw std::domain_error("class is not representable up to a multiple");
    int p = xi.min_index(), q = xi.max_index();
    while (xi.coefficient(p) == 0) ++p;
    while (xi.coefficient(q) == 0) --q;
    if (p == q)
        throw std::domain_error(
            "single-support class: the representing hypersurface witness is not monomial");
    const int r = q - p;
    Int e = 1;
    for (int i = p; i < q; ++i) e = int_lcm(e, xi.coefficient(i));
    Witness w;
    w.support_offset = p;
    w.lambda.reserve(r);
    for (int i = 1; i <= r; ++i) {
        Int num = e * xi.coefficient(p + i);
        Int lam = num / xi.coefficient(p + i - 1);
        if (lam * xi.coefficient(p + i - 1) != num)
            throw std::logic_error("non-integral lambda despite lcm scaling");
        w.lambda.push_back(lam.get_si());
        if (i > 1 && w.lambda[i - 1] > w.lambda[i - 2])
            throw std::logic_error("lambda not descending despite log-concavity");
    }
    // Map components z_0^{l1}, z_1^{l1}, z_0^{l1-l_i} z_i^{l_i} (i >= 2).
    const long l1 = w.lambda[0];
    auto mono = [&](int var, long exp0, long expv) {
        Exponents g(r + 1, 0);
        g[0] = static_cast<int>(exp0);
        g[var] += static_cast<int>(expv);
        return g;
    };
    w.map_exponents.push_back(mono(0, l1, 0));
    w.map_exponents.push_back(mono(1, 0, l1));
    for (int i = 2; i <= r; ++i) w.map_exponents.push_back(mono(i, l1 - w.lambda[i - 1], w.lambda[i - 1]));
    Int ep = xi.coefficient(p);
    Int epow = 1;
    for (int i = 0; i <= r; ++i) {
        Int num = epow * xi.coefficient(p + i);
        Int deg = num / ep;
        if (deg * ep != num) throw std::logic_error("non-integral predicted degree");
        w.predicted_degrees.push_back(deg);
        epow *= e;
    }
    w.multiple = int_pow(e, r) / ep;
    return w;
}

bool verify_witness(const Witness& w) {
    const int r = static_cast<int>(w.lambda.size());
    MonomialIdeal J(r + 1, w.map_exponents);
    std::vector<Int> mono = mixed_multiplicities({J}).diagonal();
    if (mono != w.predicted_degrees) return false;
    LatticePolytope simplex = standard_simplex(r);
    LatticePolytope shephard = shephard_polytope(w.lambda);
    for (int i = 0; i <= r; ++i) {
        std::vector<LatticePolytope> arg;
        for (int k = 0; k < r - i; ++k) arg.push_back(simplex);
        for (int k = 0; k < i; ++k) arg.push_back(shephard);
        Rat mv = r == 0 ? Rat(1) : mixed_volume(arg);
        if (mv.get_den() != 1 || mv.get_num() != w.predicted_degrees[i]) return false;
    }
    return true;
}

}  // namespace logcave
