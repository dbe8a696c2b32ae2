#include "logcave/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace logcave {

namespace {

int degree_of(const Exponents& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("hilbert numerator overflow");
    return r;
}

using Poly = std::vector<long long>;  // dense in t, ascending

void poly_add_shifted(Poly& acc, const Poly& p, size_t shift, long long scale) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
    for (size_t i = 0; i < p.size(); ++i) acc[i + shift] = checked_add(acc[i + shift], scale * p[i]);
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], a[i] * b[j]);
    }
    return r;
}

Poly one_minus_t_pow(int d) {
    Poly p(d + 1, 0);
    p[0] = 1;
    p[d] = checked_add(p[d], -1);  // d = 0 gives the zero numerator (unit ideal)
    return p;
}

struct NumeratorEngine {
    int nv;

    Poly run(std::vector<Exponents> gens) {
        gens = antichain_reduce(std::move(gens));
        return recurse(std::move(gens));
    }

    Poly recurse(std::vector<Exponents> gens) {
        if (gens.empty()) return {1};
        if (gens.size() == 1) return one_minus_t_pow(degree_of(gens[0]));
        if (gens.size() == 2) {
            Exponents l(nv);
            for (int j = 0; j < nv; ++j) l[j] = std::max(gens[0][j], gens[1][j]);
            Poly r = one_minus_t_pow(degree_of(gens[0]));
            poly_add_shifted(r, {1}, static_cast<size_t>(degree_of(gens[1])), -1);
            poly_add_shifted(r, {1}, static_cast<size_t>(degree_of(l)), 1);
            return r;
        }
        // Coprime support splitting.
        {
            std::vector<int> parent(nv);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (const auto& g : gens) {
                int first = -1;
                for (int j = 0; j < nv; ++j) {
                    if (g[j] > 0) {
                        if (first < 0)
                            first = j;
                        else
                            parent[find(j)] = find(first);
                    }
                }
            }
            std::map<int, std::vector<Exponents>> blocks;
            for (const auto& g : gens) {
                int rep = -1;
                for (int j = 0; j < nv; ++j) {
                    if (g[j] > 0) {
                        rep = find(j);
                        break;
                    }
                }
                blocks[rep].push_back(g);
            }
            if (blocks.size() > 1) {
                Poly acc{1};
                for (auto& [rep, block] : blocks) acc = poly_mul(acc, recurse(std::move(block)));
                return acc;
            }
        }
        {
            bool all_pure = true;
            for (const auto& g : gens) {
                int support = 0;
                for (int j = 0; j < nv; ++j) support += g[j] > 0;
                if (support > 1) {
                    all_pure = false;
                    break;
                }
            }
            if (all_pure) {
                Poly acc{1};
                for (const auto& g : gens) acc = poly_mul(acc, one_minus_t_pow(degree_of(g)));
                return acc;
            }
        }
        // Pivot on the most shared variable with a median exponent.
        int x = 0, best = -1;
        for (int j = 0; j < nv; ++j) {
            int cnt = 0;
            for (const auto& g : gens) cnt += g[j] > 0;
            if (cnt > best) {
                best = cnt;
                x = j;
            }
        }
        std::vector<int> exps;
        for (const auto& g : gens) {
            if (g[x] > 0) exps.push_back(g[x]);
        }
        std::sort(exps.begin(), exps.end());
        int e = exps[exps.size() / 2];
        // Never let the pivot absorb the generating set unchanged.
        auto is_pure_x_pow = [&](const Exponents& g) {
            if (g[x] != e) return false;
            return degree_of(g) == e;
        };
        for (;;) {
            int removed = 0;
            bool only_self = true;
            for (const auto& g : gens) {
                if (g[x] >= e) {
                    ++removed;
                    if (!is_pure_x_pow(g)) only_self = false;
                }
            }
            if (!(removed == 1 && only_self)) break;
            int next = 0;
            for (int v : exps) {
                if (v < e) next = std::max(next, v);
            }
            e = next;  // >= 1: x appears positively in >= 2 generators
        }
        std::vector<Exponents> plus, colon;
        Exponents pivot(nv, 0);
        pivot[x] = e;
        plus.push_back(pivot);
        for (const auto& g : gens) {
            if (g[x] < e) plus.push_back(g);
            Exponents c = g;
            c[x] = std::max(0, c[x] - e);
            colon.push_back(std::move(c));
        }
        Poly np = recurse(antichain_reduce(std::move(plus)));
        Poly nc = recurse(antichain_reduce(std::move(colon)));
        Poly acc = std::move(np);
        poly_add_shifted(acc, nc, static_cast<size_t>(e), 1);
        return acc;
    }
};

uint64_t monomial_hash(const Exponents& m) {
    uint64_t h = 1469598103934665603ull;
    for (int v : m) {
        h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

struct ExpHash {
    size_t operator()(const Exponents& m) const { return monomial_hash(m); }
};

}  // namespace

std::vector<Exponents> antichain_reduce(std::vector<Exponents> candidates) {
    std::sort(candidates.begin(), candidates.end(), [](const Exponents& a, const Exponents& b) {
        int da = degree_of(a), db = degree_of(b);
        return da != db ? da < db : a < b;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Exponents> kept;
    std::vector<int> kept_deg;
    for (auto& c : candidates) {
        int dc = degree_of(c);
        bool redundant = false;
        for (size_t i = 0; i < kept.size() && kept_deg[i] < dc; ++i) {
            if (divides(kept[i], c)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept_deg.push_back(dc);
            kept.push_back(std::move(c));
        }
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Exponents> generators)
    : num_vars_(num_vars) {
    if (num_vars <= 0) throw std::invalid_argument("num_vars must be positive");
    if (generators.empty()) throw std::invalid_argument("the zero ideal is rejected");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != num_vars)
            throw std::invalid_argument("generator arity mismatch");
        for (int v : g) {
            if (v < 0) throw std::invalid_argument("negative exponent");
        }
    }
    gens_ = antichain_reduce(std::move(generators));
}

int MonomialIdeal::min_degree() const {
    int d = INT32_MAX;
    for (const auto& g : gens_) d = std::min(d, degree_of(g));
    return d;
}

int MonomialIdeal::max_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, degree_of(g));
    return d;
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && degree_of(gens_[0]) == 0; }

bool MonomialIdeal::contains(const Exponents& monomial) const {
    for (const auto& g : gens_) {
        if (divides(g, monomial)) return true;
    }
    return false;
}

MonomialIdeal MonomialIdeal::unit(int num_vars) {
    return MonomialIdeal(num_vars, {Exponents(num_vars, 0)});
}

MonomialIdeal MonomialIdeal::irrelevant(int num_vars) {
    std::vector<Exponents> gens;
    for (int j = 0; j < num_vars; ++j) {
        Exponents g(num_vars, 0);
        g[j] = 1;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(num_vars, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("num_vars mismatch");
    const int nv = a.num_vars();
    // Same-degree products can only collide, never divide one another.
    bool equigen = a.is_equigenerated() && b.is_equigenerated();
    std::vector<Exponents> cands;
    cands.reserve(a.gens().size() * b.gens().size());
    if (equigen) {
        std::unordered_set<Exponents, ExpHash> seen;
        seen.reserve(a.gens().size() * b.gens().size() * 2);
        for (const auto& g : a.gens()) {
            for (const auto& h : b.gens()) {
                Exponents s(nv);
                for (int j = 0; j < nv; ++j) s[j] = g[j] + h[j];
                if (seen.insert(s).second) cands.push_back(std::move(s));
            }
        }
        return MonomialIdeal(nv, std::move(cands));
    }
    for (const auto& g : a.gens()) {
        for (const auto& h : b.gens()) {
            Exponents s(nv);
            for (int j = 0; j < nv; ++j) s[j] = g[j] + h[j];
            cands.push_back(std::move(s));
        }
    }
    return MonomialIdeal(nv, std::move(cands));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    MonomialIdeal r = MonomialIdeal::unit(a.num_vars());
    for (int i = 0; i < k; ++i) r = product(r, a);
    return r;
}

Int min_gen_count(int u, const std::vector<MonomialIdeal>& ideals, const std::vector<int>& powers) {
    if (ideals.size() != powers.size()) throw std::invalid_argument("ideals/powers length mismatch");
    if (u < 0) throw std::invalid_argument("negative power of the irrelevant ideal");
    if (ideals.empty()) throw std::invalid_argument("at least one ideal required");
    const int nv = ideals[0].num_vars();
    MonomialIdeal acc = power(MonomialIdeal::irrelevant(nv), u);
    for (size_t k = 0; k < ideals.size(); ++k) {
        if (ideals[k].num_vars() != nv) throw std::invalid_argument("num_vars mismatch");
        acc = product(acc, power(ideals[k], powers[k]));
    }
    return Int(static_cast<long>(acc.gens().size()));
}

std::vector<long long> hilbert_numerator(const std::vector<Exponents>& gens, int num_vars) {
    NumeratorEngine engine{num_vars};
    Poly p = engine.run(gens);
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Int ideal_dimension_at(const std::vector<Exponents>& gens, int num_vars, long T) {
    if (T < 0) return 0;
    auto num = hilbert_numerator(gens, num_vars);
    Int quotient = 0;
    for (size_t j = 0; j < num.size(); ++j) {
        if (num[j] != 0) quotient += Int(static_cast<long>(num[j])) * binomial(T - static_cast<long>(j) + num_vars - 1, num_vars - 1);
    }
    return binomial(T + num_vars - 1, num_vars - 1) - quotient;
}

MonomialIdeal jacobian_ideal_of_monomial(const Exponents& h_exponents) {
    const int nv = static_cast<int>(h_exponents.size());
    if (degree_of(h_exponents) < 1) throw std::invalid_argument("monomial must be nonconstant");
    std::vector<Exponents> gens;
    for (int j = 0; j < nv; ++j) {
        if (h_exponents[j] > 0) {
            Exponents g = h_exponents;
            --g[j];
            gens.push_back(std::move(g));
        }
    }
    return MonomialIdeal(nv, std::move(gens));
}

// ---------------------------------------------------------------------------
// Mixed multiplicities.
//
// HP(u, v1..vs) = #mingens(m^u J1^v1 ... Js^vs) = dim of the (u,v)-piece of
// the associated multigraded algebra (graded Nakayama). With K = prod J^v
// and K_{<=d} the subideal generated by the generators of K of degree <= d,
//   (m^u K)_T = (K_{<=T-u})_T,
// so the mingen count is a telescoping sum of graded dimensions over the
// generator degrees of K. For equigenerated K this is a single Hilbert
// function value.
// ---------------------------------------------------------------------------

namespace {

struct KData {
    std::vector<Exponents> gens;
    std::vector<int> degrees;  // distinct generator degrees, ascending
    std::map<int, Poly> trunc_numerators;
};

class HPEvaluator {
public:
    HPEvaluator(std::vector<MonomialIdeal> ideals) : ideals_(std::move(ideals)) {
        nv_ = ideals_[0].num_vars();
        pow_caches_.resize(ideals_.size());
        for (auto& c : pow_caches_) c.push_back(MonomialIdeal::unit(nv_));
    }

    int num_vars() const { return nv_; }

    Int hp(int u, const std::vector<int>& v) {
        std::vector<int> key = v;
        key.push_back(u);
        auto it = hp_cache_.find(key);
        if (it != hp_cache_.end()) return it->second;
        KData& k = k_data(v);
        Int total = 0;
        if (k.degrees.size() == 1) {
            total = dim_trunc(k, k.degrees[0], u + k.degrees[0]);
        } else {
            int prev = -1;
            for (int d : k.degrees) {
                Int hi = dim_trunc(k, d, u + d);
                Int lo = prev < 0 ? Int(0) : dim_trunc(k, prev, u + d);
                total += hi - lo;
                prev = d;
            }
        }
        hp_cache_.emplace(std::move(key), total);
        return total;
    }

private:
    const MonomialIdeal& ideal_power(size_t idx, int v) {
        auto& cache = pow_caches_[idx];
        while (static_cast<int>(cache.size()) <= v)
            cache.push_back(product(cache.back(), ideals_[idx]));
        return cache[v];
    }

    KData& k_data(const std::vector<int>& v) {
        auto it = k_cache_.find(v);
        if (it != k_cache_.end()) return it->second;
        MonomialIdeal acc = ideal_power(0, v[0]);
        for (size_t k = 1; k < ideals_.size(); ++k) acc = product(acc, ideal_power(k, v[k]));
        KData data;
        data.gens = acc.gens();
        for (const auto& g : data.gens) {
            int d = degree_of(g);
            if (data.degrees.empty() || data.degrees.back() != d) {
                if (!std::binary_search(data.degrees.begin(), data.degrees.end(), d))
                    data.degrees.push_back(d);
            }
        }
        std::sort(data.degrees.begin(), data.degrees.end());
        return k_cache_.emplace(v, std::move(data)).first->second;
    }

    Int dim_trunc(KData& k, int degree_cap, long T) {
        auto it = k.trunc_numerators.find(degree_cap);
        if (it == k.trunc_numerators.end()) {
            std::vector<Exponents> trunc;
            for (const auto& g : k.gens) {
                if (degree_of(g) <= degree_cap) trunc.push_back(g);
            }
            it = k.trunc_numerators.emplace(degree_cap, hilbert_numerator(trunc, nv_)).first;
        }
        const Poly& num = it->second;
        if (T < 0) return 0;
        Int quotient = 0;
        for (size_t j = 0; j < num.size(); ++j) {
            if (num[j] != 0)
                quotient += Int(static_cast<long>(num[j])) * binomial(T - static_cast<long>(j) + nv_ - 1, nv_ - 1);
        }
        return binomial(T + nv_ - 1, nv_ - 1) - quotient;
    }

    std::vector<MonomialIdeal> ideals_;
    int nv_ = 0;
    std::vector<std::vector<MonomialIdeal>> pow_caches_;
    std::map<std::vector<int>, KData> k_cache_;
    std::map<std::vector<int>, Int> hp_cache_;
};

// Mixed finite difference of HP at the base point, of order index[k] in
// each coordinate; equals e_i once HP is in its polynomial range.
Int mixed_difference(HPEvaluator& hp, int u_base, int v_base, const std::vector<int>& index) {
    const size_t s = index.size() - 1;  // index[0] is the u-order
    std::vector<int> offset(index.size(), 0);
    Int acc = 0;
    for (;;) {
        long parity = 0;
        Int weight = 1;
        for (size_t k = 0; k < index.size(); ++k) {
            parity += index[k] - offset[k];
            weight *= binomial(index[k], offset[k]);
        }
        std::vector<int> v(s);
        for (size_t k = 0; k < s; ++k) v[k] = v_base + offset[k + 1];
        Int value = hp.hp(u_base + offset[0], v);
        acc += (parity % 2 == 0 ? weight : -weight) * value;
        size_t k = 0;
        while (k < offset.size() && offset[k] == index[k]) offset[k++] = 0;
        if (k == offset.size()) break;
        ++offset[k];
    }
    return acc;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int head = 0; head <= total; ++head) {
        cur.push_back(head);
        compositions(total - head, parts - 1, cur, out);
        cur.pop_back();
    }
}

int default_v_base_point(const std::vector<MonomialIdeal>& ideals) {
    return ideals[0].num_vars() + 2;
}

// The u direction must clear the regularity of prod J_k^{v_k}, which grows
// like maxdeg * sum(v_k); large u is cheap because truncation turns m^u into
// a shift of binomial arguments, so err generously.
int default_u_base_point(const std::vector<MonomialIdeal>& ideals, int v_base) {
    int maxdeg = 1;
    for (const auto& j : ideals) maxdeg = std::max(maxdeg, j.max_degree());
    int nv = ideals[0].num_vars();
    int s = static_cast<int>(ideals.size());
    return maxdeg * (s * (v_base + nv) + 1) + nv;
}

std::vector<Int> extract_at(const std::vector<MonomialIdeal>& ideals, int u_base, int v_base,
                            const std::vector<std::vector<int>>& indices) {
    HPEvaluator hp(ideals);
    std::vector<Int> out;
    out.reserve(indices.size());
    for (const auto& idx : indices) out.push_back(mixed_difference(hp, u_base, v_base, idx));
    return out;
}

std::vector<Int> stable_extract(const std::vector<MonomialIdeal>& ideals,
                                const std::vector<std::vector<int>>& indices,
                                const MixedOptions& opts) {
    if (ideals.empty()) throw std::invalid_argument("at least one ideal required");
    const int nv = ideals[0].num_vars();
    for (const auto& j : ideals) {
        if (j.num_vars() != nv) throw std::invalid_argument("num_vars mismatch");
    }
    int v_base = opts.v_base_point > 0 ? opts.v_base_point : default_v_base_point(ideals);
    int u_base = opts.base_point > 0 ? opts.base_point : default_u_base_point(ideals, v_base);
    std::vector<Int> prev = extract_at(ideals, u_base, v_base, indices);
    for (int round = 0; round < opts.max_doublings; ++round) {
        u_base *= 2;
        v_base *= 2;
        std::vector<Int> cur = extract_at(ideals, u_base, v_base, indices);
        if (cur == prev) return cur;
        prev = std::move(cur);
    }
    throw NonStable();
}

}  // namespace

std::vector<Int> MixedMultiplicityProfile::diagonal() const {
    std::vector<Int> out(total_degree + 1, Int(0));
    for (const auto& [idx, val] : values) {
        if (idx.size() == 2) out[idx[1]] = val;
    }
    return out;
}

MixedMultiplicityProfile mixed_multiplicities(const std::vector<MonomialIdeal>& ideals,
                                              const MixedOptions& opts) {
    const int n = ideals.at(0).num_vars() - 1;
    std::vector<std::vector<int>> indices;
    std::vector<int> cur;
    compositions(n, static_cast<int>(ideals.size()) + 1, cur, indices);
    std::vector<Int> vals = stable_extract(ideals, indices, opts);
    MixedMultiplicityProfile profile;
    profile.total_degree = n;
    for (size_t i = 0; i < indices.size(); ++i) profile.values.emplace(indices[i], vals[i]);
    return profile;
}

Int mixed_multiplicity(const std::vector<MonomialIdeal>& ideals, const std::vector<int>& index,
                       const MixedOptions& opts) {
    const int n = ideals.at(0).num_vars() - 1;
    if (index.size() != ideals.size() + 1)
        throw std::invalid_argument("multi-index arity must be s+1");
    int total = std::accumulate(index.begin(), index.end(), 0);
    if (total != n) throw std::invalid_argument("multi-index must sum to num_vars-1");
    return stable_extract(ideals, {index}, opts)[0];
}

}  // namespace logcave
