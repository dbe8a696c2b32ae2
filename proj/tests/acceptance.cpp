// Acceptance suite: ten end-to-end criteria, one pass/fail line each.
// Runtime limits are pinned in the table at the bottom; all comparisons
// are exact (integer or rational), so there are no numeric tolerances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "logcave/graph.hpp"
#include "logcave/homclass.hpp"
#include "logcave/matroid.hpp"
#include "logcave/milnor.hpp"
#include "logcave/monomial.hpp"
#include "logcave/poly.hpp"
#include "logcave/polytope.hpp"
#include "logcave/seq.hpp"

using namespace logcave;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }
Outcome pass(std::string note = "") { return {true, std::move(note)}; }

// Profiles shared between criteria: 9 audits the outputs of 2 and 7.
std::vector<MuProfile> g_torus_profiles;
std::vector<std::pair<MuProfile, Int>> g_arrangement_profiles;  // (mu, chibar(1))

bool coefficient_predicates(const IntPolynomial& p) {
    std::vector<Int> abs_coeffs;
    for (const auto& c : p.coeffs()) abs_coeffs.push_back(abs(c));
    Sequence a(abs_coeffs);
    return is_log_concave(a) && has_no_internal_zeros(a) &&
           is_sign_alternating(Sequence(p.coeffs()));
}

MonomialIdeal shephard_ideal(const std::vector<long>& lambda) {
    const int n = static_cast<int>(lambda.size());
    std::vector<Exponents> gens;
    Exponents g0(n + 1, 0), g1(n + 1, 0);
    g0[0] = static_cast<int>(lambda[0]);
    g1[1] = static_cast<int>(lambda[0]);
    gens.push_back(g0);
    gens.push_back(g1);
    for (int i = 2; i <= n; ++i) {
        Exponents g(n + 1, 0);
        g[0] = static_cast<int>(lambda[0] - lambda[i - 1]);
        g[i] = static_cast<int>(lambda[i - 1]);
        gens.push_back(g);
    }
    return MonomialIdeal(n + 1, gens);
}

// ---- 1. counterexample mixed multiplicities ----
Outcome criterion_counterexample() {
    MonomialIdeal j1(3, {{1, 2, 0}, {0, 3, 1}, {1, 0, 1}});
    MonomialIdeal j2(3, {{1, 2, 0}, {0, 3, 1}, {1, 0, 2}});
    Int e11 = mixed_multiplicity({j1, j1}, {0, 1, 1});
    Int e12 = mixed_multiplicity({j1, j2}, {0, 1, 1});
    Int e22 = mixed_multiplicity({j2, j2}, {0, 1, 1});
    if (e11 != 1 || e12 != 1 || e22 != 2)
        return fail("got e(J1,J1)=" + e11.get_str() + " e(J1,J2)=" + e12.get_str() +
                    " e(J2,J2)=" + e22.get_str() + ", expected 1 1 2");
    return pass("e(0,1,1) = 1, 1, 2");
}

// ---- 2. torus profiles and two-sided bound equality ----
Outcome criterion_torus() {
    for (int n = 1; n <= 4; ++n) {
        Exponents h(n + 1, 1);
        MuProfile mu = mu_monomial(h);
        for (int i = 0; i <= n; ++i) {
            if (mu.values[static_cast<size_t>(i)] != binomial(n, i))
                return fail("mu^" + std::to_string(i) + " != C(" + std::to_string(n) + "," +
                            std::to_string(i) + ") at n=" + std::to_string(n));
        }
        std::vector<PolyTerm> poly{{Rat(1), std::vector<int>(static_cast<size_t>(n) + 1, 1)}};
        auto report = kouchnirenko_audit(mu, newton_polytope_delta_h(poly), mu.values);
        if (!report.all_pass) return fail("bound audit failed at n=" + std::to_string(n));
        for (const auto& row : report.rows) {
            if (!row.lower || *row.lower != row.mu || row.mu != row.upper)
                return fail("bounds not tight at n=" + std::to_string(n));
        }
        g_torus_profiles.push_back(mu);
    }
    return pass("binomial profiles, both bounds tight, n = 1..4");
}

// ---- 3. Shephard dual route ----
Outcome criterion_shephard() {
    int checked = 0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::vector<long>> lambdas;
        std::vector<long> cur;
        std::function<void(long)> gen = [&](long maxv) {
            if (static_cast<int>(cur.size()) == n) {
                lambdas.push_back(cur);
                return;
            }
            for (long v = maxv; v >= 1; --v) {
                cur.push_back(v);
                gen(v);
                cur.pop_back();
            }
        };
        gen(4);
        LatticePolytope simplex = standard_simplex(n);
        for (const auto& lambda : lambdas) {
            LatticePolytope dl = shephard_polytope(lambda);
            auto diag = mixed_multiplicities({shephard_ideal(lambda)}).diagonal();
            Int expect = 1;
            for (int i = 0; i <= n; ++i) {
                if (i > 0) expect *= lambda[static_cast<size_t>(i) - 1];
                std::vector<LatticePolytope> bodies(static_cast<size_t>(n - i), simplex);
                bodies.insert(bodies.end(), static_cast<size_t>(i), dl);
                if (mixed_volume(bodies) != Rat(expect))
                    return fail("MV mismatch at n=" + std::to_string(n) + ", i=" +
                                std::to_string(i));
                if (diag[static_cast<size_t>(i)] != expect)
                    return fail("e_i mismatch at n=" + std::to_string(n) + ", i=" +
                                std::to_string(i));
            }
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " shape vectors, both routes agree");
}

// ---- 4. Trung-Verma identity on random equigenerated tuples ----
Outcome criterion_trung_verma() {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 3);
        int n = nv - 1;
        std::vector<MonomialIdeal> ideals;
        std::vector<LatticePolytope> polytopes;
        for (int k = 0; k < n; ++k) {
            int degree = 1 + static_cast<int>(rng() % 3);
            size_t want = 1 + rng() % 3;
            std::set<Exponents> gens;
            for (int attempt = 0; attempt < 40 && gens.size() < want; ++attempt) {
                Exponents e(static_cast<size_t>(nv), 0);
                for (int t = 0; t < degree; ++t) ++e[rng() % static_cast<size_t>(nv)];
                gens.insert(e);
            }
            std::vector<Exponents> gen_list(gens.begin(), gens.end());
            ideals.emplace_back(nv, gen_list);
            std::vector<LatticePoint> pts;
            for (const auto& g : gen_list) {
                LatticePoint p;
                for (size_t c = 1; c < g.size(); ++c) p.push_back(Int(static_cast<long>(g[c])));
                pts.push_back(std::move(p));
            }
            polytopes.emplace_back(n, pts);
        }
        std::vector<int> index(static_cast<size_t>(n) + 1, 1);
        index[0] = 0;
        Int e = mixed_multiplicity(ideals, index);
        Rat mv = mixed_volume(polytopes);
        if (mv != Rat(e))
            return fail("trial " + std::to_string(trial) + ": MV=" + mv.get_str() +
                        " but e=" + e.get_str());
    }
    return pass("50 tuples, MV_n = e_(0,1..1) exactly");
}

// ---- 5. chromatic corpus on all connected graphs with <= 7 vertices ----
Outcome criterion_chromatic_corpus() {
    const std::vector<size_t> expected_counts{1, 1, 2, 6, 21, 112, 853};
    std::vector<std::vector<Graph>> by_size(8);
    by_size[1] = {Graph(1, {})};
    for (int k = 1; k <= 6; ++k) {
        std::set<std::string> seen;
        for (const Graph& g : by_size[static_cast<size_t>(k)]) {
            for (uint32_t mask = 1; mask < (1u << k); ++mask) {
                auto edges = g.edges;
                for (int i = 0; i < k; ++i)
                    if (mask & (1u << i)) edges.emplace_back(i, k);
                Graph h(k + 1, edges);
                auto key = canonical_key(h);
                if (seen.insert(std::string(key.begin(), key.end())).second)
                    by_size[static_cast<size_t>(k) + 1].push_back(std::move(h));
            }
        }
    }
    for (int k = 1; k <= 7; ++k) {
        if (by_size[static_cast<size_t>(k)].size() != expected_counts[static_cast<size_t>(k) - 1])
            return fail("connected graph count on " + std::to_string(k) + " vertices is " +
                        std::to_string(by_size[static_cast<size_t>(k)].size()) + ", expected " +
                        std::to_string(expected_counts[static_cast<size_t>(k) - 1]));
    }
    ChromaticSolver solver;
    size_t total = 0;
    for (int k = 1; k <= 7; ++k) {
        for (const Graph& g : by_size[static_cast<size_t>(k)]) {
            IntPolynomial chi = solver.chromatic_polynomial(g);
            for (long q = 0; q <= 7; ++q) {
                if (chi.evaluate(Int(q)) != coloring_count_oracle(g, q))
                    return fail("oracle mismatch at q=" + std::to_string(q) + " on a " +
                                std::to_string(k) + "-vertex graph");
            }
            if (!coefficient_predicates(chi))
                return fail("coefficient predicates failed on a " + std::to_string(k) +
                            "-vertex graph");
            ++total;
        }
    }
    return pass(std::to_string(total) + " graphs, oracle q=0..7 + predicates");
}

// ---- 6. matroid characteristic polynomial vs Whitney oracle ----
Outcome criterion_matroid_oracle() {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        size_t cols = 1 + rng() % 10;
        size_t rows = 1 + rng() % 4;
        std::vector<std::vector<Rat>> mat(rows, std::vector<Rat>(cols));
        for (auto& row : mat)
            for (auto& x : row)
                x = Rat(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 2));
        Matroid m = from_matrix(mat);
        IntPolynomial chi = characteristic_polynomial(m);
        if (!(chi == whitney_oracle(m)))
            return fail("Moebius and Whitney disagree on trial " + std::to_string(trial));
        if (!chi.is_zero() && !coefficient_predicates(chi))
            return fail("coefficient predicates failed on trial " + std::to_string(trial));
    }
    return pass("200 matrices, Moebius = Whitney + predicates");
}

// ---- 7. decone chain and triple recursion ----
Outcome criterion_decone() {
    std::mt19937 rng(707);
    auto normalized = [](std::vector<Rat> f) {
        for (const Rat& x : f)
            if (x != 0) {
                Rat lead = x;
                for (Rat& y : f) y /= lead;
                return f;
            }
        return f;
    };
    const IntPolynomial q_minus_1({Int(-1), Int(1)});
    for (int trial = 0; trial < 30; ++trial) {
        size_t nc = 2 + rng() % 3;
        size_t nf = 2 + rng() % 7;
        std::vector<std::vector<Rat>> forms;
        std::set<std::vector<Rat>> keys;
        while (forms.size() < nf) {
            std::vector<Rat> f(nc);
            bool nonzero = false;
            for (Rat& x : f) {
                x = Rat(static_cast<long>(rng() % 5) - 2);
                if (x != 0) nonzero = true;
            }
            if (!nonzero) continue;
            if (keys.insert(normalized(f)).second) forms.push_back(std::move(f));
        }
        Arrangement a(forms);
        MuProfile mu = mu_arrangement(a);
        std::vector<std::vector<Rat>> rows(nc, std::vector<Rat>(nf));
        for (size_t c = 0; c < nc; ++c)
            for (size_t f = 0; f < nf; ++f) rows[c][f] = forms[f][c];
        IntPolynomial chi = characteristic_polynomial(from_matrix(rows));
        IntPolynomial chibar = divide_by_q_minus_1(chi);
        if (!(chibar * q_minus_1 == chi))
            return fail("chi != (q-1) * chibar on trial " + std::to_string(trial));
        if (mu.values[0] != 1 || mu.values[1] != Int(static_cast<long>(nf) - 1))
            return fail("mu^0/mu^1 wrong on trial " + std::to_string(trial));
        for (size_t i = 0; i < nf; ++i)
            if (!triple_recursion_check(a, static_cast<int>(i)))
                return fail("triple recursion failed at form " + std::to_string(i) +
                            " on trial " + std::to_string(trial));
        g_arrangement_profiles.emplace_back(mu, chibar.evaluate(1));
    }
    return pass("30 arrangements, decone + mu^1 + full triple recursion");
}

// ---- 8. representability round trip ----
Outcome criterion_representability() {
    std::mt19937 rng(808);
    auto dense_class = [](const std::vector<long>& e) {
        int len = static_cast<int>(e.size());
        std::map<int, Int> coeffs;
        for (int i = 0; i < len; ++i) coeffs[i] = e[static_cast<size_t>(i)];
        return HomologyClass(len, len, len - 1, std::move(coeffs));
    };
    int accepted = 0;
    while (accepted < 100) {
        size_t len = 2 + rng() % 3;
        std::vector<long> e(len);
        for (long& v : e) v = 1 + static_cast<long>(rng() % 6);
        if (!is_log_concave(Sequence(std::vector<Int>(e.begin(), e.end())))) continue;
        HomologyClass xi = dense_class(e);
        if (classify(xi) != Verdict::RepresentableUpToMultiple)
            return fail("log-concave positive sequence not classified representable");
        Witness w = construct_witness(xi);
        if (!verify_witness(w)) return fail("witness verification failed");
        ++accepted;
    }
    for (int trial = 0; trial < 20; ++trial) {
        long a = 2 + static_cast<long>(rng() % 5), b = 2 + static_cast<long>(rng() % 5);
        if (classify(dense_class({a, 1, b})) != Verdict::NotRepresentableUpToAnyMultiple)
            return fail("log-concavity violation not rejected");
        if (classify(dense_class({a, 0, b})) != Verdict::NotRepresentableUpToAnyMultiple)
            return fail("internal zero not rejected");
    }
    for (long c = 2; c <= 6; ++c) {
        HomologyClass corner(2, 2, 2, {{0, Int(c)}});  // c * [P^2 x P^0]
        if (classify(corner) != Verdict::NotRepresentable)
            return fail("exceptional multiple " + std::to_string(c) + " not rejected");
    }
    return pass("100 witnesses verified both routes, all rejections correct");
}

// ---- 9. CSM / Euler coherence ----
Outcome criterion_csm_euler() {
    auto alt_sum = [](const MuProfile& mu) {
        Int s = 0;
        for (size_t i = 0; i < mu.values.size(); ++i)
            s += (i % 2 == 0) ? mu.values[i] : -mu.values[i];
        return s;
    };
    for (const MuProfile& mu : g_torus_profiles) {
        if (csm_class(mu).back() != alt_sum(mu)) return fail("torus csm top != alternating sum");
    }
    for (const auto& [mu, chibar_at_1] : g_arrangement_profiles) {
        Int euler = csm_class(mu).back();
        if (euler != alt_sum(mu)) return fail("arrangement csm top != alternating sum");
        if (euler != chibar_at_1) return fail("arrangement euler != chibar(1)");
    }
    return pass(std::to_string(g_torus_profiles.size() + g_arrangement_profiles.size()) +
                " profiles coherent");
}

// ---- 10. Alexandrov-Fenchel desk check ----
Outcome criterion_alexandrov_fenchel() {
    std::mt19937 rng(1010);
    auto random_polytope = [&](int d) {
        std::vector<LatticePoint> pts;
        for (int i = 0; i < 8; ++i) {
            LatticePoint p;
            for (int c = 0; c < d; ++c) p.push_back(Int(static_cast<long>(rng() % 5)));
            pts.push_back(std::move(p));
        }
        return LatticePolytope(d, pts);
    };
    for (int trial = 0; trial < 50; ++trial) {
        LatticePolytope a = random_polytope(2), b = random_polytope(2);
        Rat lhs = mixed_volume({a, a}) * mixed_volume({b, b});
        Rat mid = mixed_volume({a, b});
        if (lhs > mid * mid) return fail("R^2 inequality violated on trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 50; ++trial) {
        LatticePolytope a = random_polytope(3), b = random_polytope(3), c = random_polytope(3);
        Rat lhs = mixed_volume({a, a, c}) * mixed_volume({b, b, c});
        Rat mid = mixed_volume({a, b, c});
        if (lhs > mid * mid) return fail("R^3 inequality violated on trial " + std::to_string(trial));
    }
    return pass("100 pairs, MV(A,A,.)MV(B,B,.) <= MV(A,B,.)^2");
}

struct Criterion {
    const char* name;
    double limit_seconds;
    Outcome (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"counterexample mixed multiplicities", 10.0, criterion_counterexample},
        {"torus profiles + bound equality", 30.0, criterion_torus},
        {"Shephard dual route", 60.0, criterion_shephard},
        {"Trung-Verma identity", 300.0, criterion_trung_verma},
        {"chromatic corpus <= 7 vertices", 300.0, criterion_chromatic_corpus},
        {"matroid Moebius = Whitney", 120.0, criterion_matroid_oracle},
        {"decone chain + triple recursion", 120.0, criterion_decone},
        {"representability round trip", 300.0, criterion_representability},
        {"CSM / Euler coherence", 5.0, criterion_csm_euler},
        {"Alexandrov-Fenchel desk check", 120.0, criterion_alexandrov_fenchel},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = elapsed <= c.limit_seconds;
        bool ok = outcome.pass && in_time;
        std::printf("criterion %2zu [%s]: %s (%.2fs, limit %.0fs)%s%s\n", i + 1, c.name,
                    ok ? "PASS" : "FAIL", elapsed, c.limit_seconds,
                    outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
        if (!in_time && outcome.pass) std::printf("    exceeded the pinned runtime limit\n");
        if (!ok) ++failures;
    }
    std::printf("%d/%zu acceptance criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
