#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "logcave/monomial.hpp"

using namespace logcave;

namespace {

void each_monomial(int nv, int degree, Exponents& cur, const std::function<void(const Exponents&)>& f) {
    if (nv == 1) {
        cur.push_back(degree);
        f(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        cur.push_back(e);
        each_monomial(nv - 1, degree - e, cur, f);
        cur.pop_back();
    }
}

bool divisible_by_some(const Exponents& w, const std::vector<Exponents>& gens) {
    for (const auto& g : gens) {
        bool ok = true;
        for (size_t j = 0; j < w.size(); ++j) {
            if (g[j] > w[j]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Counts degree-T monomials of the ideal by direct enumeration.
long brute_dimension(const std::vector<Exponents>& gens, int nv, int T) {
    long count = 0;
    Exponents cur;
    each_monomial(nv, T, cur, [&](const Exponents& w) {
        if (divisible_by_some(w, gens)) ++count;
    });
    return count;
}

// Counts minimal generators without any antichain machinery: a candidate w
// is minimal iff no w/z_j stays in the ideal generated by the candidates.
long brute_min_gen_count(std::vector<Exponents> candidates) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    long count = 0;
    for (const auto& w : candidates) {
        bool minimal = true;
        for (size_t j = 0; j < w.size() && minimal; ++j) {
            if (w[j] == 0) continue;
            Exponents down = w;
            --down[j];
            if (divisible_by_some(down, candidates)) minimal = false;
        }
        if (minimal) ++count;
    }
    return count;
}

MonomialIdeal random_ideal(std::mt19937& rng, int nv, int max_deg, int num_gens) {
    std::vector<Exponents> gens;
    for (int i = 0; i < num_gens; ++i) {
        Exponents g(nv);
        for (auto& e : g) e = static_cast<int>(rng() % (max_deg + 1));
        if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) g[0] = 1;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(nv, std::move(gens));
}

}  // namespace

TEST_CASE("antichain reduction") {
    auto r = antichain_reduce({{1, 2}, {2, 2}, {0, 3}, {1, 2}});
    CHECK(r == std::vector<Exponents>{{0, 3}, {1, 2}});
    MonomialIdeal i(2, {{2, 0}, {1, 1}, {3, 1}});
    CHECK(i.gens().size() == 2);
    CHECK(i.contains({3, 1}));
    CHECK_FALSE(i.contains({1, 0}));
    CHECK_THROWS_AS(MonomialIdeal(2, {}), std::invalid_argument);
}

TEST_CASE("product and power") {
    MonomialIdeal m = MonomialIdeal::irrelevant(2);
    MonomialIdeal m3 = power(m, 3);
    CHECK(m3.gens().size() == 4);  // all monomials of degree 3
    CHECK(m3.is_equigenerated());
    CHECK(product(m, MonomialIdeal::unit(2)) == m);
    CHECK(power(m, 0).is_unit());
}

TEST_CASE("hilbert numerator against brute-force dimensions") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 2);
        MonomialIdeal I = random_ideal(rng, nv, 3, 4);
        for (int T = 0; T <= 7; ++T)
            CHECK(ideal_dimension_at(I.gens(), nv, T) == brute_dimension(I.gens(), nv, T));
    }
}

TEST_CASE("minimal generator counts against brute force") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 15; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 2);
        MonomialIdeal J = random_ideal(rng, nv, 2, 3);
        for (int u = 0; u <= 2; ++u) {
            for (int v = 1; v <= 2; ++v) {
                // raw candidate products, fed to the oracle unreduced
                std::vector<Exponents> cands{Exponents(nv, 0)};
                auto times = [&](const std::vector<Exponents>& gens) {
                    std::vector<Exponents> next;
                    for (const auto& c : cands) {
                        for (const auto& g : gens) {
                            Exponents s(nv);
                            for (int j = 0; j < nv; ++j) s[j] = c[j] + g[j];
                            next.push_back(std::move(s));
                        }
                    }
                    cands = std::move(next);
                };
                for (int i = 0; i < u; ++i) times(MonomialIdeal::irrelevant(nv).gens());
                for (int i = 0; i < v; ++i) times(J.gens());
                CHECK(min_gen_count(u, {J}, {v}) == brute_min_gen_count(cands));
            }
        }
    }
}

TEST_CASE("mixed multiplicities of the maximal ideal are trivial") {
    MonomialIdeal m = MonomialIdeal::irrelevant(3);
    auto prof = mixed_multiplicities({m});
    CHECK(prof.diagonal() == std::vector<Int>{1, 1, 1});
}

TEST_CASE("torus jacobian gives binomials") {
    auto J = jacobian_ideal_of_monomial({1, 1, 1});
    CHECK(mixed_multiplicities({J}).diagonal() == std::vector<Int>{1, 2, 1});
}

TEST_CASE("principal jacobian has no higher multiplicities") {
    auto J = jacobian_ideal_of_monomial({3, 0, 0});
    CHECK(mixed_multiplicities({J}).diagonal() == std::vector<Int>{1, 0, 0});
}

TEST_CASE("multi-index validation") {
    MonomialIdeal m = MonomialIdeal::irrelevant(3);
    CHECK_THROWS_AS(mixed_multiplicity({m}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(mixed_multiplicity({m}, {0, 1, 1}), std::invalid_argument);
    CHECK(mixed_multiplicity({m, m}, {0, 1, 1}) == 1);
}

TEST_CASE("profile values are symmetric in repeated ideals") {
    MonomialIdeal J(3, {{1, 2, 0}, {0, 3, 1}, {1, 0, 2}});
    MonomialIdeal m = MonomialIdeal::irrelevant(3);
    CHECK(mixed_multiplicity({J, m}, {0, 1, 1}) == mixed_multiplicity({m, J}, {0, 1, 1}));
}
