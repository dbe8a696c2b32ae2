#include <algorithm>
#include <random>

#include "doctest.h"
#include "logcave/graph.hpp"

using namespace logcave;

namespace {

IntPolynomial falling(int n) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 0; i < n; ++i) p = p * IntPolynomial({Int(-i), Int(1)});
    return p;
}

Graph random_graph(std::mt19937& rng, int n, double density) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (std::uniform_real_distribution<>(0, 1)(rng) < density) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("known chromatic polynomials") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(chromatic_polynomial(k4) == falling(4));

    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    // (q-1)^5 + (q-1) * (-1)^5
    IntPolynomial qm1({Int(-1), Int(1)});
    IntPolynomial expect = qm1 * qm1 * qm1 * qm1 * qm1 - qm1;
    CHECK(chromatic_polynomial(c5) == expect);

    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(chromatic_polynomial(path) == IntPolynomial({Int(0), Int(1)}) * qm1 * qm1 * qm1);

    Graph loop(2, {{0, 0}, {0, 1}});
    CHECK(chromatic_polynomial(loop).is_zero());

    Graph empty(3, {});
    CHECK(chromatic_polynomial(empty) == IntPolynomial::monomial(1, 3));
}

TEST_CASE("chromatic polynomial matches the coloring oracle") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 6, 0.4);
        IntPolynomial chi = chromatic_polynomial(g);
        for (long q = 0; q <= 6; ++q) CHECK(chi.evaluate(q) == coloring_count_oracle(g, q));
    }
}

TEST_CASE("deletion-contraction identity") {
    // chi(G) = chi(G-e) - chi(G/e), checked by explicit graph surgery.
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    Graph del(5, {{1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    // contract 1 into 0: edges {0,2},{2,3},{3,4},{4,0},{0,2} on vertices 0..3 (relabeled)
    Graph con(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}});
    CHECK(chromatic_polynomial(g) ==
          chromatic_polynomial(del) - chromatic_polynomial(con));
}

TEST_CASE("disjoint union multiplies") {
    Graph a(3, {{0, 1}, {1, 2}});
    Graph b(2, {{0, 1}});
    CHECK(chromatic_polynomial(a.disjoint_union(b)) ==
          chromatic_polynomial(a) * chromatic_polynomial(b));
}

TEST_CASE("canonical key is an isomorphism invariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 7, 0.5);
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
        Graph h(7, std::move(edges));
        CHECK(canonical_key(g) == canonical_key(h));
    }
    // ... and separates the path from the star on 4 vertices
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_key(path) != canonical_key(star));
}

TEST_CASE("component count") {
    Graph g(6, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(component_count(g) == 3);
}
