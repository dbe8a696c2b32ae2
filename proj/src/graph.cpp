#include "logcave/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace logcave {

namespace {

std::vector<uint32_t> adjacency_bitsets(const Graph& g) {
    if (g.vertex_count > 32) throw std::invalid_argument("graph too large (max 32 vertices)");
    std::vector<uint32_t> adj(g.vertex_count, 0);
    for (auto [u, v] : g.edges) {
        if (u == v) continue;  // loops handled by the caller
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

// Iterated neighborhood refinement. Returns per-vertex colors 0..k-1 whose
// numbering depends only on the isomorphism class.
std::vector<int> wl_colors(const std::vector<uint32_t>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            for (int u = 0; u < n; ++u) {
                if (adj[v] >> u & 1u) s.push_back(color[u]);
            }
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int classes = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
            next[sorted[i].second] = classes;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

struct CanonicalSearch {
    const std::vector<uint32_t>& adj;
    const std::vector<int>& color;
    int n;
    std::vector<int> placed;
    uint32_t placed_mask = 0;
    std::vector<uint32_t> cur_rows;
    std::vector<uint32_t> best_rows;
    bool have_best = false;

    void run() {
        placed.reserve(n);
        cur_rows.assign(n, 0);
        recurse(0, true);
    }

    void recurse(int pos, bool tight) {
        if (pos == n) {
            if (!have_best || cur_rows < best_rows) {
                best_rows = cur_rows;
                have_best = true;
            }
            return;
        }
        int min_color = INT32_MAX;
        for (int v = 0; v < n; ++v) {
            if (!(placed_mask >> v & 1u)) min_color = std::min(min_color, color[v]);
        }
        for (int v = 0; v < n; ++v) {
            if ((placed_mask >> v & 1u) || color[v] != min_color) continue;
            uint32_t row = 0;
            for (int i = 0; i < pos; ++i) {
                if (adj[v] >> placed[i] & 1u) row |= 1u << i;
            }
            bool next_tight = tight;
            if (tight && have_best) {
                if (row > best_rows[pos]) continue;
                if (row < best_rows[pos]) next_tight = false;
            }
            cur_rows[pos] = row;
            placed.push_back(v);
            placed_mask |= 1u << v;
            recurse(pos + 1, next_tight);
            placed_mask &= ~(1u << v);
            placed.pop_back();
        }
    }
};

std::string canonical_string(const std::vector<uint32_t>& adj) {
    const int n = static_cast<int>(adj.size());
    auto color = wl_colors(adj);
    CanonicalSearch search{adj, color, n};
    search.run();
    std::string key;
    key.push_back(static_cast<char>(n));
    for (uint32_t row : search.best_rows) {
        key.push_back(static_cast<char>(row & 0xff));
        key.push_back(static_cast<char>(row >> 8 & 0xff));
        key.push_back(static_cast<char>(row >> 16 & 0xff));
        key.push_back(static_cast<char>(row >> 24 & 0xff));
    }
    return key;
}

IntPolynomial q_power(size_t k) { return IntPolynomial::monomial(1, k); }

IntPolynomial falling_factorial(int n) {
    // q (q-1) ... (q-n+1)
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 0; i < n; ++i) p = p * IntPolynomial({Int(-i), Int(1)});
    return p;
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> e) : vertex_count(n), edges(std::move(e)) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
}

bool Graph::has_loop() const {
    return std::any_of(edges.begin(), edges.end(), [](auto e) { return e.first == e.second; });
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph g(vertex_count + other.vertex_count, edges);
    for (auto [u, v] : other.edges) g.edges.emplace_back(u + vertex_count, v + vertex_count);
    return g;
}

int component_count(const Graph& g) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = g.vertex_count;
    for (auto [u, v] : g.edges) {
        int a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

Int coloring_count_oracle(const Graph& g, long q) {
    if (q < 0) throw std::invalid_argument("q must be nonnegative");
    if (g.has_loop()) return 0;
    const int n = g.vertex_count;
    std::vector<std::vector<int>> earlier(n);
    for (auto [u, v] : g.edges) earlier[std::max(u, v)].push_back(std::min(u, v));
    std::vector<long> assigned(n, -1);
    Int count = 0;
    // Backtracking over vertices in index order; counts exactly.
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (long c = 0; c < q; ++c) {
            bool ok = true;
            for (int u : earlier[v]) {
                if (assigned[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                assigned[v] = c;
                self(self, v + 1);
            }
        }
        assigned[v] = -1;
    };
    rec(rec, 0);
    return count;
}

std::vector<uint8_t> canonical_key(const Graph& g) {
    auto s = canonical_string(adjacency_bitsets(g));
    return std::vector<uint8_t>(s.begin(), s.end());
}

IntPolynomial ChromaticSolver::chromatic_polynomial(const Graph& g) {
    if (g.has_loop()) return IntPolynomial();
    if (g.vertex_count == 0) return IntPolynomial::constant(1);
    return solve_simple(adjacency_bitsets(g));
}

IntPolynomial ChromaticSolver::solve_simple(std::vector<uint32_t> adj) {
    const int n = static_cast<int>(adj.size());
    // Split off isolated vertices and connected components.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if ((adj[x] >> u & 1u) && comp[u] < 0) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
            }
        }
        ++ncomp;
    }
    size_t isolated = 0;
    IntPolynomial result = IntPolynomial::constant(1);
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v) {
            if (comp[v] == c) verts.push_back(v);
        }
        if (verts.size() == 1) {
            ++isolated;
            continue;
        }
        // Reindex the component.
        std::vector<int> pos(n, -1);
        for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
        std::vector<uint32_t> sub(verts.size(), 0);
        int m = 0;
        for (size_t i = 0; i < verts.size(); ++i) {
            for (size_t j = i + 1; j < verts.size(); ++j) {
                if (adj[verts[i]] >> verts[j] & 1u) {
                    sub[i] |= 1u << j;
                    sub[j] |= 1u << i;
                    ++m;
                }
            }
        }
        const int k = static_cast<int>(verts.size());
        if (m == k - 1) {  // spanning tree
            result = result * IntPolynomial({Int(0), Int(1)});
            IntPolynomial qm1({Int(-1), Int(1)});
            for (int i = 1; i < k; ++i) result = result * qm1;
            continue;
        }
        if (m == k * (k - 1) / 2) {  // complete
            result = result * falling_factorial(k);
            continue;
        }
        std::string key = canonical_string(sub);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                result = result * it->second;
                continue;
            }
        }
        // Deletion-contraction on the edge with the largest degree sum.
        int bu = -1, bv = -1, bscore = -1;
        for (int u = 0; u < k; ++u) {
            for (int v = u + 1; v < k; ++v) {
                if (!(sub[u] >> v & 1u)) continue;
                int score = std::popcount(sub[u]) + std::popcount(sub[v]);
                if (score > bscore) {
                    bscore = score;
                    bu = u;
                    bv = v;
                }
            }
        }
        auto deleted = sub;
        deleted[bu] &= ~(1u << bv);
        deleted[bv] &= ~(1u << bu);
        // Contract bv into bu, drop bv.
        std::vector<uint32_t> contracted(k - 1, 0);
        auto remap = [&](int x) { return x < bv ? x : x - 1; };
        for (int u = 0; u < k; ++u) {
            if (u == bv) continue;
            for (int v = u + 1; v < k; ++v) {
                if (v == bv || !(sub[u] >> v & 1u)) continue;
                int a = remap(u), b = remap(v);
                contracted[a] |= 1u << b;
                contracted[b] |= 1u << a;
            }
        }
        for (int v = 0; v < k; ++v) {
            if (v == bv || v == bu || !(sub[bv] >> v & 1u)) continue;
            int a = remap(bu), b = remap(v);
            contracted[a] |= 1u << b;
            contracted[b] |= 1u << a;
        }
        IntPolynomial chi = solve_simple(std::move(deleted)) - solve_simple(std::move(contracted));
        {
            std::lock_guard<std::mutex> lock(mutex_);
            memo_.emplace(std::move(key), chi);
        }
        result = result * chi;
    }
    if (isolated > 0) result = result * q_power(isolated);
    return result;
}

IntPolynomial chromatic_polynomial(const Graph& g) {
    static ChromaticSolver solver;
    return solver.chromatic_polynomial(g);
}

}  // namespace logcave
