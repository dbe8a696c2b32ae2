#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "logcave/poly.hpp"

namespace logcave {

// Finite multigraph on vertices 0..vertex_count-1. Loops and parallel
// edges are allowed.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> e);

    bool has_loop() const;
    Graph disjoint_union(const Graph& other) const;
};

int component_count(const Graph& g);

// Exact number of proper q-colorings by backtracking enumeration.
// Independent of the deletion-contraction path; used as an oracle.
Int coloring_count_oracle(const Graph& g, long q);

// Canonical byte key of the simple graph underlying g (loops and edge
// multiplicities ignored), equal for isomorphic graphs. Vertex count <= 32.
std::vector<uint8_t> canonical_key(const Graph& g);

// Deletion-contraction solver with a memo table keyed by canonical form.
// The memo is shared across calls on the same solver and guarded by a
// mutex, so one solver may serve several threads.
class ChromaticSolver {
public:
    IntPolynomial chromatic_polynomial(const Graph& g);

private:
    IntPolynomial solve_simple(std::vector<uint32_t> adj);
    std::unordered_map<std::string, IntPolynomial> memo_;
    std::mutex mutex_;
};

// Convenience entry point backed by a process-wide solver.
IntPolynomial chromatic_polynomial(const Graph& g);

}  // namespace logcave
