#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "logcave/graph.hpp"
#include "logcave/homclass.hpp"
#include "logcave/monomial.hpp"
#include "logcave/polytope.hpp"

namespace logcave::io {

struct ParseError : std::runtime_error {
    ParseError(const std::string& path, int line, const std::string& message)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + message) {}
};

// "p <n>" header, then one "u v" edge per line; '#' comments allowed.
Graph read_graph(const std::string& path);

// Whitespace-separated rational entries ("p/q" or integers), one row per line.
std::vector<std::vector<Rat>> read_matrix(const std::string& path);

// "vars <k>" header, then one generator exponent vector per line.
MonomialIdeal read_ideal(const std::string& path);

// "dim <n>" header, then one integer point per line.
LatticePolytope read_polytope(const std::string& path);

// One term per line: "<coeff p/q> <e_0> <e_1> ... <e_n>".
std::vector<PolyTerm> read_polynomial(const std::string& path);

// JSON {"n":..,"m":..,"k":..,"e":[..]} with e covering the valid index
// range, or an object mapping index to value.
HomologyClass read_class_json(const std::string& path);

}  // namespace logcave::io
