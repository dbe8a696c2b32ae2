#include "logcave/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace logcave::io {

namespace {

// Yields (line_number, tokens) for nonempty non-comment lines.
std::vector<std::pair<int, std::vector<std::string>>> tokenize_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.emplace_back(lineno, std::move(tokens));
    }
    return out;
}

long parse_long(const std::string& path, int line, const std::string& tok) {
    size_t pos = 0;
    long v;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(path, line, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(path, line, "trailing junk in '" + tok + "'");
    return v;
}

}  // namespace

Graph read_graph(const std::string& path) {
    auto lines = tokenize_file(path);
    if (lines.empty()) throw ParseError(path, 1, "missing 'p <n>' header");
    auto& [hline, htok] = lines[0];
    if (htok.size() != 2 || htok[0] != "p") throw ParseError(path, hline, "expected 'p <n>' header");
    long n = parse_long(path, hline, htok[1]);
    if (n < 0 || n > 32) throw ParseError(path, hline, "vertex count out of range");
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto& [lno, tok] = lines[i];
        if (tok.size() != 2) throw ParseError(path, lno, "expected 'u v' edge line");
        long u = parse_long(path, lno, tok[0]), v = parse_long(path, lno, tok[1]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(path, lno, "edge endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<std::vector<Rat>> read_matrix(const std::string& path) {
    auto lines = tokenize_file(path);
    std::vector<std::vector<Rat>> rows;
    for (auto& [lno, tok] : lines) {
        std::vector<Rat> row;
        for (const auto& t : tok) {
            try {
                row.push_back(parse_rational(t));
            } catch (const std::exception&) {
                throw ParseError(path, lno, "bad rational '" + t + "'");
            }
        }
        if (!rows.empty() && row.size() != rows[0].size())
            throw ParseError(path, lno, "ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(path, 1, "empty matrix");
    return rows;
}

MonomialIdeal read_ideal(const std::string& path) {
    auto lines = tokenize_file(path);
    if (lines.empty()) throw ParseError(path, 1, "missing 'vars <k>' header");
    auto& [hline, htok] = lines[0];
    if (htok.size() != 2 || htok[0] != "vars")
        throw ParseError(path, hline, "expected 'vars <k>' header");
    long k = parse_long(path, hline, htok[1]);
    if (k < 1) throw ParseError(path, hline, "need at least one variable");
    std::vector<Exponents> gens;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto& [lno, tok] = lines[i];
        if (static_cast<long>(tok.size()) != k)
            throw ParseError(path, lno, "expected " + std::to_string(k) + " exponents");
        Exponents g;
        for (const auto& t : tok) {
            long e = parse_long(path, lno, t);
            if (e < 0) throw ParseError(path, lno, "negative exponent");
            g.push_back(static_cast<int>(e));
        }
        gens.push_back(std::move(g));
    }
    if (gens.empty()) throw ParseError(path, hline, "ideal needs at least one generator");
    return MonomialIdeal(static_cast<int>(k), std::move(gens));
}

LatticePolytope read_polytope(const std::string& path) {
    auto lines = tokenize_file(path);
    if (lines.empty()) throw ParseError(path, 1, "missing 'dim <n>' header");
    auto& [hline, htok] = lines[0];
    if (htok.size() != 2 || htok[0] != "dim")
        throw ParseError(path, hline, "expected 'dim <n>' header");
    long n = parse_long(path, hline, htok[1]);
    if (n < 0) throw ParseError(path, hline, "negative dimension");
    std::vector<LatticePoint> pts;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto& [lno, tok] = lines[i];
        if (static_cast<long>(tok.size()) != n)
            throw ParseError(path, lno, "expected " + std::to_string(n) + " coordinates");
        LatticePoint p;
        for (const auto& t : tok) p.push_back(Int(parse_long(path, lno, t)));
        pts.push_back(std::move(p));
    }
    if (pts.empty()) throw ParseError(path, hline, "polytope needs at least one point");
    return LatticePolytope(static_cast<int>(n), std::move(pts));
}

std::vector<PolyTerm> read_polynomial(const std::string& path) {
    auto lines = tokenize_file(path);
    std::vector<PolyTerm> terms;
    for (auto& [lno, tok] : lines) {
        if (tok.size() < 2) throw ParseError(path, lno, "expected '<coeff> <exponents...>'");
        PolyTerm term;
        try {
            term.coeff = parse_rational(tok[0]);
        } catch (const std::exception&) {
            throw ParseError(path, lno, "bad rational '" + tok[0] + "'");
        }
        for (size_t i = 1; i < tok.size(); ++i) {
            long e = parse_long(path, lno, tok[i]);
            if (e < 0) throw ParseError(path, lno, "negative exponent");
            term.exponents.push_back(static_cast<int>(e));
        }
        if (!terms.empty() && term.exponents.size() != terms[0].exponents.size())
            throw ParseError(path, lno, "inconsistent number of variables");
        terms.push_back(std::move(term));
    }
    if (terms.empty()) throw ParseError(path, 1, "empty polynomial");
    return terms;
}

HomologyClass read_class_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path, 1, e.what());
    }
    auto get_int = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number_integer())
            throw ParseError(path, 1, std::string("missing integer field '") + key + "'");
        return j[key].get<int>();
    };
    int n = get_int("n"), m = get_int("m"), k = get_int("k");
    if (!j.contains("e")) throw ParseError(path, 1, "missing field 'e'");
    auto parse_value = [&](const nlohmann::json& v) {
        if (v.is_number_integer()) return Int(v.get<long>());
        if (v.is_string()) return Int(v.get<std::string>());
        throw ParseError(path, 1, "coefficients must be integers or decimal strings");
    };
    std::map<int, Int> e;
    int lo = std::max(0, k - n), hi = std::min(m, k);
    if (j["e"].is_array()) {
        if (static_cast<int>(j["e"].size()) != hi - lo + 1)
            throw ParseError(path, 1, "'e' array must cover the valid index range");
        int i = lo;
        for (const auto& v : j["e"]) e[i++] = parse_value(v);
    } else if (j["e"].is_object()) {
        for (auto& [key, v] : j["e"].items()) e[std::stoi(key)] = parse_value(v);
    } else {
        throw ParseError(path, 1, "'e' must be an array or an object");
    }
    return HomologyClass(n, m, k, std::move(e));
}

}  // namespace logcave::io
