#include <atomic>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "logcave/homclass.hpp"
#include "logcave/io.hpp"
#include "logcave/matroid.hpp"
#include "logcave/milnor.hpp"
#include "logcave/monomial.hpp"
#include "logcave/polytope.hpp"
#include "logcave/seq.hpp"

namespace {

using nlohmann::json;
using namespace logcave;

json poly_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json int_vector_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& c : v) arr.push_back(c.get_str());
    return arr;
}

std::vector<Int> abs_coeffs(const IntPolynomial& p) {
    std::vector<Int> a;
    a.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) a.push_back(abs(c));
    return a;
}

// Verdicts for a characteristic-type polynomial: absolute coefficients are
// tested for log-concavity/unimodality/internal zeros, raw ones for sign
// alternation. Zero polynomials skip (null verdicts).
json coefficient_verdicts(const IntPolynomial& p) {
    json v;
    if (p.is_zero()) {
        v["skipped"] = true;
        v["log_concave"] = nullptr;
        v["no_internal_zeros"] = nullptr;
        v["unimodal"] = nullptr;
        v["sign_alternating"] = nullptr;
        return v;
    }
    Sequence abs_seq(abs_coeffs(p));
    Sequence raw_seq(p.coeffs());
    v["skipped"] = false;
    v["log_concave"] = is_log_concave(abs_seq);
    v["no_internal_zeros"] = has_no_internal_zeros(abs_seq);
    v["unimodal"] = is_unimodal(abs_seq);
    v["sign_alternating"] = is_sign_alternating(raw_seq);
    return v;
}

json mu_json(const MuProfile& mu) {
    json out;
    out["mu"] = int_vector_json(mu.values);
    switch (mu.route) {
        case MuRoute::Arrangement: out["route"] = "arrangement"; break;
        case MuRoute::Monomial: out["route"] = "monomial"; break;
        case MuRoute::GenericIsolated: out["route"] = "generic_isolated"; break;
    }
    out["csm"] = int_vector_json(csm_class(mu));
    out["euler"] = euler_characteristic(mu).get_str();
    Sequence s(mu.values);
    out["verdicts"]["log_concave"] = is_log_concave(s);
    out["verdicts"]["no_internal_zeros"] = has_no_internal_zeros(s);
    out["verdicts"]["mu0_is_1"] = mu.values[0] == 1;
    out["verdicts"]["nonnegative"] =
        std::all_of(mu.values.begin(), mu.values.end(), [](const Int& x) { return x >= 0; });
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::istringstream ss(s);
    std::vector<int> out;
    std::string tok;
    while (std::getline(ss, tok, ss.str().find(',') != std::string::npos ? ',' : ' ')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list '" + s + "'");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const std::string& message) {
    json j;
    j["error"] = message;
    emit(j);
    return 2;
}

// ---- audit driver ---------------------------------------------------------

struct AuditResult {
    std::string file;
    json report;
    bool pass = false;
};

bool audit_logconcave_file(const std::filesystem::path& p, json& report) {
    IntPolynomial chi;
    if (p.extension() == ".graph") {
        chi = chromatic_polynomial(io::read_graph(p.string()));
    } else {
        chi = characteristic_polynomial(from_matrix(io::read_matrix(p.string())));
    }
    report["polynomial"] = poly_json(chi);
    json v = coefficient_verdicts(chi);
    report["verdicts"] = v;
    if (v["skipped"].get<bool>()) return true;
    return v["log_concave"].get<bool>() && v["no_internal_zeros"].get<bool>() &&
           v["sign_alternating"].get<bool>();
}

bool audit_bound_file(const std::filesystem::path& p, json& report) {
    auto lines = io::read_polynomial(p.string());  // monomial: a single term
    if (lines.size() != 1) throw std::runtime_error("bound audit expects a single monomial term");
    Exponents h(lines[0].exponents.begin(), lines[0].exponents.end());
    MuProfile mu = mu_monomial(h);
    report["mu"] = int_vector_json(mu.values);
    LatticePolytope dh = newton_polytope_delta_h(lines);
    auto audit = kouchnirenko_audit(mu, dh);
    json rows = json::array();
    bool ok = true;
    for (const auto& row : audit.rows) {
        json r;
        r["mu"] = row.mu.get_str();
        r["upper"] = row.upper.get_str();
        r["upper_ok"] = row.upper_ok;
        rows.push_back(r);
        ok = ok && row.upper_ok;
    }
    report["bounds"] = rows;
    Sequence s(mu.values);
    ok = ok && is_log_concave(s) && has_no_internal_zeros(s) && mu.values[0] == 1;
    return ok;
}

int run_audit(const std::string& dir, bool bound_mode, int threads) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension();
        if (bound_mode ? ext == ".monomial" : (ext == ".graph" || ext == ".matrix"))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<AuditResult> results(files.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            AuditResult& r = results[i];
            r.file = files[i].string();
            auto t0 = std::chrono::steady_clock::now();
            try {
                r.pass = bound_mode ? audit_bound_file(files[i], r.report)
                                    : audit_logconcave_file(files[i], r.report);
            } catch (const std::exception& e) {
                r.report["error"] = e.what();
                r.pass = false;
            }
            r.report["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
        }
    };
    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(files.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    size_t passed = 0;
    for (const auto& r : results) {
        json line = r.report;
        line["file"] = r.file;
        line["pass"] = r.pass;
        std::cout << line.dump() << "\n";
        passed += r.pass;
    }
    json summary;
    summary["total"] = files.size();
    summary["passed"] = passed;
    summary["failed"] = files.size() - passed;
    emit(summary);
    return passed == files.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants: chromatic/characteristic polynomials, mixed "
                 "multiplicities, mixed volumes, Milnor profiles, class representability"};
    app.require_subcommand(1);

    std::string graph_file, matrix_file, arrangement_file, monomial_arg, class_file, poly_file,
        audit_dir, isolated_arg, index_arg;
    std::vector<std::string> positional_files;
    bool reduced = false, bound_mode = false, logconcave_mode = false;
    int threads = 0, base_point = 0;
    long iso_d = 0;
    int iso_n = 0;

    auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial of a graph");
    chromatic->add_option("graph", graph_file, "graph file")->required();

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a matroid");
    auto* opt_matrix = charpoly->add_option("--matrix", matrix_file, "matrix file (column matroid)");
    auto* opt_graph = charpoly->add_option("--graph", graph_file, "graph file (cycle matroid)");
    opt_matrix->excludes(opt_graph);
    charpoly->add_flag("--reduced", reduced, "also divide by (q-1)");

    auto* mu = app.add_subcommand("mu", "Milnor number profile");
    auto* opt_arr = mu->add_option("--arrangement", arrangement_file, "linear forms as matrix rows");
    auto* opt_mono = mu->add_option("--monomial", monomial_arg, "monomial exponents, e.g. '1 1 1'");
    auto* opt_iso = mu->add_option("--isolated", isolated_arg,
                                   "'d n mu1 mu2 ...' for generic isolated singularities");
    opt_arr->excludes(opt_mono)->excludes(opt_iso);
    opt_mono->excludes(opt_iso);

    auto* mixedvol = app.add_subcommand("mixedvol", "mixed volume of n polytopes in R^n");
    mixedvol->add_option("polytopes", positional_files, "polytope files")->required();

    auto* mixedmult = app.add_subcommand("mixedmult", "mixed multiplicities of monomial ideals");
    mixedmult->add_option("ideals", positional_files, "ideal files")->required();
    mixedmult->add_option("--index", index_arg, "single multi-index i0,i1,...,is");
    mixedmult->add_option("--base-point", base_point, "extraction base point override");

    auto* newton = app.add_subcommand("newton", "Newton polytope of the derivatives");
    newton->add_option("polynomial", poly_file, "homogeneous polynomial file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "homology class representability");
    classify_cmd->add_option("class", class_file, "class JSON file")->required();

    auto* audit = app.add_subcommand("audit", "directory-wide property audits");
    audit->add_option("dir", audit_dir, "corpus directory")->required();
    audit->add_flag("--logconcave", logconcave_mode, "chromatic/characteristic coefficient audits");
    audit->add_flag("--bound", bound_mode, "Kouchnirenko bound audits on monomials");
    audit->add_option("--threads", threads, "parallelism cap (default: cores)");

    bool json_out = true;
    app.add_flag("--json", json_out, "JSON output (default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (chromatic->parsed()) {
            IntPolynomial chi = chromatic_polynomial(io::read_graph(graph_file));
            json out;
            out["polynomial"] = poly_json(chi);
            out["verdicts"] = coefficient_verdicts(chi);
            emit(out);
            return 0;
        }
        if (charpoly->parsed()) {
            if (matrix_file.empty() == graph_file.empty())
                return fail("charpoly needs exactly one of --matrix or --graph");
            Matroid m = matrix_file.empty() ? cycle_matroid(io::read_graph(graph_file))
                                            : from_matrix(io::read_matrix(matrix_file));
            IntPolynomial chi = characteristic_polynomial(m);
            json out;
            out["polynomial"] = poly_json(chi);
            out["verdicts"] = coefficient_verdicts(chi);
            if (reduced) out["reduced"] = poly_json(divide_by_q_minus_1(chi));
            emit(out);
            return 0;
        }
        if (mu->parsed()) {
            MuProfile profile;
            if (!arrangement_file.empty()) {
                profile = mu_arrangement(Arrangement(io::read_matrix(arrangement_file)));
            } else if (!monomial_arg.empty()) {
                profile = mu_monomial(parse_int_list(monomial_arg));
            } else if (!isolated_arg.empty()) {
                std::vector<int> args = parse_int_list(isolated_arg);
                if (args.size() < 2) return fail("--isolated needs at least 'd n'");
                iso_d = args[0];
                iso_n = args[1];
                std::vector<Int> local(args.begin() + 2, args.end());
                profile = mu_generic_isolated(iso_d, iso_n, local);
            } else {
                return fail("mu needs one of --arrangement, --monomial, --isolated");
            }
            emit(mu_json(profile));
            return 0;
        }
        if (mixedvol->parsed()) {
            std::vector<LatticePolytope> ps;
            for (const auto& f : positional_files) ps.push_back(io::read_polytope(f));
            json out;
            out["mixed_volume"] = to_decimal(mixed_volume(ps));
            emit(out);
            return 0;
        }
        if (mixedmult->parsed()) {
            std::vector<MonomialIdeal> ideals;
            for (const auto& f : positional_files) ideals.push_back(io::read_ideal(f));
            MixedOptions opts;
            opts.base_point = base_point;
            json out;
            if (!index_arg.empty()) {
                std::vector<int> index = parse_int_list(index_arg);
                out["index"] = index;
                out["value"] = mixed_multiplicity(ideals, index, opts).get_str();
            } else {
                MixedMultiplicityProfile profile = mixed_multiplicities(ideals, opts);
                out["total_degree"] = profile.total_degree;
                json values;
                for (const auto& [idx, val] : profile.values) {
                    std::string key;
                    for (size_t i = 0; i < idx.size(); ++i)
                        key += (i ? "," : "") + std::to_string(idx[i]);
                    values[key] = val.get_str();
                }
                out["values"] = values;
            }
            emit(out);
            return 0;
        }
        if (newton->parsed()) {
            LatticePolytope p = newton_polytope_delta_h(io::read_polynomial(poly_file));
            json out;
            out["dim"] = p.dim_ambient();
            json verts = json::array();
            for (const auto& v : p.vertices()) verts.push_back(int_vector_json(v));
            out["vertices"] = verts;
            emit(out);
            return 0;
        }
        if (classify_cmd->parsed()) {
            HomologyClass xi = io::read_class_json(class_file);
            Verdict verdict = classify(xi);
            json out;
            out["verdict"] = to_string(verdict);
            bool ok = true;
            if (verdict == Verdict::RepresentableUpToMultiple) {
                try {
                    Witness w = construct_witness(xi);
                    json wj;
                    wj["lambda"] = w.lambda;
                    wj["multiple"] = w.multiple.get_str();
                    wj["support_offset"] = w.support_offset;
                    json me = json::array();
                    for (const auto& g : w.map_exponents) me.push_back(g);
                    wj["map_exponents"] = me;
                    wj["predicted_degrees"] = int_vector_json(w.predicted_degrees);
                    ok = verify_witness(w);
                    wj["verified"] = ok;
                    out["witness"] = wj;
                } catch (const std::domain_error& e) {
                    out["witness"] = nullptr;
                    out["note"] = e.what();
                }
            }
            emit(out);
            return ok ? 0 : 1;
        }
        if (audit->parsed()) {
            if (bound_mode == logconcave_mode)
                return fail("audit needs exactly one of --logconcave or --bound");
            return run_audit(audit_dir, bound_mode, threads);
        }
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return fail("no command");
}
