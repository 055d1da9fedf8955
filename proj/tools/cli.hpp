#pragma once

// The `schubert` command line. run_cli is kept separate from main so tests
// can drive it in-process with captured streams.
//
// Exit codes: 0 ok, 1 oracle disagreement, 2 parse or validation error,
// 3 mathematical precondition failure (rank-deficient matrix).

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/json_io.hpp"
#include "schubert/schubert.hpp"

namespace schubert::cli {

enum ExitCode { ok = 0, disagreement = 1, usage = 2, precondition = 3 };

struct GlobalFlags {
    std::optional<int> k;
    std::optional<int> n;
    bool quantum = false;
    bool json = false;
};

inline int require_k(const GlobalFlags& g, const char* command)
{
    if (!g.k) throw invalid_input(std::string(command) + " needs --k");
    return *g.k;
}

/// The context named by --k/--n/--quantum; infinite when --n is absent.
inline GrassmannContext context_for(const GlobalFlags& g, int k)
{
    if (!g.n) {
        if (g.quantum) throw invalid_input("--quantum needs --n");
        return GrassmannContext(k, k, Mode::infinite);
    }
    return GrassmannContext(k, *g.n, g.quantum ? Mode::quantum : Mode::classical);
}

inline GrassmannContext finite_context(const GlobalFlags& g, const char* command)
{
    if (!g.k || !g.n) throw invalid_input(std::string(command) + " needs --k and --n");
    return context_for(g, *g.k);
}

inline void print(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

inline int cmd_pieri(const GlobalFlags& g, int h, const std::string& symbol_text, std::ostream& out)
{
    if (h < 0) throw invalid_input("h must be nonnegative");
    const SchubertSymbol sym = parse_symbol(symbol_text);
    if (g.k && *g.k != sym.size()) throw invalid_input("symbol length does not match --k");
    if (sym.size() == 0) throw invalid_input("empty symbol");
    const GrassmannContext ctx = context_for(g, sym.size());
    if (ctx.mode != Mode::infinite && sym.max_index() > ctx.n) throw invalid_input("symbol index above n");
    const KVector result = reduce(pieri_D(h, KVector::basis(sym)), ctx);
    if (g.json) {
        auto j = to_json(result);
        j["context"] = context_to_json(ctx);
        print(out, j);
    } else {
        out << to_string(result) << '\n';
    }
    return ok;
}

inline int cmd_mult(const GlobalFlags& g, const std::string& lambda_text, const std::string& mu_text, std::ostream& out)
{
    const GrassmannContext ctx = context_for(g, require_k(g, "mult"));
    const SchubertElement product = multiply(parse_partition(lambda_text), parse_partition(mu_text), ctx);
    if (g.json) {
        auto j = to_json(product);
        j["context"] = context_to_json(ctx);
        print(out, j);
    } else {
        out << to_string(product) << '\n';
    }
    return ok;
}

inline int cmd_giambelli(const GlobalFlags& g, const std::string& lambda_text, std::ostream& out)
{
    const int k = require_k(g, "giambelli");
    if (k < 1) throw invalid_input("--k must be positive");
    const Partition lambda = parse_partition(lambda_text);
    if (lambda.length() > k) throw invalid_input("partition has more than k parts");
    if (g.n && !lambda.fits_box(k, *g.n - k)) throw invalid_input("partition outside the k x (n-k) box");
    const DPolynomial det = giambelli_det(lambda, k);
    if (g.json)
        print(out, to_json(det));
    else
        out << to_string(det) << '\n';
    return ok;
}

inline int cmd_present(const GlobalFlags& g, std::ostream& out)
{
    const GrassmannContext ctx = finite_context(g, "present");
    const auto report = verify_presentation(ctx.k, ctx.n, ctx.mode);
    if (g.json) {
        print(out, to_json(report));
        return report.all_hold() ? ok : disagreement;
    }
    out << "G(" << ctx.k << "," << ctx.n << ") " << to_string(ctx.mode) << '\n';
    out << "generators: ";
    for (int i = 1; i <= ctx.k; ++i) out << (i > 1 ? ", D" : "D") << i;
    if (ctx.mode == Mode::quantum) out << ", q";
    out << '\n';
    for (const auto& r : report.checked_relations)
        out << (r.holds ? "  ok    " : "  FAIL  ") << r.name << ": " << r.polynomial << '\n';
    return report.all_hold() ? ok : disagreement;
}

inline int cmd_table(const GlobalFlags& g, std::optional<int> max_weight, unsigned threads, std::ostream& out)
{
    const GrassmannContext ctx = finite_context(g, "table");
    const int w = max_weight.value_or(ctx.k * (ctx.n - ctx.k));
    print(out, to_json(structure_table(ctx, w, threads)));
    return ok;
}

inline int cmd_check(const GlobalFlags& g, std::ostream& out)
{
    std::vector<std::pair<int, int>> spaces;
    if (g.k || g.n) {
        const GrassmannContext ctx = finite_context(g, "check");
        spaces.emplace_back(ctx.k, ctx.n);
    } else {
        spaces = {{1, 4}, {2, 4}, {2, 5}, {3, 6}};
    }
    bool all = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [k, n] : spaces) {
        for (const auto& o : checks::run_all(k, n)) {
            all = all && o.passed;
            if (g.json)
                j.push_back({{"name", o.name}, {"passed", o.passed}, {"cases", o.cases}, {"detail", o.detail}});
            else
                out << (o.passed ? "PASS  " : "FAIL  ") << o.name << " [" << o.cases << " cases]"
                    << (o.passed ? "" : ": " + o.detail) << '\n';
        }
    }
    if (g.json) print(out, j);
    return all ? ok : disagreement;
}

inline int cmd_pluecker(const GlobalFlags& g, const std::string& path, std::ostream& out)
{
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot read matrix file: " + path);
    const IntegerMatrix m = IntegerMatrix::parse(in);
    if (g.k && *g.k != m.rows()) throw invalid_input("matrix has " + std::to_string(m.rows()) + " rows, --k says " + std::to_string(*g.k));
    if (g.n && *g.n != m.cols()) throw invalid_input("matrix has " + std::to_string(m.cols()) + " columns, --n says " + std::to_string(*g.n));
    const SchubertSymbol sym = schubert_symbol_of(m);
    const auto minors = pluecker_coordinates(m);
    const auto cert = bruhat_certificate(m, sym);
    const Partition lambda = symbol_to_partition(sym);

    if (g.json) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& [s, minor] : minors) coords.push_back({{"symbol", s.indices()}, {"minor", integer_to_json(minor)}});
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& s : cert.violations) violations.push_back(s.indices());
        print(out, {{"k", m.rows()},
                    {"n", m.cols()},
                    {"pluecker", std::move(coords)},
                    {"symbol", sym.indices()},
                    {"partition", lambda.parts()},
                    {"codimension", lambda.weight()},
                    {"bruhat_minimal", cert.holds},
                    {"violations", std::move(violations)}});
        return ok;
    }
    for (const auto& [s, minor] : minors) out << to_string(s) << " " << minor << '\n';
    out << "symbol " << to_string(sym) << '\n';
    out << "partition " << to_string(lambda) << '\n';
    out << "codimension " << lambda.weight() << '\n';
    out << "bruhat-minimal " << (cert.holds ? "yes" : "no") << '\n';
    return ok;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Schubert calculus through Schubert derivations on exterior powers", "schubert"};
    app.require_subcommand(1);
    GlobalFlags g;
    int k_value = 0;
    int n_value = 0;
    auto* k_opt = app.add_option("--k", k_value, "dimension of the subspaces");
    auto* n_opt = app.add_option("--n", n_value, "dimension of the ambient space; omit for the infinite module");
    app.add_flag("--quantum", g.quantum, "work in the small quantum ring");
    app.add_flag("--json", g.json, "machine-readable output");

    int h = 0;
    std::string first;
    std::string second;
    std::optional<int> max_weight;
    unsigned threads = 0;

    auto* pieri = app.add_subcommand("pieri", "apply D_h to a wedge monomial e[i1,...,ik]");
    pieri->add_option("index", h, "derivation index h")->required();
    pieri->add_option("symbol", first, "comma-separated strictly increasing indices")->required();
    auto* mult = app.add_subcommand("mult", "product of two Schubert classes");
    mult->add_option("lambda", first, "partition, comma-separated")->required();
    mult->add_option("mu", second, "partition, comma-separated")->required();
    auto* giam = app.add_subcommand("giambelli", "Giambelli determinant in D_1, D_2, ...");
    giam->add_option("lambda", first, "partition, comma-separated")->required();
    auto* present = app.add_subcommand("present", "generators and relations of the intersection ring");
    auto* table = app.add_subcommand("table", "structure constants as JSON");
    table->add_option("--max-weight", max_weight, "only classes of at most this weight");
    table->add_option("--threads", threads, "worker threads (0 = hardware)");
    auto* check = app.add_subcommand("check", "run the oracle and property suites");
    auto* pluecker = app.add_subcommand("pluecker", "Pluecker coordinates and Schubert cell of a k x n matrix");
    pluecker->add_option("matrix", first, "file of whitespace-separated integer rows")->required();
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    if (*k_opt) g.k = k_value;
    if (*n_opt) g.n = n_value;

    try {
        if (*pieri) return cmd_pieri(g, h, first, out);
        if (*mult) return cmd_mult(g, first, second, out);
        if (*giam) return cmd_giambelli(g, first, out);
        if (*present) return cmd_present(g, out);
        if (*table) return cmd_table(g, max_weight, threads, out);
        if (*check) return cmd_check(g, out);
        if (*pluecker) return cmd_pluecker(g, first, out);
    } catch (const rank_deficient& e) {
        err << "error: " << e.what() << '\n';
        return precondition;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace schubert::cli
