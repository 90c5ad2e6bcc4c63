// Command-line surface over the library: involution enumeration, reduced
// expressions, braid-move graphs, transition polynomials, theta images, the
// dimension certification, and row insertion.  Output is byte-deterministic
// for fixed flags: JSON key order is fixed, collections are emitted in
// (length, lex) order, and the specialization seed defaults to a constant.
//
// Exit codes: 0 success, 1 a verification the command performs failed,
// 2 usage error (bad flags, malformed input, rank out of range).

#include <invo/braid.hpp>
#include <invo/etamap.hpp>
#include <invo/hecke.hpp>
#include <invo/istar.hpp>
#include <invo/lvmodule.hpp>
#include <invo/perm.hpp>
#include <invo/rsk.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include <unistd.h>

using json = nlohmann::ordered_json;
using namespace invo;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool use_color() {
    static const bool on = isatty(1) != 0 && std::getenv("NO_COLOR") == nullptr;
    return on;
}

std::string flag_word(bool ok) {
    const char* word = ok ? "yes" : "no";
    if (!use_color()) return word;
    return ok ? std::string("\033[32m") + word + "\033[0m" : std::string("\033[31m") + word + "\033[0m";
}

void require_rank(int n, int lo, int hi, const std::string& cmd) {
    if (n < lo || n > hi)
        throw UsageError(cmd + ": --n must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

Perm parse_perm(const std::string& s, int n) {
    try {
        return perm_from_string(s, n);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --w: ") + e.what());
    }
}

Perm parse_involution(const std::string& s, int n) {
    Perm w = parse_perm(s, n);
    if (!is_involution(w)) throw UsageError("--w must be an involution (w * w = identity)");
    return w;
}

json perm_json(const Perm& p) { return json(p); }

// coefficient as [[exponent_of_v, "integer"], ...], ascending exponents
json laurent_json(const Laurent& f) {
    json arr = json::array();
    for (const auto& [e, c] : f.json_terms()) arr.push_back(json::array({e, c}));
    return arr;
}

std::string laurent_text(const Laurent& f) { return f.even_only() ? f.str_u() : f.str(); }

json hecke_json(const HeckeElt& h) {
    json terms = json::array();
    for (const auto& [w, f] : h.c) terms.push_back({{"perm", perm_json(w)}, {"coeff", laurent_json(f)}});
    return terms;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- commands

int cmd_involutions(int n, const std::string& format) {
    require_rank(n, 1, 8, "involutions");
    const auto invs = enumerate_involutions(n);
    if (format == "json") {
        json out;
        out["n"] = n;
        out["count"] = invs.size();
        json arr = json::array();
        for (const auto& w : invs) arr.push_back(perm_json(w));
        out["involutions"] = arr;
        emit(out);
    } else {
        for (const auto& w : invs) std::cout << perm_to_string(w) << " rho=" << rho(w) << '\n';
    }
    return 0;
}

int cmd_rho(int n, const std::string& wstr, const std::string& format) {
    require_rank(n, 1, 8, "rho");
    const Perm w = parse_involution(wstr, n);
    const int r = rho(w);
    if (format == "json")
        emit(json{{"n", n}, {"w", perm_json(w)}, {"rho", r}});
    else
        std::cout << r << '\n';
    return 0;
}

int cmd_expressions(int n, const std::string& wstr, const std::string& format) {
    require_rank(n, 1, 7, "expressions");
    const Perm w = parse_involution(wstr, n);
    const auto exprs = reduced_istar_expressions(w);
    if (format == "json") {
        json out;
        out["n"] = n;
        out["w"] = perm_json(w);
        out["rho"] = rho(w);
        out["count"] = exprs.size();
        json arr = json::array();
        for (const auto& e : exprs) arr.push_back(json(e));
        out["expressions"] = arr;
        emit(out);
    } else {
        for (const auto& e : exprs) std::cout << (e.empty() ? "e" : word_to_string(e)) << '\n';
    }
    return 0;
}

int cmd_braid_graph(int n, const std::string& wstr, const std::string& format) {
    require_rank(n, 1, 7, "braid-graph");
    const Perm w = parse_involution(wstr, n);
    if (format == "dot") {
        std::cout << braid_graph_dot(w);
        return 0;
    }
    const BraidReport rep = verify_connectivity(w);
    if (format == "json") {
        emit(json{{"n", rep.n},
                  {"involution", perm_json(rep.involution)},
                  {"vertices", rep.vertices},
                  {"edges", rep.edges},
                  {"connected", rep.connected},
                  {"diameter", rep.diameter}});
    } else {
        std::cout << "involution " << perm_to_string(rep.involution) << ": vertices=" << rep.vertices
                  << " edges=" << rep.edges << " connected=" << (rep.connected ? "yes" : "no")
                  << " diameter=" << rep.diameter << '\n';
    }
    return 0;
}

int cmd_verify_braid(int n, const std::string& format) {
    require_rank(n, 1, 6, "verify-braid");
    bool all_connected = true;
    json reports = json::array();
    std::string text;
    for (const Perm& w : enumerate_involutions(n)) {
        const BraidReport rep = verify_connectivity(w);
        all_connected = all_connected && rep.connected;
        reports.push_back(json{{"n", rep.n},
                               {"involution", perm_json(rep.involution)},
                               {"vertices", rep.vertices},
                               {"edges", rep.edges},
                               {"connected", rep.connected},
                               {"diameter", rep.diameter}});
        text += perm_to_string(w) + ": vertices=" + std::to_string(rep.vertices) +
                " connected=" + (rep.connected ? "yes" : "no") + "\n";
    }
    if (format == "json") {
        emit(json{{"n", n}, {"all_connected", all_connected}, {"reports", reports}});
    } else {
        std::cout << text << "all_connected: " << flag_word(all_connected) << '\n';
    }
    return all_connected ? 0 : 1;
}

int cmd_psigma(int n, const std::string& wstr, const std::string& format) {
    require_rank(n, 1, 6, "psigma");
    LVContext ctx(n);
    std::vector<Perm> targets;
    if (!wstr.empty())
        targets.push_back(parse_involution(wstr, n));
    else
        targets = enumerate_involutions(n);

    json rows = json::array();
    std::string text;
    for (const Perm& w : targets) {
        const LVBasisElt& b = ctx.lv_basis(w);
        for (const auto& [y, p] : b.polys) {
            if (p.is_zero()) continue;
            rows.push_back(json{{"y", perm_json(y)}, {"w", perm_json(w)}, {"poly_in_u", p.str_u()}});
            text += "P[" + perm_to_string(y) + ", " + perm_to_string(w) + "] = " + p.str_u() + "\n";
        }
    }
    if (format == "json")
        emit(json{{"n", n}, {"rows", rows}});
    else
        std::cout << text;
    return 0;
}

int cmd_theta(int n, const std::string& wordstr, const std::string& format) {
    require_rank(n, 1, 7, "theta");
    Word word;
    try {
        word = word_from_string(wordstr, n);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --word: ") + e.what());
    }
    HeckeElt img;
    try {
        img = theta_of_word(n, word);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("theta: ") + e.what());
    }
    if (format == "json") {
        emit(json{{"n", n}, {"word", json(word)}, {"terms", hecke_json(img)}});
    } else {
        if (img.is_zero()) std::cout << "0\n";
        for (const auto& [x, f] : img.c) std::cout << "T[" << perm_to_string(x) << "]: " << laurent_text(f) << '\n';
    }
    return 0;
}

int cmd_verify(int n, bool slow, bool exact, int jobs, std::uint64_t seed, const std::string& format) {
    require_rank(n, 1, 6, "verify");
    if (n == 6 && !slow) throw UsageError("verify: rank 6 requires --slow");
    if (exact && n > 3) throw UsageError("verify: --exact is only available for n <= 3");
    VerifyOptions opts;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.exact_crosscheck = exact;
    const VerifyReport rep = verify_conjecture(n, opts);
    if (!rep.failure.empty()) std::cerr << "counterexample: " << rep.failure << '\n';
    if (format == "json") {
        emit(json{{"n", rep.n},
                  {"theta_well_defined", rep.theta_well_defined},
                  {"homomorphism_ok", rep.homomorphism_ok},
                  {"dim_image", rep.dim},
                  {"involution_count", rep.involutions},
                  {"conjecture_certified", rep.certified},
                  {"prime", rep.prime},
                  {"point", rep.point},
                  {"elapsed_ms", rep.elapsed_ms}});
    } else {
        std::cout << "theta well-defined: " << flag_word(rep.theta_well_defined) << '\n'
                  << "homomorphism:       " << flag_word(rep.homomorphism_ok) << '\n'
                  << "dim image:          " << rep.dim << " (involutions: " << rep.involutions << ")\n"
                  << "certified:          " << flag_word(rep.certified) << '\n';
    }
    return rep.certified ? 0 : 1;
}

int cmd_rsk(int n, const std::string& wstr, const std::string& format) {
    require_rank(n, 1, 8, "rsk");
    if (!wstr.empty()) {
        const Perm w = parse_perm(wstr, n);
        const auto [p, q] = rsk_insert(w);
        if (format == "json") {
            emit(json{{"n", n},
                      {"w", perm_json(w)},
                      {"shape", json(p.shape())},
                      {"p", json(p.rows)},
                      {"q", json(q.rows)},
                      {"p_equals_q", p == q}});
        } else {
            std::cout << "P:\n" << tableau_to_text(p) << "Q:\n" << tableau_to_text(q);
        }
        return 0;
    }
    const CountIdentity id = involution_count_identity(n);
    if (format == "json") {
        emit(json{{"n", n}, {"sum_std", id.lhs}, {"involutions", id.rhs}, {"equal", id.equal}});
    } else {
        std::cout << "sum of tableau counts: " << id.lhs << '\n'
                  << "involutions:           " << id.rhs << '\n'
                  << "equal: " << flag_word(id.equal) << '\n';
    }
    return id.equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact involution combinatorics and Hecke-module verification"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--seed", seed, "seed for specialization points (default fixed for reproducibility)");
    app.add_option("--jobs", jobs, "worker threads for verify (default 1)")->check(CLI::PositiveNumber);

    int n = 0;
    std::string wstr, wordstr;
    bool dot = false, slow = false, exact = false;

    auto* c_inv = app.add_subcommand("involutions", "list the involutions of S_n");
    c_inv->add_option("--n", n, "rank")->required();

    auto* c_rho = app.add_subcommand("rho", "minimal twisted-expression length of an involution");
    c_rho->add_option("--n", n, "rank")->required();
    c_rho->add_option("--w", wstr, "involution, one-line notation (comma separated)")->required();

    auto* c_expr = app.add_subcommand("expressions", "all reduced twisted expressions of an involution");
    c_expr->add_option("--n", n, "rank (<= 7)")->required();
    c_expr->add_option("--w", wstr, "involution, one-line notation")->required();

    auto* c_graph = app.add_subcommand("braid-graph", "braid-move graph on the reduced expressions");
    c_graph->add_option("--n", n, "rank (<= 7)")->required();
    c_graph->add_option("--w", wstr, "involution, one-line notation")->required();
    c_graph->add_flag("--dot", dot, "emit Graphviz DOT (same as --format dot)");

    auto* c_vb = app.add_subcommand("verify-braid", "check braid-move connectivity for every involution");
    c_vb->add_option("--n", n, "rank (<= 6)")->required();

    auto* c_ps = app.add_subcommand("psigma", "transition polynomials of the bar-invariant basis");
    c_ps->add_option("--n", n, "rank (<= 6)")->required();
    c_ps->add_option("--w", wstr, "restrict to one involution");

    auto* c_th = app.add_subcommand("theta", "image of the weighted full sum under a twisted expression");
    c_th->add_option("--n", n, "rank (<= 7)")->required();
    c_th->add_option("--word", wordstr, "letters, comma separated (empty allowed)")->required();

    auto* c_ver = app.add_subcommand("verify", "certify the dimension statement at rank n");
    c_ver->add_option("--n", n, "rank (<= 5, or 6 with --slow)")->required();
    c_ver->add_flag("--slow", slow, "allow the rank-6 run");
    c_ver->add_flag("--exact", exact, "cross-check the modular rank exactly (n <= 3)");

    auto* c_rsk = app.add_subcommand("rsk", "row insertion, or the tableau/involution count identity");
    c_rsk->add_option("--n", n, "rank (<= 8)")->required();
    c_rsk->add_option("--w", wstr, "permutation to insert (any, not only involutions)");

    // allow the global flags (--format, --seed, --jobs) after the subcommand
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message to stderr
        return 2;
    }

    try {
        if (c_graph->parsed() && dot) format = "dot";
        if (format == "dot" && !c_graph->parsed()) throw UsageError("--format dot is only valid for braid-graph");
        if (c_inv->parsed()) return cmd_involutions(n, format);
        if (c_rho->parsed()) return cmd_rho(n, wstr, format);
        if (c_expr->parsed()) return cmd_expressions(n, wstr, format);
        if (c_graph->parsed()) return cmd_braid_graph(n, wstr, format);
        if (c_vb->parsed()) return cmd_verify_braid(n, format);
        if (c_ps->parsed()) return cmd_psigma(n, wstr, format);
        if (c_th->parsed()) return cmd_theta(n, wordstr, format);
        if (c_ver->parsed()) return cmd_verify(n, slow, exact, jobs, seed, format);
        if (c_rsk->parsed()) return cmd_rsk(n, wstr, format);
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
