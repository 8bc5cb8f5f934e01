// proofleg — command line front end for the legibility toolkit.
//
// Subcommands are thin wrappers over the library; every result is available
// as plain text (default) or JSON (--json). Exit codes: 0 success, 1 domain
// error (bad input data, infeasible request), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "proofleg/apg.hpp"
#include "proofleg/enumerate.hpp"
#include "proofleg/errors.hpp"
#include "proofleg/metrics.hpp"
#include "proofleg/mizar_lite.hpp"
#include "proofleg/partition.hpp"
#include "proofleg/reductions.hpp"
#include "proofleg/script.hpp"
#include "proofleg/solver.hpp"

using nlohmann::json;
using namespace proofleg;

namespace {

// Flags shared by every subcommand.
struct Common {
    bool json = false;
    int threads = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t seed = 0; // reserved for randomized corpora
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "machine-readable JSON on stdout");
    cmd->add_option("--threads", c.threads, "worker threads for enumeration")
        ->envname("PROOFLEG_THREADS")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap", c.cap, "abort after this many enumerated orders");
    cmd->add_option("--seed", c.seed, "seed for randomized corpora (reserved)");
}

Criterion parse_criterion(const std::string& s) {
    if (s == "then" || s == "then-paths") return Criterion::ThenPaths;
    if (s == "cross" || s == "cross-refs") return Criterion::CrossRefs;
    if (s == "max" || s == "max-distance") return Criterion::MaxDistance;
    if (s == "sum" || s == "sum-distance") return Criterion::SumDistance;
    if (s == "labels" || s == "labels-miz") return Criterion::LabelsMiz;
    if (s == "labels-plain") return Criterion::LabelsPlain;
    throw CLI::ValidationError("unknown criterion '" + s +
                               "' (use then, cross, max, sum, labels, labels-plain)");
}

const char* best_key(Criterion c) {
    switch (c) {
    case Criterion::ThenPaths: return "best_paths";
    case Criterion::CrossRefs: return "best_cross";
    case Criterion::MaxDistance: return "best_max_distance";
    case Criterion::SumDistance: return "best_sum_distance";
    case Criterion::LabelsPlain: return "best_labels_plain";
    case Criterion::LabelsMiz: return "best_labels";
    }
    return "best_value";
}

template <class T>
std::string join(const std::vector<T>& xs, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

TopoOrder pick_order(const ProofGraph& g, const std::vector<int>& order) {
    return order.empty() ? TopoOrder::lexicographic_smallest(g) : TopoOrder::of(g, order);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(Errc::IoError, "cannot open '" + path + "' for writing");
    out << text;
    if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
}

int var_arc_count(const ProofGraph& g) {
    int k = 0;
    for (const auto& a : g.arcs()) k += a.is_variable ? 1 : 0;
    return k;
}

// --- analyze --------------------------------------------------------------

struct AnalyzeArgs {
    std::string path;
    std::vector<int> order;
    Common c;
};

int run_analyze(const AnalyzeArgs& a) {
    const ProofGraph g = parse_apg_file(a.path);
    const TopoOrder t = pick_order(g, a.order);
    const LinearizationMetrics m = compute_metrics(g, t);
    if (a.c.json) {
        const json out = {
            {"then_count", m.then_count},
            {"path_count", m.path_count},
            {"cross_ref_count", m.cross_ref_count},
            {"sum_distance", m.sum_distance},
            {"max_distance", m.max_distance},
            {"label_count_plain", m.label_count_plain},
            {"label_count_miz", m.label_count_miz},
        };
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "order " << join(t.order()) << "\n"
                  << "then_count " << m.then_count << "\n"
                  << "path_count " << m.path_count << "\n"
                  << "cross_ref_count " << m.cross_ref_count << "\n"
                  << "sum_distance " << m.sum_distance << "\n"
                  << "max_distance " << m.max_distance << "\n"
                  << "label_count_plain " << m.label_count_plain << "\n"
                  << "label_count_miz " << m.label_count_miz << "\n";
    }
    return 0;
}

// --- optimize ---------------------------------------------------------------

struct OptimizeArgs {
    std::string path;
    std::string criterion;
    std::vector<std::string> lex;
    std::string mode = "auto";
    bool count_optima = false;
    bool witness = false;
    Common c;
};

int run_optimize(const OptimizeArgs& a) {
    if (a.criterion.empty() == a.lex.empty())
        throw CLI::ValidationError("optimize needs exactly one of --criterion or --lex");
    const ProofGraph g = parse_apg_file(a.path);

    if (!a.lex.empty()) {
        std::vector<Criterion> cs;
        for (const auto& s : a.lex) cs.push_back(parse_criterion(s));
        const OptResult r = solve_lexicographic(g, cs, a.c.cap, a.c.threads);
        if (a.c.json) {
            json out;
            json names = json::array();
            for (Criterion c : cs) names.push_back(criterion_name(c));
            out["criteria"] = names;
            out["values"] = r.values;
            if (a.count_optima && r.optima_count) out["optima"] = *r.optima_count;
            if (a.witness) out["witness"] = r.witness.order();
            std::cout << out.dump() << "\n";
        } else {
            std::vector<std::string> names;
            for (Criterion c : cs) names.emplace_back(criterion_name(c));
            std::string joined;
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (i) joined += ',';
                joined += names[i];
            }
            std::cout << "criteria " << joined << "\n"
                      << "values " << join(r.values) << "\n";
            if (a.count_optima && r.optima_count) std::cout << "optima " << *r.optima_count << "\n";
            std::cout << "witness " << join(r.witness.order()) << "\n";
        }
        return 0;
    }

    const Criterion c = parse_criterion(a.criterion);
    SolveMode mode;
    if (a.mode == "exhaustive") mode = SolveMode::Exhaustive;
    else if (a.mode == "bb") mode = SolveMode::BranchAndBound;
    else mode = a.count_optima ? SolveMode::Exhaustive : SolveMode::BranchAndBound;
    if (a.count_optima && mode != SolveMode::Exhaustive)
        throw CLI::ValidationError("--count-optima requires exhaustive search");

    const OptResult r = solve_exact(g, c, mode, a.c.cap, a.c.threads);
    if (a.c.json) {
        json out;
        out[best_key(c)] = r.best_value;
        if (c == Criterion::ThenPaths) out["best_then"] = g.vertex_count() - r.best_value;
        if (a.count_optima && r.optima_count) out["optima"] = *r.optima_count;
        if (a.witness) out["witness"] = r.witness.order();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "criterion " << criterion_name(c) << "\n"
                  << best_key(c) << " " << r.best_value << "\n";
        if (c == Criterion::ThenPaths)
            std::cout << "best_then " << g.vertex_count() - r.best_value << "\n";
        if (a.count_optima && r.optima_count) std::cout << "optima " << *r.optima_count << "\n";
        std::cout << "witness " << join(r.witness.order()) << "\n";
    }
    return 0;
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
    std::string path;
    bool stats = false;
    Common c;
};

int run_enumerate(const EnumerateArgs& a) {
    const ProofGraph g = parse_apg_file(a.path);
    if (!a.stats) {
        const std::uint64_t total = count_topo_orders(g, a.c.cap, a.c.threads);
        if (a.c.json) std::cout << json{{"orders", total}}.dump() << "\n";
        else std::cout << "orders " << total << "\n";
        return 0;
    }

    constexpr const char* kKeys[7] = {"then_count",   "path_count",   "cross_ref_count",
                                      "sum_distance", "max_distance", "label_count_plain",
                                      "label_count_miz"};
    std::map<long long, std::uint64_t> hist[7];
    const std::uint64_t total = enumerate_topo_orders(
        g,
        [&](const std::vector<int>& order) {
            const LinearizationMetrics m = compute_metrics(g, TopoOrder::of(g, order));
            ++hist[0][m.then_count];
            ++hist[1][m.path_count];
            ++hist[2][m.cross_ref_count];
            ++hist[3][m.sum_distance];
            ++hist[4][m.max_distance];
            ++hist[5][m.label_count_plain];
            ++hist[6][m.label_count_miz];
        },
        a.c.cap);

    if (a.c.json) {
        json stats = json::object();
        for (int i = 0; i < 7; ++i) {
            json h = json::object();
            for (const auto& [value, count] : hist[i]) h[std::to_string(value)] = count;
            stats[kKeys[i]] = std::move(h);
        }
        std::cout << json{{"orders", total}, {"stats", std::move(stats)}}.dump() << "\n";
    } else {
        std::cout << "orders " << total << "\n";
        for (int i = 0; i < 7; ++i)
            for (const auto& [value, count] : hist[i])
                std::cout << kKeys[i] << " " << value << " " << count << "\n";
    }
    return 0;
}

// --- reduce -----------------------------------------------------------------

struct ReduceArgs {
    std::string kind;
    std::string in;
    std::string out;
    Common c;
};

int run_reduce(const ReduceArgs& a) {
    json summary;
    std::string text;
    if (a.kind == "vc-to-fas") {
        const VcToFasResult r = vc_to_fas(parse_ug_file(a.in));
        write_file(a.out, emit_dg(r.instance));
        summary = {{"vertices", r.instance.n},
                   {"arcs", r.instance.arcs.size()},
                   {"out", a.out}};
        text = "wrote " + a.out + ": " + std::to_string(r.instance.n) + " vertices, " +
               std::to_string(r.instance.arcs.size()) + " arcs";
    } else if (a.kind == "fas-to-ahp") {
        const FasToAhpResult r = fas_to_ahp(parse_dg_file(a.in));
        write_file(a.out, emit_apg(r.dag));
        summary = {{"vertices", r.dag.vertex_count()},
                   {"arcs", r.dag.arc_count()},
                   {"offset", r.offset},
                   {"arc_count_of_source", r.coords.m},
                   {"out", a.out}};
        text = "wrote " + a.out + ": " + std::to_string(r.dag.vertex_count()) +
               " vertices, offset " + std::to_string(r.offset) +
               " (minimum partition = offset + minimum feedback arc set)";
    } else { // vc-to-mil5
        const VcToMil5Result r = vc_to_mil5(parse_ug_file(a.in));
        write_file(a.out, emit_apg(r.instance));
        summary = {{"vertices", r.instance.vertex_count()},
                   {"reference_arcs", r.instance.reference_arc_count()},
                   {"variable_arcs", var_arc_count(r.instance)},
                   {"out", a.out}};
        text = "wrote " + a.out + ": " + std::to_string(r.instance.vertex_count()) +
               " vertices (minimum plain label count = minimum cover)";
    }
    if (a.c.json) std::cout << summary.dump() << "\n";
    else std::cout << text << "\n";
    return 0;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
    std::string kind;
    std::string in;
    std::string mode = "auto";
    bool count_optima = false;
    Common c;
};

int run_solve(const SolveArgs& a) {
    if (a.kind == "vc") {
        const std::vector<int> cover = solve_vc_exact(parse_ug_file(a.in));
        if (a.c.json) std::cout << json{{"size", cover.size()}, {"cover", cover}}.dump() << "\n";
        else std::cout << "cover size " << cover.size() << ": " << join(cover) << "\n";
        return 0;
    }
    if (a.kind == "fas") {
        const auto fas = solve_fas_exact(parse_dg_file(a.in));
        if (a.c.json) {
            json arcs = json::array();
            for (const auto& [u, v] : fas) arcs.push_back({u, v});
            std::cout << json{{"size", fas.size()}, {"arcs", std::move(arcs)}}.dump() << "\n";
        } else {
            std::cout << "feedback arc set size " << fas.size() << ":";
            for (const auto& [u, v] : fas) std::cout << " " << u << "->" << v;
            std::cout << "\n";
        }
        return 0;
    }

    // ahp
    const ProofGraph g = parse_apg_file(a.in);
    SolveMode mode;
    if (a.mode == "exhaustive") mode = SolveMode::Exhaustive;
    else if (a.mode == "bb") mode = SolveMode::BranchAndBound;
    else mode = a.count_optima ? SolveMode::Exhaustive : SolveMode::BranchAndBound;
    if (a.count_optima && mode != SolveMode::Exhaustive)
        throw CLI::ValidationError("--count-optima requires exhaustive search");
    const AhpResult r = solve_ahp(g, mode, a.c.cap, a.c.threads);
    if (a.c.json) {
        json out;
        out["blocks"] = r.best_size;
        out["witness"] = r.witness.blocks;
        if (a.count_optima && r.order_optima) out["order_optima"] = *r.order_optima;
        if (a.count_optima && r.optimal_partitions)
            out["partitions"] = r.optimal_partitions->size();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "blocks " << r.best_size << "\n";
        for (const auto& block : r.witness.blocks) std::cout << "block " << join(block) << "\n";
        if (a.count_optima && r.order_optima) std::cout << "order_optima " << *r.order_optima << "\n";
        if (a.count_optima && r.optimal_partitions)
            std::cout << "partitions " << r.optimal_partitions->size() << "\n";
    }
    return 0;
}

// --- gen-script ---------------------------------------------------------------

struct GenScriptArgs {
    std::string path;
    std::vector<int> order;
    std::string style = "legible";
    std::string rule = "miz";
    bool strict_cap = false;
    Common c;
};

int run_gen_script(const GenScriptArgs& a) {
    const ProofGraph g = parse_apg_file(a.path);
    const TopoOrder t = pick_order(g, a.order);
    const Script s = generate_script(g, t, a.strict_cap);
    const std::string text =
        render_script(s, a.style == "verbose" ? ScriptStyle::Verbose : ScriptStyle::Legible,
                      a.rule == "plain" ? LabelRule::Plain : LabelRule::Miz);
    if (a.c.json)
        std::cout << json{{"script", text}, {"thesis_vertex", s.thesis_vertex}}.dump() << "\n";
    else
        std::cout << text;
    return 0;
}

// --- extract ------------------------------------------------------------------

struct ExtractArgs {
    std::string script;
    std::string out;
    Common c;
};

int run_extract(const ExtractArgs& a) {
    const ParsedScript p = parse_mizar_lite_file(a.script);
    const std::string apg = emit_apg(p.graph);
    if (!a.out.empty()) write_file(a.out, apg);
    if (a.c.json) {
        json out = {{"steps", p.graph.vertex_count()},
                    {"reference_arcs", p.graph.reference_arc_count()},
                    {"variable_arcs", var_arc_count(p.graph)}};
        if (!a.out.empty()) out["out"] = a.out;
        else out["apg"] = apg;
        std::cout << out.dump() << "\n";
    } else if (a.out.empty()) {
        std::cout << apg;
    } else {
        std::cout << "wrote " << a.out << ": " << p.graph.vertex_count() << " steps\n";
    }
    return 0;
}

// --- verify-partition -----------------------------------------------------------

struct VerifyArgs {
    std::string graph;
    std::string partition;
    Common c;
};

int run_verify_partition(const VerifyArgs& a) {
    const ProofGraph g = parse_apg_file(a.graph);
    std::ifstream in(a.partition);
    if (!in) fail(Errc::IoError, "cannot open '" + a.partition + "'");
    const json doc = json::parse(in);
    const json& raw = doc.is_object() ? doc.at("blocks") : doc;
    PathPartition p;
    for (const auto& row : raw) p.blocks.push_back(row.get<std::vector<int>>());
    const HCheck check = is_h_partition(g, p);
    if (a.c.json) {
        json out = {{"ok", check.ok}, {"blocks", p.block_count()}};
        if (!check.ok) out["reason"] = check.reason;
        std::cout << out.dump() << "\n";
    } else if (check.ok) {
        std::cout << "valid: " << p.block_count() << " blocks\n";
    } else {
        std::cout << "invalid: " << check.reason << "\n";
    }
    return check.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"legibility analysis of natural-deduction proof graphs"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    CLI::App* c_analyze = app.add_subcommand("analyze", "metrics of one linearization");
    c_analyze->add_option("graph", analyze.path, "proof graph (.apg)")->required();
    c_analyze->add_option("--order", analyze.order,
                          "comma-separated vertex order (default: lexicographically smallest)")
        ->delimiter(',');
    add_common(c_analyze, analyze.c);

    OptimizeArgs optimize;
    CLI::App* c_optimize = app.add_subcommand("optimize", "minimize a criterion over all orders");
    c_optimize->add_option("graph", optimize.path, "proof graph (.apg)")->required();
    c_optimize->add_option("--criterion", optimize.criterion,
                           "then | cross | max | sum | labels | labels-plain");
    c_optimize->add_option("--lex", optimize.lex, "lexicographic criterion list")->delimiter(',');
    c_optimize->add_option("--mode", optimize.mode, "auto | exhaustive | bb")
        ->check(CLI::IsMember({"auto", "exhaustive", "bb"}));
    c_optimize->add_flag("--count-optima", optimize.count_optima, "also count optimal orders");
    c_optimize->add_flag("--witness", optimize.witness, "include the witness order in JSON");
    add_common(c_optimize, optimize.c);

    EnumerateArgs enumerate;
    CLI::App* c_enumerate = app.add_subcommand("enumerate", "count or profile all orders");
    c_enumerate->add_option("graph", enumerate.path, "proof graph (.apg)")->required();
    c_enumerate->add_flag("--stats", enumerate.stats, "metric distributions over all orders");
    add_common(c_enumerate, enumerate.c);

    ReduceArgs reduce;
    CLI::App* c_reduce = app.add_subcommand("reduce", "emit a reduction instance");
    c_reduce->add_option("kind", reduce.kind, "vc-to-fas | fas-to-ahp | vc-to-mil5")
        ->required()
        ->check(CLI::IsMember({"vc-to-fas", "fas-to-ahp", "vc-to-mil5"}));
    c_reduce->add_option("in", reduce.in, "source instance (.ug/.dg)")->required();
    c_reduce->add_option("out", reduce.out, "target instance (.dg/.apg)")->required();
    add_common(c_reduce, reduce.c);

    SolveArgs solve;
    CLI::App* c_solve = app.add_subcommand("solve", "exact optimum of a reduction-side problem");
    c_solve->add_option("kind", solve.kind, "vc | fas | ahp")
        ->required()
        ->check(CLI::IsMember({"vc", "fas", "ahp"}));
    c_solve->add_option("in", solve.in, "instance (.ug/.dg/.apg)")->required();
    c_solve->add_option("--mode", solve.mode, "auto | exhaustive | bb (ahp only)")
        ->check(CLI::IsMember({"auto", "exhaustive", "bb"}));
    c_solve->add_flag("--count-optima", solve.count_optima,
                      "count optimal orders and partitions (ahp only)");
    add_common(c_solve, solve.c);

    GenScriptArgs gen;
    CLI::App* c_gen = app.add_subcommand("gen-script", "render a proof script");
    c_gen->add_option("graph", gen.path, "proof graph (.apg)")->required();
    c_gen->add_option("--order", gen.order,
                      "comma-separated vertex order (default: lexicographically smallest)")
        ->delimiter(',');
    c_gen->add_option("--style", gen.style, "legible | verbose")
        ->check(CLI::IsMember({"legible", "verbose"}));
    c_gen->add_option("--rule", gen.rule, "miz | plain label rule")
        ->check(CLI::IsMember({"miz", "plain"}));
    c_gen->add_flag("--strict-cap", gen.strict_cap, "fail steps citing more than 25 labels");
    add_common(c_gen, gen.c);

    ExtractArgs extract;
    CLI::App* c_extract = app.add_subcommand("extract", "proof script to abstract graph");
    c_extract->add_option("script", extract.script, "proof script (.miz-lite)")->required();
    c_extract->add_option("-o,--out", extract.out, "target .apg path (default: stdout)");
    add_common(c_extract, extract.c);

    VerifyArgs verify;
    CLI::App* c_verify = app.add_subcommand("verify-partition", "check an H-partition");
    c_verify->add_option("graph", verify.graph, "proof graph (.apg)")->required();
    c_verify->add_option("partition", verify.partition,
                         "JSON partition: [[...], ...] or {\"blocks\": [[...], ...]}")
        ->required();
    add_common(c_verify, verify.c);

    try {
        app.parse(argc, argv);
        if (c_analyze->parsed()) return run_analyze(analyze);
        if (c_optimize->parsed()) return run_optimize(optimize);
        if (c_enumerate->parsed()) return run_enumerate(enumerate);
        if (c_reduce->parsed()) return run_reduce(reduce);
        if (c_solve->parsed()) return run_solve(solve);
        if (c_gen->parsed()) return run_gen_script(gen);
        if (c_extract->parsed()) return run_extract(extract);
        if (c_verify->parsed()) return run_verify_partition(verify);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what();
        if (e.code() == Errc::EnumerationCapExceeded)
            std::cerr << " (raise --cap to search larger instances)";
        std::cerr << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
