#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "onecut/bench.hpp"
#include "onecut/io.hpp"
#include "onecut/oracle.hpp"
#include "onecut/solver.hpp"

namespace onecut {
namespace cli {

// Exit codes: 0 success, 2 bad input (parse/validation/config), 3 oracle
// mismatch under --check, 4 non-negative mode fed a negative weight.
constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kCheckFailed = 3;
constexpr int kNegativeWeight = 4;

struct SolveOptions {
    std::string file;
    std::string mode = "auto";
    std::vector<std::string> force;
    bool stats = false;
    bool check = false;
    int threads = 1;
};

inline int solve_command(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    std::ifstream in(opt.file);
    if (!in) {
        err << "error: cannot open '" << opt.file << "'\n";
        return kBadInput;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    EmbeddedInstance inst;
    try {
        inst = parse(buf.str());
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ValidationError& e) {
        err << "error: validation failed: " << e.what() << '\n';
        return kBadInput;
    }

    FixedCutSet forced;
    for (const std::string& pair_text : opt.force) {
        long long u = 0, v = 0;
        char comma = 0;
        std::istringstream fs(pair_text);
        long long n = static_cast<long long>(inst.graph.node_count());
        if (!(fs >> u >> comma >> v) || comma != ',' || !fs.eof() || u < 1 || v < 1 || u > n ||
            v > n) {
            err << "error: --force expects 'u,v' with 1-based node ids, got '" << pair_text << "'\n";
            return kBadInput;
        }
        try {
            forced.insert(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
        } catch (const GraphError& e) {
            err << "error: " << e.what() << '\n';
            return kBadInput;
        }
    }

    bool all_nonneg = true;
    for (const Edge& e : inst.graph.edges())
        if (e.w < 0) all_nonneg = false;
    std::string mode = opt.mode;
    if (mode == "auto") mode = (all_nonneg && forced.empty()) ? "nonneg" : "general";

    SolveStats st;
    Cut cut;
    try {
        if (mode == "nonneg") {
            if (!forced.empty()) {
                err << "error: --force requires general mode\n";
                return kBadInput;
            }
            cut = max_cut_nonneg(inst, &st, opt.threads);
        } else {
            cut = max_cut_general(inst, forced, &st, opt.threads);
        }
    } catch (const GraphError& e) {
        if (e.kind() == GraphError::Kind::NegativeWeight) {
            err << "error: " << e.what() << '\n';
            return kNegativeWeight;
        }
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    out << "value " << cut.value << '\n';
    out << "side";
    for (NodeId x : cut.side_S) out << ' ' << (x + 1);
    out << '\n';
    if (opt.stats) out << "stats leaves=" << st.leaf_count << " depth=" << st.max_depth << '\n';

    if (opt.check) {
        if (cut_value(inst.graph, cut.side_S) != cut.value) {
            err << "check: reported value does not match the reported side\n";
            return kCheckFailed;
        }
        if (inst.graph.node_count() <= 24) {
            bool solver_feasible = forced.empty() || forced.satisfied_by(cut.side_S);
            std::optional<Cut> want = brute_force_fce(inst.graph, forced);
            if (want.has_value() != solver_feasible) {
                err << "check: feasibility disagrees with the oracle\n";
                return kCheckFailed;
            }
            if (want && want->value != cut.value) {
                err << "check: oracle value " << want->value << " != " << cut.value << '\n';
                return kCheckFailed;
            }
        }
    }
    return kOk;
}

struct GenOptions {
    int nodes = 0;
    int crossings = 0;
    std::int64_t wmin = 1;
    std::int64_t wmax = 1;
    std::uint64_t seed = 0;
};

inline int gen_command(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.nodes < 1 || opt.crossings < 0 || opt.wmin > opt.wmax) {
        err << "error: need --nodes >= 1, --crossings >= 0, --wmin <= --wmax\n";
        return kBadInput;
    }
    std::int64_t mag = std::max(opt.wmin < 0 ? -opt.wmin : opt.wmin,
                                opt.wmax < 0 ? -opt.wmax : opt.wmax);
    std::int64_t edge_cap = 4 * static_cast<std::int64_t>(opt.nodes);
    if (mag > 0 && edge_cap > kWeightBudget / mag) {
        err << "error: weight range too large for the file format's weight budget\n";
        return kBadInput;
    }
    GeneratorConfig cfg;
    cfg.node_count = opt.nodes;
    cfg.crossing_count = opt.crossings;
    cfg.weight_min = opt.wmin;
    cfg.weight_max = opt.wmax;
    cfg.seed = opt.seed;
    try {
        EmbeddedInstance inst = detail::generate_with_retries(cfg);
        out << serialize(inst);
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kOk;
}

struct BenchOptions {
    std::vector<int> nodes;
    std::vector<int> crossings;
    int reps = 1;
    std::uint64_t seed = 0;
    std::string out_path;
};

inline int bench_command(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.nodes.empty() || opt.crossings.empty() || opt.reps < 1) {
        err << "error: need --nodes, --crossings, --reps >= 1\n";
        return kBadInput;
    }
    std::vector<BenchRow> rows;
    try {
        rows = sweep(opt.nodes, opt.crossings, opt.reps, opt.seed);
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    std::string csv = to_csv(rows);
    if (opt.out_path.empty()) {
        out << csv;
    } else {
        std::ofstream f(opt.out_path);
        if (!f) {
            err << "error: cannot write '" << opt.out_path << "'\n";
            return kBadInput;
        }
        f << csv;
    }
    return kOk;
}

/// Full argv dispatch, testable without a process boundary.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact max-cut for 1-planar graphs with a known crossing set"};
    app.require_subcommand(1);

    SolveOptions so;
    CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("file", so.file, "instance file")->required();
    solve->add_option("--mode", so.mode, "nonneg|general|auto")
        ->check(CLI::IsMember({"nonneg", "general", "auto"}))
        ->capture_default_str();
    solve->add_option("--force", so.force, "node pair u,v that the cut must separate");
    solve->add_flag("--stats", so.stats, "print leaf/depth counters");
    solve->add_flag("--check", so.check, "re-verify against the exhaustive oracle (n <= 24)");
    solve->add_option("--threads", so.threads, "worker threads")->check(CLI::PositiveNumber);

    GenOptions go;
    CLI::App* gen = app.add_subcommand("gen", "emit a random instance file");
    gen->add_option("--nodes", go.nodes, "node count")->required();
    gen->add_option("--crossings", go.crossings, "crossing count");
    gen->add_option("--wmin", go.wmin, "minimum weight");
    gen->add_option("--wmax", go.wmax, "maximum weight");
    gen->add_option("--seed", go.seed, "rng seed");

    BenchOptions bo;
    CLI::App* bench = app.add_subcommand("bench", "timed sweep, CSV output");
    bench->add_option("--nodes", bo.nodes, "node counts")->required()->delimiter(',');
    bench->add_option("--crossings", bo.crossings, "crossing counts")->required()->delimiter(',');
    bench->add_option("--reps", bo.reps, "repetitions per configuration");
    bench->add_option("--seed", bo.seed, "rng seed");
    bench->add_option("--out", bo.out_path, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    if (solve->parsed()) return solve_command(so, out, err);
    if (gen->parsed()) return gen_command(go, out, err);
    return bench_command(bo, out, err);
}

}  // namespace cli
}  // namespace onecut
