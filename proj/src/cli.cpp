#include "vclab/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vclab/exact.hpp"
#include "vclab/gadgets.hpp"
#include "vclab/graph.hpp"
#include "vclab/graph_io.hpp"
#include "vclab/heuristics.hpp"
#include "vclab/ratio.hpp"
#include "vclab/reductions.hpp"
#include "vclab/verify.hpp"

namespace vclab {

namespace {

std::string ids_1based(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v + 1);
    }
    return out;
}

// Streams the output graph either to stdout or to --out.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

struct SolveOpts {
    std::string file;
    bool cover = false;
    int budget = kDefaultVertexBudget;
};

int do_solve(const SolveOpts& o) {
    Graph g = parse_graph_file(o.file);
    if (o.cover) {
        MvcResult r = mvc_with_witness(g, o.budget);
        std::cout << "mvc " << r.size << "\n";
        std::cout << "cover " << ids_1based(r.cover) << "\n";
    } else {
        std::cout << "mvc " << mvc(g, o.budget) << "\n";
    }
    return 0;
}

struct HeuristicOpts {
    std::string file;
    std::string alg;
    std::string policy = "first";
    std::uint64_t seed = 0;
    bool min = false;
    int budget = kDefaultVertexBudget;
};

int do_heuristic(const HeuristicOpts& o) {
    Graph g = parse_graph_file(o.file);
    bool ed = o.alg == "ed";
    if (o.min) {
        if (ed)
            std::cout << "min-ed " << min_ed(g, o.budget) << "\n";
        else
            std::cout << "min-mdg " << min_mdg(g, o.budget) << "\n";
        return 0;
    }
    Policy p = o.policy == "random" ? Policy::random(o.seed) : Policy::first();
    HeuristicTrace t = ed ? run_ed(g, p) : run_mdg(g, p);
    if (ed) {
        for (const Edge& e : t.edge_choices)
            std::cout << "choose " << e.first + 1 << " " << e.second + 1 << "\n";
    } else {
        for (Vertex v : t.vertex_choices) std::cout << "choose " << v + 1 << "\n";
    }
    std::cout << "cover " << ids_1based(t.cover) << "\n";
    std::cout << "size " << t.size << "\n";
    return 0;
}

struct MemberOpts {
    std::string file;
    std::string cls = "sed";
    std::string ratio;
    int budget = kDefaultVertexBudget;
};

int do_member(const MemberOpts& o) {
    Graph g = parse_graph_file(o.file);
    Ratio r = parse_ratio(o.ratio);
    bool ed = o.cls == "sed";
    MembershipDetail d =
        ed ? member_sed_detail(g, r, o.budget) : member_smdg_detail(g, r, o.budget);
    std::cout << (ed ? "min-ed " : "min-mdg ") << d.heuristic_min << "\n";
    std::cout << "mvc " << d.mvc_size << "\n";
    std::cout << "member " << (d.member ? "true" : "false") << "\n";
    return 0;
}

struct ReduceOpts {
    std::vector<std::string> files;
    std::string kind;
    std::string ratio;
    std::string out;
};

int do_reduce(const ReduceOpts& o) {
    bool two_inputs = o.kind == "hath" || o.kind == "hatg" || o.kind == "hatgr";
    std::size_t want = two_inputs ? 2 : 1;
    if (o.files.size() != want)
        throw std::invalid_argument("kind " + o.kind + " takes exactly " +
                                    std::to_string(want) + " input graph(s), got " +
                                    std::to_string(o.files.size()));
    bool needs_ratio = o.kind == "hath" || o.kind == "hatgr";
    if (needs_ratio && o.ratio.empty())
        throw std::invalid_argument("kind " + o.kind + " requires --ratio");
    if (!needs_ratio && !o.ratio.empty())
        throw std::invalid_argument("kind " + o.kind + " does not take --ratio");

    ReductionArtifacts art;
    if (o.kind == "ged") {
        art = g_ed(parse_graph_file(o.files[0]));
    } else if (o.kind == "gmdg") {
        art = g_mdg(parse_graph_file(o.files[0]));
    } else if (o.kind == "hath") {
        Graph h1 = parse_graph_file(o.files[0]);
        Graph h2 = parse_graph_file(o.files[1]);
        // The construction wants equal vertex counts; pad the smaller input.
        if (h1.vertex_count() < h2.vertex_count())
            h1 = add_isolated(h1, h2.vertex_count() - h1.vertex_count());
        else if (h2.vertex_count() < h1.vertex_count())
            h2 = add_isolated(h2, h1.vertex_count() - h2.vertex_count());
        art = build_hat_h(h1, h2, parse_ratio(o.ratio));
    } else if (o.kind == "hatg") {
        art = build_hat_g(parse_graph_file(o.files[0]), parse_graph_file(o.files[1]));
    } else {
        art = build_hat_g_r(parse_graph_file(o.files[0]), parse_graph_file(o.files[1]),
                            parse_ratio(o.ratio));
    }

    std::vector<std::string> comments;
    for (std::size_t i = 0; i < art.roles.size(); ++i)
        comments.push_back("c role " + std::to_string(i + 1) + " " + art.roles[i]);
    for (const auto& [name, value] : art.constants)
        comments.push_back("c const " + name + " " + std::to_string(value));
    OutputTarget target(o.out);
    write_graph(target.stream(), art.output, comments);
    return 0;
}

struct GenOpts {
    long long n1 = 0;
    long long n2 = 0;
    long long delta = 0;
    long long mu = -1;  // -1: pick the smallest feasible value
    std::string out;
    int samples = 500;
    std::uint64_t seed = 0;
};

GadgetSpec gen_spec(const GenOpts& o) {
    GadgetSpec spec{o.n1, o.n2, o.delta, o.mu};
    if (spec.mu < 0) spec.mu = min_mu(o.n1, o.n2, o.delta);
    return spec;
}

int do_gen_lemma4(const GenOpts& o) {
    GadgetSpec spec = gen_spec(o);
    GadgetResult r = lemma4_graph(spec);
    std::vector<std::string> part(r.graph.vertex_count());
    for (Vertex v : r.layout.u) part[v] = "V";
    for (Vertex v : r.layout.w) part[v] = "V";
    for (Vertex v : r.layout.z) part[v] = "V";
    for (Vertex v : r.layout.u_tilde) part[v] = "Vt";
    for (Vertex v : r.layout.w_tilde) part[v] = "Vt";
    std::vector<std::string> comments;
    for (std::size_t i = 0; i < part.size(); ++i)
        comments.push_back("c part " + part[i] + " " + std::to_string(i + 1));
    OutputTarget target(o.out);
    write_graph(target.stream(), r.graph, comments);
    return 0;
}

int do_gen_check(const GenOpts& o) {
    GadgetSpec spec = gen_spec(o);
    bool feasible = gadget_feasible(spec);
    std::cout << "feasible " << (feasible ? "true" : "false") << "\n";
    if (!feasible) return 3;
    GadgetResult r = lemma4_graph(spec);
    bool ok = verify_property4(r.graph, spec, r.layout, o.samples, o.seed);
    std::cout << "property4 " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 3;
}

struct VerifyOpts {
    std::string suite;
    double budget = 3600.0;
};

int do_verify(const VerifyOpts& o) {
    VerifyReport report = run_verify(o.suite, o.budget, std::cout);
    return report.all_pass() ? 0 : 3;
}

struct BatchOpts {
    std::vector<std::string> files;
    std::string ops;
};

std::vector<std::string> split_ops(const std::string& spec) {
    std::vector<std::string> ops;
    std::string::size_type start = 0;
    while (true) {
        std::string::size_type comma = spec.find(',', start);
        std::string op = spec.substr(start, comma - start);
        if (op != "mvc" && op != "min-ed" && op != "min-mdg" && op != "max-deg")
            throw std::invalid_argument("unknown operation: " + op);
        ops.push_back(op);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ops;
}

int do_batch(const BatchOpts& o) {
    const std::vector<std::string> ops = split_ops(o.ops);
    std::cout << "file,n,m,operation,value,millis\n";
    for (const std::string& path : o.files) {
        Graph g = parse_graph_file(path);
        for (const std::string& op : ops) {
            auto t0 = std::chrono::steady_clock::now();
            long long value = 0;
            if (op == "mvc")
                value = mvc(g);
            else if (op == "min-ed")
                value = min_ed(g);
            else if (op == "min-mdg")
                value = min_mdg(g);
            else
                value = max_deg(g);
            auto t1 = std::chrono::steady_clock::now();
            double millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.3f", millis);
            std::cout << path << "," << g.vertex_count() << "," << g.edge_count() << ","
                      << op << "," << value << "," << buf << "\n";
        }
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"vertex-cover heuristics workbench: exact optima, edge-deletion and "
                 "maximum-degree-greedy runs, approximation-threshold membership, and "
                 "the hard-instance constructions"};
    app.require_subcommand(1);

    SolveOpts solve_opts;
    CLI::App* solve_cmd = app.add_subcommand("solve", "exact minimum vertex cover");
    solve_cmd->add_option("file", solve_opts.file, "input graph")->required();
    solve_cmd->add_flag("--cover", solve_opts.cover, "also print one optimal cover");
    solve_cmd->add_option("--budget", solve_opts.budget, "vertex budget for the solver");

    HeuristicOpts heur_opts;
    CLI::App* heur_cmd = app.add_subcommand("heuristic", "run one heuristic, or its "
                                                         "exhaustive minimum with --min");
    heur_cmd->add_option("file", heur_opts.file, "input graph")->required();
    heur_cmd->add_option("--alg", heur_opts.alg, "ed (edge deletion) or mdg (max-degree greedy)")
        ->required()
        ->check(CLI::IsMember({"ed", "mdg"}));
    heur_cmd->add_option("--policy", heur_opts.policy, "choice policy")
        ->check(CLI::IsMember({"first", "random"}));
    heur_cmd->add_option("--seed", heur_opts.seed, "seed for --policy random");
    heur_cmd->add_flag("--min", heur_opts.min, "smallest output over all runs");
    heur_cmd->add_option("--budget", heur_opts.budget, "vertex budget for --min");

    MemberOpts member_opts;
    CLI::App* member_cmd =
        app.add_subcommand("member", "is the smallest heuristic output within factor r "
                                     "of the optimum?");
    member_cmd->add_option("file", member_opts.file, "input graph")->required();
    member_cmd->add_option("--class", member_opts.cls, "sed (edge deletion) or smdg (greedy)")
        ->check(CLI::IsMember({"sed", "smdg"}));
    member_cmd->add_option("--ratio", member_opts.ratio, "threshold L/M >= 1")->required();
    member_cmd->add_option("--budget", member_opts.budget, "vertex budget");

    ReduceOpts reduce_opts;
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "run one of the constructions");
    reduce_cmd->add_option("files", reduce_opts.files, "input graph(s)")->expected(1, 2);
    reduce_cmd->add_option("--kind", reduce_opts.kind, "construction")
        ->required()
        ->check(CLI::IsMember({"ged", "gmdg", "hath", "hatg", "hatgr"}));
    reduce_cmd->add_option("--ratio", reduce_opts.ratio, "threshold (hath, hatgr)");
    reduce_cmd->add_option("--out", reduce_opts.out, "write the graph here instead of stdout");

    GenOpts gen_opts;
    CLI::App* gen_cmd = app.add_subcommand("gen", "staged bipartite gadget");
    gen_cmd->require_subcommand(1);
    CLI::App* gen_lemma4 = gen_cmd->add_subcommand("lemma4", "generate the gadget");
    CLI::App* gen_check = gen_cmd->add_subcommand("check", "feasibility and degree-gap check");
    for (CLI::App* sub : {gen_lemma4, gen_check}) {
        sub->add_option("--n1", gen_opts.n1, "first primary group size")->required();
        sub->add_option("--n2", gen_opts.n2, "free primary group size")->required();
        sub->add_option("--delta", gen_opts.delta, "degree gap")->required();
        sub->add_option("--mu", gen_opts.mu, "partnered group size (default: smallest feasible)");
    }
    gen_lemma4->add_option("--out", gen_opts.out, "write the graph here instead of stdout");
    gen_check->add_option("--samples", gen_opts.samples, "random deletions to test");
    gen_check->add_option("--seed", gen_opts.seed, "sampling seed");

    VerifyOpts verify_opts;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", verify_opts.suite,
                           "eq1, eq4, thm1, thm3r1, thm3r2, lemma4, oracles, or all")
        ->required();
    verify_cmd->add_option("--budget", verify_opts.budget, "time budget in seconds");

    BatchOpts batch_opts;
    CLI::App* batch_cmd = app.add_subcommand("batch", "CSV report over many graphs");
    batch_cmd->add_option("files", batch_opts.files, "input graphs");
    batch_cmd->add_option("--ops", batch_opts.ops, "comma-separated: mvc,min-ed,min-mdg,max-deg")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve_cmd->parsed()) return do_solve(solve_opts);
        if (heur_cmd->parsed()) return do_heuristic(heur_opts);
        if (member_cmd->parsed()) return do_member(member_opts);
        if (reduce_cmd->parsed()) return do_reduce(reduce_opts);
        if (gen_lemma4->parsed()) return do_gen_lemma4(gen_opts);
        if (gen_check->parsed()) return do_gen_check(gen_opts);
        if (verify_cmd->parsed()) return do_verify(verify_opts);
        if (batch_cmd->parsed()) return do_batch(batch_opts);
    } catch (const InstanceTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace vclab
