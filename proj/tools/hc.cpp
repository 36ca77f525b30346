#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcs/exact.hpp"
#include "hcs/expansion.hpp"
#include "hcs/graph.hpp"
#include "hcs/instances.hpp"
#include "hcs/rng.hpp"
#include "hcs/solver.hpp"
#include "hcs/sparsify.hpp"
#include "hcs/stream.hpp"
#include "hcs/tree.hpp"
#include "hcs/verify.hpp"

using nlohmann::json;
using namespace hcs;

namespace {

uint64_t env_seed() {
    if (const char* s = std::getenv("HC_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

std::string fmt_num(double x) {
    if (!std::isfinite(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    if (x == std::floor(x) && std::abs(x) < 9.007199254740992e15)
        std::snprintf(buf, sizeof(buf), "%.0f", x);
    else
        std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

json metrics_json(const Metrics& m, bool timing) {
    json j{{"cut_calls", m.cut_calls}, {"words_peak", m.words_peak}, {"passes", m.passes}};
    if (timing) j["wall_time_s"] = m.wall_time_s;
    return j;
}

json report_json(const CostReport& rep, bool timing) {
    json j;
    j["cost"] = rep.cost;
    j["lower_bound"] = rep.lower_bound;
    j["lb_certified"] = rep.lb_certified;
    if (std::isfinite(rep.ratio))
        j["ratio"] = rep.ratio;
    else
        j["ratio"] = nullptr;
    j["tree"] = rep.tree_text;
    j["metrics"] = metrics_json(rep.metrics, timing);
    return j;
}

std::string normalize_family(std::string f) {
    for (auto& c : f)
        if (c == '_') c = '-';
    if (f == "two-clique-gadget") f = "two-clique";
    if (f == "index-gadget" || f == "four-clique-gadget" || f == "four-clique") f = "index";
    return f;
}

struct GenSpec {
    std::string family;
    long n = 0, k = 0, t = 0, s = 0, cross = 0, N = 0, i = 0, j = 0;
    int case_id = 1;
    std::string case_str;  // ovme: yes|no
    double p = 0.5, weight = 1.0;
    uint64_t seed = 0;
};

struct GenOut {
    WeightedGraph graph;
    json hidden;
    std::string case_label;
    long n_eff = -1, k_eff = -1, t_eff = -1;
    bool has_prescribed = false;
    HCTree prescribed;
};

GenOut generate(const GenSpec& gs) {
    GenOut out;
    const std::string fam = normalize_family(gs.family);
    if (fam == "path") {
        out.graph = gen_path(static_cast<int>(gs.n), gs.weight);
        out.n_eff = gs.n;
    } else if (fam == "cycle") {
        out.graph = gen_cycle(static_cast<int>(gs.n), gs.weight);
        out.n_eff = gs.n;
    } else if (fam == "clique") {
        out.graph = gen_clique(static_cast<int>(gs.n), gs.weight);
        out.n_eff = gs.n;
    } else if (fam == "er") {
        out.graph = gen_er(static_cast<int>(gs.n), gs.p, gs.seed, gs.weight);
        out.n_eff = gs.n;
        out.hidden = json{{"family", "er"}, {"n", gs.n}, {"p", gs.p}, {"m", out.graph.m()}};
    } else if (fam == "noc") {
        NocInstance inst = gen_noc(static_cast<int>(gs.n), static_cast<int>(gs.k), gs.case_id);
        out.graph = std::move(inst.graph);
        out.case_label = std::to_string(inst.case_id);
        out.n_eff = inst.n;
        out.k_eff = inst.k;
        out.hidden = json{{"family", "noc"},         {"case", inst.case_id},
                          {"n", inst.n},             {"k", inst.k},
                          {"cycles", inst.cycles},   {"cycle_len", inst.cycle_len},
                          {"paths", inst.paths},     {"path_len", inst.path_len},
                          {"path_edges", inst.path_len - 1}};
    } else if (fam == "ovme") {
        bool yes = gs.case_str != "no";
        OvmeInstance inst = gen_ovme(static_cast<int>(gs.n), static_cast<int>(gs.k),
                                     static_cast<int>(gs.t), yes, gs.seed);
        out.graph = std::move(inst.graph);
        out.case_label = yes ? "yes" : "no";
        out.n_eff = inst.n;
        out.k_eff = inst.k;
        out.t_eff = inst.t;
        out.hidden = json{{"family", "ovme"},
                          {"case", out.case_label},
                          {"n", inst.n},
                          {"k", inst.k},
                          {"t", inst.t},
                          {"class", inst.hidden_class}};
    } else if (fam == "two-clique") {
        TwoCliqueInstance inst =
            gen_two_clique(static_cast<int>(gs.s), static_cast<int>(gs.cross), gs.seed);
        out.graph = std::move(inst.graph);
        out.n_eff = 2 * inst.s;
        json pairs = json::array();
        for (auto [a, b] : inst.cross) pairs.push_back(json::array({a, b}));
        out.hidden = json{{"family", "two_clique"}, {"s", inst.s}, {"cross", pairs}};
    } else if (fam == "index") {
        BitMatrix x = BitMatrix::random(static_cast<int>(gs.N), gs.seed);
        IndexGadget gad =
            gen_index_gadget(static_cast<int>(gs.N), x, static_cast<int>(gs.i),
                             static_cast<int>(gs.j));
        out.graph = std::move(gad.graph);
        out.n_eff = 16 * gad.N;
        out.has_prescribed = true;
        out.prescribed = std::move(gad.prescribed);
        json rows = json::array();
        for (const auto& row : x.bits) {
            std::string bits;
            for (uint8_t b : row) bits.push_back(b ? '1' : '0');
            rows.push_back(bits);
        }
        out.hidden = json{{"family", "index"},
                          {"N", gad.N},
                          {"i", gs.i},
                          {"j", gs.j},
                          {"bit", gad.edge_present ? 1 : 0},
                          {"swapped", gad.swapped},
                          {"endpoint_1", gad.endpoint_1},
                          {"endpoint_2", gad.endpoint_2},
                          {"cost_edge_present", gad.cost_edge_present},
                          {"cost_edge_absent", gad.cost_edge_absent},
                          {"sets", json{gad.sets[0], gad.sets[1], gad.sets[2], gad.sets[3]}},
                          {"x", rows}};
    } else {
        throw std::invalid_argument("unknown family '" + gs.family + "'");
    }
    return out;
}

int run_experiment(const std::string& config_path, std::string out_override) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config '" + config_path + "'");
    json cfg = json::parse(in);

    const std::string pipeline = cfg.value("pipeline", "offline");
    if (pipeline != "offline" && pipeline != "streaming")
        throw std::invalid_argument("pipeline must be offline or streaming");
    const double eps = cfg.value("epsilon", 0.2);
    const double beta = cfg.value("beta", 1.0 / 3.0);
    const double budget_c = cfg.value("budget_c", 6.0);
    const std::string order_name = cfg.value("order", "natural");
    const bool timing = cfg.value("include_timing", false);
    CutFinder finder;
    finder.kind = finder_kind_from_name(cfg.value("finder", "spectral"));
    std::vector<uint64_t> seeds = cfg.value("seeds", std::vector<uint64_t>{0});
    std::string out_path = !out_override.empty() ? out_override : cfg.value("output", "");
    if (out_path.empty()) throw std::invalid_argument("no output path (config or -o)");

    std::ostringstream csv;
    csv << "instance,case,n,k,t,seed,cost,lower_bound,ratio,words_peak,passes,wall_time,status\n";
    int rows = 0;
    for (const json& inst : cfg.value("instances", json::array())) {
        for (uint64_t seed : seeds) {
            GenSpec gs;
            gs.family = inst.value("family", "");
            gs.n = inst.value("n", 0L);
            gs.k = inst.value("k", 0L);
            gs.t = inst.value("t", 0L);
            gs.s = inst.value("s", 0L);
            gs.cross = inst.value("cross", 0L);
            gs.N = inst.value("N", 0L);
            gs.i = inst.value("i", 0L);
            gs.j = inst.value("j", 0L);
            gs.p = inst.value("p", 0.5);
            gs.weight = inst.value("weight", 1.0);
            if (inst.contains("case") && inst["case"].is_number())
                gs.case_id = inst["case"].get<int>();
            else if (inst.contains("case"))
                gs.case_str = inst["case"].get<std::string>();
            gs.seed = seed;
            const std::string id = inst.value("id", gs.family);

            std::string case_label, n_s, k_s, t_s, cost_s, lb_s, ratio_s, words_s, passes_s,
                time_s, status = "ok";
            try {
                GenOut gen = generate(gs);
                case_label = gen.case_label;
                if (gen.n_eff >= 0) n_s = std::to_string(gen.n_eff);
                if (gen.k_eff >= 0) k_s = std::to_string(gen.k_eff);
                if (gen.t_eff >= 0) t_s = std::to_string(gen.t_eff);
                CutFinder f = finder;
                f.params.seed = seed;
                CostReport rep;
                if (pipeline == "offline") {
                    rep = solve_offline(gen.graph, beta, f);
                } else {
                    EdgeStream es = EdgeStream::from_graph(
                        gen.graph, stream_order_from_name(order_name), seed);
                    SparsifyParams sp;
                    sp.epsilon = eps;
                    sp.seed = seed;
                    sp.budget_c = budget_c;
                    rep = stream_hc(es, sp, beta, f).report;
                    words_s = std::to_string(rep.metrics.words_peak);
                    passes_s = std::to_string(rep.metrics.passes);
                }
                cost_s = fmt_num(rep.cost);
                lb_s = fmt_num(rep.lower_bound);
                ratio_s = fmt_num(rep.ratio);
                if (timing) time_s = fmt_num(rep.metrics.wall_time_s);
            } catch (const std::exception& e) {
                std::string msg = e.what();
                for (auto& c : msg)
                    if (c == ',' || c == '\n') c = ';';
                status = "error: " + msg;
            }
            csv << id << ',' << case_label << ',' << n_s << ',' << k_s << ',' << t_s << ','
                << seed << ',' << cost_s << ',' << lb_s << ',' << ratio_s << ',' << words_s
                << ',' << passes_s << ',' << time_s << ',' << status << '\n';
            ++rows;
        }
    }
    write_text(out_path, csv.str());
    std::cout << "wrote " << rows << " rows to " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hierarchical clustering over edge streams: generators, solvers, oracles"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- gen ----
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance family");
    GenSpec gs;
    gs.seed = env_seed();
    std::string gen_out, gen_hidden, gen_tree;
    uint64_t permute_seed = 0;
    bool do_permute = false;
    gen_cmd->add_option("family", gs.family,
                        "path|cycle|clique|er|noc|ovme|two-clique|index")
        ->required();
    gen_cmd->add_option("out", gen_out, "output graph file")->required();
    gen_cmd->add_option("--n", gs.n, "vertex count");
    gen_cmd->add_option("--k", gs.k, "noc path length / ovme players");
    gen_cmd->add_option("--t", gs.t, "ovme hidden classes");
    gen_cmd->add_option("--s", gs.s, "two-clique: clique size");
    gen_cmd->add_option("--cross", gs.cross, "two-clique: cross edge count");
    gen_cmd->add_option("--case", gs.case_str, "noc: 1|2, ovme: yes|no");
    gen_cmd->add_option("--p", gs.p, "er edge probability");
    gen_cmd->add_option("--weight", gs.weight, "uniform edge weight");
    gen_cmd->add_option("--N", gs.N, "index gadget scale (n = 16N)");
    gen_cmd->add_option("--i", gs.i, "index gadget probe row");
    gen_cmd->add_option("--j", gs.j, "index gadget probe column");
    gen_cmd->add_option("--seed", gs.seed, "generator seed");
    gen_cmd->add_option("--hidden", gen_hidden, "write ground-truth JSON here");
    gen_cmd->add_option("--tree", gen_tree, "index: write the prescribed tree here");
    gen_cmd->add_option("--permute-seed", permute_seed, "relabel vertices randomly")
        ->each([&](const std::string&) { do_permute = true; });
    gen_cmd->callback([&] {
        if (!gs.case_str.empty() && (normalize_family(gs.family) == "noc"))
            gs.case_id = std::stoi(gs.case_str);
        GenOut out = generate(gs);
        if (do_permute) {
            const std::string fam = normalize_family(gs.family);
            if (fam == "two-clique" || fam == "index")
                throw std::invalid_argument("--permute-seed unsupported for " + fam);
            std::vector<Vertex> perm(out.graph.n());
            std::iota(perm.begin(), perm.end(), 0);
            Rng prng(permute_seed);
            prng.shuffle(perm);
            out.graph = relabel(out.graph, perm);
            if (out.hidden.contains("class")) {
                auto cls = out.hidden["class"].get<std::vector<int>>();
                std::vector<int> relabeled(cls.size());
                for (size_t v = 0; v < cls.size(); ++v) relabeled[perm[v]] = cls[v];
                out.hidden["class"] = relabeled;
            }
            if (!out.hidden.is_null()) out.hidden["permute_seed"] = permute_seed;
        }
        save_graph(out.graph, gen_out);
        if (!gen_hidden.empty()) {
            if (out.hidden.is_null())
                out.hidden = json{{"family", normalize_family(gs.family)}, {"n", out.graph.n()}};
            write_text(gen_hidden, out.hidden.dump(2) + "\n");
        }
        if (!gen_tree.empty()) {
            if (!out.has_prescribed)
                throw std::invalid_argument("--tree is only for the index family");
            write_text(gen_tree, format_tree(out.prescribed) + "\n");
        }
        std::cout << "n=" << out.graph.n() << " m=" << out.graph.m() << "\n";
    });

    // ---- cost ----
    auto* cost_cmd = app.add_subcommand("cost", "evaluate a tree's clustering cost");
    std::string cost_graph, cost_tree;
    cost_cmd->add_option("graph", cost_graph)->required();
    cost_cmd->add_option("tree", cost_tree)->required();
    cost_cmd->callback([&] {
        WeightedGraph g = load_graph(cost_graph);
        std::ifstream in(cost_tree);
        if (!in) throw std::runtime_error("cannot open tree file '" + cost_tree + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        HCTree t = parse_tree(ss.str());
        std::cout << fmt_num(cost_lca(g, t)) << "\n";
    });

    // ---- opt ----
    auto* opt_cmd = app.add_subcommand("opt", "exact optimum by subset DP (n <= 16)");
    std::string opt_graph, opt_tree_out;
    bool opt_json = false;
    opt_cmd->add_option("graph", opt_graph)->required();
    opt_cmd->add_option("--tree", opt_tree_out, "write an optimal tree here");
    opt_cmd->add_flag("--json", opt_json, "full JSON report with optimal root cuts");
    opt_cmd->callback([&] {
        WeightedGraph g = load_graph(opt_graph);
        OptResult opt = brute_force_opt(g);
        std::string tree_text = format_tree(opt.tree);
        if (!opt_tree_out.empty()) write_text(opt_tree_out, tree_text + "\n");
        if (opt_json) {
            json cuts = json::array();
            for (const auto& c : opt.optimal_root_cuts)
                cuts.push_back(json{{"side_a", c.side_a},
                                    {"side_b", c.side_b},
                                    {"weight", c.weight}});
            json j{{"value", opt.value}, {"tree", tree_text}, {"root_cuts", cuts}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << fmt_num(opt.value) << "\n" << tree_text << "\n";
        }
    });

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "recursive balanced-cut clustering");
    std::string solve_graph, solve_finder = "spectral", solve_tree_out;
    double solve_beta = 1.0 / 3.0;
    uint64_t solve_seed = env_seed();
    bool solve_timing = false;
    solve_cmd->add_option("graph", solve_graph)->required();
    solve_cmd->add_option("--beta", solve_beta, "balance parameter in (0, 1/2]");
    solve_cmd->add_option("--finder", solve_finder, "exact|spectral|random");
    solve_cmd->add_option("--seed", solve_seed);
    solve_cmd->add_option("--tree", solve_tree_out, "write the tree here");
    solve_cmd->add_flag("--timing", solve_timing, "include wall time in the JSON");
    solve_cmd->callback([&] {
        WeightedGraph g = load_graph(solve_graph);
        CutFinder finder;
        finder.kind = finder_kind_from_name(solve_finder);
        finder.params.seed = solve_seed;
        CostReport rep = solve_offline(g, solve_beta, finder);
        if (!solve_tree_out.empty()) write_text(solve_tree_out, rep.tree_text + "\n");
        std::cout << report_json(rep, solve_timing).dump(2) << "\n";
    });

    // ---- sparsify ----
    auto* sp_cmd = app.add_subcommand("sparsify", "one-pass cut sparsifier");
    std::string sp_in, sp_out;
    SparsifyParams sp;
    sp.seed = env_seed();
    sp_cmd->add_option("in", sp_in)->required();
    sp_cmd->add_option("out", sp_out)->required();
    sp_cmd->add_option("--eps", sp.epsilon, "cut accuracy");
    sp_cmd->add_option("--seed", sp.seed);
    sp_cmd->add_option("--budget-c", sp.budget_c, "edge budget scale constant");
    sp_cmd->callback([&] {
        EdgeStream es = EdgeStream::from_file(sp_in);
        StreamStats stats;
        WeightedGraph h = stream_sparsify(es, sp, &stats);
        save_graph(h, sp_out);
        json j{{"edges_in", stats.edges_in},
               {"edges_out", stats.edges_out},
               {"words_peak", stats.words_peak},
               {"passes", stats.passes}};
        std::cout << j.dump(2) << "\n";
    });

    // ---- stream-solve ----
    auto* ss_cmd = app.add_subcommand("stream-solve", "single-pass sparsify-then-cluster");
    std::string ss_graph, ss_finder = "spectral", ss_order = "natural", ss_tree_out;
    SparsifyParams ss_sp;
    ss_sp.seed = env_seed();
    double ss_beta = 1.0 / 3.0;
    bool ss_timing = false;
    ss_cmd->add_option("graph", ss_graph)->required();
    ss_cmd->add_option("--eps", ss_sp.epsilon);
    ss_cmd->add_option("--beta", ss_beta);
    ss_cmd->add_option("--finder", ss_finder, "exact|spectral|random");
    ss_cmd->add_option("--order", ss_order, "natural|shuffled|adversarial");
    ss_cmd->add_option("--seed", ss_sp.seed);
    ss_cmd->add_option("--budget-c", ss_sp.budget_c);
    ss_cmd->add_option("--tree", ss_tree_out);
    ss_cmd->add_flag("--timing", ss_timing);
    ss_cmd->callback([&] {
        EdgeStream es =
            EdgeStream::from_file(ss_graph, stream_order_from_name(ss_order), ss_sp.seed);
        CutFinder finder;
        finder.kind = finder_kind_from_name(ss_finder);
        finder.params.seed = ss_sp.seed;
        StreamSolveResult res = stream_hc(es, ss_sp, ss_beta, finder);
        if (!ss_tree_out.empty()) write_text(ss_tree_out, res.report.tree_text + "\n");
        json j = report_json(res.report, ss_timing);
        j["stream"] = json{{"edges_in", res.stats.edges_in},
                           {"edges_out", res.stats.edges_out},
                           {"levels", res.stats.levels},
                           {"reductions", res.stats.reductions}};
        std::cout << j.dump(2) << "\n";
    });

    // ---- expansion ----
    auto* exp_cmd = app.add_subcommand("expansion", "edge expansion estimate");
    std::string exp_graph;
    bool exp_exact = false;
    int exp_rounds = 32;
    uint64_t exp_seed = env_seed();
    exp_cmd->add_option("graph", exp_graph)->required();
    exp_cmd->add_flag("--exact", exp_exact, "force exhaustive search (n <= 20)");
    exp_cmd->add_option("--rounds", exp_rounds, "random sweep rounds");
    exp_cmd->add_option("--seed", exp_seed);
    exp_cmd->callback([&] {
        WeightedGraph g = load_graph(exp_graph);
        ExpansionEstimate est = (exp_exact || g.n() <= 20)
                                    ? exact_expansion(g)
                                    : approx_expansion(g, exp_rounds, exp_seed);
        json j{{"method", est.exact ? "exact" : "sweep"},
               {"certified_upper", est.certified_upper},
               {"heuristic_lower", est.heuristic_lower},
               {"witness",
                json{{"side_a", est.witness.side_a},
                     {"weight", est.witness.weight},
                     {"size_a", est.witness.side_a.size()},
                     {"size_b", est.witness.side_b.size()}}}};
        std::cout << j.dump(2) << "\n";
    });

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    std::string verify_suite;
    uint64_t verify_seed = env_seed();
    verify_cmd->add_option("suite", verify_suite, "suite name or 'all'")->required();
    verify_cmd->add_option("--seed", verify_seed);
    verify_cmd->callback([&] {
        std::vector<std::string> names =
            verify_suite == "all" ? suite_names() : std::vector<std::string>{verify_suite};
        json out = json::array();
        bool all_ok = true;
        for (const auto& name : names) {
            SuiteResult res = run_suite(name, verify_seed);
            all_ok = all_ok && res.ok();
            out.push_back(json{{"suite", res.name},
                               {"total", res.total},
                               {"passed", res.passed},
                               {"failures", res.failures}});
        }
        std::cout << (names.size() == 1 ? out[0] : out).dump(2) << "\n";
        if (!all_ok) exit_code = 1;
    });

    // ---- experiment ----
    auto* exp2_cmd = app.add_subcommand("experiment", "batch runs from a JSON config to CSV");
    std::string exp2_config, exp2_out;
    exp2_cmd->add_option("config", exp2_config)->required();
    exp2_cmd->add_option("-o,--output", exp2_out, "override the config's CSV path");
    exp2_cmd->callback([&] { run_experiment(exp2_config, exp2_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
