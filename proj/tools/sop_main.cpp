#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sop/harness.hpp"
#include "sop/instance.hpp"
#include "sop/strategies.hpp"

namespace fs = std::filesystem;

namespace {

double default_time_limit() {
    if (const char* env = std::getenv("SOP_TIME_LIMIT")) return std::atof(env);
    return 600.0;
}

void print_trace_line(void*, double elapsed_s, sop::Cost value) {
    std::cerr << "incumbent t=" << elapsed_s << "s value=" << value << "\n";
}

struct SolveArgs {
    std::string instance_path;
    std::string strategy = "beam";
    std::string bound = "prefix";
    bool use_pe = true;
    double time_limit = default_time_limit();
    std::uint64_t node_limit = 0;
    std::uint64_t max_iterations = 0;
    long long beam_init = 1;
    long long beam_growth = 2;
    long long lds_init = 1;
    std::size_t pe_capacity = 0;
    std::string output = "human";
    // generated instances ("random" as instance path)
    int gen_n = 9;
    long long gen_max_cost = 100;
    double gen_density = 0.3;
    std::uint64_t seed = 0;
};

sop::SearchConfig make_config(const SolveArgs& a) {
    sop::SearchConfig cfg;
    if (a.strategy == "dfs") cfg.strategy = sop::Strategy::Dfs;
    else if (a.strategy == "lds") cfg.strategy = sop::Strategy::Lds;
    else if (a.strategy == "beam") cfg.strategy = sop::Strategy::BeamSearch;
    else throw CLI::ValidationError("--strategy", "expected dfs, lds or beam");
    if (a.bound == "prefix") cfg.bound_kind = sop::BoundKind::Prefix;
    else if (a.bound == "io") cfg.bound_kind = sop::BoundKind::InOut;
    else if (a.bound == "mst") cfg.bound_kind = sop::BoundKind::Mst;
    else throw CLI::ValidationError("--bound", "expected prefix, io or mst");
    cfg.use_equivalence = a.use_pe;
    cfg.time_limit = a.time_limit;
    if (a.node_limit) cfg.node_limit = a.node_limit;
    if (a.max_iterations) cfg.max_iterations = a.max_iterations;
    cfg.beam_init = a.beam_init;
    cfg.beam_growth = a.beam_growth;
    cfg.lds_init = a.lds_init;
    if (a.pe_capacity) cfg.pe_capacity = a.pe_capacity;
    return cfg;
}

int run_solve(const SolveArgs& args) {
    sop::Instance inst = args.instance_path == "random"
                             ? sop::Instance::random(args.gen_n, args.gen_max_cost,
                                                     args.gen_density, args.seed)
                             : sop::Instance::load(args.instance_path);
    if (!inst.end_forced_last())
        std::cerr << "note: instance data does not force the end vertex last\n";

    sop::SearchConfig cfg = make_config(args);
    bool human = args.output == "human";
    sop::SearchReport report =
        sop::solve(inst, cfg, human ? nullptr : &print_trace_line, nullptr);

    sop::RunRecord rec{inst.name(), cfg.descriptor(), report, std::nullopt};
    if (args.output == "json") {
        std::cout << rec.to_json().dump(2) << "\n";
    } else if (args.output == "csv") {
        std::cout << "instance,config,value,proven,time_to_best,time_to_proof,"
                     "nodes_opened\n";
        std::cout << rec.instance << "," << rec.config << ","
                  << (report.best_value ? std::to_string(*report.best_value) : "-")
                  << "," << (report.optimal_proven ? 1 : 0) << ","
                  << report.time_to_best << ","
                  << (report.time_to_proof ? std::to_string(*report.time_to_proof) : "-")
                  << "," << report.nodes_opened << "\n";
    } else {
        for (const auto& s : report.trace)
            std::cout << "incumbent t=" << s.elapsed_s << "s value=" << s.value << "\n";
        std::cout << "instance:  " << rec.instance << " (n=" << inst.size() << ")\n";
        std::cout << "config:    " << rec.config << "\n";
        if (report.best_value) {
            std::cout << "value:     " << *report.best_value
                      << (report.optimal_proven ? " (optimal)" : " (best found)") << "\n";
            std::cout << "tour:     ";
            for (int v : *report.best_permutation) std::cout << " " << v;
            std::cout << "\n";
        } else {
            std::cout << "value:     none found"
                      << (report.optimal_proven ? " (infeasible, proven)" : "") << "\n";
        }
        std::cout << "nodes:     opened=" << report.nodes_opened
                  << " cut_bound=" << report.nodes_cut_bound
                  << " cut_equivalence=" << report.nodes_cut_equivalence
                  << " cut_heuristic=" << report.nodes_cut_heuristic << "\n";
        std::cout << "time:      best=" << report.time_to_best << "s total="
                  << report.total_time << "s";
        if (report.time_to_proof) std::cout << " proof=" << *report.time_to_proof << "s";
        std::cout << "\n";
        if (report.db_saturated)
            std::cout << "note: equivalence database saturated; no proof claimed\n";
    }
    if (!report.best_value && !report.optimal_proven) return 1;  // nothing found
    if (!report.best_value && report.optimal_proven) return 2;   // proven infeasible
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Anytime branch-and-bound solver for the Sequential Ordering Problem"};
    app.require_subcommand(1);

    SolveArgs sargs;
    auto* solve_cmd = app.add_subcommand("solve", "solve a single instance");
    solve_cmd->add_option("instance", sargs.instance_path,
                          "SOPLIB file, or 'random' with --gen-* flags")
        ->required();
    solve_cmd->add_option("--strategy", sargs.strategy, "dfs|lds|beam");
    solve_cmd->add_option("--bound", sargs.bound, "prefix|io|mst");
    solve_cmd->add_flag("--pe,!--no-pe", sargs.use_pe, "prefix-equivalence cuts");
    solve_cmd->add_option("--time-limit", sargs.time_limit, "seconds, 0 = unlimited");
    solve_cmd->add_option("--node-limit", sargs.node_limit, "0 = unlimited");
    solve_cmd->add_option("--max-iterations", sargs.max_iterations,
                          "LDS/Beam restarts, 0 = unlimited");
    solve_cmd->add_option("--beam-init", sargs.beam_init);
    solve_cmd->add_option("--beam-growth", sargs.beam_growth);
    solve_cmd->add_option("--lds-init", sargs.lds_init);
    solve_cmd->add_option("--pe-capacity", sargs.pe_capacity,
                          "equivalence table entry cap, 0 = unbounded");
    solve_cmd->add_option("--output", sargs.output, "human|json|csv");
    solve_cmd->add_option("--gen-n", sargs.gen_n);
    solve_cmd->add_option("--gen-max-cost", sargs.gen_max_cost);
    solve_cmd->add_option("--gen-density", sargs.gen_density);
    solve_cmd->add_option("--seed", sargs.seed);

    std::vector<std::string> bench_inputs;
    std::vector<std::string> bench_configs;
    bool bench_all = false;
    double bench_time_limit = default_time_limit();
    std::uint64_t bench_node_limit = 0;
    int bench_jobs = 1;
    std::string bench_out;
    std::string bench_bk;
    auto* bench_cmd = app.add_subcommand("bench", "run an instance x config matrix");
    bench_cmd->add_option("inputs", bench_inputs, "instance files or directories")
        ->required();
    bench_cmd->add_option("--config", bench_configs,
                          "Table-1 descriptor, e.g. BS,PE,P (repeatable)");
    bench_cmd->add_flag("--all", bench_all, "all 18 configurations");
    bench_cmd->add_option("--time-limit", bench_time_limit);
    bench_cmd->add_option("--node-limit", bench_node_limit);
    bench_cmd->add_option("--jobs", bench_jobs);
    bench_cmd->add_option("--out-dir", bench_out, "where records.jsonl/summary.csv go");
    bench_cmd->add_option("--best-known", bench_bk, "CSV instance,bklb,bkub");

    int gen_n = 9;
    long long gen_max_cost = 100;
    double gen_density = 0.3;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "write a generated instance file");
    gen_cmd->add_option("--n", gen_n)->required();
    gen_cmd->add_option("--max-cost", gen_max_cost);
    gen_cmd->add_option("--density", gen_density);
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--out", gen_out, "output path, stdout if omitted");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve(sargs);

        if (bench_cmd->parsed()) {
            sop::BenchOptions opts;
            for (const auto& input : bench_inputs) {
                fs::path p(input);
                if (fs::is_directory(p)) {
                    for (const auto& entry : fs::directory_iterator(p))
                        if (entry.is_regular_file()) opts.instances.push_back(entry.path());
                } else {
                    opts.instances.push_back(p);
                }
            }
            std::sort(opts.instances.begin(), opts.instances.end());
            if (bench_all) {
                opts.configs = sop::all_configs();
            } else if (bench_configs.empty()) {
                // the six Table 1 columns
                for (const char* d :
                     {"BS,PE,P", "BS,PE,IO", "BS,PE,MST", "BS,P", "DFS,PE,P", "LDS,PE,P"})
                    opts.configs.push_back(*sop::parse_descriptor(d));
            } else {
                for (const auto& d : bench_configs) {
                    auto cfg = sop::parse_descriptor(d);
                    if (!cfg) throw sop::SopError("bad config descriptor: " + d);
                    opts.configs.push_back(*cfg);
                }
            }
            opts.time_limit = bench_time_limit;
            if (bench_node_limit) opts.node_limit = bench_node_limit;
            opts.jobs = bench_jobs;
            opts.out_dir = bench_out;
            if (!bench_bk.empty()) opts.best_known_file = bench_bk;
            sop::BenchResult result = sop::run_bench(opts, &std::cerr);
            std::cout << result.csv;
            return 0;
        }

        if (gen_cmd->parsed()) {
            sop::Instance inst =
                sop::Instance::random(gen_n, gen_max_cost, gen_density, gen_seed);
            if (gen_out.empty()) {
                std::cout << inst.to_bare_string();
            } else {
                std::ofstream out(gen_out);
                out << inst.to_bare_string();
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
