#include "sop/harness.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace sop {

using nlohmann::json;

json RunRecord::to_json() const {
    json nodes = {{"opened", report.nodes_opened},
                  {"cut_bound", report.nodes_cut_bound},
                  {"cut_equivalence", report.nodes_cut_equivalence},
                  {"cut_heuristic", report.nodes_cut_heuristic}};
    json iterations = json::array();
    for (const auto& it : report.iterations)
        iterations.push_back({{"param", it.parameter}, {"nodes", it.nodes}, {"exact", it.exact}});
    json trace = json::array();
    for (const auto& s : report.trace) trace.push_back({s.elapsed_s, s.value});

    json j = {{"instance", instance},
              {"config", config},
              {"best_value", report.best_value ? json(*report.best_value) : json()},
              {"permutation",
               report.best_permutation ? json(*report.best_permutation) : json()},
              {"proven", report.optimal_proven},
              {"time_to_best", report.time_to_best},
              {"time_to_proof",
               report.time_to_proof ? json(*report.time_to_proof) : json()},
              {"total_time", report.total_time},
              {"nodes", nodes},
              {"iterations", iterations},
              {"trace", trace},
              {"saturated", report.db_saturated},
              {"limit_hit", report.limit_hit}};
    if (error) j["error"] = *error;
    return j;
}

RunRecord RunRecord::from_json(const json& j) {
    RunRecord r;
    r.instance = j.at("instance").get<std::string>();
    r.config = j.at("config").get<std::string>();
    if (!j.at("best_value").is_null()) r.report.best_value = j.at("best_value").get<Cost>();
    if (!j.at("permutation").is_null())
        r.report.best_permutation = j.at("permutation").get<Permutation>();
    r.report.optimal_proven = j.at("proven").get<bool>();
    r.report.time_to_best = j.at("time_to_best").get<double>();
    if (!j.at("time_to_proof").is_null())
        r.report.time_to_proof = j.at("time_to_proof").get<double>();
    r.report.total_time = j.at("total_time").get<double>();
    const auto& nodes = j.at("nodes");
    r.report.nodes_opened = nodes.at("opened").get<std::uint64_t>();
    r.report.nodes_cut_bound = nodes.at("cut_bound").get<std::uint64_t>();
    r.report.nodes_cut_equivalence = nodes.at("cut_equivalence").get<std::uint64_t>();
    r.report.nodes_cut_heuristic = nodes.at("cut_heuristic").get<std::uint64_t>();
    for (const auto& it : j.at("iterations"))
        r.report.iterations.push_back({it.at("param").get<long long>(),
                                       it.at("nodes").get<std::uint64_t>(),
                                       it.at("exact").get<bool>()});
    for (const auto& s : j.at("trace"))
        r.report.trace.push_back({s.at(0).get<double>(), s.at(1).get<Cost>()});
    r.report.db_saturated = j.at("saturated").get<bool>();
    r.report.limit_hit = j.at("limit_hit").get<bool>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    return r;
}

std::vector<SearchConfig> all_configs() {
    std::vector<SearchConfig> out;
    for (Strategy s : {Strategy::Dfs, Strategy::Lds, Strategy::BeamSearch})
        for (BoundKind b : {BoundKind::Prefix, BoundKind::InOut, BoundKind::Mst})
            for (bool pe : {true, false}) {
                SearchConfig cfg;
                cfg.strategy = s;
                cfg.bound_kind = b;
                cfg.use_equivalence = pe;
                out.push_back(cfg);
            }
    return out;
}

std::map<std::string, BestKnown> load_best_known(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SopError("cannot open best-known file: " + path.string());
    std::map<std::string, BestKnown> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("instance", 0) == 0) continue;
        std::istringstream ls(line);
        std::string name, lb, ub;
        if (!std::getline(ls, name, ',') || !std::getline(ls, lb, ',') ||
            !std::getline(ls, ub, ','))
            throw SopError("malformed best-known line: " + line);
        out[name] = {std::stoll(lb), std::stoll(ub)};
    }
    return out;
}

std::string csv_summary(const std::vector<std::string>& instance_names,
                        const std::vector<std::string>& config_names,
                        const std::vector<RunRecord>& records,
                        const std::map<std::string, BestKnown>& best_known) {
    std::ostringstream out;
    out << "instance,bklb,bkub";
    for (const auto& c : config_names)
        out << "," << c << " value," << c << " proven," << c << " record";
    out << "\n";

    auto cell = [&](const std::string& inst, const std::string& cfg) -> const RunRecord* {
        for (const auto& r : records)
            if (r.instance == inst && r.config == cfg) return &r;
        return nullptr;
    };

    std::vector<int> closed(config_names.size(), 0);
    for (const auto& inst : instance_names) {
        auto bk = best_known.find(inst);
        out << inst << ",";
        if (bk != best_known.end())
            out << bk->second.lower << "," << bk->second.upper;
        else
            out << "-,-";
        for (std::size_t c = 0; c < config_names.size(); ++c) {
            const RunRecord* r = cell(inst, config_names[c]);
            if (!r || !r->report.best_value) {
                out << ",-,0,0";
                continue;
            }
            bool proven = r->report.optimal_proven;
            bool record = bk != best_known.end() && *r->report.best_value < bk->second.upper;
            if (proven) ++closed[c];
            out << "," << *r->report.best_value << "," << (proven ? 1 : 0) << ","
                << (record ? 1 : 0);
        }
        out << "\n";
    }
    out << "nb_closed,,";
    for (int c : closed) out << "," << c << ",,";
    out << "\n";
    return out.str();
}

BenchResult run_bench(const BenchOptions& options, std::ostream* log) {
    std::vector<std::string> instance_names;
    std::vector<Instance> instances;
    instances.reserve(options.instances.size());
    for (const auto& path : options.instances) {
        instances.push_back(Instance::load(path));
        instance_names.push_back(instances.back().name());
    }
    std::vector<std::string> config_names;
    for (const auto& c : options.configs) config_names.push_back(c.descriptor());

    const std::size_t cells = instances.size() * options.configs.size();
    std::vector<RunRecord> records(cells);
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;

    auto worker = [&] {
        for (std::size_t cell = next.fetch_add(1); cell < cells;
             cell = next.fetch_add(1)) {
            std::size_t ii = cell / options.configs.size();
            std::size_t ci = cell % options.configs.size();
            RunRecord& rec = records[cell];
            rec.instance = instance_names[ii];
            rec.config = config_names[ci];
            SearchConfig cfg = options.configs[ci];
            cfg.time_limit = options.time_limit;
            cfg.node_limit = options.node_limit;
            try {
                rec.report = solve(instances[ii], cfg);
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
            if (log) {
                std::lock_guard lock(log_mutex);
                *log << rec.instance << " " << rec.config << ": ";
                if (rec.error)
                    *log << "error: " << *rec.error;
                else if (rec.report.best_value)
                    *log << *rec.report.best_value
                         << (rec.report.optimal_proven ? " (proven)" : "");
                else
                    *log << "-";
                *log << "\n";
            }
        }
    };

    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<std::string, BestKnown> best_known;
    if (options.best_known_file) best_known = load_best_known(*options.best_known_file);

    BenchResult result;
    result.records = std::move(records);
    result.csv = csv_summary(instance_names, config_names, result.records, best_known);

    if (!options.out_dir.empty()) {
        std::filesystem::create_directories(options.out_dir);
        std::ofstream jsonl(options.out_dir / "records.jsonl");
        for (const auto& r : result.records) jsonl << r.to_json().dump() << "\n";
        std::ofstream csv(options.out_dir / "summary.csv");
        csv << result.csv;
    }
    return result;
}

}  // namespace sop
