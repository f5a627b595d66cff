#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sop/strategies.hpp"

namespace sop {

// One benchmark cell: an instance solved under one configuration.
struct RunRecord {
    std::string instance;
    std::string config;  // Table 1 descriptor, e.g. "BS,PE,P"
    SearchReport report;
    std::optional<std::string> error;  // cell failed, run continued

    nlohmann::json to_json() const;
    static RunRecord from_json(const nlohmann::json& j);
};

// The full strategy x bound x equivalence cross product (18 configurations).
std::vector<SearchConfig> all_configs();

struct BestKnown {
    Cost lower = 0;
    Cost upper = 0;
};

// CSV with columns instance,bklb,bkub[,...]; extra columns ignored.
std::map<std::string, BestKnown> load_best_known(const std::filesystem::path& path);

struct BenchOptions {
    std::vector<std::filesystem::path> instances;
    std::vector<SearchConfig> configs;
    double time_limit = 600.0;
    std::optional<std::uint64_t> node_limit;
    int jobs = 1;
    std::filesystem::path out_dir;
    std::optional<std::filesystem::path> best_known_file;
};

struct BenchResult {
    std::vector<RunRecord> records;  // instance-major, config-minor order
    std::string csv;
};

// Cross-product runner. Writes records.jsonl and summary.csv under
// options.out_dir (if set) and returns everything in memory. `log` may be
// null; progress lines go there otherwise.
BenchResult run_bench(const BenchOptions& options, std::ostream* log = nullptr);

// Table-1-shaped summary: one row per instance, per config the value (or "-"
// when no solution was found), a proven flag and a record flag (strictly
// better than the best known upper bound). Ends with an nb_closed row.
std::string csv_summary(const std::vector<std::string>& instance_names,
                        const std::vector<std::string>& config_names,
                        const std::vector<RunRecord>& records,
                        const std::map<std::string, BestKnown>& best_known);

}  // namespace sop
