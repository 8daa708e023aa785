#pragma once

// Serialization: schedule.json, family files, lengths.csv, limits.json and
// run manifests. Rationals travel as canonical "num/den" strings so every
// artifact round-trips exactly and reruns are byte-identical.

#include "fareylab/limit_analysis.hpp"
#include "fareylab/pairing.hpp"
#include "fareylab/ray_model.hpp"
#include "fareylab/schedule.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fareylab {

using Json = nlohmann::ordered_json;

// ---- schedule.json ----
Json schedule_to_json(const GrowthSchedule& s);
// Structural parse only; semantic invariants are cmd_check's job, so a file
// with e.g. e_k = 3 loads and then fails the named invariant.
GrowthSchedule schedule_from_json(const Json& j);

// ---- model params ----
Json model_params_to_json(const ModelParams& p);
ModelParams model_params_from_json(const Json& j);

// ---- family ----
Json family_to_json(const std::vector<TestCurve>& family);
std::vector<TestCurve> family_from_json(const Json& j);

// ---- lengths.csv ----
std::string lengths_csv(const std::vector<RaySample>& samples);
struct CsvRow {
    size_t k;
    Rat s;
    std::string delta_id;
    Rat length;
    Rat x, y;
};
// Throws invalid_argument with a 1-based line number on malformed input.
std::vector<CsvRow> parse_lengths_csv(const std::string& text);

// Groups consecutive rows sharing (k, s) back into samples.
std::vector<RaySample> samples_from_rows(const std::vector<CsvRow>& rows);

// ---- limits.json ----
struct LimitVerdicts {
    bool converges_to_endpoint_0 = false;
    bool converges_to_endpoint_1 = false;
    bool on_segment = false;
    bool interior_points_distinct = false;
    bool has_even = false, has_odd = false, has_sweep = false;
};

Json interval_to_json(const RatInterval& iv);

Json limits_to_json(const GrowthSchedule& schedule, const std::vector<TestCurve>& family,
                    const std::vector<EndpointRow>& even_rows,
                    const std::vector<EndpointRow>& odd_rows,
                    const std::vector<SweepReport>& sweeps, const LimitVerdicts& verdicts);

// ---- files & manifests ----
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
// Writes <path>.manifest.json echoing the resolved configuration.
void write_manifest(const std::string& out_path, const std::string& command,
                    const Json& resolved_config);

std::string json_str(const Json& j);

}  // namespace fareylab
