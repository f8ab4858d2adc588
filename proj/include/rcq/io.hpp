#pragma once

#include <string>
#include <vector>

#include "rcq/witness.hpp"

namespace rcq {

// Rounds to 15 significant digits; all emitted floats go through this so
// files are stable across platforms.
double snap15(double v);
std::string format15(double v);

// Counts file schema:
// {
//   "bit_order": "apqc",
//   "records": [
//     {"setting": {"x": 1, "eta": "123", "z": 1}, "shots": 20000,
//      "counts": {"0000": 123, ...}},
//     ...
//   ]
// }
// Validation errors name the record index and field.
void write_counts_file(const std::string& path, const std::vector<CountsRecord>& records);
std::vector<CountsRecord> read_counts_file(const std::string& path);

// Everything needed to reproduce a run. The CLI writes the effective config
// next to its outputs and accepts one back via --config.
struct RunConfig {
    std::string mode = "sample";  // exact | sample | ingest
    uint64_t shots = 20000;
    uint64_t seed = 1;
    double noise_2q = 0.0;
    std::array<double, 2> noise_readout{0.0, 0.0};  // applied to every wire
    bool native = false;
    std::string counts_path;  // ingest mode
    std::string out_dir;

    NoiseModel noise_model() const;
};

RunConfig read_run_config(const std::string& path);
void write_run_config(const std::string& path, const RunConfig& config);

// Result document: F, sigma, per-term table, partials, bound distances.
std::string witness_result_json(const WitnessResult& result, double reference_bound);
void write_witness_result(const std::string& path, const WitnessResult& result,
                          double reference_bound);

// CSV with columns eta,z,b,signed_value (one row per term).
void write_terms_csv(const std::string& path, const WitnessResult& result);

std::string no_signaling_json(const NoSignalingReport& report);

}  // namespace rcq
