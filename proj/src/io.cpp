#include "rcq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rcq {

double snap15(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return std::strtod(buf, nullptr);
}

std::string format15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void write_counts_file(const std::string& path, const std::vector<CountsRecord>& records) {
    nlohmann::json doc;
    doc["bit_order"] = "apqc";
    doc["records"] = nlohmann::json::array();
    for (const CountsRecord& rec : records) {
        nlohmann::json r;
        r["setting"] = {{"x", rec.x}, {"eta", rec.eta}, {"z", rec.z}};
        r["shots"] = rec.shots;
        nlohmann::json counts = nlohmann::json::object();
        for (int s = 0; s < 16; ++s)
            if (rec.counts[static_cast<size_t>(s)] > 0)
                counts[outcome_string(s)] = rec.counts[static_cast<size_t>(s)];
        r["counts"] = std::move(counts);
        doc["records"].push_back(std::move(r));
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write counts file: " + path);
    out << doc.dump(1) << "\n";
}

std::vector<CountsRecord> read_counts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open counts file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("counts file " + path + ": invalid JSON: " + e.what());
    }
    const std::string bit_order = doc.value("bit_order", "");
    if (bit_order != "apqc")
        throw std::invalid_argument("counts file " + path +
                                    ": \"bit_order\" must be \"apqc\", got \"" + bit_order + "\"");
    if (!doc.contains("records") || !doc["records"].is_array())
        throw std::invalid_argument("counts file " + path + ": missing \"records\" array");

    std::vector<CountsRecord> records;
    size_t idx = 0;
    for (const auto& r : doc["records"]) {
        auto fail = [&](const std::string& what) {
            throw std::invalid_argument("counts file " + path + ": record #" +
                                        std::to_string(idx) + ": " + what);
        };
        CountsRecord rec;
        try {
            const auto& setting = r.at("setting");
            rec.x = setting.at("x").get<int>();
            rec.z = setting.at("z").get<int>();
            rec.eta = setting.at("eta").get<std::string>();
            rec.shots = r.at("shots").get<uint64_t>();
        } catch (const nlohmann::json::exception& e) {
            fail(std::string("bad or missing field: ") + e.what());
        }
        if (rec.x < 1 || rec.x > 3) fail("setting.x must be 1..3");
        if (rec.z < 1 || rec.z > 3) fail("setting.z must be 1..3");
        try {
            Permutation::from_digits(rec.eta);
        } catch (const std::exception& e) {
            fail(std::string("setting.eta: ") + e.what());
        }
        if (!r.contains("counts") || !r["counts"].is_object()) fail("missing \"counts\" object");
        for (const auto& [key, value] : r["counts"].items()) {
            int outcome = 0;
            try {
                outcome = outcome_index(key);
            } catch (const std::exception&) {
                fail("counts key \"" + key + "\" is not a 4-bit string");
            }
            if (!value.is_number_unsigned()) fail("counts[\"" + key + "\"] must be a nonnegative integer");
            rec.counts[static_cast<size_t>(outcome)] = value.get<uint64_t>();
        }
        if (rec.total() != rec.shots)
            fail("counts sum to " + std::to_string(rec.total()) + " but shots = " +
                 std::to_string(rec.shots));
        records.push_back(std::move(rec));
        ++idx;
    }
    return records;
}

NoiseModel RunConfig::noise_model() const {
    NoiseModel noise;
    noise.two_qubit_depolarizing = noise_2q;
    for (auto& rf : noise.readout_flip) rf = noise_readout;
    noise.validate();
    return noise;
}

RunConfig read_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file " + path + ": invalid JSON: " + e.what());
    }
    RunConfig cfg;
    try {
        cfg.mode = doc.value("mode", cfg.mode);
        cfg.shots = doc.value("shots", cfg.shots);
        cfg.seed = doc.value("seed", cfg.seed);
        cfg.noise_2q = doc.value("noise_2q", cfg.noise_2q);
        if (doc.contains("noise_readout")) {
            cfg.noise_readout[0] = doc["noise_readout"].at(0).get<double>();
            cfg.noise_readout[1] = doc["noise_readout"].at(1).get<double>();
        }
        cfg.native = doc.value("native", cfg.native);
        cfg.counts_path = doc.value("counts_path", cfg.counts_path);
        cfg.out_dir = doc.value("out_dir", cfg.out_dir);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file " + path + ": " + e.what());
    }
    if (cfg.mode != "exact" && cfg.mode != "sample" && cfg.mode != "ingest")
        throw std::invalid_argument("config file " + path + ": mode must be exact, sample or ingest");
    return cfg;
}

void write_run_config(const std::string& path, const RunConfig& config) {
    nlohmann::json doc;
    doc["mode"] = config.mode;
    doc["shots"] = config.shots;
    doc["seed"] = config.seed;
    doc["noise_2q"] = snap15(config.noise_2q);
    doc["noise_readout"] = {snap15(config.noise_readout[0]), snap15(config.noise_readout[1])};
    doc["native"] = config.native;
    if (!config.counts_path.empty()) doc["counts_path"] = config.counts_path;
    if (!config.out_dir.empty()) doc["out_dir"] = config.out_dir;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config file: " + path);
    out << doc.dump(1) << "\n";
}

namespace {

nlohmann::json result_to_json(const WitnessResult& result, double reference_bound) {
    nlohmann::json doc;
    doc["F"] = snap15(result.F);
    doc["sigma"] = snap15(result.sigma);
    if (result.shots_per_setting)
        doc["shots_per_setting"] = *result.shots_per_setting;
    else
        doc["shots_per_setting"] = "exact";
    doc["reference_bound"] = snap15(reference_bound);
    doc["F_minus_bound"] = snap15(result.F - reference_bound);
    if (result.sigma > 0)
        doc["sigma_above_bound"] = snap15((result.F - reference_bound) / result.sigma);
    nlohmann::json terms = nlohmann::json::array();
    for (const CorrelationTerm& t : result.terms) {
        terms.push_back({{"eta", t.setting.eta.digits()},
                         {"x", t.setting.x},
                         {"z", t.setting.z},
                         {"b", t.b},
                         {"signed_value", snap15(t.signed_value)}});
    }
    doc["terms"] = std::move(terms);
    nlohmann::json partials = nlohmann::json::array();
    for (double p : result.partials) partials.push_back(snap15(p));
    doc["partials"] = std::move(partials);
    return doc;
}

}  // namespace

std::string witness_result_json(const WitnessResult& result, double reference_bound) {
    return result_to_json(result, reference_bound).dump(1);
}

void write_witness_result(const std::string& path, const WitnessResult& result,
                          double reference_bound) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write result file: " + path);
    out << witness_result_json(result, reference_bound) << "\n";
}

void write_terms_csv(const std::string& path, const WitnessResult& result) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path);
    out << "eta,z,b,signed_value\n";
    for (const CorrelationTerm& t : result.terms)
        out << t.setting.eta.digits() << "," << t.setting.z << "," << t.b << ","
            << format15(t.signed_value) << "\n";
}

std::string no_signaling_json(const NoSignalingReport& report) {
    nlohmann::json doc;
    doc["all_within"] = report.all_within;
    doc["comparisons"] = nlohmann::json::array();
    for (const MarginalComparison& c : report.comparisons) {
        doc["comparisons"].push_back({{"party", std::string(1, c.party)},
                                      {"own_setting", c.own_setting},
                                      {"context_a", c.context_a.label()},
                                      {"context_b", c.context_b.label()},
                                      {"tv", snap15(c.tv)},
                                      {"tolerance", snap15(c.tolerance)},
                                      {"within", c.within}});
    }
    return doc.dump(1);
}

}  // namespace rcq
