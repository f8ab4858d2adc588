// rcqtest: simulate the three-party network test, evaluate the witness from
// exact amplitudes, sampled shots or ingested counts, and compute the
// classical/real/complex reference bounds.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcq/certificate.hpp"
#include "rcq/complexmax.hpp"
#include "rcq/gate_identities.hpp"
#include "rcq/io.hpp"
#include "rcq/lvm.hpp"
#include "rcq/quadopt.hpp"
#include "rcq/sampler.hpp"
#include "rcq/transpile.hpp"
#include "rcq/witness.hpp"

namespace {

// Exit codes: 0 computed (witness above the reference bound where that
// applies), 2 computed but at/below the bound, 3 validation error, 4
// computation or I/O failure.
constexpr int kExitOk = 0;
constexpr int kExitBelowBound = 2;
constexpr int kExitValidation = 3;
constexpr int kExitFailure = 4;

const double kRealBound = 6.0 * std::sqrt(6.0);

struct CommonOut {
    std::string out_dir;
    bool json = false;
};

void emit_result(const rcq::WitnessResult& result, double bound, const CommonOut& common,
                 const std::vector<rcq::CountsRecord>* records,
                 const rcq::NoSignalingReport* audit) {
    if (!common.out_dir.empty()) {
        std::filesystem::create_directories(common.out_dir);
        const std::filesystem::path dir(common.out_dir);
        rcq::write_witness_result((dir / "result.json").string(), result, bound);
        rcq::write_terms_csv((dir / "terms.csv").string(), result);
        if (records) rcq::write_counts_file((dir / "counts.json").string(), *records);
        if (audit) {
            std::ofstream ns(dir / "no_signaling.json");
            ns << rcq::no_signaling_json(*audit) << "\n";
        }
    }
    if (common.json) {
        std::cout << rcq::witness_result_json(result, bound) << "\n";
        return;
    }
    std::cout << "F = " << rcq::format15(result.F);
    if (result.sigma > 0) {
        std::cout << " +- " << rcq::format15(result.sigma) << "  ("
                  << rcq::format15((result.F - bound) / result.sigma)
                  << " sigma above bound " << rcq::format15(bound) << ")";
    } else {
        std::cout << "  (bound " << rcq::format15(bound) << ")";
    }
    std::cout << "\n";
    if (audit)
        std::cout << "no-signaling: " << (audit->all_within ? "all marginals within tolerance"
                                                            : "SIGNALING FLAGGED")
                  << " over " << audit->comparisons.size() << " comparisons\n";
}

rcq::NoiseModel make_noise(double depol, const std::string& readout) {
    rcq::NoiseModel noise;
    noise.two_qubit_depolarizing = depol;
    if (!readout.empty()) {
        const auto comma = readout.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--noise-readout", "expected \"p01,p10\"");
        const double p01 = std::stod(readout.substr(0, comma));
        const double p10 = std::stod(readout.substr(comma + 1));
        for (auto& rf : noise.readout_flip) rf = {p01, p10};
    }
    noise.validate();
    return noise;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= csv.size()) {
        const size_t comma = csv.find(',', start);
        const size_t end = comma == std::string::npos ? csv.size() : comma;
        if (end > start) out.push_back(csv.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_verify_gates(bool as_json, bool inject_cr_sign_error) {
    const auto checks = rcq::verify_gate_identities(inject_cr_sign_error);
    bool all_pass = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        if (as_json)
            doc.push_back(
                {{"identity", c.name}, {"deviation", rcq::snap15(c.deviation)}, {"pass", c.pass}});
        else
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (deviation "
                      << rcq::format15(c.deviation) << ")\n";
    }
    if (as_json) std::cout << doc.dump(1) << "\n";
    else std::cout << (all_pass ? "all identities verified\n" : "IDENTITY FAILURES PRESENT\n");
    return all_pass ? kExitOk : 1;
}

nlohmann::json bound_result_json(const rcq::BoundResult& res) {
    nlohmann::json j;
    j["valid"] = res.valid;
    j["c0"] = res.c0.str();
    j["c1"] = res.c1.str();
    j["residual_class"] = res.residual_class;
    if (res.offending) j["offending_word"] = res.offending->str();
    if (res.has_bound) j["bound"] = rcq::snap15(res.bound);
    return j;
}

int run_bounds(const std::string& kind, const std::string& certificate_path, const std::string& t_str,
               const std::string& x_str, uint64_t trials, uint64_t seed, int threads, bool as_json) {
    using namespace rcq;
    nlohmann::json j;
    if (!certificate_path.empty()) {
        SoSCertificate cert = load_certificate(certificate_path);
        if (!t_str.empty() || !x_str.empty()) {
            const Rational t = t_str.empty() ? Rational(1) : Rational(t_str);
            const Rational x = x_str.empty() ? Rational(1) : Rational(x_str);
            cert = substitute(cert, t, x);
        }
        const BoundResult res = check_certificate(cert);
        j = bound_result_json(res);
        j["certificate"] = cert.name;
    } else if (kind == "classical") {
        const LvmResult res = lvm_max();
        j["bound"] = res.best_value;
        j["strategies_examined"] = res.strategies_examined;
        j["argmax"] = {{"a", res.argmax.a}, {"c", res.argmax.c}, {"b_of_eta", res.argmax.b_of_eta}};
    } else if (kind == "complex") {
        const WitnessResult res = complex_construction();
        j["bound"] = snap15(res.F);
        double lo = 1e300, hi = -1e300;
        for (const auto& t : res.terms) {
            lo = std::min(lo, t.signed_value);
            hi = std::max(hi, t.signed_value);
        }
        j["term_min"] = snap15(lo);
        j["term_max"] = snap15(hi);
    } else if (kind == "real-quadratic") {
        const QuadraticOptimum opt = optimize_quadratic();
        const BoundResult res = check_certificate(quadratic_certificate());
        j = bound_result_json(res);
        j["bound"] = snap15(opt.bound);
        j["t"] = snap15(opt.t);
        j["x"] = snap15(opt.x);
    } else if (kind == "real-cubic") {
        const BoundResult res = check_certificate(cubic_certificate());
        j = bound_result_json(res);
    } else if (kind == "sample-real" || kind == "sample-complex") {
        SamplerOptions opts;
        opts.field = kind == "sample-real" ? NumberField::real_amplitudes
                                           : NumberField::complex_amplitudes;
        opts.around_optimum = kind == "sample-complex";
        opts.trials = trials;
        opts.seed = seed;
        opts.threads = threads;
        const SamplerResult res = random_strategy_max(opts);
        j["best_value"] = snap15(res.best_value);
        j["best_trial"] = res.best_trial;
        j["trials"] = res.trials;
        j["ceiling"] = snap15(kind == "sample-real" ? kRealBound : 18.0);
    } else {
        throw CLI::ValidationError("bounds", "unknown kind " + kind);
    }
    if (as_json) {
        std::cout << j.dump(1) << "\n";
    } else {
        if (j.contains("bound")) std::cout << "bound = " << j["bound"] << "\n";
        if (j.contains("best_value"))
            std::cout << "best sampled value = " << j["best_value"] << " (trial "
                      << j["best_trial"] << " of " << j["trials"] << ")\n";
        if (j.contains("valid"))
            std::cout << "certificate valid = " << (j["valid"].get<bool>() ? "true" : "false")
                      << ", c0 = " << j["c0"].get<std::string>()
                      << ", c1 = " << j["c1"].get<std::string>() << ", residual class {"
                      << j["residual_class"].get<std::string>() << "}\n";
        if (j.contains("t"))
            std::cout << "optimum at t = " << j["t"] << ", x = " << j["x"] << "\n";
        if (j.contains("argmax")) std::cout << "argmax strategy: " << j["argmax"].dump() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-party network witness simulator and bound verifier"};
    app.require_subcommand(1);

    // exact
    auto* cmd_exact = app.add_subcommand("exact", "evaluate the witness from exact amplitudes");
    bool exact_native = false;
    std::string exact_perms, exact_out, exact_config;
    bool exact_json = false;
    cmd_exact->add_flag("--native", exact_native, "run through the native-basis rewriting");
    cmd_exact->add_option("--permutations", exact_perms, "comma-separated middle settings, e.g. 123,231");
    cmd_exact->add_option("--out", exact_out, "output directory (result.json, terms.csv)");
    cmd_exact->add_option("--config", exact_config, "run-config JSON providing defaults");
    cmd_exact->add_flag("--json", exact_json, "print the result document to stdout");

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "evaluate the witness from seeded shot sampling");
    uint64_t shots = 20000, seed = 1;
    double noise_2q = 0.0;
    std::string noise_readout, sample_out, sample_config;
    bool sample_native = false, sample_json = false;
    cmd_sample->add_option("--shots", shots, "shots per setting")->check(CLI::PositiveNumber);
    cmd_sample->add_option("--seed", seed, "master seed");
    cmd_sample->add_option("--noise-2q", noise_2q, "two-qubit depolarizing probability");
    cmd_sample->add_option("--noise-readout", noise_readout, "readout flips \"p01,p10\" on all wires");
    cmd_sample->add_flag("--native", sample_native, "run through the native-basis rewriting");
    cmd_sample->add_option("--out", sample_out, "output directory (counts.json, result.json, terms.csv)");
    cmd_sample->add_option("--config", sample_config, "run-config JSON providing defaults");
    cmd_sample->add_flag("--json", sample_json, "print the result document to stdout");

    // ingest
    auto* cmd_ingest = app.add_subcommand("ingest", "evaluate the witness from a counts file");
    std::string ingest_path, ingest_out, ingest_bound = "real", ingest_config;
    bool ingest_json = false;
    cmd_ingest->add_option("path", ingest_path, "counts file (JSON)");
    cmd_ingest->add_option("--bound", ingest_bound,
                           "reference bound: \"real\" (6*sqrt(6)), \"classical\" (12) or a number");
    cmd_ingest->add_option("--out", ingest_out, "output directory");
    cmd_ingest->add_option("--config", ingest_config, "run-config JSON providing defaults");
    cmd_ingest->add_flag("--json", ingest_json, "print the result document to stdout");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "reference bounds and certificate checks");
    std::string bounds_kind, cert_path, t_str, x_str;
    uint64_t trials = 100000, bseed = 1;
    int threads = 0;
    bool bounds_json = false;
    cmd_bounds
        ->add_option("kind", bounds_kind,
                     "classical | complex | real-quadratic | real-cubic | sample-real | sample-complex")
        ->required(false);
    cmd_bounds->add_option("--certificate", cert_path, "check a certificate file instead");
    cmd_bounds->add_option("--t", t_str, "rational t value for parametrized certificates, e.g. 3/5");
    cmd_bounds->add_option("--x", x_str, "rational x value for parametrized certificates");
    cmd_bounds->add_option("--trials", trials, "sampler trials");
    cmd_bounds->add_option("--seed", bseed, "sampler seed");
    cmd_bounds->add_option("--threads", threads, "sampler threads (0 = hardware)");
    cmd_bounds->add_flag("--json", bounds_json, "emit JSON");

    // verify-gates
    auto* cmd_verify = app.add_subcommand("verify-gates", "check every gate identity and rewrite");
    bool verify_json = false, inject_error = false;
    cmd_verify->add_flag("--json", verify_json, "emit JSON");
    cmd_verify->add_flag("--inject-cr-sign-error", inject_error,
                         "negative control: flip a sign and watch the check fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_exact->parsed()) {
            rcq::RunConfig cfg;
            cfg.mode = "exact";
            if (!exact_config.empty()) {
                cfg = rcq::read_run_config(exact_config);
                if (cfg.mode != "exact")
                    throw CLI::ValidationError("--config", "config mode is not \"exact\"");
            }
            if (cmd_exact->count("--native")) cfg.native = exact_native;
            if (cmd_exact->count("--out")) cfg.out_dir = exact_out;
            rcq::RunOptions opts;
            opts.native = cfg.native;
            if (!exact_perms.empty()) opts.etas = split_list(exact_perms);
            const rcq::WitnessResult result = rcq::evaluate_exact(opts);
            emit_result(result, kRealBound, {cfg.out_dir, exact_json}, nullptr, nullptr);
            if (!cfg.out_dir.empty())
                rcq::write_run_config(
                    (std::filesystem::path(cfg.out_dir) / "config.json").string(), cfg);
            return kExitOk;
        }
        if (cmd_sample->parsed()) {
            rcq::RunConfig cfg;
            if (!sample_config.empty()) {
                cfg = rcq::read_run_config(sample_config);
                if (cfg.mode != "sample")
                    throw CLI::ValidationError("--config", "config mode is not \"sample\"");
            }
            if (cmd_sample->count("--shots")) cfg.shots = shots;
            if (cmd_sample->count("--seed")) cfg.seed = seed;
            if (cmd_sample->count("--noise-2q")) cfg.noise_2q = noise_2q;
            if (cmd_sample->count("--noise-readout")) {
                const rcq::NoiseModel parsed = make_noise(0.0, noise_readout);
                cfg.noise_readout = parsed.readout_flip[0];
            }
            if (cmd_sample->count("--native")) cfg.native = sample_native;
            if (cmd_sample->count("--out")) cfg.out_dir = sample_out;
            rcq::RunOptions opts;
            opts.native = cfg.native;
            const rcq::SampledRun run =
                rcq::evaluate_sampled(cfg.shots, cfg.seed, cfg.noise_model(), opts);
            const rcq::NoSignalingReport audit = rcq::no_signaling_report(run.records);
            emit_result(run.result, kRealBound, {cfg.out_dir, sample_json}, &run.records, &audit);
            if (!cfg.out_dir.empty())
                rcq::write_run_config(
                    (std::filesystem::path(cfg.out_dir) / "config.json").string(), cfg);
            return run.result.F > kRealBound ? kExitOk : kExitBelowBound;
        }
        if (cmd_ingest->parsed()) {
            rcq::RunConfig cfg;
            cfg.mode = "ingest";
            if (!ingest_config.empty()) {
                cfg = rcq::read_run_config(ingest_config);
                if (cfg.mode != "ingest")
                    throw CLI::ValidationError("--config", "config mode is not \"ingest\"");
            }
            if (!ingest_path.empty()) cfg.counts_path = ingest_path;
            if (cmd_ingest->count("--out")) cfg.out_dir = ingest_out;
            if (cfg.counts_path.empty())
                throw CLI::ValidationError("ingest", "no counts file given (argument or config)");
            double bound = kRealBound;
            if (ingest_bound == "classical")
                bound = 12.0;
            else if (ingest_bound != "real")
                bound = std::stod(ingest_bound);
            const auto records = rcq::read_counts_file(cfg.counts_path);
            const rcq::WitnessResult result = rcq::evaluate_counts(records);
            const rcq::NoSignalingReport audit = rcq::no_signaling_report(records);
            emit_result(result, bound, {cfg.out_dir, ingest_json}, nullptr, &audit);
            if (!cfg.out_dir.empty())
                rcq::write_run_config(
                    (std::filesystem::path(cfg.out_dir) / "config.json").string(), cfg);
            return result.F > bound ? kExitOk : kExitBelowBound;
        }
        if (cmd_bounds->parsed()) {
            if (bounds_kind.empty() && cert_path.empty())
                throw CLI::ValidationError("bounds", "give a kind or --certificate");
            return run_bounds(bounds_kind, cert_path, t_str, x_str, trials, bseed, threads,
                              bounds_json);
        }
        if (cmd_verify->parsed()) return run_verify_gates(verify_json, inject_error);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
