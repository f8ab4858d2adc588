#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcq/simulate.hpp"

namespace rcq {

struct Permutation {
    std::array<int, 3> images{1, 2, 3};  // images[i-1] = eta(i)

    static Permutation from_digits(std::string_view digits);
    static const std::array<Permutation, 6>& all();  // canonical enumeration order

    int operator()(int i) const { return images[static_cast<size_t>(i - 1)]; }
    int inverse(int j) const;
    int sign() const;  // +1 for even, -1 for odd
    std::string digits() const;
    bool operator==(const Permutation& o) const { return images == o.images; }
};

// One measurement context. Witness evaluation uses the 18 tuples with
// x = eta(z); arbitrary tuples remain constructible for marginal audits.
struct SettingTuple {
    int x = 1;
    Permutation eta;
    int z = 1;

    static SettingTuple witness_setting(const Permutation& eta, int z);
    bool is_witness_setting() const { return x == eta(z); }
    std::string label() const;
    bool operator==(const SettingTuple& o) const { return x == o.x && eta == o.eta && z == o.z; }
};

// The 18 witness contexts in canonical order (eta-major, then z).
const std::vector<SettingTuple>& witness_settings();

// Sign factor sgn(eta) * (-1)^{[z==b] + [b==0]}.
int term_sign(const Permutation& eta, int z, int b);

// Outcome relabeling: measured P,Q bits (pq = 2*p + q) -> witness outcome b.
int outcome_map(const Permutation& eta, int pq);

// Same table derived from the outcome-multiplication rule instead of stated
// directly; used as a consistency cross-check.
int outcome_map_derived(const Permutation& eta, int pq);

struct CorrelationTerm {
    SettingTuple setting;
    int b = 0;
    double signed_value = 0.0;
    double raw_correlation = 0.0;  // <A B_b C> before the sign factor
};

struct WitnessResult {
    double F = 0.0;
    std::vector<CorrelationTerm> terms;         // 72 entries
    std::array<double, 18> partials{};          // per-setting sums without the eta sign
    double sigma = 0.0;                          // 0 when exact
    std::optional<uint64_t> shots_per_setting;   // nullopt = exact amplitudes
};

// Four terms (b = 0..3) for one setting, from outcome weights in a,p,q,c bit
// order. Weights may be exact probabilities or count fractions.
std::array<CorrelationTerm, 4> correlations(const std::array<double, 16>& weights,
                                            const SettingTuple& setting);
std::array<CorrelationTerm, 4> correlations(const Distribution& dist, const SettingTuple& setting);
std::array<CorrelationTerm, 4> correlations(const CountsRecord& counts, const SettingTuple& setting);

// Sums exactly the 18 witness settings x 4 outcomes; throws on missing or
// duplicated (setting, b) pairs. sigma is left at 0.
WitnessResult witness_value(const std::vector<CorrelationTerm>& terms);

// sqrt(sum (1 - F_partial^2) / shots). Partials must lie in [-1, 1].
double error_estimate(const std::array<double, 18>& partials, uint64_t shots_per_setting);

struct RunOptions {
    bool native = false;                // rewrite circuits into the native basis
    std::vector<std::string> etas;      // empty = all six permutations
};

// The measurement circuit for one context.
Circuit build_witness_circuit(const SettingTuple& setting, bool native = false);

// Full evaluation from exact amplitudes.
WitnessResult evaluate_exact(const RunOptions& opts = {});

struct SampledRun {
    WitnessResult result;
    std::vector<CountsRecord> records;
};

// Shot-based evaluation; per-setting counts are independent substreams of the
// master seed, so the result is reproducible under any execution order.
SampledRun evaluate_sampled(uint64_t shots, uint64_t seed, const NoiseModel& noise = {},
                            const RunOptions& opts = {});

// Witness evaluation from externally supplied counts (all 18 settings).
WitnessResult evaluate_counts(const std::vector<CountsRecord>& records);

struct MarginalComparison {
    char party = 'A';                // 'A', 'B' (joint P,Q outcome) or 'C'
    std::string own_setting;         // the setting kept fixed
    SettingTuple context_a, context_b;
    double tv = 0.0;                 // total variation between the marginals
    double tolerance = 0.0;          // 0 for exact inputs
    bool within = true;
};

struct NoSignalingReport {
    std::vector<MarginalComparison> comparisons;
    bool all_within = true;
};

// Compares each party's outcome marginal across contexts that share that
// party's own setting. Tolerance is a pooled binomial 3-sigma band per
// comparison; exact distributions (shots = 0) get tolerance 1e-12.
NoSignalingReport no_signaling_report(const std::vector<CountsRecord>& records);
NoSignalingReport no_signaling_report_exact(
    const std::vector<std::pair<SettingTuple, Distribution>>& contexts);

}  // namespace rcq
