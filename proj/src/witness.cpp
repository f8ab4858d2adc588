#include "rcq/witness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rcq/transpile.hpp"

namespace rcq {

Permutation Permutation::from_digits(std::string_view digits) {
    if (digits.size() != 3) throw std::invalid_argument("permutation needs exactly 3 digits");
    Permutation eta;
    bool seen[4] = {};
    for (int i = 0; i < 3; ++i) {
        const char ch = digits[static_cast<size_t>(i)];
        if (ch < '1' || ch > '3') throw std::invalid_argument("permutation digits must be 1..3");
        const int v = ch - '0';
        if (seen[v]) throw std::invalid_argument("permutation digits must be distinct");
        seen[v] = true;
        eta.images[static_cast<size_t>(i)] = v;
    }
    return eta;
}

const std::array<Permutation, 6>& Permutation::all() {
    static const std::array<Permutation, 6> kAll = {
        Permutation::from_digits("123"), Permutation::from_digits("231"),
        Permutation::from_digits("312"), Permutation::from_digits("132"),
        Permutation::from_digits("213"), Permutation::from_digits("321"),
    };
    return kAll;
}

int Permutation::inverse(int j) const {
    for (int i = 1; i <= 3; ++i)
        if ((*this)(i) == j) return i;
    throw std::logic_error("permutation image lookup failed");
}

int Permutation::sign() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (images[static_cast<size_t>(i)] > images[static_cast<size_t>(j)]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::string Permutation::digits() const {
    std::string s(3, '0');
    for (int i = 0; i < 3; ++i) s[static_cast<size_t>(i)] = static_cast<char>('0' + images[static_cast<size_t>(i)]);
    return s;
}

SettingTuple SettingTuple::witness_setting(const Permutation& eta, int z) {
    if (z < 1 || z > 3) throw std::invalid_argument("z setting must be 1..3");
    return SettingTuple{eta(z), eta, z};
}

std::string SettingTuple::label() const {
    std::ostringstream os;
    os << "(x=" << x << ", eta=" << eta.digits() << ", z=" << z << ")";
    return os.str();
}

const std::vector<SettingTuple>& witness_settings() {
    static const std::vector<SettingTuple> kSettings = [] {
        std::vector<SettingTuple> s;
        for (const Permutation& eta : Permutation::all())
            for (int z = 1; z <= 3; ++z) s.push_back(SettingTuple::witness_setting(eta, z));
        return s;
    }();
    return kSettings;
}

int term_sign(const Permutation& eta, int z, int b) {
    if (z < 1 || z > 3 || b < 0 || b > 3) throw std::invalid_argument("term_sign: bad z or b");
    const int exponent = (b == z ? 1 : 0) + (b == 0 ? 1 : 0);
    return eta.sign() * (exponent % 2 == 0 ? 1 : -1);
}

namespace {

// Rows keyed by the canonical permutation order; columns by pq = 2p + q.
constexpr int kOutcomeTable[6][4] = {
    {2, 1, 3, 0},  // 123
    {3, 0, 2, 1},  // 231
    {0, 3, 1, 2},  // 312
    {0, 3, 1, 2},  // 132
    {0, 3, 1, 2},  // 213
    {1, 2, 0, 3},  // 321
};

int eta_index(const Permutation& eta) {
    const auto& all = Permutation::all();
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == eta) return static_cast<int>(i);
    throw std::logic_error("permutation not in canonical list");
}

}  // namespace

int outcome_map(const Permutation& eta, int pq) {
    if (pq < 0 || pq > 3) throw std::invalid_argument("outcome_map: pq must be 0..3");
    return kOutcomeTable[eta_index(eta)][pq];
}

int outcome_map_derived(const Permutation& eta, int pq) {
    if (pq < 0 || pq > 3) throw std::invalid_argument("outcome_map_derived: pq must be 0..3");
    // Identity row, then relabel outcomes through the Pauli multiplication
    // rule for the remaining settings: Z swaps (01)(23), Y swaps (02)(13),
    // X swaps (03)(12).
    constexpr int kIdentityRow[4] = {2, 1, 3, 0};
    constexpr int kZPerm[4] = {1, 0, 3, 2};
    constexpr int kYPerm[4] = {2, 3, 0, 1};
    constexpr int kXPerm[4] = {3, 2, 1, 0};
    const int base = kIdentityRow[pq];
    switch (eta_index(eta)) {
        case 0: return base;         // 123
        case 1: return kZPerm[base]; // 231
        case 2: return kYPerm[base]; // 312
        case 3: return kYPerm[base]; // 132
        case 4: return kYPerm[base]; // 213
        case 5: return kXPerm[base]; // 321
    }
    throw std::logic_error("unreachable");
}

std::array<CorrelationTerm, 4> correlations(const std::array<double, 16>& weights,
                                            const SettingTuple& setting) {
    std::array<double, 4> raw{};
    for (int s = 0; s < 16; ++s) {
        const int a = (s >> 3) & 1;
        const int p = (s >> 2) & 1;
        const int q = (s >> 1) & 1;
        const int c = s & 1;
        const int b = outcome_map(setting.eta, 2 * p + q);
        const double ac = ((a + c) % 2 == 0) ? 1.0 : -1.0;
        raw[static_cast<size_t>(b)] += ac * weights[static_cast<size_t>(s)];
    }
    std::array<CorrelationTerm, 4> terms;
    for (int b = 0; b < 4; ++b) {
        terms[static_cast<size_t>(b)].setting = setting;
        terms[static_cast<size_t>(b)].b = b;
        terms[static_cast<size_t>(b)].raw_correlation = raw[static_cast<size_t>(b)];
        terms[static_cast<size_t>(b)].signed_value =
            term_sign(setting.eta, setting.z, b) * raw[static_cast<size_t>(b)];
    }
    return terms;
}

std::array<CorrelationTerm, 4> correlations(const Distribution& dist, const SettingTuple& setting) {
    return correlations(dist.p, setting);
}

std::array<CorrelationTerm, 4> correlations(const CountsRecord& counts, const SettingTuple& setting) {
    return correlations(counts.fractions(), setting);
}

namespace {

int setting_index(const SettingTuple& s) {
    const auto& all = witness_settings();
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == s) return static_cast<int>(i);
    return -1;
}

WitnessResult assemble(const std::vector<CorrelationTerm>& terms,
                       const std::vector<int>& included_settings) {
    std::map<std::pair<int, int>, const CorrelationTerm*> seen;
    for (const CorrelationTerm& t : terms) {
        const int idx = setting_index(t.setting);
        if (idx < 0)
            throw std::invalid_argument("term outside the witness settings: " + t.setting.label());
        const auto key = std::make_pair(idx, t.b);
        if (!seen.emplace(key, &t).second)
            throw std::invalid_argument("duplicate term for " + t.setting.label() + " b=" +
                                        std::to_string(t.b));
    }
    WitnessResult res;
    for (int idx : included_settings) {
        const SettingTuple& s = witness_settings()[static_cast<size_t>(idx)];
        double partial = 0.0;
        for (int b = 0; b < 4; ++b) {
            const auto it = seen.find({idx, b});
            if (it == seen.end())
                throw std::invalid_argument("missing term for " + s.label() + " b=" +
                                            std::to_string(b));
            res.terms.push_back(*it->second);
            res.F += it->second->signed_value;
            partial += it->second->signed_value;
        }
        // The partial sum drops the global permutation sign.
        res.partials[static_cast<size_t>(idx)] = partial * s.eta.sign();
    }
    if (seen.size() != included_settings.size() * 4)
        throw std::invalid_argument("terms cover settings outside the requested run");
    return res;
}

std::vector<int> requested_settings(const RunOptions& opts) {
    std::vector<int> idx;
    std::vector<Permutation> etas;
    if (opts.etas.empty()) {
        etas.assign(Permutation::all().begin(), Permutation::all().end());
    } else {
        for (const std::string& d : opts.etas) etas.push_back(Permutation::from_digits(d));
    }
    for (const Permutation& eta : etas)
        for (int z = 1; z <= 3; ++z)
            idx.push_back(setting_index(SettingTuple::witness_setting(eta, z)));
    return idx;
}

}  // namespace

WitnessResult witness_value(const std::vector<CorrelationTerm>& terms) {
    if (terms.size() != 72)
        throw std::invalid_argument("witness_value expects exactly 72 terms, got " +
                                    std::to_string(terms.size()));
    std::vector<int> all18(18);
    for (int i = 0; i < 18; ++i) all18[static_cast<size_t>(i)] = i;
    return assemble(terms, all18);
}

double error_estimate(const std::array<double, 18>& partials, uint64_t shots_per_setting) {
    if (shots_per_setting == 0) throw std::invalid_argument("error_estimate: shots must be >= 1");
    double var = 0.0;
    for (double f : partials) {
        if (std::abs(f) > 1.0 + 1e-9)
            throw std::invalid_argument("error_estimate: partial witness value outside [-1,1]");
        var += (1.0 - f * f) / static_cast<double>(shots_per_setting);
    }
    return std::sqrt(std::max(var, 0.0));
}

Circuit build_witness_circuit(const SettingTuple& setting, bool native) {
    if (setting.z < 1 || setting.z > 3 || setting.x < 1 || setting.x > 3)
        throw std::invalid_argument("settings x and z must be in 1..3");
    Circuit c;
    // Entangling layer.
    c.push(GateOp::one_q(GateKind::YMinus, Wire::A));
    c.push(GateOp::one_q(GateKind::YMinus, Wire::C));
    c.push(GateOp::two_q(GateKind::CnotDown, Wire::A, Wire::P));
    c.push(GateOp::two_q(GateKind::CnotDown, Wire::C, Wire::Q));
    // Local basis rotations; setting 1 measures Z directly.
    auto push_u = [&c](int setting_value, Wire w) {
        if (setting_value == 2) {
            c.push(GateOp::one_q(GateKind::XHalf, w));
        } else if (setting_value == 3) {
            c.push(GateOp::one_q(GateKind::ZPlus, w));
            c.push(GateOp::one_q(GateKind::XHalf, w));
        }
    };
    push_u(setting.x, Wire::A);
    push_u(setting.z, Wire::C);
    // Joint measurement basis on P,Q.
    for (const GateOp& op : g_eta(setting.eta.digits())) c.push(op);
    c.push(GateOp::two_q(GateKind::CnotDown, Wire::P, Wire::Q));
    c.push(GateOp::one_q(GateKind::YMinus, Wire::P));
    return native ? to_native(c) : c;
}

WitnessResult evaluate_exact(const RunOptions& opts) {
    std::vector<CorrelationTerm> terms;
    const std::vector<int> included = requested_settings(opts);
    for (int idx : included) {
        const SettingTuple& s = witness_settings()[static_cast<size_t>(idx)];
        const Distribution d = exact_distribution(build_witness_circuit(s, opts.native));
        for (const CorrelationTerm& t : correlations(d, s)) terms.push_back(t);
    }
    WitnessResult res = assemble(terms, included);
    res.shots_per_setting.reset();
    res.sigma = 0.0;
    return res;
}

SampledRun evaluate_sampled(uint64_t shots, uint64_t seed, const NoiseModel& noise,
                            const RunOptions& opts) {
    if (shots == 0) throw std::invalid_argument("evaluate_sampled: shots must be >= 1");
    SampledRun run;
    std::vector<CorrelationTerm> terms;
    const std::vector<int> included = requested_settings(opts);
    for (int idx : included) {
        const SettingTuple& s = witness_settings()[static_cast<size_t>(idx)];
        CountsRecord rec = sample(build_witness_circuit(s, opts.native), shots, seed, noise);
        rec.x = s.x;
        rec.eta = s.eta.digits();
        rec.z = s.z;
        for (const CorrelationTerm& t : correlations(rec, s)) terms.push_back(t);
        run.records.push_back(std::move(rec));
    }
    run.result = assemble(terms, included);
    run.result.shots_per_setting = shots;
    double var = 0.0;
    for (int idx : included) {
        const double f = run.result.partials[static_cast<size_t>(idx)];
        var += (1.0 - f * f) / static_cast<double>(shots);
    }
    run.result.sigma = std::sqrt(std::max(var, 0.0));
    return run;
}

WitnessResult evaluate_counts(const std::vector<CountsRecord>& records) {
    std::vector<CorrelationTerm> terms;
    std::vector<int> included;
    double var = 0.0;
    bool uniform_shots = true;
    uint64_t shots0 = 0;
    for (const CountsRecord& rec : records) {
        const SettingTuple s{rec.x, Permutation::from_digits(rec.eta), rec.z};
        if (!s.is_witness_setting())
            throw std::invalid_argument("record " + s.label() + " violates x = eta(z)");
        const uint64_t n = rec.total();
        if (n == 0) throw std::invalid_argument("record " + s.label() + " has zero counts");
        const auto four = correlations(rec, s);
        double partial = 0.0;
        for (const CorrelationTerm& t : four) {
            terms.push_back(t);
            partial += t.signed_value;
        }
        partial *= s.eta.sign();
        var += (1.0 - partial * partial) / static_cast<double>(n);
        included.push_back(setting_index(s));
        if (shots0 == 0)
            shots0 = n;
        else if (n != shots0)
            uniform_shots = false;
    }
    std::vector<int> sorted = included;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != 18 || std::unique(sorted.begin(), sorted.end()) != sorted.end()) {
        for (int i = 0; i < 18; ++i) {
            if (std::find(included.begin(), included.end(), i) == included.end())
                throw std::invalid_argument("missing setting " +
                                            witness_settings()[static_cast<size_t>(i)].label());
        }
        throw std::invalid_argument("duplicate setting in counts");
    }
    WitnessResult res = assemble(terms, included);
    res.sigma = std::sqrt(std::max(var, 0.0));
    if (uniform_shots) res.shots_per_setting = shots0;
    return res;
}

namespace {

struct MarginalData {
    SettingTuple setting;
    std::vector<double> freq;  // normalized outcome frequencies
    uint64_t shots = 0;        // 0 marks exact input
};

MarginalComparison compare_pair(char party, const std::string& own, const MarginalData& a,
                                const MarginalData& b) {
    MarginalComparison cmp;
    cmp.party = party;
    cmp.own_setting = own;
    cmp.context_a = a.setting;
    cmp.context_b = b.setting;
    double tv = 0.0;
    double tol = 0.0;
    for (size_t i = 0; i < a.freq.size(); ++i) {
        tv += std::abs(a.freq[i] - b.freq[i]);
        if (a.shots > 0 && b.shots > 0) {
            const double pooled =
                (a.freq[i] * static_cast<double>(a.shots) + b.freq[i] * static_cast<double>(b.shots)) /
                static_cast<double>(a.shots + b.shots);
            const double var = pooled * (1.0 - pooled) *
                               (1.0 / static_cast<double>(a.shots) + 1.0 / static_cast<double>(b.shots));
            tol += 3.0 * std::sqrt(std::max(var, 0.0));
        }
    }
    cmp.tv = 0.5 * tv;
    cmp.tolerance = (a.shots > 0 && b.shots > 0) ? 0.5 * tol : 1e-12;
    cmp.within = cmp.tv <= cmp.tolerance;
    return cmp;
}

std::vector<double> party_marginal(char party, const std::array<double, 16>& w) {
    if (party == 'A' || party == 'C') {
        const int bit = party == 'A' ? 3 : 0;
        std::vector<double> f(2, 0.0);
        for (int s = 0; s < 16; ++s) f[static_cast<size_t>((s >> bit) & 1)] += w[static_cast<size_t>(s)];
        return f;
    }
    std::vector<double> f(4, 0.0);
    for (int s = 0; s < 16; ++s) f[static_cast<size_t>((s >> 1) & 3)] += w[static_cast<size_t>(s)];
    return f;
}

// shots[i] == 0 marks exact outcome weights for context i.
NoSignalingReport audit_contexts(const std::vector<std::pair<SettingTuple, std::array<double, 16>>>& ctx,
                                 const std::vector<uint64_t>& shots) {
    NoSignalingReport report;
    auto run_party = [&](char party, auto own_of) {
        std::map<std::string, std::vector<size_t>> groups;
        for (size_t i = 0; i < ctx.size(); ++i) groups[own_of(ctx[i].first)].push_back(i);
        int comparable = 0;
        for (const auto& [own, members] : groups) {
            if (members.size() >= 2) ++comparable;
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t j = i + 1; j < members.size(); ++j) {
                    MarginalData a{ctx[members[i]].first, party_marginal(party, ctx[members[i]].second),
                                   shots[members[i]]};
                    MarginalData b{ctx[members[j]].first, party_marginal(party, ctx[members[j]].second),
                                   shots[members[j]]};
                    report.comparisons.push_back(compare_pair(party, own, a, b));
                }
        }
        return comparable;
    };
    int comparable = 0;
    comparable += run_party('A', [](const SettingTuple& s) { return std::to_string(s.x); });
    comparable += run_party('B', [](const SettingTuple& s) { return s.eta.digits(); });
    comparable += run_party('C', [](const SettingTuple& s) { return std::to_string(s.z); });
    if (comparable == 0)
        throw std::invalid_argument("no-signaling audit needs at least two contexts sharing a setting");
    for (const MarginalComparison& c : report.comparisons)
        if (!c.within) report.all_within = false;
    return report;
}

}  // namespace

NoSignalingReport no_signaling_report(const std::vector<CountsRecord>& records) {
    std::vector<std::pair<SettingTuple, std::array<double, 16>>> ctx;
    std::vector<uint64_t> shots;
    for (const CountsRecord& rec : records) {
        ctx.emplace_back(SettingTuple{rec.x, Permutation::from_digits(rec.eta), rec.z},
                         rec.fractions());
        shots.push_back(rec.total());
    }
    return audit_contexts(ctx, shots);
}

NoSignalingReport no_signaling_report_exact(
    const std::vector<std::pair<SettingTuple, Distribution>>& contexts) {
    std::vector<std::pair<SettingTuple, std::array<double, 16>>> ctx;
    for (const auto& [s, d] : contexts) ctx.emplace_back(s, d.p);
    return audit_contexts(ctx, std::vector<uint64_t>(ctx.size(), 0));
}

}  // namespace rcq
