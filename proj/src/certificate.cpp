#include "rcq/certificate.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rcq {

BracketWord WordTemplate::instantiate(int i, int j, int k) const {
    std::vector<uint8_t> letters;
    letters.reserve(pattern.size());
    for (char c : pattern) {
        switch (c) {
            case '1':
            case '2':
            case '3': letters.push_back(static_cast<uint8_t>(c - '0')); break;
            case 'i': letters.push_back(static_cast<uint8_t>(i)); break;
            case 'j': letters.push_back(static_cast<uint8_t>(j)); break;
            case 'k': letters.push_back(static_cast<uint8_t>(k)); break;
            default:
                throw std::invalid_argument(std::string("word pattern letter '") + c +
                                            "' (want 1-3 or i,j,k)");
        }
    }
    return BracketWord(std::move(letters));
}

namespace {

const std::vector<std::array<int, 3>>& sweep_assignments(Sweep s) {
    static const std::vector<std::array<int, 3>> kNone = {{1, 2, 3}};
    static const std::vector<std::array<int, 3>> kCyclic = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    static const std::vector<std::array<int, 3>> kFull = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2},
                                                          {3, 2, 1}, {1, 3, 2}, {2, 1, 3}};
    switch (s) {
        case Sweep::none: return kNone;
        case Sweep::cyclic: return kCyclic;
        case Sweep::full: return kFull;
    }
    throw std::logic_error("bad sweep");
}

// First-occurrence relabeling of the letters: [213] and [123] both read "ijk".
std::string word_shape(const BracketWord& w) {
    std::string shape;
    char next = 'i';
    char assigned[4] = {0, 0, 0, 0};
    for (uint8_t l : w.letters()) {
        if (!assigned[l]) assigned[l] = next++;
        shape += assigned[l];
    }
    return shape;
}

}  // namespace

bool is_cancellable_word(const BracketWord& w, std::string* why) {
    const auto& ls = w.letters();
    int mult[4] = {0, 0, 0, 0};
    for (uint8_t l : ls) ++mult[l];
    for (int letter = 1; letter <= 3; ++letter) {
        if (mult[letter] % 2 == 0) {
            // Covers absent letters too: an even count makes the sign factor
            // depend on the measured outcome.
            if (why) *why = w.str() + ": letter " + std::to_string(letter) + " has even multiplicity";
            return false;
        }
    }
    // Reversal must act on the letters as a single odd permutation, otherwise
    // the word does not pair with its own transpose across opposite-parity
    // settings.
    const size_t n = ls.size();
    int perm[4] = {0, 0, 0, 0};
    for (size_t pos = 0; pos < n; ++pos) {
        const int from = ls[pos];
        const int to = ls[n - 1 - pos];
        if (perm[from] == 0)
            perm[from] = to;
        else if (perm[from] != to) {
            if (why) *why = w.str() + ": reversal does not induce a letter permutation";
            return false;
        }
    }
    bool hit[4] = {false, false, false, false};
    for (int letter = 1; letter <= 3; ++letter) hit[perm[letter]] = true;
    if (!(hit[1] && hit[2] && hit[3])) {
        if (why) *why = w.str() + ": reversal letter map is not a bijection";
        return false;
    }
    int inversions = 0;
    for (int p = 1; p <= 3; ++p)
        for (int q = p + 1; q <= 3; ++q)
            if (perm[p] > perm[q]) ++inversions;
    if (inversions % 2 == 0) {
        if (why) *why = w.str() + ": reversal letter permutation is even";
        return false;
    }
    return true;
}

NCPolynomial expand_certificate(const SoSCertificate& cert) {
    NCPolynomial total;
    for (const SquareTemplate& sq : cert.squares) {
        for (const auto& [i, j, k] : sweep_assignments(sq.sweep)) {
            NCPolynomial expr;
            for (const auto& [word, coeff] : sq.terms) expr.add(word.instantiate(i, j, k), coeff);
            NCPolynomial square = expand_square(expr);
            NCPolynomial scaled;
            for (const auto& [w, c] : square.terms()) scaled.add(w, c * sq.prefactor);
            total = total + scaled;
        }
    }
    return total;
}

BoundResult check_certificate(const SoSCertificate& cert) {
    const NCPolynomial expansion = expand_certificate(cert);

    BoundResult res;
    res.c0 = expansion.coefficient(BracketWord());
    const Coeff c1 = expansion.coefficient(BracketWord::parse("1"));
    for (const char* digits : {"2", "3"}) {
        if (!(expansion.coefficient(BracketWord::parse(digits)) == c1))
            throw std::invalid_argument(
                "certificate is asymmetric: linear coefficients of [1],[2],[3] differ");
    }
    res.c1 = c1;

    res.valid = true;
    const auto by_length = [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    };
    std::set<std::string, decltype(by_length)> shapes(by_length);
    for (const auto& [w, c] : expansion.terms()) {
        if (w.length() < 2) continue;
        if (w.length() == 2) {
            res.valid = false;
            if (!res.offending) res.offending = w;
            continue;
        }
        res.residual.add(w, c);
        std::string why;
        if (!is_cancellable_word(w, &why)) {
            res.valid = false;
            if (!res.offending) res.offending = w;
            continue;
        }
        shapes.insert(word_shape(w));
    }
    {
        std::ostringstream os;
        bool first = true;
        for (const std::string& s : shapes) {
            if (!first) os << ", ";
            os << s;
            first = false;
        }
        res.residual_class = os.str();
    }

    if (res.valid && res.c0.is_constant() && res.c1.is_constant()) {
        const Sqrt6 c1v = res.c1.constant_value();
        // Exact sign of a + b*sqrt6.
        auto sign_of = [](const Sqrt6& v) -> int {
            const int sa = v.a == 0 ? 0 : (v.a > 0 ? 1 : -1);
            const int sb = v.b == 0 ? 0 : (v.b > 0 ? 1 : -1);
            if (sa == sb || sb == 0) return sa;
            if (sa == 0) return sb;
            return v.a * v.a > 6 * v.b * v.b ? sa : sb;
        };
        if (sign_of(c1v) >= 0)
            throw std::invalid_argument("certificate implies no bound: linear coefficient is not negative");
        res.bound_exact = Sqrt6(Rational(-6)) * res.c0.constant_value() * c1v.inverse();
        res.bound = res.bound_exact.to_double();
        res.has_bound = true;
    }
    return res;
}

SoSCertificate substitute(const SoSCertificate& cert, const Rational& t, const Rational& x) {
    SoSCertificate out;
    out.name = cert.name;
    for (const SquareTemplate& sq : cert.squares) {
        SquareTemplate s;
        s.sweep = sq.sweep;
        s.prefactor = Coeff(sq.prefactor.evaluate(t, x));
        for (const auto& [w, c] : sq.terms) s.terms.emplace_back(w, Coeff(c.evaluate(t, x)));
        out.squares.push_back(std::move(s));
    }
    return out;
}

SoSCertificate quadratic_certificate() {
    SoSCertificate cert;
    cert.name = "quadratic";
    SquareTemplate head;
    head.sweep = Sweep::none;
    head.terms = {
        {WordTemplate{""}, Coeff::parse("x")},
        {WordTemplate{"1"}, Coeff::parse("-1")},
        {WordTemplate{"2"}, Coeff::parse("-1")},
        {WordTemplate{"3"}, Coeff::parse("-1")},
    };
    cert.squares.push_back(head);
    SquareTemplate cyc;
    cyc.sweep = Sweep::cyclic;
    cyc.terms = {
        {WordTemplate{""}, Coeff::parse("t")},
        {WordTemplate{"j"}, Coeff::parse("t")},
        {WordTemplate{"i"}, Coeff::parse("-1/2*t^-1")},
        {WordTemplate{"jk"}, Coeff::parse("-1/2*t^-1")},
    };
    cert.squares.push_back(cyc);
    return cert;
}

SoSCertificate cubic_certificate() {
    SoSCertificate cert;
    cert.name = "cubic";

    SquareTemplate head;
    head.sweep = Sweep::none;
    head.prefactor = Coeff::parse("1/11");
    head.terms = {
        {WordTemplate{""}, Coeff::parse("sqrt6")},
        {WordTemplate{"1"}, Coeff::parse("-1")},
        {WordTemplate{"2"}, Coeff::parse("-1")},
        {WordTemplate{"3"}, Coeff::parse("-1")},
    };
    cert.squares.push_back(head);

    // 2^5 3^3 = 864; the first cyclic square carries an extra 1/11.
    SquareTemplate big;
    big.sweep = Sweep::cyclic;
    big.prefactor = Coeff::parse("1/9504");
    big.terms = {
        {WordTemplate{""}, Coeff::parse("36")},
        {WordTemplate{"i"}, Coeff::parse("-14*sqrt6")},
        {WordTemplate{"ij"}, Coeff::parse("3")},
        {WordTemplate{"ik"}, Coeff::parse("3")},
        {WordTemplate{"kj"}, Coeff::parse("-11")},
        {WordTemplate{"jk"}, Coeff::parse("-11")},
    };
    cert.squares.push_back(big);

    SquareTemplate comm;
    comm.sweep = Sweep::cyclic;
    comm.prefactor = Coeff::parse("3/864");
    comm.terms = {
        {WordTemplate{"ij"}, Coeff::parse("1")},
        {WordTemplate{"ik"}, Coeff::parse("-1")},
        {WordTemplate{"kj"}, Coeff::parse("1")},
        {WordTemplate{"jk"}, Coeff::parse("-1")},
    };
    cert.squares.push_back(comm);

    // 2^4 3^3 = 432, swept over all six assignments.
    SquareTemplate tail;
    tail.sweep = Sweep::full;
    tail.prefactor = Coeff::parse("1/432");
    tail.terms = {
        {WordTemplate{"ki"}, Coeff::parse("sqrt6")},
        {WordTemplate{"iji"}, Coeff::parse("-1")},
        {WordTemplate{"k"}, Coeff::parse("-3")},
        {WordTemplate{"j"}, Coeff::parse("2")},
    };
    cert.squares.push_back(tail);
    return cert;
}

Sqrt6 quadratic_closed_form(const Rational& t, const Rational& x) {
    if (t == 0) throw std::domain_error("closed form needs t != 0");
    const Rational t2 = t * t;
    const Rational denom = x + 1 - t2;
    if (denom <= 0) throw std::domain_error("closed form needs x + 1 - t^2 > 0");
    const Rational num = 3 + x * x + 6 * t2 + Rational(3) / (2 * t2);
    return Sqrt6(3 * num / denom);
}

namespace {

Sweep sweep_from_string(const std::string& s) {
    if (s == "none") return Sweep::none;
    if (s == "cyclic") return Sweep::cyclic;
    if (s == "full") return Sweep::full;
    throw std::invalid_argument("certificate: sweep must be none, cyclic or full, got \"" + s + "\"");
}

const char* sweep_to_string(Sweep s) {
    switch (s) {
        case Sweep::none: return "none";
        case Sweep::cyclic: return "cyclic";
        case Sweep::full: return "full";
    }
    return "?";
}

std::string coeff_literal(const Coeff& c) {
    // Emit in the grammar parse() accepts.
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : c.terms()) {
        for (int part = 0; part < 2; ++part) {
            const Rational& r = part == 0 ? v.a : v.b;
            if (r == 0) continue;
            if (!first) os << (r > 0 ? " + " : " - ");
            else if (r < 0) os << "-";
            first = false;
            os << abs(numerator(r));
            if (denominator(r) != 1) os << "/" << abs(denominator(r));
            if (part == 1) os << "*sqrt6";
            if (m.t_pow != 0) os << "*t^" << m.t_pow;
            if (m.x_pow != 0) os << "*x^" << m.x_pow;
        }
    }
    return os.str();
}

}  // namespace

SoSCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open certificate file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("certificate file " + path + ": " + e.what());
    }
    SoSCertificate cert;
    cert.name = doc.value("name", "unnamed");
    if (!doc.contains("squares") || !doc["squares"].is_array())
        throw std::invalid_argument("certificate file " + path + ": missing \"squares\" array");
    size_t idx = 0;
    for (const auto& sq : doc["squares"]) {
        SquareTemplate tmpl;
        try {
            tmpl.sweep = sweep_from_string(sq.value("sweep", "none"));
            tmpl.prefactor = Coeff::parse(sq.value("prefactor", "1"));
            if (!sq.contains("terms") || !sq["terms"].is_array() || sq["terms"].empty())
                throw std::invalid_argument("square needs a nonempty \"terms\" array");
            for (const auto& term : sq["terms"]) {
                WordTemplate w{term.at("word").get<std::string>()};
                tmpl.terms.emplace_back(w, Coeff::parse(term.at("coeff").get<std::string>()));
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("certificate file " + path + ": square #" +
                                        std::to_string(idx) + ": " + e.what());
        }
        cert.squares.push_back(std::move(tmpl));
        ++idx;
    }
    return cert;
}

std::string certificate_to_json(const SoSCertificate& cert) {
    nlohmann::json doc;
    doc["name"] = cert.name;
    doc["squares"] = nlohmann::json::array();
    for (const SquareTemplate& sq : cert.squares) {
        nlohmann::json j;
        j["sweep"] = sweep_to_string(sq.sweep);
        j["prefactor"] = coeff_literal(sq.prefactor);
        j["terms"] = nlohmann::json::array();
        for (const auto& [w, c] : sq.terms)
            j["terms"].push_back({{"word", w.pattern}, {"coeff", coeff_literal(c)}});
        doc["squares"].push_back(std::move(j));
    }
    return doc.dump(2);
}

}  // namespace rcq
