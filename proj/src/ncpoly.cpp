#include "rcq/ncpoly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rcq {

double Sqrt6::to_double() const {
    return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(6.0);
}

Sqrt6 Sqrt6::inverse() const {
    // (a + b s)^-1 = (a - b s)/(a^2 - 6 b^2); the norm vanishes only at zero
    // since 6 is not a rational square.
    const Rational norm = a * a - 6 * b * b;
    if (norm == 0) throw std::domain_error("division by zero in Q(sqrt6)");
    return Sqrt6(a / norm, -b / norm);
}

void Coeff::add_term(const Monomial& m, const Sqrt6& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, v);
    if (!inserted) {
        it->second = it->second + v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Coeff::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Sqrt6 Coeff::constant_value() const {
    if (terms_.empty()) return Sqrt6();
    if (!is_constant())
        throw std::domain_error("coefficient still depends on a parameter: " + str());
    return terms_.begin()->second;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (base == 0) throw std::domain_error("t = 0 is outside the parameter domain");
        return 1 / rational_pow(base, -e);
    }
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Sqrt6 Coeff::evaluate(const Rational& t, const Rational& x) const {
    Sqrt6 sum;
    for (const auto& [mono, v] : terms_) {
        const Rational scale = rational_pow(t, mono.t_pow) * rational_pow(x, mono.x_pow);
        sum = sum + v * Sqrt6(scale);
    }
    return sum;
}

double Coeff::to_double() const { return constant_value().to_double(); }

Coeff Coeff::operator-() const {
    Coeff out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, -v);
    return out;
}

Coeff operator+(const Coeff& p, const Coeff& q) {
    Coeff out = p;
    for (const auto& [m, v] : q.terms_) out.add_term(m, v);
    return out;
}

Coeff operator-(const Coeff& p, const Coeff& q) { return p + (-q); }

Coeff operator*(const Coeff& p, const Coeff& q) {
    Coeff out;
    for (const auto& [mp, vp] : p.terms_)
        for (const auto& [mq, vq] : q.terms_)
            out.add_term({mp.t_pow + mq.t_pow, mp.x_pow + mq.x_pow}, vp * vq);
    return out;
}

std::string Coeff::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.a;
        if (v.b != 0) os << (v.b > 0 ? " + " : " - ") << abs(v.b) << "*sqrt6";
        os << ")";
        if (m.t_pow != 0) os << "*t^" << m.t_pow;
        if (m.x_pow != 0) os << "*x^" << m.x_pow;
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool consume_word(std::string_view w) {
        skip_space();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("coefficient literal: " + what + " at offset " +
                                    std::to_string(pos) + " in \"" + std::string(text) + "\"");
    }
    long long integer() {
        skip_space();
        bool neg = consume('-');
        if (!neg) consume('+');
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
};

// factor := integer[/integer] | "sqrt6" | "t"["^"int] | "x"["^"int]
// term   := factor { "*" factor }
// expr   := ["+"|"-"] term { ("+"|"-") term }
Coeff parse_term(Cursor& cur) {
    Sqrt6 value(1);
    int t_pow = 0, x_pow = 0;
    bool expect_factor = true;
    while (expect_factor) {
        if (cur.consume_word("sqrt6")) {
            value = value * Sqrt6::root();
        } else if (cur.consume_word("t")) {
            int e = 1;
            if (cur.consume('^')) e = static_cast<int>(cur.integer());
            t_pow += e;
        } else if (cur.consume_word("x")) {
            int e = 1;
            if (cur.consume('^')) e = static_cast<int>(cur.integer());
            if (e < 0) cur.fail("negative powers of x are not supported");
            x_pow += e;
        } else {
            const long long num = cur.integer();
            long long den = 1;
            if (cur.consume('/')) {
                den = cur.integer();
                if (den == 0) cur.fail("zero denominator");
            }
            value = value * Sqrt6(Rational(num, den));
        }
        expect_factor = cur.consume('*');
    }
    return Coeff::monomial(value, t_pow, x_pow);
}

}  // namespace

Coeff Coeff::parse(std::string_view text) {
    Cursor cur{text};
    Coeff out;
    bool first = true;
    while (!cur.done()) {
        bool negate = false;
        if (cur.consume('-'))
            negate = true;
        else if (!cur.consume('+') && !first)
            cur.fail("expected '+' or '-' between terms");
        Coeff term = parse_term(cur);
        out = negate ? out - term : out + term;
        first = false;
    }
    if (first) cur.fail("empty literal");
    return out;
}

BracketWord::BracketWord(std::vector<uint8_t> letters) {
    letters_.reserve(letters.size());
    for (uint8_t l : letters) {
        if (l < 1 || l > 3) throw std::invalid_argument("bracket letters must be 1..3");
        if (!letters_.empty() && letters_.back() == l)
            letters_.pop_back();  // [.. i i ..] = [.. ..]
        else
            letters_.push_back(l);
    }
}

BracketWord BracketWord::parse(std::string_view digits) {
    std::vector<uint8_t> ls;
    for (char c : digits) {
        if (c < '1' || c > '3') throw std::invalid_argument("bracket word digits must be 1..3");
        ls.push_back(static_cast<uint8_t>(c - '0'));
    }
    return BracketWord(std::move(ls));
}

BracketWord BracketWord::reversed() const {
    std::vector<uint8_t> ls(letters_.rbegin(), letters_.rend());
    BracketWord w;
    w.letters_ = std::move(ls);  // a reduced word stays reduced under reversal
    return w;
}

BracketWord operator*(const BracketWord& u, const BracketWord& v) {
    std::vector<uint8_t> ls = u.letters_;
    for (uint8_t l : v.letters_) {
        if (!ls.empty() && ls.back() == l)
            ls.pop_back();
        else
            ls.push_back(l);
    }
    BracketWord w;
    w.letters_ = std::move(ls);
    return w;
}

std::string BracketWord::str() const {
    std::string s = "[";
    for (uint8_t l : letters_) s += static_cast<char>('0' + l);
    s += "]";
    return s;
}

NCPolynomial NCPolynomial::term(const BracketWord& w, const Coeff& c) {
    NCPolynomial p;
    p.add(w, c);
    return p;
}

void NCPolynomial::add(const BracketWord& w, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Coeff NCPolynomial::coefficient(const BracketWord& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? Coeff() : it->second;
}

NCPolynomial operator+(const NCPolynomial& p, const NCPolynomial& q) {
    NCPolynomial out = p;
    for (const auto& [w, c] : q.terms()) out.add(w, c);
    return out;
}

NCPolynomial operator-(const NCPolynomial& p, const NCPolynomial& q) {
    NCPolynomial out = p;
    for (const auto& [w, c] : q.terms()) out.add(w, -c);
    return out;
}

NCPolynomial NCPolynomial::transposed() const {
    NCPolynomial out;
    for (const auto& [w, c] : terms_) out.add(w.reversed(), c);
    return out;
}

std::string NCPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")" << w.str();
    }
    return os.str();
}

NCPolynomial nc_multiply(const NCPolynomial& p, const NCPolynomial& q) {
    NCPolynomial out;
    for (const auto& [wp, cp] : p.terms())
        for (const auto& [wq, cq] : q.terms()) out.add(wp * wq, cp * cq);
    return out;
}

NCPolynomial expand_square(const NCPolynomial& e) { return nc_multiply(e.transposed(), e); }

}  // namespace rcq
