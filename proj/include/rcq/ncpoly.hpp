#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rcq {

using Rational = boost::multiprecision::cpp_rational;

// Element of Q(sqrt6): a + b*sqrt6 with exact rational parts.
struct Sqrt6 {
    Rational a;
    Rational b;

    Sqrt6() = default;
    Sqrt6(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    static Sqrt6 root() { return Sqrt6(0, 1); }

    bool is_zero() const { return a == 0 && b == 0; }
    double to_double() const;

    Sqrt6 operator-() const { return Sqrt6(-a, -b); }
    friend Sqrt6 operator+(const Sqrt6& x, const Sqrt6& y) { return Sqrt6(x.a + y.a, x.b + y.b); }
    friend Sqrt6 operator-(const Sqrt6& x, const Sqrt6& y) { return Sqrt6(x.a - y.a, x.b - y.b); }
    friend Sqrt6 operator*(const Sqrt6& x, const Sqrt6& y) {
        return Sqrt6(x.a * y.a + 6 * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    // Field inverse; throws on zero.
    Sqrt6 inverse() const;
    friend Sqrt6 operator/(const Sqrt6& x, const Sqrt6& y) { return x * y.inverse(); }
    friend bool operator==(const Sqrt6& x, const Sqrt6& y) { return x.a == y.a && x.b == y.b; }
};

// Exponents of the two certificate parameters: t may appear with negative
// powers, x only with nonnegative ones.
struct Monomial {
    int t_pow = 0;
    int x_pow = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Exact coefficient: a finite sum of Q(sqrt6) values over monomials in t, x.
class Coeff {
  public:
    Coeff() = default;
    Coeff(Rational r) { add_term({}, Sqrt6(std::move(r))); }          // NOLINT(google-explicit-constructor)
    Coeff(const Sqrt6& v) { add_term({}, v); }                        // NOLINT(google-explicit-constructor)
    static Coeff monomial(const Sqrt6& v, int t_pow, int x_pow = 0) {
        Coeff c;
        c.add_term({t_pow, x_pow}, v);
        return c;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant part; throws if a t or x power is present.
    Sqrt6 constant_value() const;
    Sqrt6 evaluate(const Rational& t, const Rational& x) const;
    double to_double() const;  // constants only

    Coeff operator-() const;
    friend Coeff operator+(const Coeff& p, const Coeff& q);
    friend Coeff operator-(const Coeff& p, const Coeff& q);
    friend Coeff operator*(const Coeff& p, const Coeff& q);
    friend bool operator==(const Coeff& p, const Coeff& q) { return p.terms_ == q.terms_; }

    const std::map<Monomial, Sqrt6>& terms() const { return terms_; }
    std::string str() const;

    // Literal syntax: sums of terms like "3", "-1/2", "sqrt6", "14*sqrt6",
    // "t^-1", "x^2", "1/11 * t * x". Whitespace is ignored.
    static Coeff parse(std::string_view text);

  private:
    void add_term(const Monomial& m, const Sqrt6& v);
    std::map<Monomial, Sqrt6> terms_;
};

// Product of involutive generators written as a reduced letter string over
// {1,2,3}: adjacent equal letters cancel pairwise, the empty word is the
// identity.
class BracketWord {
  public:
    BracketWord() = default;
    // Reduces the input; letters must be 1..3.
    explicit BracketWord(std::vector<uint8_t> letters);
    static BracketWord parse(std::string_view digits);  // "" = identity

    const std::vector<uint8_t>& letters() const { return letters_; }
    size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    BracketWord reversed() const;
    // Concatenation with boundary cancellation.
    friend BracketWord operator*(const BracketWord& u, const BracketWord& v);
    std::string str() const;  // "[121]", "[]" for identity

    friend auto operator<=>(const BracketWord& u, const BracketWord& v) {
        if (auto c = u.letters_.size() <=> v.letters_.size(); c != 0) return c;
        return u.letters_ <=> v.letters_;
    }
    friend bool operator==(const BracketWord&, const BracketWord&) = default;

  private:
    std::vector<uint8_t> letters_;
};

// Exact-coefficient polynomial over bracket words. Zero coefficients are
// never stored.
class NCPolynomial {
  public:
    NCPolynomial() = default;
    static NCPolynomial term(const BracketWord& w, const Coeff& c);

    void add(const BracketWord& w, const Coeff& c);
    const std::map<BracketWord, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coefficient(const BracketWord& w) const;

    friend NCPolynomial operator+(const NCPolynomial& p, const NCPolynomial& q);
    friend NCPolynomial operator-(const NCPolynomial& p, const NCPolynomial& q);
    friend bool operator==(const NCPolynomial& p, const NCPolynomial& q) {
        return p.terms_ == q.terms_;
    }

    // Transpose: every word reversed, coefficients unchanged.
    NCPolynomial transposed() const;
    std::string str() const;

  private:
    std::map<BracketWord, Coeff> terms_;
};

// Distributive product with word concatenation and reduction.
NCPolynomial nc_multiply(const NCPolynomial& p, const NCPolynomial& q);

// transpose(e) * e -- the square of a possibly nonsymmetric expression.
NCPolynomial expand_square(const NCPolynomial& e);

}  // namespace rcq
