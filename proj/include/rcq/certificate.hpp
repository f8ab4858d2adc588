#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rcq/ncpoly.hpp"

namespace rcq {

// Index patterns a square template can be swept over: a single instance, the
// three cyclic shifts of (i,j,k) = (1,2,3), or all six assignments.
enum class Sweep { none, cyclic, full };

// A word pattern over literal letters '1'..'3' and placeholders 'i','j','k'.
struct WordTemplate {
    std::string pattern;  // "" = identity

    BracketWord instantiate(int i, int j, int k) const;
};

struct SquareTemplate {
    Sweep sweep = Sweep::none;
    Coeff prefactor = Coeff(Rational(1));
    std::vector<std::pair<WordTemplate, Coeff>> terms;
};

struct SoSCertificate {
    std::string name;
    std::vector<SquareTemplate> squares;
};

struct BoundResult {
    bool valid = false;
    Coeff c0;  // identity coefficient of the expanded sum
    Coeff c1;  // shared linear coefficient of [1],[2],[3]
    std::optional<BracketWord> offending;  // first residual word outside the cancellable class
    std::string residual_class;            // letter patterns of surviving words, e.g. "ijk, ijiki"
    NCPolynomial residual;                 // all surviving words of length >= 2
    bool has_bound = false;
    Sqrt6 bound_exact;  // -6 c0 / c1 when computable
    double bound = std::numeric_limits<double>::quiet_NaN();
};

// A word's sign bookkeeping is outcome-independent and it cancels against its
// transpose under the opposite-parity permutation exactly when every letter
// appears an odd number of times and reversal induces an odd relabeling of
// the letters. `why` (optional) receives the failed condition.
bool is_cancellable_word(const BracketWord& w, std::string* why = nullptr);

// Expands the certificate (sum over sweeps of prefactor * square) with exact
// coefficients and classifies the outcome:
//   - every length-2 word must cancel,
//   - every surviving word of length >= 2 must be cancellable,
//   - [1],[2],[3] must share one coefficient c1.
// Throws on asymmetric linear coefficients or (for numeric certificates)
// c1 >= 0. The bound -6*c0/c1 is computed only when both coefficients are
// parameter-free; floating point enters nowhere else.
BoundResult check_certificate(const SoSCertificate& cert);

NCPolynomial expand_certificate(const SoSCertificate& cert);

// Substitutes rational parameter values into every coefficient.
SoSCertificate substitute(const SoSCertificate& cert, const Rational& t, const Rational& x);

// The two built-in certificates: the two-parameter quadratic family (symbolic
// in t and x) and the fixed cubic one.
SoSCertificate quadratic_certificate();
SoSCertificate cubic_certificate();

// Exact closed form 3(3 + x^2 + 6t^2 + 3/(2t^2))/(x + 1 - t^2); domain
// requires t != 0 and x + 1 - t^2 > 0.
Sqrt6 quadratic_closed_form(const Rational& t, const Rational& x);

// Declarative JSON form (round-trips through load):
// {"name": ..., "squares": [{"sweep": "none|cyclic|full", "prefactor": <coeff>,
//   "terms": [{"word": "iji", "coeff": "-1"}, ...]}, ...]}
SoSCertificate load_certificate(const std::string& path);
std::string certificate_to_json(const SoSCertificate& cert);

}  // namespace rcq
