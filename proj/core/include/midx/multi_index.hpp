#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "midx/rational.hpp"
#include "midx/variable.hpp"

namespace midx {

// Regularity parameter and negativity convention. The noise carries the
// homogeneity alpha_xi = -2 + delta/2; polynomial variables grade by the
// parabolic degree. In limit mode a multi-index with positive noise count
// counts as negative already at homogeneity 0, realizing the "delta minus"
// convention: the true homogeneity at delta - kappa sits strictly below by
// a multiple of kappa. delta = 1 is only meaningful in that reading, so it
// forces limit mode.
struct GradingContext {
  GradingContext(Rational delta, bool limit_mode);

  Rational delta;
  bool limit_mode;

  Rational alpha_xi() const;

  // Negativity test for a multi-index with the given homogeneity and noise
  // count: strict in plain mode, nonstrict (<= 0) in limit mode when noise > 0.
  bool negative(const Rational& homogeneity, int noise_count) const;
};

// A monomial over the abstract variable alphabet: a finitely supported
// exponent map. No zero exponents are stored and equality is structural.
class MultiIndex {
 public:
  MultiIndex() = default;

  static MultiIndex monomial(const Variable& v, int exponent = 1);

  // Multiplies by v^exponent in place. Exponent may be negative; the
  // resulting exponent must stay nonnegative.
  MultiIndex& mul(const Variable& v, int exponent = 1);

  MultiIndex times(const MultiIndex& other) const;

  // Removes one power of v, or nothing if v is absent.
  std::optional<MultiIndex> divide_by(const Variable& v) const;

  int exponent(const Variable& v) const;
  const std::map<Variable, int>& exponents() const { return exp_; }
  bool empty() const { return exp_.empty(); }

  // Total number of variable factors, counted with multiplicity.
  int degree() const;

  int count_kind(VarKind kind) const;
  bool within(std::initializer_list<VarKind> kinds) const;

  // Combinatorial balance [beta]: one unit per factor, minus the edge slots
  // it opens, plus one per space-time factor.
  long long fertility() const;

  // Total exponent of Noise variables ((beta)).
  int noise_count() const;

  Rational homogeneity(const GradingContext& ctx) const;

  // Product of factorials of the plain-derivative components; Poly factors
  // contribute nothing.
  Integer symmetry_factor() const;

  // True when the monomial corresponds to at least one decorated tree:
  // fertility 1, and every space-time factor has parabolic length one and
  // can decorate a distinct variable with a spare derivative slot.
  bool populated() const;

  // Canonical order: total degree first, then lexicographic on the expanded
  // factor sequence (earlier variables sort lower).
  std::strong_ordering operator<=>(const MultiIndex& other) const;
  bool operator==(const MultiIndex& other) const { return exp_ == other.exp_; }

  // Canonical ASCII form: factors sorted, '*'-separated, '^e' only for
  // exponents >= 2. The empty monomial prints as "1".
  std::string str() const;

 private:
  std::map<Variable, int> exp_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;
};

// Parses the grammar
//   monomial := factor (("*" | spaces) factor)*
//   factor   := var ("^" uint)?
//   var      := "N" uint | "Q" uint | "L" uint | "F" uint | "H" uint
//             | "X" uint "," uint
// plus "1" for the empty monomial. Throws ParseError with the offending
// position on malformed input and on the forbidden X0,0.
MultiIndex parse_multi_index(const std::string& text);

inline std::string format_multi_index(const MultiIndex& beta) { return beta.str(); }

}  // namespace midx
