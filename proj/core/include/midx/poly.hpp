#pragma once

#include <map>
#include <string>

#include "midx/multi_index.hpp"

namespace midx {

// A finite rational-linear combination of multi-index monomials. Zero
// coefficients are never stored; the monomial pairing <z^a, z^b> is the
// coefficient lookup.
class Poly {
 public:
  Poly() = default;
  Poly(Rational constant);

  static Poly monomial(const MultiIndex& beta, Rational coefficient = 1);
  static Poly variable(const Variable& v);

  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const MultiIndex& beta) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  Poly operator-() const;
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Rational& scalar, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& scalar) { return scalar * p; }

  bool operator==(const Poly& other) const { return terms_ == other.terms_; }

  bool within(std::initializer_list<VarKind> kinds) const;

  // Terms in canonical monomial order, coefficients as p/q, unit
  // coefficients omitted: "N0*N1 + 1/2*N0^2*Q0". Zero prints as "0".
  std::string str() const;

 private:
  void add_term(const MultiIndex& beta, const Rational& coefficient);

  std::map<MultiIndex, Rational> terms_;
};

// Index-raising derivation z_(.,k) -> z_(.,k+1) extended by the Leibniz
// rule. Defined on the Noise/Quad/Diff alphabet only.
Poly derivation_d(const Poly& p);
Poly derivation_d(const Poly& p, int times);

// [v1, v2] = v1 Dv2 - v2 Dv1.
Poly bracket(const Poly& v1, const Poly& v2);

// Covariant derivative on the Noise/Quad alphabet:
// nabla_{v1} v2 = v1 Dv2 + 1/2 Q0 v1 v2.
Poly nabla(const Poly& v1, const Poly& v2);

// Projection killing every monomial that contains a Quad variable; input
// must be in the Noise/Quad alphabet.
Poly projection_pi(const Poly& p);

}  // namespace midx
