#include "midx/poly.hpp"

#include <sstream>

namespace midx {

Poly::Poly(Rational constant) { add_term(MultiIndex{}, constant); }

Poly Poly::monomial(const MultiIndex& beta, Rational coefficient) {
  Poly out;
  out.add_term(beta, coefficient);
  return out;
}

Poly Poly::variable(const Variable& v) { return monomial(MultiIndex::monomial(v)); }

Rational Poly::coefficient(const MultiIndex& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const MultiIndex& beta, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(beta, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [beta, c] : other.terms_) add_term(beta, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [beta, c] : other.terms_) add_term(beta, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [beta, c] : terms_) out.terms_.emplace(beta, -c);
  return out;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  for (const auto& [b1, c1] : lhs.terms_)
    for (const auto& [b2, c2] : rhs.terms_) out.add_term(b1.times(b2), c1 * c2);
  return out;
}

Poly operator*(const Rational& scalar, const Poly& p) {
  Poly out;
  if (scalar == 0) return out;
  for (const auto& [beta, c] : p.terms_) out.terms_.emplace(beta, scalar * c);
  return out;
}

bool Poly::within(std::initializer_list<VarKind> kinds) const {
  for (const auto& [beta, c] : terms_)
    if (!beta.within(kinds)) return false;
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [beta, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || beta.empty()) {
      out << to_string(mag);
      if (!beta.empty()) out << "*";
    }
    if (!beta.empty()) out << beta.str();
  }
  return out.str();
}

namespace {

void require_alphabet(const Poly& p, std::initializer_list<VarKind> kinds, const char* op) {
  if (!p.within(kinds)) throw std::domain_error(std::string(op) + ": variable outside the admissible alphabet");
}

Variable raise_index(const Variable& v) {
  switch (v.kind) {
    case VarKind::Noise: return Variable::noise(v.a + 1);
    case VarKind::Quad: return Variable::quad(v.a + 1);
    case VarKind::Diff: return Variable::diff(v.a + 1);
    default: throw std::domain_error("derivation undefined on " + v.name());
  }
}

}  // namespace

Poly derivation_d(const Poly& p) {
  require_alphabet(p, {VarKind::Noise, VarKind::Quad, VarKind::Diff}, "derivation");
  Poly out;
  for (const auto& [beta, c] : p.terms()) {
    for (const auto& [v, e] : beta.exponents()) {
      MultiIndex shifted = beta;
      shifted.mul(v, -1).mul(raise_index(v));
      out += Poly::monomial(shifted, c * e);
    }
  }
  return out;
}

Poly derivation_d(const Poly& p, int times) {
  Poly out = p;
  for (int i = 0; i < times; ++i) out = derivation_d(out);
  return out;
}

Poly bracket(const Poly& v1, const Poly& v2) { return v1 * derivation_d(v2) - v2 * derivation_d(v1); }

Poly nabla(const Poly& v1, const Poly& v2) {
  require_alphabet(v1, {VarKind::Noise, VarKind::Quad}, "nabla");
  require_alphabet(v2, {VarKind::Noise, VarKind::Quad}, "nabla");
  const Poly half_quad = make_rational(1, 2) * Poly::variable(Variable::quad(0));
  return v1 * derivation_d(v2) + half_quad * v1 * v2;
}

Poly projection_pi(const Poly& p) {
  require_alphabet(p, {VarKind::Noise, VarKind::Quad}, "projection");
  Poly out;
  for (const auto& [beta, c] : p.terms()) {
    if (beta.count_kind(VarKind::Quad) == 0) out += Poly::monomial(beta, c);
  }
  return out;
}

}  // namespace midx
