#include "midx/multi_index.hpp"

#include <cctype>
#include <sstream>

namespace midx {

GradingContext::GradingContext(Rational d, bool limit) : delta(std::move(d)), limit_mode(limit) {
  if (delta <= 0 || delta > 1) throw std::invalid_argument("delta must lie in (0, 1]");
  if (delta == 1) limit_mode = true;
}

Rational GradingContext::alpha_xi() const { return make_rational(-2) + delta / 2; }

bool GradingContext::negative(const Rational& homogeneity, int noise_count) const {
  if (limit_mode && noise_count > 0) return homogeneity <= 0;
  return homogeneity < 0;
}

MultiIndex MultiIndex::monomial(const Variable& v, int exponent) {
  MultiIndex out;
  out.mul(v, exponent);
  return out;
}

MultiIndex& MultiIndex::mul(const Variable& v, int exponent) {
  if (exponent == 0) return *this;
  auto it = exp_.find(v);
  int next = (it == exp_.end() ? 0 : it->second) + exponent;
  if (next < 0) throw std::invalid_argument("negative exponent for " + v.name());
  if (next == 0) {
    if (it != exp_.end()) exp_.erase(it);
  } else if (it == exp_.end()) {
    exp_.emplace(v, next);
  } else {
    it->second = next;
  }
  return *this;
}

MultiIndex MultiIndex::times(const MultiIndex& other) const {
  MultiIndex out = *this;
  for (const auto& [v, e] : other.exp_) out.mul(v, e);
  return out;
}

std::optional<MultiIndex> MultiIndex::divide_by(const Variable& v) const {
  if (exponent(v) == 0) return std::nullopt;
  MultiIndex out = *this;
  out.mul(v, -1);
  return out;
}

int MultiIndex::exponent(const Variable& v) const {
  auto it = exp_.find(v);
  return it == exp_.end() ? 0 : it->second;
}

int MultiIndex::degree() const {
  int total = 0;
  for (const auto& [v, e] : exp_) total += e;
  return total;
}

int MultiIndex::count_kind(VarKind kind) const {
  int total = 0;
  for (const auto& [v, e] : exp_)
    if (v.kind == kind) total += e;
  return total;
}

bool MultiIndex::within(std::initializer_list<VarKind> kinds) const {
  for (const auto& [v, e] : exp_) {
    bool ok = false;
    for (VarKind k : kinds) ok = ok || v.kind == k;
    if (!ok) return false;
  }
  return true;
}

long long MultiIndex::fertility() const {
  long long total = 0;
  for (const auto& [v, e] : exp_) {
    if (v.kind == VarKind::Poly)
      total += e;
    else
      total += static_cast<long long>(1 - v.length()) * e;
  }
  return total;
}

int MultiIndex::noise_count() const { return count_kind(VarKind::Noise); }

Rational MultiIndex::homogeneity(const GradingContext& ctx) const {
  Rational total = 0;
  for (const auto& [v, e] : exp_) {
    Rational per;
    switch (v.kind) {
      case VarKind::Noise: per = ctx.alpha_xi() + make_rational(2 * v.a); break;
      case VarKind::Quad: per = make_rational(2 * v.a + 2); break;
      case VarKind::Lin: per = make_rational(2 * v.a + 1); break;
      case VarKind::Func: per = make_rational(2 * v.a); break;
      case VarKind::Diff: per = 0; break;
      case VarKind::Poly: per = make_rational(v.parabolic_degree() - 2); break;
    }
    total += per * e;
  }
  return total;
}

Integer MultiIndex::symmetry_factor() const {
  Integer total = 1;
  for (const auto& [v, e] : exp_) {
    if (v.kind == VarKind::Poly) continue;
    Integer f = factorial(static_cast<unsigned long>(v.e00()));
    for (int i = 0; i < e; ++i) total *= f;
  }
  return total;
}

bool MultiIndex::populated() const {
  if (fertility() != 1) return false;
  // Space-time factors must each decorate a distinct non-Poly variable
  // instance, consuming one derivative slot of it. That forces parabolic
  // length n1 + n2 = 1 and enough instances with a positive index.
  int decorations = 0;
  int slots = 0;
  for (const auto& [v, e] : exp_) {
    if (v.kind == VarKind::Poly) {
      if (v.a + v.b != 1) return false;
      decorations += e;
    } else if (v.e00() >= 1) {
      slots += e;
    }
  }
  return decorations <= slots;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  auto it = exp_.begin();
  auto jt = other.exp_.begin();
  while (it != exp_.end() && jt != other.exp_.end()) {
    if (auto c = it->first <=> jt->first; c != 0) return c;
    if (it->second != jt->second) {
      // Equal degrees: more copies of the shared earlier variable sorts lower.
      return it->second > jt->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    ++it;
    ++jt;
  }
  return std::strong_ordering::equal;
}

std::string MultiIndex::str() const {
  if (exp_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : exp_) {
    if (!first) out << "*";
    first = false;
    out << v.name();
    if (e >= 2) out << "^" << e;
  }
  return out.str();
}

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_spaces() {
    while (!done() && text[pos] == ' ') ++pos;
  }

  int parse_uint() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos);
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) throw ParseError("index out of range", pos);
      ++pos;
    }
    return static_cast<int>(value);
  }

  Variable parse_var() {
    const std::size_t start = pos;
    const char c = peek();
    ++pos;
    switch (c) {
      case 'N': return Variable::noise(parse_uint());
      case 'Q': return Variable::quad(parse_uint());
      case 'L': return Variable::lin(parse_uint());
      case 'F': return Variable::func(parse_uint());
      case 'H': return Variable::diff(parse_uint());
      case 'X': {
        int n1 = parse_uint();
        if (done() || peek() != ',') throw ParseError("expected ',' in X variable", pos);
        ++pos;
        int n2 = parse_uint();
        if (n1 == 0 && n2 == 0) throw ParseError("X0,0 is not a variable", start);
        return Variable::poly(n1, n2);
      }
      default: throw ParseError(std::string("unknown variable '") + c + "'", start);
    }
  }

  void parse_factor(MultiIndex& out) {
    Variable v = parse_var();
    int e = 1;
    if (!done() && peek() == '^') {
      const std::size_t caret = pos;
      ++pos;
      e = parse_uint();
      if (e == 0) throw ParseError("zero exponent", caret + 1);
    }
    out.mul(v, e);
  }
};

}  // namespace

MultiIndex parse_multi_index(const std::string& text) {
  Parser p{text};
  p.skip_spaces();
  if (p.done()) throw ParseError("empty input", 0);
  if (p.peek() == '1') {
    ++p.pos;
    p.skip_spaces();
    if (!p.done()) throw ParseError("trailing input after '1'", p.pos);
    return MultiIndex{};
  }
  MultiIndex out;
  p.parse_factor(out);
  while (true) {
    const std::size_t before = p.pos;
    p.skip_spaces();
    if (!p.done() && p.peek() == '*') {
      ++p.pos;
      p.skip_spaces();
    } else if (p.done()) {
      break;
    } else if (p.pos == before) {
      throw ParseError("expected '*' or space between factors", p.pos);
    }
    if (p.done()) throw ParseError("dangling separator", p.pos);
    p.parse_factor(out);
  }
  return out;
}

}  // namespace midx
