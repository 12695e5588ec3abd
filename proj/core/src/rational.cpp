#include "midx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace midx {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  // mpq_set_str is laxer than we want (it allows whitespace and missing
  // digits), so validate the shape first.
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + text + "'");
  };
  std::size_t i = 0;
  const auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos > start;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (!digits(i)) fail();
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    if (!digits(i) || i != text.size()) fail();
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) fail();
  if (r.get_den() == 0) fail();
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

long floor_long(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor_long overflow");
  return q.get_si();
}

}  // namespace midx
