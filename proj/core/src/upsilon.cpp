#include "midx/upsilon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace midx {

std::string UpsilonRendering::str() const {
  if (symbols.empty()) return to_string(prefactor);
  if (prefactor == 1) return symbols;
  return to_string(prefactor) + "·" + symbols;
}

UpsilonRendering upsilon_render(const MultiIndex& beta) {
  if (!beta.within({VarKind::Noise, VarKind::Quad, VarKind::Diff}))
    throw std::domain_error("upsilon_render: variable outside the Diff/Quad/Noise alphabet");
  Integer prefactor = 1;
  std::ostringstream symbols;
  bool first = true;
  const auto emit = [&](const char* head, int index, int exponent) {
    if (!first) symbols << "·";
    first = false;
    symbols << head << "(" << index << ")";
    if (exponent >= 2) symbols << "^" << exponent;
  };
  for (const auto& [v, e] : beta.exponents()) {
    if (v.kind != VarKind::Quad) continue;
    for (int i = 0; i < e; ++i) prefactor *= 2;
    emit("G", v.a, e);
  }
  for (const auto& [v, e] : beta.exponents()) {
    if (v.kind == VarKind::Noise) emit("s", v.a, e);
  }
  for (const auto& [v, e] : beta.exponents()) {
    if (v.kind == VarKind::Diff) emit("h", v.a, e);
  }
  return {prefactor, symbols.str()};
}

std::vector<long> upsilon_exponent_vector(const MultiIndex& beta) {
  int max_index = -1;
  for (const auto& [v, e] : beta.exponents()) max_index = std::max(max_index, v.a);
  std::vector<long> out(3 * (max_index + 1), 0);
  for (const auto& [v, e] : beta.exponents()) {
    switch (v.kind) {
      case VarKind::Diff: out[3 * v.a] = e; break;
      case VarKind::Quad: out[3 * v.a + 1] = e; break;
      case VarKind::Noise: out[3 * v.a + 2] = e; break;
      default: throw std::domain_error("upsilon_exponent_vector: variable outside the Diff/Quad/Noise alphabet");
    }
  }
  return out;
}

}  // namespace midx
