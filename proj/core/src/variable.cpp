#include "midx/variable.hpp"

#include <stdexcept>

namespace midx {

namespace {
void check_index(int k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string(what) + " index must be nonnegative");
}
}  // namespace

Variable Variable::noise(int m) {
  check_index(m, "noise");
  return {VarKind::Noise, m, 0};
}

Variable Variable::quad(int k) {
  check_index(k, "quad");
  return {VarKind::Quad, k, 0};
}

Variable Variable::lin(int k) {
  check_index(k, "lin");
  return {VarKind::Lin, k, 0};
}

Variable Variable::func(int k) {
  check_index(k, "func");
  return {VarKind::Func, k, 0};
}

Variable Variable::diff(int k) {
  check_index(k, "diff");
  return {VarKind::Diff, k, 0};
}

Variable Variable::poly(int n1, int n2) {
  check_index(n1, "poly");
  check_index(n2, "poly");
  if (n1 == 0 && n2 == 0) throw std::invalid_argument("X0,0 is not a variable");
  return {VarKind::Poly, n1, n2};
}

int Variable::length() const {
  switch (kind) {
    case VarKind::Noise: return a;
    case VarKind::Quad: return a + 2;
    case VarKind::Lin: return a + 1;
    case VarKind::Func: return a;
    case VarKind::Diff: return a;
    case VarKind::Poly: return 0;
  }
  return 0;
}

int Variable::e00() const {
  switch (kind) {
    case VarKind::Noise:
    case VarKind::Quad:
    case VarKind::Lin:
    case VarKind::Func:
    case VarKind::Diff: return a;
    case VarKind::Poly: return 0;
  }
  return 0;
}

int Variable::parabolic_degree() const {
  if (kind != VarKind::Poly) throw std::logic_error("parabolic degree of a non-Poly variable");
  return 2 * a + b;
}

std::string Variable::name() const {
  switch (kind) {
    case VarKind::Noise: return "N" + std::to_string(a);
    case VarKind::Quad: return "Q" + std::to_string(a);
    case VarKind::Lin: return "L" + std::to_string(a);
    case VarKind::Func: return "F" + std::to_string(a);
    case VarKind::Diff: return "H" + std::to_string(a);
    case VarKind::Poly: return "X" + std::to_string(a) + "," + std::to_string(b);
  }
  return {};
}

}  // namespace midx
