#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace midx {

// The abstract variable alphabet. Each variable tracks one elementary
// building block of the equation's formal expansion:
//
//   Noise(m)    N<m>     noise factor with m derivative slots
//   Quad(k)     Q<k>     quadratic-gradient nonlinearity, k-th derivative
//   Lin(k)      L<k>     linear-gradient nonlinearity, k-th derivative
//   Func(k)     F<k>     zeroth-order nonlinearity, k-th derivative
//   Diff(k)     H<k>     infinitesimal change of coordinates, k-th derivative
//   Poly(n1,n2) X<n1,n2> space-time monomial; (0,0) is excluded since the
//                        constant monomial is not a variable
//
// The declaration order of VarKind fixes the total order on variables:
// kinds in this order, then indices ascending (Poly lexicographic).
enum class VarKind : std::uint8_t { Noise, Quad, Lin, Func, Diff, Poly };

struct Variable {
  VarKind kind = VarKind::Noise;
  std::int32_t a = 0;  // m or k; n1 for Poly
  std::int32_t b = 0;  // n2 for Poly, 0 otherwise

  static Variable noise(int m);
  static Variable quad(int k);
  static Variable lin(int k);
  static Variable func(int k);
  static Variable diff(int k);
  static Variable poly(int n1, int n2);

  friend auto operator<=>(const Variable&, const Variable&) = default;

  // Number of edge slots the variable provides in the tree picture.
  int length() const;

  // Multiplicity of the plain-derivative component in the variable's
  // decoration; drives the symmetry factor and space-time placement.
  int e00() const;

  // Poly only: 2*n1 + n2.
  int parabolic_degree() const;

  std::string name() const;
};

}  // namespace midx
