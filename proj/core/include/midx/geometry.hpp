#pragma once

#include <map>
#include <string>
#include <vector>

#include "midx/matrix.hpp"
#include "midx/multi_index.hpp"
#include "midx/poly.hpp"
#include "midx/upsilon.hpp"

namespace midx {

// Infinitesimal change-of-coordinates operator on the Noise/Quad algebra.
// On generators:
//   N<k> -> D^k [N0, H0]
//   Q<k> -> -D^(k+1)(Q0*H0) - 2*H<k+2>
// extended as a derivation. Every image monomial carries exactly one Diff
// factor.
Poly phi_geo(const Poly& p);

// Compensated operator phi_geo(p) - [p, H0]; its kernel is the space of
// chain-rule compatible counterterms.
Poly phi_geo_hat(const Poly& p);

// Membership in the invariance class under sigma -> -sigma: true iff the
// noise count is even. beta must lie in the Noise/Quad alphabet.
bool ito_member(const MultiIndex& beta);

// The compensated operator restricted to the N-noise level, as an exact
// matrix: columns are the populated Noise/Quad monomials with N noises,
// rows the extended monomials its images touch.
struct KernelReport {
  int noises = 0;
  std::vector<MultiIndex> columns;
  std::vector<MultiIndex> rows;
  RationalMatrix matrix{0, 0};
  std::vector<Poly> kernel_basis;  // leading coefficient normalized to 1
  int dimension = 0;
};

KernelReport assemble_kernel_matrix(int N);

// One linear condition on the N-noise level, indexed by a test monomial
// H<k+2> * eta. Built from the closed-form pairing coefficients, not from
// phi_geo_hat. eta is completed with Q<k> factors until the test monomial
// is populated; remainders that cannot be completed give the empty
// equation.
using LinearEquation = std::map<MultiIndex, Rational>;
LinearEquation example_system_row(int k, const MultiIndex& eta, int N);

// Basis of the chain-rule kernel drawn from the iterated covariant
// derivatives, level by level up to the largest reduced noise count.
struct GeoBasis {
  std::vector<Poly> basis;
  int dimension = 0;
};

GeoBasis geo_basis_xi(const GradingContext& ctx, bool even_only);

// One renormalisation summand: the constant stays an opaque label.
struct CountertermRow {
  MultiIndex beta;
  Rational homogeneity;
  int noises = 0;
  long long fertility = 0;
  Integer sigma;
  UpsilonRendering upsilon;
  bool ito = false;
  bool geometric = false;
  std::string constant_label;
};

std::vector<CountertermRow> counterterm_report(const GradingContext& ctx, bool gaussian);

}  // namespace midx
