#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "midx/multi_index.hpp"
#include "midx/poly.hpp"

namespace midx {

// Generic request for the finite multi-index sets. All results are
// populated (fertility one) and returned in canonical monomial order.
//
// Termination requires either the negativity bound (which caps the noise
// count at 4/delta and every correction term) or an exact noise-count
// window over the Noise/Quad/Diff alphabet. Other combinations describe
// infinite sets and are rejected.
//
// When Diff belongs to the alphabet, monomials with at most one Diff
// factor are produced; the image of the symmetry operators lives in that
// slice and larger Diff powers make the sets infinite.
struct EnumerationRequest {
  GradingContext ctx;
  std::set<VarKind> alphabet;
  int noise_min = 1;
  std::optional<int> noise_max;
  bool negative_only = false;
  bool even_noise = false;
};

std::vector<MultiIndex> enumerate(const EnumerationRequest& request);

// The negative set over the full Noise/Quad/Lin/Func/Poly alphabet.
std::vector<MultiIndex> enumerate_negative(const GradingContext& ctx);

// Negative Noise/Quad monomials with at least two noises; optionally only
// even noise counts.
std::vector<MultiIndex> enumerate_reduced(const GradingContext& ctx, bool even_only);

// All populated Noise/Quad monomials with exactly N noises (no negativity
// constraint).
std::vector<MultiIndex> enumerate_reduced_level(int N);

// As above plus the variants carrying exactly one Diff factor.
std::vector<MultiIndex> enumerate_extended_level(int N);

// Populated monomials over Noise only with exactly N noises, N >= 2.
std::vector<MultiIndex> enumerate_pure_noise(int N);

// Cardinality of the pure-noise level set; equals the number of integer
// partitions of N - 1.
long novikov_dimension(int N);

// Largest noise count among the reduced negative multi-indices.
int n_xi(const GradingContext& ctx);

// One fully parenthesized iterated covariant derivative with N leaves.
struct NablaExpression {
  std::string label;
  Poly value;
};

// Every bracketing of N - 1 covariant derivatives applied to the noise
// generator, with duplicates by value retained.
std::vector<NablaExpression> generate_nabla_set(int N);

}  // namespace midx
