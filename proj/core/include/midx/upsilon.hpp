#pragma once

#include <string>
#include <vector>

#include "midx/multi_index.hpp"

namespace midx {

// Formal elementary differential attached to a multi-index: each Quad
// factor contributes a 2*G(k) symbol, each Noise factor an s(k) symbol and
// each Diff factor an h(k) symbol. The numeric 2s are collected into the
// prefactor.
struct UpsilonRendering {
  Integer prefactor;
  std::string symbols;

  // "2·G(0)·s(0)^2"; a unit prefactor is omitted.
  std::string str() const;
};

// Defined on the Diff/Quad/Noise alphabet; throws std::domain_error
// otherwise.
UpsilonRendering upsilon_render(const MultiIndex& beta);

// Exponents (diff, quad, noise) per derivative index 0..max, flattened.
// Distinct multi-indices over the Diff/Quad/Noise alphabet yield distinct
// vectors.
std::vector<long> upsilon_exponent_vector(const MultiIndex& beta);

}  // namespace midx
