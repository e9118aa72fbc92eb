#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cayley/permutation.hpp"

namespace cayley {

struct Transposition {
  Point x = 0;
  Point y = 0;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

/// An involution given as a product of disjoint transpositions.
using Involution = std::vector<Transposition>;

/// Generators gamma_1..gamma_t of an elementary Abelian 2-subgroup of S_n.
///
/// Every point appearing in any transposition of any generator must be
/// distinct from every other such point. Construct freely, then call
/// validate_ids() before trusting the invariant.
struct IdsGeneratorSet {
  std::size_t n = 0;
  std::vector<Involution> generators;

  std::size_t size() const noexcept { return generators.size(); }
};

/// Generator subset; bit j (0-based) selects gamma_{j+1}.
using SubsetMask = std::uint64_t;

/// Checks global support-disjointness and returns the width max_j r_j
/// (0 when there are no generators).
std::size_t validate_ids(const IdsGeneratorSet& gens);

/// gamma_j as a permutation of degree n.
Permutation generator_permutation(const IdsGeneratorSet& gens, std::size_t j);

/// Product of the generators selected by `subset`.
Permutation ids_element(const IdsGeneratorSet& gens, SubsetMask subset);

}  // namespace cayley
