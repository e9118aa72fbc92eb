#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>

#include "cayley/ids.hpp"
#include "cayley/permutation.hpp"
#include "cayley/reductions.hpp"

namespace cayley {

inline constexpr std::size_t kDefaultMaxSubsetBits = 24;
inline constexpr std::size_t kMaxBfsDegree = 7;

struct DistanceResult {
  std::size_t distance = 0;
  /// Lexicographically least optimal subset, comparing characteristic
  /// vectors (gamma_1, gamma_2, ...) with absent before present.
  SubsetMask witness = 0;
  Permutation witness_element;
  /// Number of subsets (equivalently group elements) attaining the distance.
  std::uint64_t optimal_count = 0;
};

/// Exact d(H, pi) by enumerating all 2^t generator subsets in Gray-code order.
DistanceResult distance_to_ids_subgroup(const IdsDistanceInstance& inst,
                                        std::size_t max_generators = kDefaultMaxSubsetBits);

bool decide_distance(const IdsDistanceInstance& inst,
                     std::size_t max_generators = kDefaultMaxSubsetBits);

/// Number of eta in H with d(eta, pi) == distance.
std::uint64_t count_elements_at_distance(const IdsDistanceInstance& inst, std::size_t distance,
                                         std::size_t max_generators = kDefaultMaxSubsetBits);

/// Breadth-first search in the Cayley graph of S_n generated by all
/// transpositions. Independent check on cayley_distance; n <= 7.
std::size_t bfs_cayley_distance(const Permutation& p, const Permutation& q);

/// Subgroup generated by `generators` in S_n; CapExceeded once it grows past `cap`.
std::set<Permutation> capped_closure(std::size_t n, std::span<const Permutation> generators,
                                     std::size_t cap);

/// min over eta in `elements` of d(eta, pi).
std::size_t distance_to_set(const std::set<Permutation>& elements, const Permutation& pi);

}  // namespace cayley
