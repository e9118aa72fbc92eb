#include "cayley/ids.hpp"

#include <string>

#include "cayley/error.hpp"

namespace cayley {

std::size_t validate_ids(const IdsGeneratorSet& gens) {
  std::vector<bool> used(gens.n + 1, false);
  std::size_t width = 0;
  for (std::size_t j = 0; j < gens.generators.size(); ++j) {
    const auto& gamma = gens.generators[j];
    if (gamma.empty()) {
      throw ValidationError("generator " + std::to_string(j + 1) + " has no transpositions");
    }
    for (const auto& [x, y] : gamma) {
      for (const Point p : {x, y}) {
        if (p < 1 || p > gens.n) {
          throw ValidationError("generator " + std::to_string(j + 1) + " moves point " +
                                std::to_string(p) + " outside 1.." + std::to_string(gens.n));
        }
        if (used[p]) throw IdsViolation(p, "point repeated across transpositions");
        used[p] = true;
      }
      if (x == y) throw IdsViolation(x, "degenerate transposition");
    }
    width = std::max(width, gamma.size());
  }
  return width;
}

Permutation generator_permutation(const IdsGeneratorSet& gens, std::size_t j) {
  std::vector<Point> images(gens.n);
  for (std::size_t i = 0; i < gens.n; ++i) images[i] = static_cast<Point>(i + 1);
  for (const auto& [x, y] : gens.generators.at(j)) std::swap(images[x - 1], images[y - 1]);
  return Permutation::from_images(images);
}

Permutation ids_element(const IdsGeneratorSet& gens, SubsetMask subset) {
  std::vector<Point> images(gens.n);
  for (std::size_t i = 0; i < gens.n; ++i) images[i] = static_cast<Point>(i + 1);
  for (std::size_t j = 0; j < gens.generators.size(); ++j) {
    if (!((subset >> j) & 1u)) continue;
    for (const auto& [x, y] : gens.generators[j]) std::swap(images[x - 1], images[y - 1]);
  }
  return Permutation::from_images(images);
}

}  // namespace cayley
