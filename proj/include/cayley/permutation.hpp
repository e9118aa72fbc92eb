#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cayley {

/// 1-based point of {1..n}.
using Point = std::uint32_t;

/// A bijection on {1..n} stored as its image table.
///
/// Composition applies the right operand first: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// Builds from a 1-based image list; throws ValidationError unless it is a bijection.
  static Permutation from_images(std::span<const Point> images);
  static Permutation from_images(std::initializer_list<Point> images);
  /// The transposition (x y) in S_n.
  static Permutation transposition(std::size_t n, Point x, Point y);
  /// Builds from disjoint cycles, e.g. {{1, 2, 3}} for the 3-cycle 1->2->3.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return image_.size(); }
  Point operator()(Point i) const { return image_[i - 1] + 1; }

  /// 1-based image list, the serialized form.
  std::vector<Point> images() const;
  bool is_identity() const noexcept;

  /// 0-based view used by the hot loops of the solvers.
  std::span<const std::uint32_t> raw() const noexcept { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {}

  std::vector<std::uint32_t> image_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Number of orbits on {1..n}; fixed points count as 1-cycles.
std::size_t cycle_count(const Permutation& p);
std::size_t cycle_count(std::span<const std::uint32_t> image);

/// Minimum number of transpositions taking p to q: n - cycles(p^-1 q).
std::size_t cayley_distance(const Permutation& p, const Permutation& q);

bool is_involution(const Permutation& p);

/// Cycle notation with fixed points omitted, "()" for the identity.
std::string to_cycle_string(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cayley
