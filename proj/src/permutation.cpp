#include "cayley/permutation.hpp"

#include <numeric>

#include "cayley/error.hpp"

namespace cayley {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> image(n);
  std::iota(image.begin(), image.end(), 0u);
  return Permutation(std::move(image));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const std::size_t n = images.size();
  std::vector<std::uint32_t> image(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Point v = images[i];
    if (v < 1 || v > n) {
      throw ValidationError("image " + std::to_string(v) + " of point " + std::to_string(i + 1) +
                            " outside 1.." + std::to_string(n));
    }
    if (seen[v - 1]) {
      throw ValidationError("point " + std::to_string(v) + " appears twice in image list");
    }
    seen[v - 1] = true;
    image[i] = v - 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_images(std::initializer_list<Point> images) {
  return from_images(std::span<const Point>(images.begin(), images.size()));
}

Permutation Permutation::transposition(std::size_t n, Point x, Point y) {
  if (x == y || x < 1 || y < 1 || x > n || y > n) {
    throw ValidationError("invalid transposition (" + std::to_string(x) + " " + std::to_string(y) +
                          ") in S_" + std::to_string(n));
  }
  auto p = identity(n);
  std::swap(p.image_[x - 1], p.image_[y - 1]);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point from = cycle[k];
      if (from < 1 || from > n || used[from]) {
        throw ValidationError("cycle point " + std::to_string(from) + " invalid or repeated");
      }
      used[from] = true;
      images[from - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return from_images(images);
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[i] + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  const auto pi = p.raw();
  const auto qi = q.raw();
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = pi[qi[i]] + 1;
  return Permutation::from_images(images);
}

Permutation inverse(const Permutation& p) {
  const auto pi = p.raw();
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[pi[i]] = static_cast<Point>(i + 1);
  return Permutation::from_images(images);
}

std::size_t cycle_count(std::span<const std::uint32_t> image) {
  std::vector<bool> seen(image.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = image[i]) seen[i] = true;
  }
  return cycles;
}

std::size_t cycle_count(const Permutation& p) { return cycle_count(p.raw()); }

std::size_t cayley_distance(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  return p.degree() - cycle_count(compose(inverse(p), q));
}

bool is_involution(const Permutation& p) {
  const auto pi = p.raw();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[pi[i]] != i) return false;
  }
  return true;
}

std::string to_cycle_string(const Permutation& p) {
  const auto pi = p.raw();
  std::vector<bool> seen(pi.size(), false);
  std::string out;
  for (std::size_t start = 0; start < pi.size(); ++start) {
    if (seen[start] || pi[start] == start) continue;
    out += '(';
    for (std::size_t i = start; !seen[i]; i = pi[i]) {
      seen[i] = true;
      if (i != start) out += ' ';
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.raw()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cayley
