#include "cayley/solvers.hpp"

#include <bit>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {
namespace {

bool lex_less(SubsetMask a, SubsetMask b, std::size_t t) {
  for (std::size_t j = 0; j < t; ++j) {
    const bool x = (a >> j) & 1u;
    const bool y = (b >> j) & 1u;
    if (x != y) return !x;
  }
  return false;
}

/// Calls visit(subset, distance) for every generator subset.
template <class Visit>
void for_each_subset_distance(const IdsDistanceInstance& inst, std::size_t max_generators, Visit&& visit) {
  validate_instance(inst);
  const std::size_t t = inst.ids.size();
  if (t > max_generators || t > 63) {
    throw CapExceeded(std::to_string(t) + " generators exceed subset cap " +
                      std::to_string(std::min<std::size_t>(max_generators, 63)));
  }
  const std::size_t n = inst.ids.n;
  const auto pi = inst.pi.raw();
  std::vector<std::uint32_t> eta(n), product(n);
  for (std::size_t i = 0; i < n; ++i) eta[i] = static_cast<std::uint32_t>(i);

  // d(eta, pi) = n - cycles(eta^-1 pi) and eta is an involution.
  auto distance = [&] {
    for (std::size_t i = 0; i < n; ++i) product[i] = eta[pi[i]];
    return n - cycle_count(product);
  };

  SubsetMask gray = 0;
  visit(gray, distance());
  const std::uint64_t total = std::uint64_t{1} << t;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    gray ^= SubsetMask{1} << j;
    for (const auto& [x, y] : inst.ids.generators[j]) std::swap(eta[x - 1], eta[y - 1]);
    visit(gray, distance());
  }
}

std::uint64_t encode(std::span<const std::uint32_t> image) {
  std::uint64_t code = 0;
  for (auto v : image) code = code * 8 + v;
  return code;
}

}  // namespace

DistanceResult distance_to_ids_subgroup(const IdsDistanceInstance& inst, std::size_t max_generators) {
  DistanceResult best;
  best.distance = std::numeric_limits<std::size_t>::max();
  const std::size_t t = inst.ids.size();
  for_each_subset_distance(inst, max_generators, [&](SubsetMask s, std::size_t d) {
    if (d < best.distance) {
      best.distance = d;
      best.witness = s;
      best.optimal_count = 1;
    } else if (d == best.distance) {
      ++best.optimal_count;
      if (lex_less(s, best.witness, t)) best.witness = s;
    }
  });
  best.witness_element = ids_element(inst.ids, best.witness);
  return best;
}

bool decide_distance(const IdsDistanceInstance& inst, std::size_t max_generators) {
  return static_cast<long long>(distance_to_ids_subgroup(inst, max_generators).distance) <= inst.bound_k;
}

std::uint64_t count_elements_at_distance(const IdsDistanceInstance& inst, std::size_t distance,
                                         std::size_t max_generators) {
  std::uint64_t count = 0;
  for_each_subset_distance(inst, max_generators,
                           [&](SubsetMask, std::size_t d) { count += d == distance; });
  return count;
}

std::size_t bfs_cayley_distance(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  const std::size_t n = p.degree();
  if (n > kMaxBfsDegree) {
    throw CapExceeded("BFS Cayley distance supports n <= " + std::to_string(kMaxBfsDegree) +
                      ", got " + std::to_string(n));
  }
  using Image = std::vector<std::uint32_t>;
  const Image start(p.raw().begin(), p.raw().end());
  const auto goal = encode(q.raw());
  std::unordered_map<std::uint64_t, std::size_t> dist{{encode(start), 0}};
  std::deque<Image> queue{start};
  while (!queue.empty()) {
    Image cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = dist.at(encode(cur));
    if (encode(cur) == goal) return d;
    // Right-multiplying by (x y) exchanges the images of x and y.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        Image next = cur;
        std::swap(next[x], next[y]);
        if (dist.emplace(encode(next), d + 1).second) queue.push_back(std::move(next));
      }
    }
  }
  throw Error("BFS exhausted S_n without reaching the target");
}

std::set<Permutation> capped_closure(std::size_t n, std::span<const Permutation> generators,
                                     std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != n) throw DegreeMismatch(g.degree(), n);
  }
  std::unordered_set<Permutation, PermutationHash> seen{Permutation::identity(n)};
  std::deque<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    const Permutation cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw CapExceeded("subgroup closure exceeds cap " + std::to_string(cap));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t distance_to_set(const std::set<Permutation>& elements, const Permutation& pi) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& eta : elements) best = std::min(best, cayley_distance(eta, pi));
  return best;
}

}  // namespace cayley
