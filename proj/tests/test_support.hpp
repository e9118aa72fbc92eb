#pragma once

// Random instance generators shared by the unit and acceptance suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cayley/circuit.hpp"
#include "cayley/ids.hpp"
#include "cayley/permutation.hpp"
#include "cayley/reductions.hpp"
#include "cayley/sat.hpp"

namespace cayley::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

/// Formula with clause widths 1..3 and distinct variables per clause.
inline CnfFormula random_3sat(Rng& rng, std::size_t max_vars, std::size_t max_clauses) {
  CnfFormula f;
  f.num_variables = uniform(rng, 1, max_vars);
  const std::size_t clauses = uniform(rng, 1, max_clauses);
  std::vector<std::uint32_t> vars(f.num_variables);
  std::iota(vars.begin(), vars.end(), 1u);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::shuffle(vars.begin(), vars.end(), rng);
    const std::size_t width = uniform(rng, 1, std::min<std::size_t>(3, f.num_variables));
    Clause clause;
    for (std::size_t k = 0; k < width; ++k) clause.push_back({vars[k], uniform(rng, 0, 1) == 1});
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

struct RandomCircuit {
  SwitchingCircuit circuit;
  Polarization polarization;
};

/// Vertices of valency 1 or 2 with at most `max_edges` edges in total, random
/// port wiring, and a random polarization grouping equal-valency vertices.
inline RandomCircuit random_circuit(Rng& rng, std::size_t max_edges) {
  RandomCircuit rc;
  std::vector<std::size_t> valency;
  std::size_t budget = uniform(rng, 1, max_edges);
  while (budget > 0) {
    const std::size_t d = budget >= 2 ? uniform(rng, 1, 2) : 1;
    valency.push_back(d);
    budget -= d;
  }
  struct Slot {
    VertexId v;
    Port port;
  };
  std::vector<Slot> outs, ins;
  for (std::size_t v = 0; v < valency.size(); ++v) {
    rc.circuit.vertices.push_back(static_cast<VertexId>(v + 1));
    for (Port p = 1; p <= valency[v]; ++p) {
      outs.push_back({static_cast<VertexId>(v + 1), p});
      ins.push_back({static_cast<VertexId>(v + 1), p});
    }
  }
  std::shuffle(ins.begin(), ins.end(), rng);
  for (std::size_t e = 0; e < outs.size(); ++e) {
    rc.circuit.edges.push_back({static_cast<EdgeId>(e + 1), outs[e].v, outs[e].port, ins[e].v, ins[e].port});
  }
  for (std::size_t d = 1; d <= 2; ++d) {
    std::vector<VertexId> group;
    for (std::size_t v = 0; v < valency.size(); ++v) {
      if (valency[v] == d) group.push_back(static_cast<VertexId>(v + 1));
    }
    std::shuffle(group.begin(), group.end(), rng);
    std::size_t k = 0;
    while (k < group.size()) {
      const std::size_t size = uniform(rng, 1, std::min<std::size_t>(3, group.size() - k));
      rc.polarization.classes.emplace_back(group.begin() + k, group.begin() + k + size);
      k += size;
    }
  }
  return rc;
}

/// IDS instance on n <= max_n points with t <= max_t generators of width <= max_width.
inline IdsDistanceInstance random_ids_instance(Rng& rng, std::size_t max_n, std::size_t max_t,
                                               std::size_t max_width) {
  IdsDistanceInstance inst;
  const std::size_t n = uniform(rng, 1, max_n);
  inst.ids.n = n;
  std::vector<Point> points(n);
  std::iota(points.begin(), points.end(), Point{1});
  std::shuffle(points.begin(), points.end(), rng);
  std::size_t next = 0;
  const std::size_t t = uniform(rng, 0, max_t);
  for (std::size_t j = 0; j < t && next + 2 <= n; ++j) {
    const std::size_t width = uniform(rng, 1, std::min(max_width, (n - next) / 2));
    Involution gamma;
    for (std::size_t i = 0; i < width; ++i) {
      gamma.push_back({points[next], points[next + 1]});
      next += 2;
    }
    inst.ids.generators.push_back(std::move(gamma));
  }
  inst.pi = random_permutation(rng, n);
  inst.bound_k = static_cast<long long>(uniform(rng, 0, n));
  return inst;
}

}  // namespace cayley::testing
