#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cayley/permutation.hpp"

namespace cayley {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Port = std::uint32_t;

struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  Port out_port = 0;
  VertexId head = 0;
  Port in_port = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph with port labels 1..valency on both sides of every vertex.
/// Loops and parallel edges are allowed; edge ids run 1..#E.
struct SwitchingCircuit {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
};

/// Partition of the vertices; class k (1-based) is classes[k - 1].
struct Polarization {
  std::vector<std::vector<VertexId>> classes;

  /// Every vertex in its own class.
  static Polarization unpolarized(const SwitchingCircuit& c);
};

/// One permutation of {1..valency} per polarization class, so a routing
/// respects the polarization by construction. by_class[k](i) is the out-port
/// taken by traffic arriving on in-port i at any vertex of class k + 1.
struct Routing {
  std::vector<Permutation> by_class;
  friend bool operator==(const Routing&, const Routing&) = default;
};

struct CircuitShape {
  std::size_t width = 0;
  std::size_t max_valency = 0;
  std::vector<std::size_t> class_valency;
};

inline constexpr std::uint64_t kDefaultMaxRoutings = std::uint64_t{1} << 20;

/// Checks port labellings, valency balance and class homogeneity.
/// Rejects empty circuits and valency-0 vertices.
CircuitShape validate_circuit(const SwitchingCircuit& c, const Polarization& t);

void validate_routing(const CircuitShape& shape, const Routing& r);

/// Permutation of edge ids: e entering v on in-port i maps to the edge
/// leaving v on out-port rho_v(i).
Permutation successor_permutation(const SwitchingCircuit& c, const Polarization& t, const Routing& r);

std::size_t count_routing_cycles(const SwitchingCircuit& c, const Polarization& t, const Routing& r);

/// The routing with every class set to the identity.
Routing identity_routing(const CircuitShape& shape);

/// Product of class valency factorials, saturating at UINT64_MAX.
std::uint64_t routing_space_size(const CircuitShape& shape);

/// Visits every respecting routing once, classes in ascending id with the
/// last class varying fastest and each class's permutations in
/// lexicographic order of image tables.
void for_each_routing(const SwitchingCircuit& c, const Polarization& t,
                      const std::function<void(const Routing&, std::size_t cycles)>& visit,
                      std::uint64_t max_routings = kDefaultMaxRoutings);

std::vector<Routing> enumerate_routings(const SwitchingCircuit& c, const Polarization& t,
                                        std::uint64_t max_routings = kDefaultMaxRoutings);

struct MaxRoutingResult {
  std::size_t max_cycles = 0;
  std::uint64_t optimal_count = 0;
  /// First optimal routing in enumeration order.
  Routing witness;
};

MaxRoutingResult max_routing(const SwitchingCircuit& c, const Polarization& t,
                             std::uint64_t max_routings = kDefaultMaxRoutings);

/// Is there a respecting routing with at least k cycles?
bool decide_routing(const SwitchingCircuit& c, const Polarization& t, long long k,
                    std::uint64_t max_routings = kDefaultMaxRoutings);

}  // namespace cayley
