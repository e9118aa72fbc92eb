#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cayley/circuit.hpp"
#include "cayley/ids.hpp"
#include "cayley/permutation.hpp"
#include "cayley/sat.hpp"

namespace cayley {

/// Subgroup-distance instance: is some element of <generators> within
/// Cayley distance bound_k of pi?
struct IdsDistanceInstance {
  IdsGeneratorSet ids;
  Permutation pi;
  long long bound_k = 0;
};

/// Validates the instance and returns the IDS width.
std::size_t validate_instance(const IdsDistanceInstance& inst);

// --- 3-SAT to polarized circuit ---------------------------------------------

struct Occurrence {
  std::uint32_t variable = 0;  // original x_i
  std::uint32_t index = 0;     // j, 1-based occurrence number
};

/// Phi with every occurrence of x_i renamed to a fresh y_i^j, plus the chain
/// y_i^1 == y_i^2 == ... == y_i^{r_i}. y-variables are numbered by (i, j).
struct SplitFormula {
  CnfFormula formula;
  std::vector<Occurrence> origin;  // origin[y - 1]
  std::vector<std::pair<std::uint32_t, std::uint32_t>> equivalences;

  /// formula with each equivalence written as two binary clauses.
  CnfFormula to_cnf() const;
  /// y-assignment induced by an assignment of the original variables.
  Assignment lift(const Assignment& original) const;
};

SplitFormula split_variables(const CnfFormula& f);

struct SatCircuitInstance {
  SplitFormula split;
  SwitchingCircuit circuit;
  Polarization polarization;
  std::size_t target_m = 0;
  std::size_t b = 0;  // A gadgets, one per 3-literal clause
  std::size_t g = 0;  // G gadgets, one per 2-literal clause
  std::size_t i = 0;  // I gadgets, one per unit clause
  std::size_t e = 0;  // E gadgets, one per equivalence
  std::vector<std::uint32_t> class_to_variable;  // class k + 1 -> y-variable
};

/// A routing reaches target_m cycles exactly when the corresponding
/// y-assignment satisfies the split formula, and has fewer otherwise.
SatCircuitInstance sat_to_circuit(const CnfFormula& f);

/// Class routed as the swap iff its y-variable is true.
Routing assignment_to_routing(const SatCircuitInstance& sci, const Assignment& a);

// --- circuit <-> IDS ---------------------------------------------------------

struct CircuitIdsReduction {
  IdsDistanceInstance instance;
  /// generator_class[j] is the (0-based) class that produced gamma_{j+1}.
  std::vector<std::size_t> generator_class;
  /// Number of edges, also the degree of the IDS instance.
  std::size_t edges = 0;
};

/// Points are edge ids, pi is the identity-routing successor and each valency-2
/// class contributes the product of its vertices' out-edge transpositions.
/// A routing with >= k cycles exists iff the distance is <= #E - k.
CircuitIdsReduction circuit_to_ids(const SwitchingCircuit& c, const Polarization& t, long long k);

/// Subset of generators selected by a routing of the source circuit.
SubsetMask routing_to_subset(const CircuitIdsReduction& red, const Routing& r);

struct IdsCircuitReduction {
  SwitchingCircuit circuit;
  Polarization polarization;
  /// Routing threshold: distance <= bound_k iff some routing has >= routing_k cycles.
  long long routing_k = 0;
  std::size_t points = 0;
  std::size_t generators = 0;
};

/// Vertices P(1..n) = ids 1..n of valency 1 and Q(j, i) of valency 2; classes
/// C_1..C_t come first, followed by singleton classes for P(1)..P(n).
/// Points outside every generator support get a pass-through edge P(k) -> P(pi(k)).
IdsCircuitReduction ids_to_circuit(const IdsDistanceInstance& inst);

/// eta = product of gamma_j over the classes C_j routed as the swap.
Permutation routing_to_group_element(const IdsDistanceInstance& inst, const Routing& r);

/// Routing of ids_to_circuit(inst) with C_j swapped iff bit j of `subset` is set.
Routing subset_to_routing(const IdsCircuitReduction& red, SubsetMask subset);

}  // namespace cayley
