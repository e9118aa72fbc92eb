#include "cayley/reductions.hpp"

#include <algorithm>
#include <string>

#include "cayley/error.hpp"
#include "cayley/gadgets.hpp"

namespace cayley {

std::size_t validate_instance(const IdsDistanceInstance& inst) {
  const std::size_t width = validate_ids(inst.ids);
  if (inst.pi.degree() != inst.ids.n) throw DegreeMismatch(inst.pi.degree(), inst.ids.n);
  if (inst.bound_k < 0 || inst.bound_k > static_cast<long long>(inst.ids.n)) {
    throw ValidationError("bound K = " + std::to_string(inst.bound_k) + " outside 0.." +
                          std::to_string(inst.ids.n));
  }
  return width;
}

// --- split -------------------------------------------------------------------

CnfFormula SplitFormula::to_cnf() const {
  CnfFormula out = formula;
  for (const auto& [u, v] : equivalences) {
    out.clauses.push_back({neg(u), pos(v)});
    out.clauses.push_back({pos(u), neg(v)});
  }
  return out;
}

Assignment SplitFormula::lift(const Assignment& original) const {
  Assignment out(origin.size());
  for (std::size_t y = 0; y < origin.size(); ++y) out[y] = original.at(origin[y].variable - 1);
  return out;
}

SplitFormula split_variables(const CnfFormula& f) {
  std::vector<std::uint32_t> occurrences(f.num_variables + 1, 0);
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    if (clause.empty() || clause.size() > 3) {
      throw ValidationError("clause " + std::to_string(c + 1) + " is not a 3-SAT clause");
    }
    for (std::size_t k = 0; k < clause.size(); ++k) {
      const auto v = clause[k].variable;
      if (v < 1 || v > f.num_variables) throw ValidationError("variable " + std::to_string(v) + " out of range");
      for (std::size_t m = 0; m < k; ++m) {
        if (clause[m].variable == v) {
          throw ValidationError("clause " + std::to_string(c + 1) + " repeats variable " +
                                std::to_string(v) + "; normalize first");
        }
      }
      ++occurrences[v];
    }
  }

  SplitFormula out;
  std::vector<std::uint32_t> base(f.num_variables + 1, 0);
  for (std::uint32_t v = 1; v <= f.num_variables; ++v) {
    base[v] = static_cast<std::uint32_t>(out.origin.size());
    for (std::uint32_t j = 1; j <= occurrences[v]; ++j) out.origin.push_back({v, j});
    for (std::uint32_t j = 1; j < occurrences[v]; ++j) {
      out.equivalences.emplace_back(base[v] + j, base[v] + j + 1);
    }
  }
  out.formula.num_variables = out.origin.size();

  std::vector<std::uint32_t> seen(f.num_variables + 1, 0);
  for (const auto& clause : f.clauses) {
    Clause renamed;
    for (const auto& lit : clause) {
      renamed.push_back({base[lit.variable] + ++seen[lit.variable], lit.negated});
    }
    out.formula.clauses.push_back(std::move(renamed));
  }
  return out;
}

// --- 3-SAT -> circuit --------------------------------------------------------

namespace {

void absorb(SatCircuitInstance& sci, const GadgetFragment& g) {
  auto& c = sci.circuit;
  c.vertices.insert(c.vertices.end(), g.circuit.vertices.begin(), g.circuit.vertices.end());
  c.edges.insert(c.edges.end(), g.circuit.edges.begin(), g.circuit.edges.end());
  for (std::size_t s = 0; s < g.slots.size(); ++s) {
    auto& cls = sci.polarization.classes[g.slots[s].variable - 1];
    const auto& members = g.polarization.classes[g.class_of_slot[s]];
    cls.insert(cls.end(), members.begin(), members.end());
  }
}

}  // namespace

SatCircuitInstance sat_to_circuit(const CnfFormula& f) {
  SatCircuitInstance sci;
  sci.split = split_variables(f);
  const std::size_t n = sci.split.formula.num_variables;
  sci.polarization.classes.resize(n);
  for (std::uint32_t y = 1; y <= n; ++y) sci.class_to_variable.push_back(y);

  IdAllocator ids;
  for (const auto& clause : sci.split.formula.clauses) {
    switch (clause.size()) {
      case 3:
        absorb(sci, build_A(clause[0], clause[1], clause[2], ids));
        ++sci.b;
        break;
      case 2:
        absorb(sci, build_G(clause[0], clause[1], ids));
        ++sci.g;
        break;
      default:
        absorb(sci, build_I(clause[0], ids));
        ++sci.i;
        break;
    }
  }
  for (const auto& [u, v] : sci.split.equivalences) {
    absorb(sci, build_E(pos(u), pos(v), ids));
    ++sci.e;
  }
  sci.target_m = 3 * sci.b + 4 * sci.g + 2 * sci.i + 2 * sci.e;
  return sci;
}

Routing assignment_to_routing(const SatCircuitInstance& sci, const Assignment& a) {
  const auto swap = Permutation::from_images({2, 1});
  Routing r;
  for (std::size_t k = 0; k < sci.polarization.classes.size(); ++k) {
    const auto y = sci.class_to_variable.at(k);
    if (y > a.size()) throw ValidationError("assignment is missing variable " + std::to_string(y));
    r.by_class.push_back(a[y - 1] ? swap : Permutation::identity(2));
  }
  return r;
}

// --- circuit -> IDS ----------------------------------------------------------

CircuitIdsReduction circuit_to_ids(const SwitchingCircuit& c, const Polarization& t, long long k) {
  const auto shape = validate_circuit(c, t);
  if (shape.max_valency > 2) {
    throw ValidationError("circuit has valency " + std::to_string(shape.max_valency) +
                          "; the IDS reduction needs valency <= 2");
  }
  const std::size_t ne = c.edges.size();
  if (k < 0 || k > static_cast<long long>(ne)) {
    throw ValidationError("routing target K = " + std::to_string(k) + " outside 0.." + std::to_string(ne));
  }

  CircuitIdsReduction red;
  red.edges = ne;
  red.instance.ids.n = ne;
  red.instance.pi = successor_permutation(c, t, identity_routing(shape));
  red.instance.bound_k = static_cast<long long>(ne) - k;

  // out_edges[v] = {edge on port 1, edge on port 2}
  std::vector<std::pair<VertexId, std::pair<EdgeId, EdgeId>>> out_edges;
  auto find_out = [&](VertexId v, Port p) {
    for (const auto& e : c.edges) {
      if (e.tail == v && e.out_port == p) return e.id;
    }
    throw ValidationError("vertex " + std::to_string(v) + " lacks out-port " + std::to_string(p));
  };
  for (std::size_t cls = 0; cls < t.classes.size(); ++cls) {
    if (shape.class_valency[cls] != 2) continue;
    Involution gamma;
    for (const VertexId v : t.classes[cls]) gamma.push_back({find_out(v, 1), find_out(v, 2)});
    red.instance.ids.generators.push_back(std::move(gamma));
    red.generator_class.push_back(cls);
  }
  return red;
}

SubsetMask routing_to_subset(const CircuitIdsReduction& red, const Routing& r) {
  SubsetMask subset = 0;
  for (std::size_t j = 0; j < red.generator_class.size(); ++j) {
    const auto& p = r.by_class.at(red.generator_class[j]);
    if (p.degree() != 2) throw ValidationError("routing degree mismatch for generator class");
    if (!p.is_identity()) subset |= SubsetMask{1} << j;
  }
  return subset;
}

// --- IDS -> circuit ----------------------------------------------------------

IdsCircuitReduction ids_to_circuit(const IdsDistanceInstance& inst) {
  validate_instance(inst);
  const std::size_t n = inst.ids.n;
  const auto& pi = inst.pi;

  IdsCircuitReduction red;
  red.points = n;
  red.generators = inst.ids.size();
  red.routing_k = static_cast<long long>(n) - inst.bound_k;

  auto& c = red.circuit;
  for (std::size_t k = 1; k <= n; ++k) c.vertices.push_back(static_cast<VertexId>(k));
  std::vector<bool> supported(n + 1, false);
  VertexId next_q = static_cast<VertexId>(n + 1);
  EdgeId next_edge = 1;
  for (const auto& gamma : inst.ids.generators) {
    std::vector<VertexId> cls;
    for (const auto& [x, y] : gamma) {
      const VertexId q = next_q++;
      c.vertices.push_back(q);
      cls.push_back(q);
      supported[x] = supported[y] = true;
      c.edges.push_back({next_edge++, x, 1, q, 1});
      c.edges.push_back({next_edge++, y, 1, q, 2});
      c.edges.push_back({next_edge++, q, 1, pi(x), 1});
      c.edges.push_back({next_edge++, q, 2, pi(y), 1});
    }
    red.polarization.classes.push_back(std::move(cls));
  }
  for (Point k = 1; k <= n; ++k) {
    if (!supported[k]) c.edges.push_back({next_edge++, k, 1, pi(k), 1});
    red.polarization.classes.push_back({k});
  }
  return red;
}

Permutation routing_to_group_element(const IdsDistanceInstance& inst, const Routing& r) {
  const std::size_t t = inst.ids.size();
  if (r.by_class.size() != t + inst.ids.n) {
    throw ValidationError("routing has " + std::to_string(r.by_class.size()) + " classes, expected " +
                          std::to_string(t + inst.ids.n));
  }
  SubsetMask subset = 0;
  for (std::size_t j = 0; j < t; ++j) {
    const auto& p = r.by_class[j];
    if (p.degree() != 2) throw ValidationError("routing degree mismatch for class " + std::to_string(j + 1));
    if (!p.is_identity()) subset |= SubsetMask{1} << j;
  }
  return ids_element(inst.ids, subset);
}

Routing subset_to_routing(const IdsCircuitReduction& red, SubsetMask subset) {
  const auto swap = Permutation::from_images({2, 1});
  Routing r;
  for (std::size_t j = 0; j < red.generators; ++j) {
    r.by_class.push_back(((subset >> j) & 1u) ? swap : Permutation::identity(2));
  }
  for (std::size_t k = 0; k < red.points; ++k) r.by_class.push_back(Permutation::identity(1));
  return r;
}

}  // namespace cayley
