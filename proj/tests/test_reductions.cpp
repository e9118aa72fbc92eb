#include "doctest.h"

#include <algorithm>
#include <map>

#include "cayley/error.hpp"
#include "cayley/reductions.hpp"
#include "cayley/solvers.hpp"
#include "test_support.hpp"

using namespace cayley;

namespace {

Assignment bits_to_assignment(std::uint64_t bits, std::size_t n) {
  Assignment a(n);
  for (std::size_t v = 0; v < n; ++v) a[v] = (bits >> v) & 1u;
  return a;
}

const Permutation kSwap = Permutation::from_images({2, 1});

}  // namespace

TEST_CASE("split_variables on a unit clause") {
  const auto s = split_variables({1, {{pos(1)}}});
  CHECK(s.formula.num_variables == 1);
  CHECK(s.formula.clauses == std::vector<Clause>{{pos(1)}});
  CHECK(s.equivalences.empty());
}

TEST_CASE("split_variables renames each occurrence") {
  // (x v y) & (~x v y) with x = 1, y = 2.
  const CnfFormula f{2, {{pos(1), pos(2)}, {neg(1), pos(2)}}};
  const auto s = split_variables(f);
  REQUIRE(s.formula.num_variables == 4);
  CHECK(s.origin[0].variable == 1);
  CHECK(s.origin[1].index == 2);
  CHECK(s.origin[2].variable == 2);
  CHECK(s.formula.clauses == std::vector<Clause>{{pos(1), pos(3)}, {neg(2), pos(4)}});
  CHECK(s.equivalences == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 2}, {3, 4}});
  CHECK(count_satisfying(f) == 2);
  CHECK(count_satisfying(s.to_cnf()) == 2);
}

TEST_CASE("split_variables preserves model counts and occurrence bounds") {
  testing::Rng rng(41);
  for (int k = 0; k < 80; ++k) {
    const auto f = compact_variables(testing::random_3sat(rng, 6, 6));
    const auto s = split_variables(f);
    CHECK(count_satisfying(f) == count_satisfying(s.to_cnf()));

    std::size_t length = 0;
    for (const auto& c : f.clauses) length += c.size();
    CHECK(s.formula.num_variables <= length);

    std::vector<int> in_clauses(s.formula.num_variables + 1), total(s.formula.num_variables + 1);
    for (const auto& c : s.formula.clauses)
      for (const auto& l : c) ++in_clauses[l.variable], ++total[l.variable];
    for (const auto& [u, v] : s.equivalences) ++total[u], ++total[v];
    for (std::size_t y = 1; y <= s.formula.num_variables; ++y) {
      CHECK(in_clauses[y] == 1);
      CHECK(total[y] <= 3);
    }
  }
  CHECK_THROWS_AS(split_variables({2, {{pos(1), neg(1)}}}), ValidationError);
}

TEST_CASE("sat_to_circuit gadget accounting") {
  auto sci = sat_to_circuit({3, {{pos(1), pos(2), pos(3)}}});
  CHECK(sci.b == 1);
  CHECK(sci.g + sci.i + sci.e == 0);
  CHECK(sci.target_m == 3);
  const auto r = max_routing(sci.circuit, sci.polarization);
  CHECK(r.max_cycles == 3);
  CHECK(r.optimal_count == 7);

  sci = sat_to_circuit({1, {{pos(1)}}});
  CHECK(sci.i == 1);
  CHECK(sci.target_m == 2);
  CHECK(sci.circuit.vertices.size() == 1);
  CHECK(sci.circuit.edges.size() == 2);

  sci = sat_to_circuit({2, {{pos(1), pos(2)}, {neg(1), pos(2)}}});
  CHECK(sci.g == 2);
  CHECK(sci.e == 2);
  CHECK(sci.target_m == 4 * 2 + 2 * 2);
}

TEST_CASE("assignment_to_routing reaches M exactly on satisfying assignments") {
  const auto unit = sat_to_circuit({1, {{pos(1)}}});
  CHECK(count_routing_cycles(unit.circuit, unit.polarization, assignment_to_routing(unit, {false})) == 1);
  CHECK(count_routing_cycles(unit.circuit, unit.polarization, assignment_to_routing(unit, {true})) == 2);
  CHECK_THROWS_AS(assignment_to_routing(unit, {}), ValidationError);

  testing::Rng rng(43);
  for (int k = 0; k < 30; ++k) {
    const auto f = compact_variables(testing::random_3sat(rng, 5, 4));
    const auto sci = sat_to_circuit(f);
    for (std::uint64_t bits = 0; bits < (1u << f.num_variables); ++bits) {
      const auto a = bits_to_assignment(bits, f.num_variables);
      const auto cycles =
          count_routing_cycles(sci.circuit, sci.polarization, assignment_to_routing(sci, sci.split.lift(a)));
      if (evaluate(f, a)) {
        CHECK(cycles == sci.target_m);
      } else {
        CHECK(cycles < sci.target_m);
      }
    }
    // Assignments breaking an equivalence fall short of M too.
    const auto full = sci.split.to_cnf();
    for (std::uint64_t bits = 0; bits < (1u << full.num_variables); ++bits) {
      const auto y = bits_to_assignment(bits, full.num_variables);
      const auto cycles = count_routing_cycles(sci.circuit, sci.polarization, assignment_to_routing(sci, y));
      CHECK((cycles == sci.target_m) == evaluate(full, y));
      CHECK(cycles <= sci.target_m);
    }
  }
}

TEST_CASE("circuit_to_ids on I(a)") {
  const auto sci = sat_to_circuit({1, {{pos(1)}}});
  const auto red = circuit_to_ids(sci.circuit, sci.polarization, 2);
  CHECK(red.instance.ids.n == 2);
  CHECK(red.instance.pi.images() == std::vector<Point>{2, 1});
  REQUIRE(red.instance.ids.size() == 1);
  CHECK(red.instance.ids.generators[0] == Involution{{1, 2}});
  CHECK(red.instance.bound_k == 0);
  CHECK(decide_distance(red.instance));
  CHECK_THROWS_AS(circuit_to_ids(sci.circuit, sci.polarization, 3), ValidationError);
  CHECK_THROWS_AS(circuit_to_ids(sci.circuit, sci.polarization, -1), ValidationError);
}

TEST_CASE("circuit_to_ids on a valency-1 loop and on valency 3") {
  const SwitchingCircuit loop{{1}, {{1, 1, 1, 1, 1}}};
  const auto red = circuit_to_ids(loop, Polarization::unpolarized(loop), 1);
  CHECK(red.instance.ids.n == 1);
  CHECK(red.instance.pi.is_identity());
  CHECK(red.instance.ids.size() == 0);
  CHECK(red.instance.bound_k == 0);

  const SwitchingCircuit three{{1}, {{1, 1, 1, 1, 2}, {2, 1, 2, 1, 3}, {3, 1, 3, 1, 1}}};
  CHECK_THROWS_AS(circuit_to_ids(three, Polarization::unpolarized(three), 1), ValidationError);
}

TEST_CASE("routing cycles equal n minus the distance of the matching element") {
  testing::Rng rng(47);
  for (int k = 0; k < 40; ++k) {
    const auto rc = testing::random_circuit(rng, 8);
    const auto red = circuit_to_ids(rc.circuit, rc.polarization, 0);
    CHECK(validate_instance(red.instance) <= 3);
    for_each_routing(rc.circuit, rc.polarization, [&](const Routing& r, std::size_t cycles) {
      const auto eta = ids_element(red.instance.ids, routing_to_subset(red, r));
      CHECK(cycles == red.edges - cayley_distance(eta, red.instance.pi));
    });
    for (long long kk = 0; kk <= static_cast<long long>(red.edges); ++kk) {
      const auto at_k = circuit_to_ids(rc.circuit, rc.polarization, kk);
      CHECK(decide_routing(rc.circuit, rc.polarization, kk) == decide_distance(at_k.instance));
    }
  }
}

TEST_CASE("ids_to_circuit on the two-point example") {
  IdsDistanceInstance inst{{2, {{{1, 2}}}}, Permutation::from_images({2, 1}), 0};
  const auto red = ids_to_circuit(inst);
  CHECK(red.circuit.vertices == std::vector<VertexId>{1, 2, 3});
  CHECK(red.circuit.edges.size() == 4);
  CHECK(red.routing_k == 2);
  CHECK(red.polarization.classes == std::vector<std::vector<VertexId>>{{3}, {1}, {2}});
  CHECK(count_routing_cycles(red.circuit, red.polarization, subset_to_routing(red, 1)) == 2);
  CHECK(count_routing_cycles(red.circuit, red.polarization, subset_to_routing(red, 0)) == 1);
  CHECK(decide_routing(red.circuit, red.polarization, red.routing_k));
}

TEST_CASE("ids_to_circuit without generators uses pass-through edges") {
  IdsDistanceInstance inst{{4, {}}, Permutation::from_cycles(4, {{1, 2}}), 1};
  const auto red = ids_to_circuit(inst);
  CHECK(red.circuit.edges.size() == 4);
  CHECK(max_routing(red.circuit, red.polarization).max_cycles == cycle_count(inst.pi));
}

TEST_CASE("ids_to_circuit cycle correspondence and group elements") {
  testing::Rng rng(53);
  for (int k = 0; k < 60; ++k) {
    const auto inst = testing::random_ids_instance(rng, 9, 3, 3);
    const auto red = ids_to_circuit(inst);
    CHECK(validate_circuit(red.circuit, red.polarization).width == std::max<std::size_t>(1, validate_ids(inst.ids)));
    for (SubsetMask s = 0; s < (SubsetMask{1} << inst.ids.size()); ++s) {
      const auto r = subset_to_routing(red, s);
      const auto eta = routing_to_group_element(inst, r);
      CHECK(eta == ids_element(inst.ids, s));
      CHECK(count_routing_cycles(red.circuit, red.polarization, r) == cycle_count(inst.pi * eta));
      CHECK(cayley_distance(eta, inst.pi) ==
            inst.ids.n - count_routing_cycles(red.circuit, red.polarization, r));
    }
    CHECK(decide_distance(inst) == decide_routing(red.circuit, red.polarization, red.routing_k));
  }
}

TEST_CASE("routing_to_group_element edge cases") {
  IdsDistanceInstance inst{{6, {{{1, 2}, {3, 4}}, {{5, 6}}}}, Permutation::identity(6), 0};
  const auto red = ids_to_circuit(inst);
  CHECK(routing_to_group_element(inst, subset_to_routing(red, 0)).is_identity());
  CHECK(routing_to_group_element(inst, subset_to_routing(red, 3)) == ids_element(inst.ids, 3));
  auto r = subset_to_routing(red, 0);
  r.by_class[0] = Permutation::identity(3);
  CHECK_THROWS_AS(routing_to_group_element(inst, r), ValidationError);
  r.by_class.pop_back();
  CHECK_THROWS_AS(routing_to_group_element(inst, r), ValidationError);
}

TEST_CASE("ids -> circuit -> ids keeps every decision") {
  testing::Rng rng(59);
  for (int k = 0; k < 40; ++k) {
    auto inst = testing::random_ids_instance(rng, 7, 3, 3);
    for (long long bound = 0; bound <= static_cast<long long>(inst.ids.n); ++bound) {
      inst.bound_k = bound;
      const auto circ = ids_to_circuit(inst);
      const auto back = circuit_to_ids(circ.circuit, circ.polarization, circ.routing_k);
      CHECK(decide_distance(inst) == decide_distance(back.instance));
    }
  }
}

TEST_CASE("3-SAT to IDS composition has width at most 6") {
  testing::Rng rng(61);
  for (int k = 0; k < 30; ++k) {
    const auto f = compact_variables(testing::random_3sat(rng, 6, 6));
    const auto sci = sat_to_circuit(f);
    const auto red = circuit_to_ids(sci.circuit, sci.polarization, static_cast<long long>(sci.target_m));
    CHECK(validate_instance(red.instance) <= 6);
    for (std::size_t j = 0; j < red.instance.ids.size(); ++j) {
      CHECK(is_involution(generator_permutation(red.instance.ids, j)));
    }
  }
}
