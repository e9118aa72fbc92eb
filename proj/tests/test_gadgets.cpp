#include "doctest.h"

#include <algorithm>
#include <map>

#include "cayley/error.hpp"
#include "cayley/gadgets.hpp"
#include "test_support.hpp"

using namespace cayley;

namespace {

constexpr GadgetKind kAll[] = {GadgetKind::I, GadgetKind::E, GadgetKind::F, GadgetKind::G, GadgetKind::A};

std::vector<Literal> positive_slots(GadgetKind kind) {
  std::vector<Literal> slots;
  for (std::uint32_t s = 1; s <= gadget_arity(kind); ++s) slots.push_back(pos(s));
  return slots;
}

/// Cycle count of a fragment with the variable of slot s set to bit s of `values`.
std::size_t cycles_at(const GadgetFragment& g, std::uint32_t values) {
  const auto shape = validate_circuit(g.circuit, g.polarization);
  Routing r = identity_routing(shape);
  for (std::size_t s = 0; s < g.slots.size(); ++s) {
    if ((values >> s) & 1u) r.by_class[g.class_of_slot[s]] = Permutation::from_images({2, 1});
  }
  return count_routing_cycles(g.circuit, g.polarization, r);
}

std::size_t cycles_at(GadgetKind kind, std::vector<Literal> slots, std::uint32_t values) {
  return cycles_at(build_gadget(kind, slots), values);
}

}  // namespace

TEST_CASE("I gadget") {
  CHECK(cycles_at(GadgetKind::I, {pos(1)}, 1) == 2);
  CHECK(cycles_at(GadgetKind::I, {pos(1)}, 0) == 1);
  CHECK(cycles_at(GadgetKind::I, {neg(1)}, 0) == 2);
  CHECK(cycles_at(GadgetKind::I, {neg(1)}, 1) == 1);
  IdAllocator ids;
  const auto g = build_I(pos(4), ids);
  CHECK(g.circuit.vertices.size() == 1);
  CHECK(g.circuit.edges.size() == 2);
}

TEST_CASE("E gadget") {
  CHECK(cycles_at(GadgetKind::E, {pos(1), pos(2)}, 0b00) == 2);
  CHECK(cycles_at(GadgetKind::E, {pos(1), pos(2)}, 0b11) == 2);
  CHECK(cycles_at(GadgetKind::E, {pos(1), pos(2)}, 0b01) == 1);
  CHECK(cycles_at(GadgetKind::E, {pos(1), pos(2)}, 0b10) == 1);
  // E(~a, b) at a = 0, b = 1.
  CHECK(cycles_at(GadgetKind::E, {neg(1), pos(2)}, 0b10) == 2);
  IdAllocator ids;
  CHECK_THROWS_AS(build_E(pos(1), neg(1), ids), ValidationError);
}

TEST_CASE("F gadget") {
  CHECK(cycles_at(GadgetKind::F, {pos(1), pos(2)}, 0b01) == 2);
  CHECK(cycles_at(GadgetKind::F, {pos(1), pos(2)}, 0b10) == 2);
  CHECK(cycles_at(GadgetKind::F, {pos(1), pos(2)}, 0b11) == 3);
  CHECK(cycles_at(GadgetKind::F, {pos(1), pos(2)}, 0b00) == 1);
  IdAllocator ids;
  CHECK_THROWS_AS(build_F(pos(2), pos(2), ids), ValidationError);
}

TEST_CASE("G gadget is F(a, b) plus E(~a, b)") {
  CHECK(cycles_at(GadgetKind::G, {pos(1), pos(2)}, 0b00) == 2);
  CHECK(cycles_at(GadgetKind::G, {pos(1), pos(2)}, 0b01) == 4);
  for (std::uint32_t v = 0; v < 4; ++v) {
    for (const bool na : {false, true}) {
      const Literal a{1, na};
      const auto f = cycles_at(GadgetKind::F, {a, pos(2)}, v);
      const auto e = cycles_at(GadgetKind::E, {!a, pos(2)}, v);
      CHECK(cycles_at(GadgetKind::G, {a, pos(2)}, v) == f + e);
    }
  }
  IdAllocator ids;
  CHECK_THROWS_AS(build_G(neg(3), pos(3), ids), ValidationError);
}

TEST_CASE("A gadget") {
  CHECK(cycles_at(GadgetKind::A, {pos(1), pos(2), pos(3)}, 0b000) == 1);
  CHECK(cycles_at(GadgetKind::A, {pos(1), pos(2), pos(3)}, 0b001) == 3);
  std::map<std::size_t, int> histogram;
  for (std::uint32_t v = 0; v < 8; ++v) ++histogram[cycles_at(GadgetKind::A, {pos(1), pos(2), pos(3)}, v)];
  CHECK(histogram == std::map<std::size_t, int>{{1, 1}, {3, 7}});
  IdAllocator ids;
  CHECK_THROWS_AS(build_A(pos(1), pos(2), neg(1), ids), ValidationError);
}

TEST_CASE("verify_gadget_tables covers 22 rows with no mismatch") {
  const auto report = verify_gadget_tables();
  CHECK(report.rows.size() == 22);
  CHECK(report.mismatches() == 0);
  std::map<GadgetKind, int> per_kind;
  for (const auto& row : report.rows) ++per_kind[row.kind];
  CHECK(per_kind[GadgetKind::I] == 2);
  CHECK(per_kind[GadgetKind::E] == 4);
  CHECK(per_kind[GadgetKind::F] == 4);
  CHECK(per_kind[GadgetKind::G] == 4);
  CHECK(per_kind[GadgetKind::A] == 8);
  CHECK(describe_row(report.rows.back()) == "A(a=1,b=1,c=1)");
}

TEST_CASE("a corrupted gadget fails its truth table") {
  auto g = build_gadget(GadgetKind::I, positive_slots(GadgetKind::I));
  std::swap(g.circuit.edges[0].in_port, g.circuit.edges[1].in_port);
  const auto rows = gadget_truth_table(GadgetKind::I, g.circuit, g.polarization);
  CHECK(std::count_if(rows.begin(), rows.end(), [](const GadgetRow& r) { return !r.matches(); }) == 2);
  CHECK_THROWS_AS(gadget_truth_table(GadgetKind::E, g.circuit, g.polarization), ValidationError);
}

TEST_CASE("gadget structure: valency, class sizes, fresh ids") {
  const std::map<GadgetKind, std::vector<std::size_t>> sizes{
      {GadgetKind::I, {1}}, {GadgetKind::E, {1, 1}}, {GadgetKind::F, {1, 1}},
      {GadgetKind::G, {2, 2}}, {GadgetKind::A, {4, 4, 4}}};
  IdAllocator ids;
  std::size_t vertices = 0, edges = 0;
  for (const auto kind : kAll) {
    const auto before = ids;
    const auto g = build_gadget(kind, positive_slots(kind), ids);
    // Offset ids are only valid inside a larger circuit; validate a standalone copy.
    const auto standalone = build_gadget(kind, positive_slots(kind));
    const auto shape = validate_circuit(standalone.circuit, standalone.polarization);
    CHECK(shape.max_valency <= 2);
    std::vector<std::size_t> class_sizes;
    for (const auto& cls : g.polarization.classes) class_sizes.push_back(cls.size());
    CHECK(class_sizes == sizes.at(kind));
    CHECK(g.circuit.vertices.front() == before.next_vertex);
    CHECK(g.circuit.edges.front().id == before.next_edge);
    vertices += g.circuit.vertices.size();
    edges += g.circuit.edges.size();
  }
  CHECK(ids.next_vertex == vertices + 1);
  CHECK(ids.next_edge == edges + 1);
}

TEST_CASE("optimal routings count the satisfying assignments") {
  const std::map<GadgetKind, std::uint64_t> expected{
      {GadgetKind::I, 1}, {GadgetKind::E, 2}, {GadgetKind::F, 1}, {GadgetKind::G, 3}, {GadgetKind::A, 7}};
  for (const auto kind : kAll) {
    const auto g = build_gadget(kind, positive_slots(kind));
    const auto r = max_routing(g.circuit, g.polarization);
    CHECK(r.max_cycles == gadget_max_cycles(kind));
    CHECK(r.optimal_count == expected.at(kind));
  }
}

TEST_CASE("negating a slot flips that variable and exchanges its in-ports") {
  for (const auto kind : kAll) {
    const auto base_slots = positive_slots(kind);
    const auto base = build_gadget(kind, base_slots);
    for (std::size_t s = 0; s < base_slots.size(); ++s) {
      auto slots = base_slots;
      slots[s] = !slots[s];
      const auto negated = build_gadget(kind, slots);
      for (std::uint32_t v = 0; v < (1u << slots.size()); ++v) {
        CHECK(cycles_at(negated, v) == cycles_at(base, v ^ (1u << s)));
      }
      const auto& members = base.polarization.classes[s];
      REQUIRE(negated.circuit.edges.size() == base.circuit.edges.size());
      for (std::size_t k = 0; k < base.circuit.edges.size(); ++k) {
        auto e = base.circuit.edges[k];
        if (std::find(members.begin(), members.end(), e.head) != members.end()) e.in_port = 3 - e.in_port;
        CHECK(negated.circuit.edges[k] == e);
      }
    }
  }
}

// Reproduces how the frozen A table was obtained: random single-cycle
// successor tables over 12 vertices (rows a, b, c), kept when the routing
// table reads 1 at a = b = c = 0 and 3 everywhere else.
TEST_CASE("search finds a conformant A gadget") {
  testing::Rng rng(2024);
  const std::size_t kEdges = 24;
  bool found = false;
  for (int attempt = 0; attempt < 200000 && !found; ++attempt) {
    const auto succ = testing::random_permutation(rng, kEdges);
    if (cycle_count(succ) != 1) continue;
    SwitchingCircuit c;
    Polarization t{std::vector<std::vector<VertexId>>(3)};
    for (VertexId v = 1; v <= 12; ++v) {
      c.vertices.push_back(v);
      t.classes[(v - 1) % 3].push_back(v);
    }
    for (EdgeId e = 0; e < kEdges; ++e) {
      const auto next = succ(e + 1) - 1;
      c.edges.push_back({e + 1, e / 2 + 1, e % 2 + 1, next / 2 + 1, next % 2 + 1});
    }
    const auto rows = gadget_truth_table(GadgetKind::A, c, t);
    found = std::all_of(rows.begin(), rows.end(), [](const GadgetRow& r) { return r.matches(); });
  }
  CHECK(found);
}
