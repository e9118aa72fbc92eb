#include "cayley/gadgets.hpp"

#include <array>
#include <string>

#include "cayley/error.hpp"

namespace cayley {
namespace {

/// Template vertex v owns edges 2v (out-port 1) and 2v + 1 (out-port 2).
/// Under the identity routing edge e continues as edge successor[e], so
/// edge e enters vertex successor[e] / 2 on in-port successor[e] % 2 + 1.
/// An inverted vertex has its two in-ports exchanged.
struct Template {
  std::vector<std::uint8_t> slot;
  std::vector<bool> inverted;
  std::vector<std::uint8_t> successor;
};

const Template& template_for(GadgetKind kind) {
  static const Template kI{{0}, {false}, {1, 0}};
  static const Template kE{{0, 1}, {false, false}, {2, 3, 0, 1}};
  static const Template kF{{0, 1}, {false, false}, {1, 2, 3, 0}};
  static const Template kG{{0, 1, 0, 1}, {false, false, true, false}, {1, 2, 3, 0, 6, 7, 4, 5}};
  // Rows of (a, b, c), found by search over single-cycle successor tables and
  // checked on every build by verify_gadget_tables.
  static const Template kA{
      {0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2},
      std::vector<bool>(12, false),
      {15, 22, 11, 9, 7, 6, 19, 13, 18, 17, 4, 1, 2, 14, 5, 3, 0, 12, 16, 23, 10, 20, 21, 8}};
  switch (kind) {
    case GadgetKind::I: return kI;
    case GadgetKind::E: return kE;
    case GadgetKind::F: return kF;
    case GadgetKind::G: return kG;
    case GadgetKind::A: return kA;
  }
  throw Error("unknown gadget kind");
}

GadgetFragment instantiate(GadgetKind kind, std::span<const Literal> slots, IdAllocator& ids) {
  if (slots.size() != gadget_arity(kind)) {
    throw ValidationError(std::string("gadget ") + std::string(gadget_name(kind)) + " takes " +
                          std::to_string(gadget_arity(kind)) + " literals");
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (std::size_t j = i + 1; j < slots.size(); ++j) {
      if (slots[i].variable == slots[j].variable) {
        throw ValidationError(std::string("gadget ") + std::string(gadget_name(kind)) +
                              " repeats variable " + std::to_string(slots[i].variable));
      }
    }
  }
  const Template& tpl = template_for(kind);
  const VertexId vbase = ids.next_vertex;
  const EdgeId ebase = ids.next_edge;
  const auto nv = static_cast<std::uint32_t>(tpl.slot.size());

  GadgetFragment g;
  g.slots.assign(slots.begin(), slots.end());
  g.polarization.classes.resize(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) g.class_of_slot.push_back(s);
  for (std::uint32_t v = 0; v < nv; ++v) {
    g.circuit.vertices.push_back(vbase + v);
    g.polarization.classes[tpl.slot[v]].push_back(vbase + v);
  }
  for (std::uint32_t e = 0; e < tpl.successor.size(); ++e) {
    const std::uint32_t next = tpl.successor[e];
    const std::uint32_t head = next / 2;
    Port in_port = next % 2 + 1;
    if (tpl.inverted[head] != slots[tpl.slot[head]].negated) in_port = 3 - in_port;
    g.circuit.edges.push_back({ebase + e, vbase + e / 2, e % 2 + 1, vbase + head, in_port});
  }
  ids.next_vertex += nv;
  ids.next_edge += static_cast<EdgeId>(tpl.successor.size());
  return g;
}

}  // namespace

std::string_view gadget_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::I: return "I";
    case GadgetKind::E: return "E";
    case GadgetKind::F: return "F";
    case GadgetKind::G: return "G";
    case GadgetKind::A: return "A";
  }
  return "?";
}

GadgetKind gadget_from_name(std::string_view name) {
  for (auto k : {GadgetKind::I, GadgetKind::E, GadgetKind::F, GadgetKind::G, GadgetKind::A}) {
    if (gadget_name(k) == name) return k;
  }
  throw ValidationError("unknown gadget '" + std::string(name) + "'");
}

std::size_t gadget_arity(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::I: return 1;
    case GadgetKind::A: return 3;
    default: return 2;
  }
}

std::size_t gadget_expected_cycles(GadgetKind kind, std::uint32_t values) {
  const bool a = values & 1u;
  const bool b = values & 2u;
  const bool c = values & 4u;
  switch (kind) {
    case GadgetKind::I: return a ? 2 : 1;
    case GadgetKind::E: return a == b ? 2 : 1;
    case GadgetKind::F: return a != b ? 2 : (a ? 3 : 1);
    case GadgetKind::G: return (!a && !b) ? 2 : 4;
    case GadgetKind::A: return (!a && !b && !c) ? 1 : 3;
  }
  return 0;
}

std::size_t gadget_max_cycles(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::I: return 2;
    case GadgetKind::E: return 2;
    case GadgetKind::F: return 3;
    case GadgetKind::G: return 4;
    case GadgetKind::A: return 3;
  }
  return 0;
}

GadgetFragment build_I(Literal a, IdAllocator& ids) {
  const std::array slots{a};
  return instantiate(GadgetKind::I, slots, ids);
}

GadgetFragment build_E(Literal a, Literal b, IdAllocator& ids) {
  const std::array slots{a, b};
  return instantiate(GadgetKind::E, slots, ids);
}

GadgetFragment build_F(Literal a, Literal b, IdAllocator& ids) {
  const std::array slots{a, b};
  return instantiate(GadgetKind::F, slots, ids);
}

GadgetFragment build_G(Literal a, Literal b, IdAllocator& ids) {
  const std::array slots{a, b};
  return instantiate(GadgetKind::G, slots, ids);
}

GadgetFragment build_A(Literal a, Literal b, Literal c, IdAllocator& ids) {
  const std::array slots{a, b, c};
  return instantiate(GadgetKind::A, slots, ids);
}

GadgetFragment build_gadget(GadgetKind kind, std::span<const Literal> slots, IdAllocator& ids) {
  return instantiate(kind, slots, ids);
}

GadgetFragment build_gadget(GadgetKind kind, std::span<const Literal> slots) {
  IdAllocator ids;
  return instantiate(kind, slots, ids);
}

std::vector<GadgetRow> gadget_truth_table(GadgetKind kind, const SwitchingCircuit& circuit,
                                          const Polarization& polarization) {
  const auto shape = validate_circuit(circuit, polarization);
  const std::size_t arity = gadget_arity(kind);
  if (shape.class_valency.size() != arity) {
    throw ValidationError(std::string("gadget ") + std::string(gadget_name(kind)) + " needs " +
                          std::to_string(arity) + " classes, circuit has " +
                          std::to_string(shape.class_valency.size()));
  }
  for (std::size_t k = 0; k < arity; ++k) {
    if (shape.class_valency[k] != 2) {
      throw ValidationError("gadget class " + std::to_string(k + 1) + " is not of valency 2");
    }
  }
  const auto swap = Permutation::from_images({2, 1});
  std::vector<GadgetRow> rows;
  for (std::uint32_t values = 0; values < (1u << arity); ++values) {
    Routing r = identity_routing(shape);
    for (std::size_t s = 0; s < arity; ++s) {
      if ((values >> s) & 1u) r.by_class[s] = swap;
    }
    rows.push_back({kind, values, gadget_expected_cycles(kind, values),
                    count_routing_cycles(circuit, polarization, r)});
  }
  return rows;
}

std::size_t GadgetReport::mismatches() const {
  std::size_t bad = 0;
  for (const auto& row : rows) bad += !row.matches();
  return bad;
}

GadgetReport verify_gadget_tables() {
  GadgetReport report;
  for (auto kind : {GadgetKind::I, GadgetKind::E, GadgetKind::F, GadgetKind::G, GadgetKind::A}) {
    std::vector<Literal> slots;
    for (std::uint32_t s = 1; s <= gadget_arity(kind); ++s) slots.push_back(pos(s));
    const auto g = build_gadget(kind, slots);
    for (const auto& row : gadget_truth_table(kind, g.circuit, g.polarization)) {
      if (!row.matches()) {
        throw VerificationError("gadget table mismatch at " + describe_row(row) + ": expected " +
                                std::to_string(row.expected) + " cycles, got " +
                                std::to_string(row.actual));
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

std::string describe_row(const GadgetRow& row) {
  static constexpr std::array<char, 3> kNames{'a', 'b', 'c'};
  std::string out(gadget_name(row.kind));
  out += '(';
  for (std::size_t s = 0; s < gadget_arity(row.kind); ++s) {
    if (s) out += ',';
    out += kNames[s];
    out += '=';
    out += ((row.values >> s) & 1u) ? '1' : '0';
  }
  out += ')';
  return out;
}

}  // namespace cayley
