#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/circuit.hpp"
#include "cayley/sat.hpp"

namespace cayley {

/// Fresh-id source shared by every fragment of one circuit, so fragments
/// compose by disjoint union without renaming.
struct IdAllocator {
  VertexId next_vertex = 1;
  EdgeId next_edge = 1;
};

/// A small polarized circuit whose routing cycle count encodes a Boolean
/// function of its literal slots. Slot s owns polarization class s + 1.
struct GadgetFragment {
  SwitchingCircuit circuit;
  Polarization polarization;
  std::vector<Literal> slots;
  std::vector<std::size_t> class_of_slot;
};

enum class GadgetKind { I, E, F, G, A };

std::string_view gadget_name(GadgetKind kind);
GadgetKind gadget_from_name(std::string_view name);
std::size_t gadget_arity(GadgetKind kind);
/// Cycle count required of the gadget when slot s evaluates to bit s of `values`.
std::size_t gadget_expected_cycles(GadgetKind kind, std::uint32_t values);
/// Largest value of gadget_expected_cycles, the gadget's share of the target M.
std::size_t gadget_max_cycles(GadgetKind kind);

/// Two edges through one vertex: 2 cycles when the literal is true, else 1.
GadgetFragment build_I(Literal a, IdAllocator& ids);
/// 2 cycles when both literals agree, else 1.
GadgetFragment build_E(Literal a, Literal b, IdAllocator& ids);
/// 1 cycle when both false, 2 when they differ, 3 when both true.
GadgetFragment build_F(Literal a, Literal b, IdAllocator& ids);
/// F(a, b) alongside E(~a, b): 2 cycles when both false, else 4.
GadgetFragment build_G(Literal a, Literal b, IdAllocator& ids);
/// Four vertices per literal: 1 cycle when all three are false, else 3.
GadgetFragment build_A(Literal a, Literal b, Literal c, IdAllocator& ids);

GadgetFragment build_gadget(GadgetKind kind, std::span<const Literal> slots, IdAllocator& ids);
GadgetFragment build_gadget(GadgetKind kind, std::span<const Literal> slots);

struct GadgetRow {
  GadgetKind kind = GadgetKind::I;
  std::uint32_t values = 0;  // bit s = truth value of slot s
  std::size_t expected = 0;
  std::size_t actual = 0;
  bool matches() const noexcept { return expected == actual; }
};

/// Routes `circuit` over every assignment of its first `arity` classes (class
/// s swapped iff bit s is set) and compares with the table for `kind`.
/// The circuit must have exactly gadget_arity(kind) classes of valency 2.
std::vector<GadgetRow> gadget_truth_table(GadgetKind kind, const SwitchingCircuit& circuit,
                                          const Polarization& polarization);

struct GadgetReport {
  std::vector<GadgetRow> rows;
  std::size_t mismatches() const;
};

/// Tabulates I, E, F, G and A over positive literals. The report is returned
/// when every row matches; otherwise VerificationError names the first bad row.
GadgetReport verify_gadget_tables();

/// "A(a=1,b=0,c=0)" style label for a row.
std::string describe_row(const GadgetRow& row);

}  // namespace cayley
