#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cayley/circuit.hpp"
#include "cayley/reductions.hpp"

namespace cayley::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Circuit file: {"vertices": [{id, class}], "edges": [{id, tail, out_port,
/// head, in_port}], "classes": [[vertex ids]], optional "K"}.
struct CircuitFile {
  SwitchingCircuit circuit;
  Polarization polarization;
  std::optional<long long> k;
};

/// IDS file: {"n": n, "pi": [images], "generators": [[[x, y], ...], ...], optional "K"}.
struct IdsFile {
  IdsGeneratorSet ids;
  Permutation pi;
  std::optional<long long> k;

  IdsDistanceInstance instance() const;
};

Json parse_json(std::string_view text);

CircuitFile circuit_from_json(const Json& j);
Json circuit_to_json(const CircuitFile& file);

IdsFile ids_from_json(const Json& j);
Json ids_to_json(const IdsFile& file);
Json ids_to_json(const IdsDistanceInstance& inst);

Json permutation_to_json(const Permutation& p);
Json routing_to_json(const Routing& r);

/// Stable textual form: top-level members one per line, arrays of objects or
/// arrays one element per line, everything else compact. Ends with a newline.
std::string format_document(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace cayley::io
