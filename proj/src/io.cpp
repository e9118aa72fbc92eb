#include "cayley/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley::io {
namespace {

template <class T>
T get_field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string(where) + " is missing \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string(where) + " field \"" + key + "\" has the wrong type");
  }
}

std::optional<long long> optional_k(const Json& j) {
  if (!j.contains("K")) return std::nullopt;
  return get_field<long long>(j, "K", "instance");
}

std::uint32_t positive(long long v, const char* what) {
  if (v < 1 || v > std::numeric_limits<std::uint32_t>::max()) {
    throw ValidationError(std::string(what) + " must be a positive integer, got " + std::to_string(v));
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

IdsDistanceInstance IdsFile::instance() const { return {ids, pi, k.value_or(0)}; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
}

CircuitFile circuit_from_json(const Json& j) {
  CircuitFile file;
  const auto vertices = get_field<Json>(j, "vertices", "circuit");
  const auto edges = get_field<Json>(j, "edges", "circuit");
  const auto classes = get_field<Json>(j, "classes", "circuit");
  if (!vertices.is_array() || !edges.is_array() || !classes.is_array()) {
    throw ValidationError("circuit vertices, edges and classes must be arrays");
  }
  std::vector<std::pair<VertexId, std::uint32_t>> declared;
  for (const auto& v : vertices) {
    const auto id = positive(get_field<long long>(v, "id", "vertex"), "vertex id");
    const auto cls = positive(get_field<long long>(v, "class", "vertex"), "vertex class");
    file.circuit.vertices.push_back(id);
    declared.emplace_back(id, cls);
  }
  for (const auto& e : edges) {
    file.circuit.edges.push_back({positive(get_field<long long>(e, "id", "edge"), "edge id"),
                                  positive(get_field<long long>(e, "tail", "edge"), "edge tail"),
                                  positive(get_field<long long>(e, "out_port", "edge"), "out_port"),
                                  positive(get_field<long long>(e, "head", "edge"), "edge head"),
                                  positive(get_field<long long>(e, "in_port", "edge"), "in_port")});
  }
  for (const auto& cls : classes) {
    if (!cls.is_array()) throw ValidationError("each class must be an array of vertex ids");
    std::vector<VertexId> members;
    for (const auto& v : cls) {
      if (!v.is_number_integer()) throw ValidationError("class members must be integers");
      members.push_back(positive(v.get<long long>(), "class member"));
    }
    file.polarization.classes.push_back(std::move(members));
  }
  for (const auto& [id, cls] : declared) {
    const auto& members = cls <= file.polarization.classes.size()
                              ? file.polarization.classes[cls - 1]
                              : std::vector<VertexId>{};
    if (std::find(members.begin(), members.end(), id) == members.end()) {
      throw ValidationError("vertex " + std::to_string(id) + " declares class " + std::to_string(cls) +
                            " but is not listed in it");
    }
  }
  file.k = optional_k(j);
  return file;
}

Json circuit_to_json(const CircuitFile& file) {
  auto class_for = [&](VertexId v) -> std::size_t {
    for (std::size_t k = 0; k < file.polarization.classes.size(); ++k) {
      const auto& cls = file.polarization.classes[k];
      if (std::find(cls.begin(), cls.end(), v) != cls.end()) return k + 1;
    }
    throw ValidationError("vertex " + std::to_string(v) + " is in no class");
  };
  Json j;
  j["vertices"] = Json::array();
  for (const VertexId v : file.circuit.vertices) j["vertices"].push_back({{"id", v}, {"class", class_for(v)}});
  j["edges"] = Json::array();
  for (const auto& e : file.circuit.edges) {
    j["edges"].push_back({{"id", e.id},
                          {"tail", e.tail},
                          {"out_port", e.out_port},
                          {"head", e.head},
                          {"in_port", e.in_port}});
  }
  j["classes"] = Json::array();
  for (const auto& cls : file.polarization.classes) j["classes"].push_back(cls);
  if (file.k) j["K"] = *file.k;
  return j;
}

IdsFile ids_from_json(const Json& j) {
  IdsFile file;
  const auto n = get_field<long long>(j, "n", "ids instance");
  if (n < 1) throw ValidationError("ids instance n must be positive");
  file.ids.n = static_cast<std::size_t>(n);
  const auto images = get_field<std::vector<long long>>(j, "pi", "ids instance");
  if (images.size() != file.ids.n) {
    throw ValidationError("pi has " + std::to_string(images.size()) + " images, n = " + std::to_string(n));
  }
  std::vector<Point> pts;
  for (auto v : images) pts.push_back(positive(v, "pi image"));
  file.pi = Permutation::from_images(pts);
  const auto gens = get_field<Json>(j, "generators", "ids instance");
  if (!gens.is_array()) throw ValidationError("generators must be an array");
  for (const auto& g : gens) {
    Involution gamma;
    std::vector<std::vector<long long>> pairs;
    try {
      pairs = g.get<std::vector<std::vector<long long>>>();
    } catch (const nlohmann::json::exception&) {
      throw ValidationError("each generator must be a list of [x, y] pairs");
    }
    for (const auto& pr : pairs) {
      if (pr.size() != 2) throw ValidationError("transpositions must have exactly two points");
      gamma.push_back({positive(pr[0], "transposition point"), positive(pr[1], "transposition point")});
    }
    file.ids.generators.push_back(std::move(gamma));
  }
  file.k = optional_k(j);
  return file;
}

Json ids_to_json(const IdsFile& file) {
  Json j;
  j["n"] = file.ids.n;
  j["pi"] = permutation_to_json(file.pi);
  j["generators"] = Json::array();
  for (const auto& gamma : file.ids.generators) {
    Json g = Json::array();
    for (const auto& [x, y] : gamma) g.push_back({x, y});
    j["generators"].push_back(std::move(g));
  }
  if (file.k) j["K"] = *file.k;
  return j;
}

Json ids_to_json(const IdsDistanceInstance& inst) {
  return ids_to_json(IdsFile{inst.ids, inst.pi, inst.bound_k});
}

Json permutation_to_json(const Permutation& p) { return p.images(); }

Json routing_to_json(const Routing& r) {
  Json out = Json::array();
  for (const auto& p : r.by_class) out.push_back(p.images());
  return out;
}

std::string format_document(const Json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::ostringstream out;
  out << "{\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out << "  " << Json(it.key()).dump() << ": ";
    const auto& v = it.value();
    const bool nested = v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array());
    if (nested) {
      out << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << "    " << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
      }
      out << "  ]";
    } else {
      out << v.dump();
    }
    out << (k + 1 < j.size() ? ",\n" : "\n");
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace cayley::io
