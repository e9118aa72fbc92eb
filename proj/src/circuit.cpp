#include "cayley/circuit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "cayley/error.hpp"

namespace cayley {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::string vstr(VertexId v) { return "vertex " + std::to_string(v); }

/// Index-based view of a validated circuit.
struct Compiled {
  CircuitShape shape;
  std::vector<std::uint32_t> head;     // edge index -> vertex index
  std::vector<std::uint32_t> in_port;  // edge index -> 0-based in-port
  std::vector<std::vector<std::uint32_t>> out_edge;  // vertex index, 0-based port -> edge index
  std::vector<std::uint32_t> class_of;  // vertex index -> class index
};

Compiled compile(const SwitchingCircuit& c, const Polarization& t) {
  Compiled out;
  std::unordered_map<VertexId, std::uint32_t> index;
  for (const VertexId v : c.vertices) {
    if (v == 0) throw ValidationError("vertex ids must be positive");
    if (!index.emplace(v, static_cast<std::uint32_t>(index.size())).second) {
      throw ValidationError("duplicate " + vstr(v));
    }
  }
  const std::size_t nv = c.vertices.size();
  const std::size_t ne = c.edges.size();

  std::vector<std::vector<const Edge*>> outs(nv), ins(nv);
  std::vector<const Edge*> by_id(ne, nullptr);
  for (const auto& e : c.edges) {
    if (e.id < 1 || e.id > ne) {
      throw ValidationError("edge id " + std::to_string(e.id) + " outside 1.." + std::to_string(ne));
    }
    if (by_id[e.id - 1]) throw ValidationError("duplicate edge id " + std::to_string(e.id));
    by_id[e.id - 1] = &e;
    const auto tail = index.find(e.tail);
    const auto head = index.find(e.head);
    if (tail == index.end() || head == index.end()) {
      throw ValidationError("edge " + std::to_string(e.id) + " references an unknown vertex");
    }
    outs[tail->second].push_back(&e);
    ins[head->second].push_back(&e);
  }

  out.head.assign(ne, 0);
  out.in_port.assign(ne, 0);
  out.out_edge.resize(nv);
  std::vector<std::size_t> valency(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const VertexId id = c.vertices[v];
    const std::size_t d = outs[v].size();
    if (ins[v].size() != d) {
      throw ValidationError(vstr(id) + " has in-valency " + std::to_string(ins[v].size()) +
                            " but out-valency " + std::to_string(d));
    }
    if (d == 0) throw ValidationError(vstr(id) + " has valency 0");
    valency[v] = d;
    out.out_edge[v].assign(d, kUnset);
    for (const Edge* e : outs[v]) {
      if (e->out_port < 1 || e->out_port > d) {
        throw ValidationError("edge " + std::to_string(e->id) + " out-port " +
                              std::to_string(e->out_port) + " outside 1.." + std::to_string(d) +
                              " at " + vstr(id));
      }
      auto& slot = out.out_edge[v][e->out_port - 1];
      if (slot != kUnset) {
        throw ValidationError(vstr(id) + " has two out-edges labelled " + std::to_string(e->out_port));
      }
      slot = e->id - 1;
    }
    std::vector<bool> in_seen(d, false);
    for (const Edge* e : ins[v]) {
      if (e->in_port < 1 || e->in_port > d) {
        throw ValidationError("edge " + std::to_string(e->id) + " in-port " +
                              std::to_string(e->in_port) + " outside 1.." + std::to_string(d) +
                              " at " + vstr(id));
      }
      if (in_seen[e->in_port - 1]) {
        throw ValidationError(vstr(id) + " has two in-edges labelled " + std::to_string(e->in_port));
      }
      in_seen[e->in_port - 1] = true;
      out.head[e->id - 1] = static_cast<std::uint32_t>(v);
      out.in_port[e->id - 1] = e->in_port - 1;
    }
  }

  out.class_of.assign(nv, kUnset);
  auto& shape = out.shape;
  for (std::size_t k = 0; k < t.classes.size(); ++k) {
    const auto& cls = t.classes[k];
    if (cls.empty()) throw ValidationError("class " + std::to_string(k + 1) + " is empty");
    std::size_t class_valency = 0;
    for (const VertexId v : cls) {
      const auto it = index.find(v);
      if (it == index.end()) {
        throw ValidationError("class " + std::to_string(k + 1) + " names unknown " + vstr(v));
      }
      if (out.class_of[it->second] != kUnset) {
        throw ValidationError(vstr(v) + " appears in more than one class");
      }
      out.class_of[it->second] = static_cast<std::uint32_t>(k);
      const std::size_t d = valency[it->second];
      if (class_valency == 0) {
        class_valency = d;
      } else if (class_valency != d) {
        throw ValidationError("class " + std::to_string(k + 1) + " mixes valencies " +
                              std::to_string(class_valency) + " and " + std::to_string(d));
      }
    }
    shape.class_valency.push_back(class_valency);
    shape.width = std::max(shape.width, cls.size());
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (out.class_of[v] == kUnset) throw ValidationError(vstr(c.vertices[v]) + " is in no class");
    shape.max_valency = std::max(shape.max_valency, valency[v]);
  }
  return out;
}

std::size_t cycles_for(const Compiled& cc, const std::vector<std::vector<std::uint32_t>>& perms,
                       std::vector<std::uint32_t>& scratch) {
  const std::size_t ne = cc.head.size();
  scratch.resize(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    const auto v = cc.head[e];
    scratch[e] = cc.out_edge[v][perms[cc.class_of[v]][cc.in_port[e]]];
  }
  return cycle_count(scratch);
}

std::vector<std::vector<std::uint32_t>> raw_perms(const Routing& r) {
  std::vector<std::vector<std::uint32_t>> perms;
  for (const auto& p : r.by_class) perms.emplace_back(p.raw().begin(), p.raw().end());
  return perms;
}

Routing to_routing(const std::vector<std::vector<std::uint32_t>>& perms) {
  Routing r;
  r.by_class.reserve(perms.size());
  std::vector<Point> images;
  for (const auto& p : perms) {
    images.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) images[i] = p[i] + 1;
    r.by_class.push_back(Permutation::from_images(images));
  }
  return r;
}

template <class Visit>
void enumerate_raw(const Compiled& cc, std::uint64_t max_routings, Visit&& visit) {
  const auto& shape = cc.shape;
  const std::uint64_t space = routing_space_size(shape);
  if (space > max_routings) {
    throw CapExceeded("routing space of size " +
                      (space == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                          : std::to_string(space)) +
                      " exceeds cap " + std::to_string(max_routings));
  }
  std::vector<std::vector<std::uint32_t>> perms(shape.class_valency.size());
  for (std::size_t k = 0; k < perms.size(); ++k) {
    perms[k].resize(shape.class_valency[k]);
    std::iota(perms[k].begin(), perms[k].end(), 0u);
  }
  std::vector<std::uint32_t> scratch;
  while (true) {
    visit(perms, cycles_for(cc, perms, scratch));
    std::size_t k = perms.size();
    while (k > 0 && !std::next_permutation(perms[k - 1].begin(), perms[k - 1].end())) --k;
    if (k == 0) return;
  }
}

}  // namespace

Polarization Polarization::unpolarized(const SwitchingCircuit& c) {
  Polarization t;
  for (const VertexId v : c.vertices) t.classes.push_back({v});
  return t;
}

CircuitShape validate_circuit(const SwitchingCircuit& c, const Polarization& t) {
  if (c.vertices.empty()) throw ValidationError("circuit has no vertices");
  return compile(c, t).shape;
}

void validate_routing(const CircuitShape& shape, const Routing& r) {
  if (r.by_class.size() != shape.class_valency.size()) {
    throw ValidationError("routing covers " + std::to_string(r.by_class.size()) + " classes, expected " +
                          std::to_string(shape.class_valency.size()));
  }
  for (std::size_t k = 0; k < r.by_class.size(); ++k) {
    if (r.by_class[k].degree() != shape.class_valency[k]) {
      throw ValidationError("routing for class " + std::to_string(k + 1) + " has degree " +
                            std::to_string(r.by_class[k].degree()) + ", class valency is " +
                            std::to_string(shape.class_valency[k]));
    }
  }
}

Permutation successor_permutation(const SwitchingCircuit& c, const Polarization& t, const Routing& r) {
  const auto cc = compile(c, t);
  validate_routing(cc.shape, r);
  std::vector<std::uint32_t> scratch;
  cycles_for(cc, raw_perms(r), scratch);
  std::vector<Point> images(scratch.size());
  for (std::size_t e = 0; e < scratch.size(); ++e) images[e] = scratch[e] + 1;
  return Permutation::from_images(images);
}

std::size_t count_routing_cycles(const SwitchingCircuit& c, const Polarization& t, const Routing& r) {
  const auto cc = compile(c, t);
  validate_routing(cc.shape, r);
  std::vector<std::uint32_t> scratch;
  return cycles_for(cc, raw_perms(r), scratch);
}

Routing identity_routing(const CircuitShape& shape) {
  Routing r;
  for (const auto d : shape.class_valency) r.by_class.push_back(Permutation::identity(d));
  return r;
}

std::uint64_t routing_space_size(const CircuitShape& shape) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto d : shape.class_valency) {
    for (std::uint64_t f = 2; f <= d; ++f) {
      if (total > kMax / f) return kMax;
      total *= f;
    }
  }
  return total;
}

void for_each_routing(const SwitchingCircuit& c, const Polarization& t,
                      const std::function<void(const Routing&, std::size_t)>& visit,
                      std::uint64_t max_routings) {
  const auto cc = compile(c, t);
  enumerate_raw(cc, max_routings,
                [&](const auto& perms, std::size_t cycles) { visit(to_routing(perms), cycles); });
}

std::vector<Routing> enumerate_routings(const SwitchingCircuit& c, const Polarization& t,
                                        std::uint64_t max_routings) {
  std::vector<Routing> out;
  for_each_routing(c, t, [&](const Routing& r, std::size_t) { out.push_back(r); }, max_routings);
  return out;
}

MaxRoutingResult max_routing(const SwitchingCircuit& c, const Polarization& t,
                             std::uint64_t max_routings) {
  const auto cc = compile(c, t);
  MaxRoutingResult best;
  bool first = true;
  enumerate_raw(cc, max_routings, [&](const auto& perms, std::size_t cycles) {
    if (first || cycles > best.max_cycles) {
      best.max_cycles = cycles;
      best.optimal_count = 1;
      best.witness = to_routing(perms);
      first = false;
    } else if (cycles == best.max_cycles) {
      ++best.optimal_count;
    }
  });
  return best;
}

bool decide_routing(const SwitchingCircuit& c, const Polarization& t, long long k,
                    std::uint64_t max_routings) {
  return static_cast<long long>(max_routing(c, t, max_routings).max_cycles) >= k;
}

}  // namespace cayley
