#include "cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"

#include "cayley/circuit.hpp"
#include "cayley/error.hpp"
#include "cayley/gadgets.hpp"
#include "cayley/io.hpp"
#include "cayley/reductions.hpp"
#include "cayley/sat.hpp"
#include "cayley/solvers.hpp"

namespace cayley::cli {
namespace {

using io::Json;

struct Caps {
  std::size_t max_vars = kDefaultMaxVars;
  std::uint64_t max_routings = kDefaultMaxRoutings;
  std::size_t max_subsets = kDefaultMaxSubsetBits;
};

struct Options {
  Caps caps;
  bool json = false;
  std::optional<long long> k;
  std::string input;
  std::string output;
  std::string manifest;
  std::string reduce_kind;
  std::string fixture;
};

Json report_header(const char* command) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Options& opt, const Json& report) {
  if (opt.json) {
    out << io::format_document(report);
    return;
  }
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "schema_version") continue;
    out << it.key() << ": ";
    if (it.value().is_string()) {
      out << it.value().get<std::string>();
    } else {
      out << it.value().dump();
    }
    out << '\n';
  }
}

Json subset_to_json(SubsetMask subset, std::size_t t) {
  Json out = Json::array();
  for (std::size_t j = 0; j < t; ++j) {
    if ((subset >> j) & 1u) out.push_back(j + 1);
  }
  return out;
}

CnfFormula read_cnf(const std::string& path) { return parse_dimacs(io::read_file(path)); }

io::CircuitFile read_circuit(const std::string& path) {
  return io::circuit_from_json(io::parse_json(io::read_file(path)));
}

io::IdsFile read_ids(const std::string& path) {
  return io::ids_from_json(io::parse_json(io::read_file(path)));
}

int solve_distance(const Options& opt, std::ostream& out) {
  auto file = read_ids(opt.input);
  if (opt.k) file.k = opt.k;
  const auto inst = file.instance();
  const std::size_t width = validate_instance(inst);
  const auto result = distance_to_ids_subgroup(inst, opt.caps.max_subsets);

  Json report = report_header("solve distance");
  report["n"] = inst.ids.n;
  report["generators"] = inst.ids.size();
  report["width"] = width;
  report["distance"] = result.distance;
  report["witness_subset"] = subset_to_json(result.witness, inst.ids.size());
  report["witness_permutation"] = io::permutation_to_json(result.witness_element);
  report["optimal_count"] = result.optimal_count;
  int code = kYes;
  if (file.k) {
    const bool yes = static_cast<long long>(result.distance) <= *file.k;
    report["K"] = *file.k;
    report["decision"] = yes ? "yes" : "no";
    code = yes ? kYes : kNo;
  }
  emit(out, opt, report);
  return code;
}

int solve_routing(const Options& opt, std::ostream& out) {
  auto file = read_circuit(opt.input);
  if (opt.k) file.k = opt.k;
  const auto shape = validate_circuit(file.circuit, file.polarization);
  const auto result = max_routing(file.circuit, file.polarization, opt.caps.max_routings);

  Json report = report_header("solve routing");
  report["vertices"] = file.circuit.vertices.size();
  report["edges"] = file.circuit.edges.size();
  report["width"] = shape.width;
  report["max_valency"] = shape.max_valency;
  report["routings"] = routing_space_size(shape);
  report["max_cycles"] = result.max_cycles;
  report["optimal_count"] = result.optimal_count;
  report["witness_routing"] = io::routing_to_json(result.witness);
  int code = kYes;
  if (file.k) {
    const bool yes = static_cast<long long>(result.max_cycles) >= *file.k;
    report["K"] = *file.k;
    report["decision"] = yes ? "yes" : "no";
    code = yes ? kYes : kNo;
  }
  emit(out, opt, report);
  return code;
}

std::string manifest_path(const Options& opt) {
  return opt.manifest.empty() ? opt.output + ".manifest.json" : opt.manifest;
}

int reduce(const Options& opt, std::ostream& out) {
  Json manifest = report_header(("reduce " + opt.reduce_kind).c_str());
  std::string instance_text;
  if (opt.reduce_kind == "sat2circuit") {
    const auto original = read_cnf(opt.input);
    const auto normalized = normalize_3sat(original);
    const auto sci = sat_to_circuit(normalized.formula);
    const auto shape = validate_circuit(sci.circuit, sci.polarization);
    instance_text = io::format_document(io::circuit_to_json(
        {sci.circuit, sci.polarization, static_cast<long long>(sci.target_m)}));
    std::size_t occurring = compact_variables(normalized.formula).num_variables;
    manifest["original_variables"] = original.num_variables;
    manifest["free_variables"] = original.num_variables - occurring;
    manifest["tautologies_removed"] = normalized.tautologies_removed;
    manifest["variables"] = sci.split.formula.num_variables;
    manifest["b"] = sci.b;
    manifest["g"] = sci.g;
    manifest["i"] = sci.i;
    manifest["e"] = sci.e;
    manifest["M"] = sci.target_m;
    manifest["vertices"] = sci.circuit.vertices.size();
    manifest["edges"] = sci.circuit.edges.size();
    manifest["width"] = sci.circuit.vertices.empty() ? 0 : shape.width;
    manifest["classes"] = Json::array();
    for (std::size_t k = 0; k < sci.class_to_variable.size(); ++k) {
      const auto y = sci.class_to_variable[k];
      const auto& origin = sci.split.origin[y - 1];
      manifest["classes"].push_back(
          {{"class", k + 1}, {"variable", y}, {"original", origin.variable}, {"occurrence", origin.index}});
    }
  } else if (opt.reduce_kind == "circuit2ids") {
    auto file = read_circuit(opt.input);
    if (opt.k) file.k = opt.k;
    if (!file.k) throw ValidationError("circuit2ids needs a routing target: pass --K or add \"K\"");
    const auto red = circuit_to_ids(file.circuit, file.polarization, *file.k);
    instance_text = io::format_document(io::ids_to_json(red.instance));
    manifest["edges"] = red.edges;
    manifest["n"] = red.instance.ids.n;
    manifest["K_routing"] = *file.k;
    manifest["K_distance"] = red.instance.bound_k;
    manifest["width"] = validate_instance(red.instance);
    manifest["generators"] = Json::array();
    for (std::size_t j = 0; j < red.generator_class.size(); ++j) {
      manifest["generators"].push_back({{"generator", j + 1}, {"class", red.generator_class[j] + 1}});
    }
  } else if (opt.reduce_kind == "ids2circuit") {
    auto file = read_ids(opt.input);
    if (opt.k) file.k = opt.k;
    if (!file.k) throw ValidationError("ids2circuit needs a distance bound: pass --K or add \"K\"");
    const auto inst = file.instance();
    const auto red = ids_to_circuit(inst);
    const auto shape = validate_circuit(red.circuit, red.polarization);
    instance_text = io::format_document(io::circuit_to_json({red.circuit, red.polarization, red.routing_k}));
    manifest["n"] = red.points;
    manifest["K_distance"] = inst.bound_k;
    manifest["K_routing"] = red.routing_k;
    manifest["vertices"] = red.circuit.vertices.size();
    manifest["edges"] = red.circuit.edges.size();
    manifest["width"] = shape.width;
    manifest["generator_classes"] = Json::array();
    for (std::size_t j = 0; j < red.generators; ++j) {
      manifest["generator_classes"].push_back({{"generator", j + 1}, {"class", j + 1}});
    }
    manifest["point_vertices"] = "P(k) has vertex id k";
  } else {
    throw ValidationError("unknown reduction '" + opt.reduce_kind + "'");
  }
  manifest["input"] = opt.input;
  manifest["output"] = opt.output;
  io::write_file(opt.output, instance_text);
  io::write_file(manifest_path(opt), io::format_document(manifest));
  if (opt.json) {
    out << io::format_document(manifest);
  } else {
    out << "wrote " << opt.output << " and " << manifest_path(opt) << '\n';
  }
  return kYes;
}

int check_parsimony(const Options& opt, std::ostream& out) {
  const auto original = read_cnf(opt.input);
  const auto normalized = normalize_3sat(original);
  const auto compact = compact_variables(normalized.formula);
  const auto count_phi = count_satisfying(compact, opt.caps.max_vars);

  const auto sci = sat_to_circuit(normalized.formula);
  const auto routing = max_routing(sci.circuit, sci.polarization, opt.caps.max_routings);
  const std::uint64_t routings_at_m = routing.max_cycles == sci.target_m ? routing.optimal_count : 0;

  std::uint64_t eta_count = 0;
  long long bound = 0;
  std::size_t n = 0;
  std::size_t width = 0;
  if (!sci.circuit.vertices.empty()) {
    const auto red = circuit_to_ids(sci.circuit, sci.polarization, static_cast<long long>(sci.target_m));
    n = red.instance.ids.n;
    bound = red.instance.bound_k;
    width = validate_instance(red.instance);
    eta_count = count_elements_at_distance(red.instance, static_cast<std::size_t>(bound), opt.caps.max_subsets);
  } else {
    // No clauses: the empty routing and the identity both witness the single model.
    eta_count = 1;
  }

  const bool equal = count_phi == routings_at_m && routings_at_m == eta_count;
  Json report = report_header("check parsimony");
  report["variables"] = compact.num_variables;
  report["free_variables"] = original.num_variables - compact.num_variables;
  report["clauses"] = normalized.formula.clauses.size();
  report["M"] = sci.target_m;
  report["max_cycles"] = routing.max_cycles;
  report["satisfiable"] = count_phi > 0;
  report["ids_n"] = n;
  report["ids_width"] = width;
  report["distance_bound"] = bound;
  report["count_sat"] = count_phi;
  report["count_routings_at_M"] = routings_at_m;
  report["count_eta_at_bound"] = eta_count;
  report["parsimonious"] = equal;
  emit(out, opt, report);
  return equal ? kYes : kNo;
}

int verify_gadgets(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<GadgetRow> rows;
  if (opt.fixture.empty()) {
    for (auto kind : {GadgetKind::I, GadgetKind::E, GadgetKind::F, GadgetKind::G, GadgetKind::A}) {
      std::vector<Literal> slots;
      for (std::uint32_t s = 1; s <= gadget_arity(kind); ++s) slots.push_back(pos(s));
      const auto g = build_gadget(kind, slots);
      const auto table = gadget_truth_table(kind, g.circuit, g.polarization);
      rows.insert(rows.end(), table.begin(), table.end());
    }
  } else {
    const auto j = io::parse_json(io::read_file(opt.fixture));
    if (!j.contains("gadget") || !j["gadget"].is_string()) {
      throw ValidationError("gadget fixture needs a \"gadget\" name");
    }
    const auto kind = gadget_from_name(j["gadget"].get<std::string>());
    const auto file = io::circuit_from_json(j);
    rows = gadget_truth_table(kind, file.circuit, file.polarization);
  }
  std::size_t mismatches = 0;
  Json report = report_header("verify gadgets");
  Json list = Json::array();
  for (const auto& row : rows) {
    mismatches += !row.matches();
    list.push_back({{"gadget", gadget_name(row.kind)},
                    {"assignment", describe_row(row)},
                    {"expected", row.expected},
                    {"actual", row.actual},
                    {"ok", row.matches()}});
  }
  report["rows"] = list.size();
  report["mismatches"] = mismatches;
  report["table"] = list;
  if (opt.json) {
    out << io::format_document(report);
  } else {
    for (const auto& row : rows) {
      out << describe_row(row) << " expected " << row.expected << " actual " << row.actual
          << (row.matches() ? " ok" : " MISMATCH") << '\n';
    }
    out << rows.size() << " rows, " << mismatches << " mismatches\n";
  }
  for (const auto& row : rows) {
    if (!row.matches()) err << "mismatch: " << describe_row(row) << '\n';
  }
  return mismatches == 0 ? kYes : kNo;
}

int count_sat(const Options& opt, std::ostream& out) {
  const auto f = read_cnf(opt.input);
  const auto count = count_satisfying(f, opt.caps.max_vars);
  if (opt.json) {
    Json report = report_header("count sat");
    report["variables"] = f.num_variables;
    report["clauses"] = f.clauses.size();
    report["count"] = count;
    out << io::format_document(report);
  } else {
    out << count << '\n';
  }
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley distance, subgroup distance and maximal routing toolkit", "cayley"};
  app.require_subcommand(1);
  Options opt;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.json, "Machine-readable output"); };
  auto add_k = [&](CLI::App* cmd, const char* help) { cmd->add_option("--K", opt.k, help); };

  auto* solve = app.add_subcommand("solve", "Exact solvers");
  solve->require_subcommand(1);
  auto* distance = solve->add_subcommand("distance", "Distance from pi to an IDS subgroup");
  distance->add_option("file", opt.input, "IDS instance JSON")->required();
  add_k(distance, "Distance bound; overrides the file's K");
  distance->add_option("--max-subsets", opt.caps.max_subsets, "Maximum number of generators");
  add_json(distance);
  auto* routing = solve->add_subcommand("routing", "Maximal respecting routing");
  routing->add_option("file", opt.input, "Circuit JSON")->required();
  add_k(routing, "Cycle target; overrides the file's K");
  routing->add_option("--max-routings", opt.caps.max_routings, "Maximum routing space size");
  add_json(routing);

  auto* red = app.add_subcommand("reduce", "Instance transformations");
  red->add_option("kind", opt.reduce_kind, "sat2circuit | circuit2ids | ids2circuit")
      ->required()
      ->check(CLI::IsMember({"sat2circuit", "circuit2ids", "ids2circuit"}));
  red->add_option("input", opt.input, "Input instance")->required();
  red->add_option("-o,--output", opt.output, "Output instance path")->required();
  red->add_option("--manifest", opt.manifest, "Manifest path (default: <output>.manifest.json)");
  add_k(red, "Threshold to translate; overrides the file's K");
  add_json(red);

  auto* check = app.add_subcommand("check", "End-to-end checks");
  check->require_subcommand(1);
  auto* pars = check->add_subcommand("parsimony", "Compare model, routing and group-element counts");
  pars->add_option("cnf", opt.input, "DIMACS file")->required();
  pars->add_option("--max-vars", opt.caps.max_vars, "Model counting cap");
  pars->add_option("--max-routings", opt.caps.max_routings, "Routing enumeration cap");
  pars->add_option("--max-subsets", opt.caps.max_subsets, "Subset enumeration cap");
  add_json(pars);

  auto* verify = app.add_subcommand("verify", "Self checks");
  verify->require_subcommand(1);
  auto* gadgets = verify->add_subcommand("gadgets", "Gadget truth tables");
  gadgets->add_option("--fixture", opt.fixture, "Check a gadget circuit file instead of the built-ins");
  add_json(gadgets);

  auto* count = app.add_subcommand("count", "Counting");
  count->require_subcommand(1);
  auto* sat = count->add_subcommand("sat", "Exact model count");
  sat->add_option("cnf", opt.input, "DIMACS file")->required();
  sat->add_option("--max-vars", opt.caps.max_vars, "Model counting cap");
  add_json(sat);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  try {
    if (*distance) return solve_distance(opt, out);
    if (*routing) return solve_routing(opt, out);
    if (*red) return reduce(opt, out);
    if (*pars) return check_parsimony(opt, out);
    if (*gadgets) return verify_gadgets(opt, out, err);
    if (*sat) return count_sat(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  err << "error: no command\n";
  return kFailure;
}

}  // namespace cayley::cli
