#include "circuitlab/circuits.hpp"
#include "circuitlab/error.hpp"
#include "circuitlab/families.hpp"
#include "circuitlab/fstab.hpp"
#include "circuitlab/io.hpp"
#include "circuitlab/verify.hpp"
#include "circuitlab/vertices.hpp"
#include "circuitlab/walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace circuitlab;
using ordered_json = nlohmann::ordered_json;

namespace {

enum Exit {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kNotACircuit = 3,
  kNoStep = 4,
  kBudget = 5,
  kIncomplete = 6,
  kDepthLimit = 7,
  kConstruction = 8,
  kInput = 9,
};

int exit_code(ErrorCode code) {
  switch (code) {
  case ErrorCode::NotACircuit: return kNotACircuit;
  case ErrorCode::NoStep: return kNoStep;
  case ErrorCode::BudgetExceeded: return kBudget;
  case ErrorCode::IncompleteDescription: return kIncomplete;
  case ErrorCode::DepthLimit: return kDepthLimit;
  case ErrorCode::InvariantViolated:
  case ErrorCode::ConstructionFailed: return kConstruction;
  case ErrorCode::NotInPolytope:
  case ErrorCode::DimensionMismatch: return kInput;
  case ErrorCode::InvalidArgument:
  case ErrorCode::Parse:
  case ErrorCode::ZeroVector: return kUsage;
  default: return kFailure;
  }
}

struct Source {
  std::string family;
  std::size_t n = 0;
  bool combs = false;
  std::string graph;
  std::string polytope;

  void add_to(CLI::App *cmd) {
    cmd->add_option("--family", family, "matching | permatch | tsp | fstab")
        ->check(CLI::IsMember({"matching", "permatch", "tsp", "fstab"}));
    cmd->add_option("--n", n, "node count");
    cmd->add_flag("--combs", combs, "add comb rows (tsp, n >= 6)");
    cmd->add_option("--graph", graph, "graph file (fstab)");
    cmd->add_option("--polytope", polytope, "H-rep JSON file, - for stdin");
  }

  HPolytope load() const {
    if (!polytope.empty()) {
      if (polytope == "-") {
        std::string text{std::istreambuf_iterator<char>(std::cin), {}};
        return polytope_from_json(text);
      }
      return polytope_from_json(read_file(polytope));
    }
    if (!graph.empty() || family == "fstab")
      return build_fstab_polytope(load_graph());
    if (family.empty() || n == 0)
      throw Error(ErrorCode::InvalidArgument,
                  "give --polytope, --graph, or --family with --n");
    if (family == "matching")
      return build_matching_polytope(n);
    if (family == "permatch")
      return build_perfect_matching_polytope(n);
    return build_tsp_polytope(n, combs);
  }

  Graph load_graph() const {
    if (graph.empty())
      throw Error(ErrorCode::InvalidArgument, "fstab needs --graph");
    return graph_from_text(read_file(graph));
  }
};

std::string json_out;

void emit(const std::string &text) {
  if (json_out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(json_out, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::InvalidArgument, "cannot write " + json_out);
  out << text;
}

ordered_json vector_json(const RationalVector &v) {
  ordered_json a = ordered_json::array();
  for (const auto &x : v)
    a.push_back(x.to_string());
  return a;
}

std::optional<EdgeIndex> edge_index_of(const HPolytope &p) {
  const auto &f = p.family();
  if (f && (f->name == "matching" || f->name == "permatch" || f->name == "tsp"))
    return EdgeIndex(f->n);
  return std::nullopt;
}

// A point given as a comma-separated vector, a vertex index, "empty",
// "perfect", or edges like "0-1,2-3" (edge-indexed families).
RationalVector parse_point(const HPolytope &p, const std::string &text,
                           const std::vector<RationalVector> *vertices) {
  const auto idx = edge_index_of(p);
  if (idx && text == "empty")
    return characteristic(*idx, {});
  if (idx && text == "perfect") {
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < idx->nodes(); i += 2)
      es.emplace_back(i, i + 1);
    return characteristic(*idx, make_edge_set(es));
  }
  if (idx && text.find('-') != std::string::npos &&
      text.find('/') == std::string::npos) {
    std::vector<Edge> es;
    std::stringstream ss(text);
    std::string item;
    bool edges = true;
    while (edges && std::getline(ss, item, ',')) {
      const auto dash = item.find('-');
      if (dash == 0 || dash == std::string::npos) {
        edges = false;
        break;
      }
      es.emplace_back(std::stoul(item.substr(0, dash)),
                      std::stoul(item.substr(dash + 1)));
    }
    if (edges)
      return characteristic(*idx, make_edge_set(es));
  }
  if (text.find(',') == std::string::npos) {
    if (!vertices)
      throw Error(ErrorCode::InvalidArgument,
                  "vertex index '" + text + "' needs a vertex list here");
    const std::size_t i = std::stoul(text);
    if (i >= vertices->size())
      throw Error(ErrorCode::InvalidArgument,
                  "vertex index " + text + " out of range");
    return (*vertices)[i];
  }
  RationalVector v = parse_vector(text);
  if (v.size() != p.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(p.ambient_dim()) + " coordinates");
  return v;
}

bool needs_vertices(const std::string &a, const std::string &b) {
  auto index = [](const std::string &s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  return index(a) || index(b);
}

std::optional<EdgeSet> as_matching(const HPolytope &p, const RationalVector &x) {
  const auto idx = edge_index_of(p);
  if (!idx || p.family()->name != "matching")
    return std::nullopt;
  const EdgeSet m = edges_of(*idx, x);
  if (characteristic(*idx, m) != x)
    return std::nullopt;
  return m;
}

int cmd_gen(const Source &src) {
  emit(polytope_to_json(src.load()));
  return kOk;
}

int cmd_vertices(const Source &src, std::uint64_t budget) {
  emit(vertices_to_json(enumerate_vertices(src.load(), budget)));
  return kOk;
}

int cmd_circuits(const Source &src, std::uint64_t budget) {
  const HPolytope p = src.load();
  emit(circuits_to_json(p, enumerate_circuits(p, budget)));
  return kOk;
}

int cmd_is_circuit(const Source &src, const std::string &vector) {
  const HPolytope p = src.load();
  const CircuitVerdict v = is_circuit(p, parse_point(p, vector, nullptr));
  ordered_json j;
  j["result"] = to_string(v.status);
  ordered_json cert = ordered_json::array();
  for (std::size_t i : v.certificate)
    cert.push_back(p.inequality_label(i));
  j["certificate"] = cert;
  if (json_out.empty())
    std::cout << to_string(v.status) << "\n";
  else
    emit(j.dump(2) + "\n");
  switch (v.status) {
  case CircuitStatus::Circuit: return kOk;
  case CircuitStatus::NotCircuit: return kNotACircuit;
  case CircuitStatus::NotCertified: return kIncomplete;
  }
  return kFailure;
}

int cmd_step(const Source &src, const std::string &from,
             const std::string &direction) {
  const HPolytope p = src.load();
  const WalkStep s = circuit_step(p, parse_point(p, from, nullptr),
                                  parse_vector(direction));
  ordered_json j;
  j["from"] = vector_json(s.from);
  j["direction"] = vector_json(s.direction);
  j["alpha"] = s.alpha.to_string();
  j["to"] = vector_json(s.to);
  emit(j.dump(2) + "\n");
  return kOk;
}

int cmd_distance(const Source &src, const std::string &from,
                 const std::string &to, std::uint64_t budget,
                 std::size_t depth_limit) {
  const HPolytope p = src.load();
  std::vector<RationalVector> vertices;
  if (needs_vertices(from, to))
    vertices = enumerate_vertices(p, budget);
  const RationalVector x = parse_point(p, from, &vertices);
  const RationalVector y = parse_point(p, to, &vertices);
  if (!contains(p, x) || !contains(p, y))
    throw Error(ErrorCode::NotInPolytope, "endpoint is not in P");

  ordered_json j;
  const auto m1 = as_matching(p, x);
  const auto m2 = as_matching(p, y);
  std::optional<DistanceBounds> bounds;
  if (m1 && m2) {
    bounds = matching_distance_bounds(p, *edge_index_of(p), *m1, *m2);
    if (bounds->lower > depth_limit) {
      std::cerr << "no walk within depth " << depth_limit << "\n";
      return kDepthLimit;
    }
    if (bounds->lower == bounds->upper) {
      j["distance"] = bounds->upper;
      j["method"] = "bounds";
      j["witness"] = ordered_json::parse(walk_to_json(bounds->witness));
      emit(j.dump(2) + "\n");
      return kOk;
    }
  }
  std::optional<CircuitSet> circuits;
  try {
    circuits = enumerate_circuits(p, budget);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::BudgetExceeded || !bounds)
      throw;
    std::cerr << "circuit enumeration exceeded the budget; distance is "
              << "between " << bounds->lower << " and " << bounds->upper << "\n";
    return kBudget;
  }
  const DistanceResult r = circuit_distance(p, *circuits, x, y, depth_limit);
  if (!r.distance) {
    std::cerr << "no walk within depth " << depth_limit << "\n";
    return kDepthLimit;
  }
  j["distance"] = *r.distance;
  j["method"] = "bfs";
  j["circuits"] = circuits->size();
  j["states"] = r.states;
  j["witness"] = ordered_json::parse(walk_to_json(*r.witness));
  emit(j.dump(2) + "\n");
  return kOk;
}

int cmd_diameter(const Source &src, std::uint64_t budget,
                 std::size_t depth_limit) {
  const HPolytope p = src.load();
  const auto circuits = enumerate_circuits(p, budget);
  const auto vertices = enumerate_vertices(p, budget);
  const DiameterResult d = circuit_diameter(p, vertices, circuits, depth_limit);
  ordered_json j;
  j["diameter"] = d.diameter;
  j["vertices"] = vertices.size();
  j["circuits"] = circuits.size();
  j["from"] = vector_json(vertices[d.from]);
  j["to"] = vector_json(vertices[d.to]);
  emit(j.dump(2) + "\n");
  return kOk;
}

int cmd_fstab_walk(const Source &src, const std::string &from,
                   const std::string &to, std::optional<std::size_t> root) {
  const Graph g = src.load_graph();
  const HPolytope p = build_fstab_polytope(g);
  const auto vertices = enumerate_fstab_vertices(g);
  const RationalVector x = parse_point(p, from, &vertices);
  const RationalVector y = parse_point(p, to, &vertices);
  const std::size_t v = root.value_or(graph_center(g));
  if (v >= g.node_count())
    throw Error(ErrorCode::InvalidArgument, "root out of range");
  const FstabWalk w = fstab_walk(g, x, y, v);
  ordered_json j;
  j["root"] = w.root;
  j["eccentricity"] = w.eccentricity;
  if (w.odd_ball_radius)
    j["odd_ball_radius"] = *w.odd_ball_radius;
  else
    j["odd_ball_radius"] = nullptr;
  j["length"] = w.walk.length();
  j["bound"] = w.bound();
  j["phase1_steps"] = w.phase1_steps;
  j["phase2_steps"] = w.phase2_steps;
  j["walk"] = ordered_json::parse(walk_to_json(w.walk));
  emit(j.dump(2) + "\n");
  std::cerr << "length " << w.walk.length() << " <= 4*" << w.eccentricity
            << " + " << kWalkConstant << " = " << w.bound() << "\n";
  return kOk;
}

int cmd_verify(const std::vector<std::string> &suites, const SuiteOptions &opts) {
  ordered_json all = ordered_json::array();
  bool ok = true;
  for (const auto &name : suites) {
    const VerificationReport r = run_suite(name, opts);
    std::cout << r.to_text() << std::flush;
    all.push_back(ordered_json::parse(r.to_json()));
    ok = ok && r.passed();
  }
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  }
  return ok ? kOk : kFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Circuits, circuit walks and circuit diameters of rational "
               "polytopes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Source src;
  std::uint64_t budget = kDefaultCircuitBudget;
  std::size_t depth_limit = kDefaultDepthLimit;
  std::string from, to, vector, direction;
  std::optional<std::size_t> root;
  std::vector<std::string> suites;
  SuiteOptions sopts;

  auto with_source = [&](CLI::App *cmd) {
    src.add_to(cmd);
    cmd->add_option("--json", json_out, "write JSON output to this file");
    return cmd;
  };
  auto *gen = with_source(app.add_subcommand("gen", "emit the H-representation"));
  auto *vert = with_source(app.add_subcommand("vertices", "list vertices"));
  vert->add_option("--budget", budget);
  auto *circ = with_source(app.add_subcommand("circuits", "enumerate circuits"));
  circ->add_option("--budget", budget);
  auto *isc = with_source(app.add_subcommand("is-circuit", "test a direction"));
  isc->add_option("--vector", vector, "comma-separated rationals")->required();
  auto *step = with_source(app.add_subcommand("step", "one maximal circuit step"));
  step->add_option("--from", from)->required();
  step->add_option("--direction", direction)->required();
  auto *dist = with_source(app.add_subcommand("distance", "circuit distance"));
  dist->add_option("--from", from)->required();
  dist->add_option("--to", to)->required();
  dist->add_option("--budget", budget);
  dist->add_option("--depth-limit", depth_limit);
  auto *diam = with_source(app.add_subcommand("diameter", "circuit diameter"));
  diam->add_option("--budget", budget);
  diam->add_option("--depth-limit", depth_limit);
  auto *fw = with_source(app.add_subcommand("fstab-walk",
                                            "layered walk on P_fstab(G)"));
  fw->add_option("--from", from)->required();
  fw->add_option("--to", to)->required();
  fw->add_option("--root", root);
  auto *ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("suite", suites, "suite names or 'all'")->required();
  ver->add_option("--sample", sopts.sample, "random pairs for long checks");
  ver->add_option("--seed", sopts.seed);
  ver->add_option("--budget", sopts.budget);
  ver->add_option("--depth-limit", sopts.depth_limit);
  ver->add_option("--json", json_out, "write the report JSON to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen)
      return cmd_gen(src);
    if (*vert)
      return cmd_vertices(src, budget);
    if (*circ)
      return cmd_circuits(src, budget);
    if (*isc)
      return cmd_is_circuit(src, vector);
    if (*step)
      return cmd_step(src, from, direction);
    if (*dist)
      return cmd_distance(src, from, to, budget, depth_limit);
    if (*diam)
      return cmd_diameter(src, budget, depth_limit);
    if (*fw)
      return cmd_fstab_walk(src, from, to, root);
    if (*ver) {
      if (suites.size() == 1 && suites[0] == "all")
        suites = suite_names();
      for (const auto &s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) ==
            suite_names().end()) {
          std::cerr << "unknown suite '" << s << "'\n";
          return kUsage;
        }
      return cmd_verify(suites, sopts);
    }
  } catch (const Error &e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
