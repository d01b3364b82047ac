#include "circuitlab/io.hpp"

#include "circuitlab/error.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace circuitlab {

using Json = nlohmann::ordered_json;

namespace {

Json vec_json(const RationalVector &v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(x.to_string());
  return a;
}

Rational scalar(const Json &j) {
  if (j.is_string())
    return Rational::parse(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  throw Error(ErrorCode::Parse, "expected a rational string, got " + j.dump());
}

RationalVector vec_from(const Json &j) {
  if (!j.is_array())
    throw Error(ErrorCode::Parse, "expected an array of rationals");
  RationalVector v;
  for (const auto &x : j)
    v.push_back(scalar(x));
  return v;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

Json rows_json(const RationalMatrix &m, const RationalVector &rhs,
               const std::vector<std::string> &labels, std::size_t offset) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    Json r;
    r["coeffs"] = vec_json(m.rows[i]);
    r["rhs"] = rhs[i].to_string();
    r["label"] = labels[offset + i];
    a.push_back(std::move(r));
  }
  return a;
}

void rows_from(const Json &a, std::size_t dim, RationalMatrix &m,
               RationalVector &rhs, std::vector<std::string> &labels) {
  if (!a.is_array())
    throw Error(ErrorCode::Parse, "row list must be an array");
  for (const auto &r : a) {
    RationalVector coeffs = vec_from(r.at("coeffs"));
    if (coeffs.size() != dim)
      throw Error(ErrorCode::DimensionMismatch,
                  "row has " + std::to_string(coeffs.size()) +
                      " coefficients, expected " + std::to_string(dim));
    m.push_back(std::move(coeffs));
    rhs.push_back(scalar(r.at("rhs")));
    labels.push_back(r.contains("label") ? r["label"].get<std::string>()
                                         : std::string());
  }
}

} // namespace

std::string polytope_to_json(const HPolytope &p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim();
  j["equalities"] = rows_json(p.equalities(), p.equality_rhs(), p.labels(), 0);
  j["inequalities"] = rows_json(p.inequalities(), p.inequality_rhs(),
                                p.labels(), p.equality_count());
  j["description_complete"] = p.description_complete();
  if (const auto &f = p.family()) {
    Json fam;
    fam["name"] = f->name;
    fam["n"] = f->n;
    if (f->name == "tsp")
      fam["combs"] = f->combs;
    if (f->name == "fstab") {
      Json edges = Json::array();
      for (const auto &[a, b] : f->edges)
        edges.push_back({a, b});
      fam["edges"] = std::move(edges);
    }
    j["family"] = std::move(fam);
  }
  return j.dump(2) + "\n";
}

HPolytope polytope_from_json(std::string_view text) {
  const Json j = parse(text);
  try {
    const std::size_t dim = j.at("ambient_dim").get<std::size_t>();
    RationalMatrix eq(dim), ineq(dim);
    RationalVector eq_rhs, ineq_rhs;
    std::vector<std::string> eq_labels, ineq_labels;
    if (j.contains("equalities"))
      rows_from(j["equalities"], dim, eq, eq_rhs, eq_labels);
    if (j.contains("inequalities"))
      rows_from(j["inequalities"], dim, ineq, ineq_rhs, ineq_labels);
    const std::size_t n_eq = eq_labels.size();
    std::vector<std::string> labels = std::move(eq_labels);
    labels.insert(labels.end(), ineq_labels.begin(), ineq_labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i].empty())
        labels[i] = i < n_eq ? "eq " + std::to_string(i)
                             : "ineq " + std::to_string(i - n_eq);
    HPolytope p(std::move(eq), std::move(eq_rhs), std::move(ineq),
                std::move(ineq_rhs), std::move(labels),
                j.value("description_complete", false));
    if (j.contains("family")) {
      const Json &fam = j["family"];
      FamilyInfo f;
      f.name = fam.at("name").get<std::string>();
      f.n = fam.at("n").get<std::size_t>();
      f.combs = fam.value("combs", false);
      if (fam.contains("edges"))
        for (const auto &e : fam["edges"])
          f.edges.emplace_back(e.at(0).get<std::size_t>(),
                               e.at(1).get<std::size_t>());
      p.set_family(std::move(f));
    }
    return p;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::Parse, std::string("malformed H-rep: ") + e.what());
  }
}

std::string circuits_to_json(const HPolytope &p, const CircuitSet &circuits) {
  Json list = Json::array();
  for (const auto &c : circuits) {
    Json e;
    e["direction"] = vec_json(c.direction);
    Json cert = Json::array();
    for (std::size_t i : c.certificate)
      cert.push_back(p.inequality_label(i));
    e["certificate"] = std::move(cert);
    list.push_back(std::move(e));
  }
  Json j;
  j["count"] = circuits.size();
  j["circuits"] = std::move(list);
  return j.dump(2) + "\n";
}

std::string walk_to_json(const Walk &w) {
  Json points = Json::array();
  for (const auto &x : w.points)
    points.push_back(vec_json(x));
  Json steps = Json::array();
  for (const auto &s : w.steps) {
    Json e;
    e["direction"] = vec_json(s.direction);
    e["alpha"] = s.alpha.to_string();
    steps.push_back(std::move(e));
  }
  Json j;
  j["length"] = w.length();
  j["points"] = std::move(points);
  j["steps"] = std::move(steps);
  return j.dump(2) + "\n";
}

std::string vertices_to_json(const std::vector<RationalVector> &vertices) {
  Json a = Json::array();
  for (const auto &v : vertices)
    a.push_back(vec_json(v));
  return a.dump() + "\n";
}

std::vector<RationalVector> vertices_from_json(std::string_view text) {
  const Json j = parse(text);
  if (!j.is_array())
    throw Error(ErrorCode::Parse, "vertex list must be an array");
  std::vector<RationalVector> out;
  for (const auto &v : j)
    out.push_back(vec_from(v));
  return out;
}

Graph graph_from_text(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first])))
    ++first;
  if (first < text.size() && text[first] == '{') {
    const Json j = parse(text);
    try {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (const auto &e : j.at("edges"))
        edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
      return Graph(j.at("n").get<std::size_t>(), std::move(edges));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::Parse, std::string("malformed graph: ") + e.what());
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    long a, b;
    if (!(ls >> a))
      continue;
    if (!(ls >> b) || a < 0 || b < 0)
      throw Error(ErrorCode::Parse, "edge-list lines must be 'i j': " + line);
    edges.emplace_back(a, b);
    n = std::max<std::size_t>(n, std::max(a, b) + 1);
  }
  return Graph(n, std::move(edges));
}

std::string graph_to_json(const Graph &g) {
  Json edges = Json::array();
  for (const auto &[a, b] : g.edges())
    edges.push_back({a, b});
  Json j;
  j["n"] = g.node_count();
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace circuitlab
