#include "circuitlab/families.hpp"

#include "circuitlab/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace circuitlab {

namespace {

constexpr std::size_t kMaxSubsetNodes = 16;

std::string set_string(const std::vector<std::size_t> &s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

std::string edge_string(const Edge &e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

// Node subsets of the given size in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n)
    return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j)
      cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void check_nodes(std::size_t n, std::size_t min, const char *what) {
  if (n < min)
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " needs n >= " + std::to_string(min));
  if (n > kMaxSubsetNodes)
    throw Error(ErrorCode::BudgetExceeded,
                std::string(what) + ": n too large for subset enumeration");
}

struct RowBuilder {
  explicit RowBuilder(std::size_t dim) : eq(dim), ineq(dim) {}

  void equality(RationalVector row, Rational rhs, std::string label) {
    eq.push_back(std::move(row));
    eq_rhs.push_back(std::move(rhs));
    eq_labels.push_back(std::move(label));
  }
  void inequality(RationalVector row, Rational rhs, std::string label) {
    ineq.push_back(std::move(row));
    ineq_rhs.push_back(std::move(rhs));
    ineq_labels.push_back(std::move(label));
  }
  HPolytope build(bool complete) {
    std::vector<std::string> labels = eq_labels;
    labels.insert(labels.end(), ineq_labels.begin(), ineq_labels.end());
    return HPolytope(std::move(eq), std::move(eq_rhs), std::move(ineq),
                     std::move(ineq_rhs), std::move(labels), complete);
  }

  RationalMatrix eq, ineq;
  RationalVector eq_rhs, ineq_rhs;
  std::vector<std::string> eq_labels, ineq_labels;
};

RationalVector inside_row(const EdgeIndex &idx,
                          const std::vector<std::size_t> &s) {
  RationalVector row = zero_vector(idx.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      row[idx.index(s[a], s[b])] = 1;
  return row;
}

RationalVector cut_row(const EdgeIndex &idx,
                       const std::vector<std::size_t> &s) {
  std::vector<bool> in(idx.nodes(), false);
  for (std::size_t v : s)
    in[v] = true;
  RationalVector row = zero_vector(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (in[idx.edge(k).first] != in[idx.edge(k).second])
      row[k] = 1;
  return row;
}

void add_nonnegativity(RowBuilder &rb, const EdgeIndex &idx) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    RationalVector row = zero_vector(idx.size());
    row[k] = -1;
    rb.inequality(std::move(row), 0, "x_" + edge_string(idx.edge(k)) + " >= 0");
  }
}

FamilyInfo info(std::string name, std::size_t n, bool combs = false) {
  FamilyInfo f;
  f.name = std::move(name);
  f.n = n;
  f.combs = combs;
  return f;
}

} // namespace

EdgeIndex::EdgeIndex(std::size_t n) : n_(n) {
  for (std::size_t i = 0; i < n; ++i) {
    offset_.push_back(edges_.size());
    for (std::size_t j = i + 1; j < n; ++j)
      edges_.emplace_back(i, j);
  }
}

std::size_t EdgeIndex::index(std::size_t i, std::size_t j) const {
  if (i > j)
    std::swap(i, j);
  if (i == j || j >= n_)
    throw Error(ErrorCode::InvalidArgument,
                "no edge " + std::to_string(i) + "-" + std::to_string(j) +
                    " in K_" + std::to_string(n_));
  return offset_[i] + (j - i - 1);
}

EdgeSet make_edge_set(std::vector<Edge> edges) {
  for (auto &e : edges)
    if (e.first > e.second)
      std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

RationalVector characteristic(const EdgeIndex &idx, const EdgeSet &edges) {
  RationalVector x = zero_vector(idx.size());
  for (const auto &e : edges)
    x[idx.index(e.first, e.second)] = 1;
  return x;
}

EdgeSet edges_of(const EdgeIndex &idx, const RationalVector &x) {
  EdgeSet out;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (!x[k].is_zero())
      out.push_back(idx.edge(k));
  return out;
}

EdgeSet tour_edges(const Tour &tour) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < tour.size(); ++i)
    edges.emplace_back(tour[i], tour[(i + 1) % tour.size()]);
  return make_edge_set(std::move(edges));
}

HPolytope build_matching_polytope(std::size_t n) {
  check_nodes(n, 2, "matching polytope");
  const EdgeIndex idx(n);
  RowBuilder rb(idx.size());
  for (std::size_t k = 3; k <= n; k += 2)
    for (const auto &s : subsets_of_size(n, k))
      rb.inequality(inside_row(idx, s), Rational(static_cast<std::int64_t>((k - 1) / 2)),
                    "x(E[" + set_string(s) + "]) <= " + std::to_string((k - 1) / 2));
  for (std::size_t v = 0; v < n; ++v)
    rb.inequality(cut_row(idx, {v}), 1,
                  "x(delta(" + std::to_string(v) + ")) <= 1");
  add_nonnegativity(rb, idx);
  HPolytope p = rb.build(true);
  p.set_family(info("matching", n));
  return p;
}

HPolytope build_perfect_matching_polytope(std::size_t n) {
  check_nodes(n, 4, "perfect matching polytope");
  if (n % 2 != 0)
    throw Error(ErrorCode::InvalidArgument,
                "perfect matching polytope needs even n");
  const EdgeIndex idx(n);
  RowBuilder rb(idx.size());
  for (std::size_t v = 0; v < n; ++v)
    rb.equality(cut_row(idx, {v}), 1, "x(delta(" + std::to_string(v) + ")) = 1");
  for (std::size_t k = 3; k < n; k += 2)
    for (const auto &s : subsets_of_size(n, k))
      rb.inequality(scale(cut_row(idx, s), -1), -1,
                    "x(delta(" + set_string(s) + ")) >= 1");
  add_nonnegativity(rb, idx);
  HPolytope p = rb.build(true);
  p.set_family(info("permatch", n));
  return p;
}

HPolytope build_tsp_polytope(std::size_t n, bool include_combs) {
  check_nodes(n, 3, "TSP polytope");
  if (include_combs && n < 6)
    throw Error(ErrorCode::InvalidArgument, "comb rows need n >= 6");
  const EdgeIndex idx(n);
  RowBuilder rb(idx.size());
  for (std::size_t v = 0; v < n; ++v)
    rb.equality(cut_row(idx, {v}), 2, "x(delta(" + std::to_string(v) + ")) = 2");
  for (std::size_t k = 2; k + 2 <= n; ++k)
    for (const auto &s : subsets_of_size(n, k))
      rb.inequality(inside_row(idx, s), Rational(static_cast<std::int64_t>(k - 1)),
                    "x(E[" + set_string(s) + "]) <= " + std::to_string(k - 1));
  if (include_combs) {
    // Handle {u,v,w} as a set; teeth u-u', v-v', w-w' with u',v',w' distinct
    // and outside the handle, one row per ordered choice of (u',v',w').
    for (const auto &t : subsets_of_size(n, 3)) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            const std::vector<std::size_t> teeth{a, b, c};
            bool ok = a != b && b != c && a != c;
            for (std::size_t x : teeth)
              ok = ok && std::find(t.begin(), t.end(), x) == t.end();
            if (!ok)
              continue;
            RationalVector row = inside_row(idx, t);
            for (std::size_t i = 0; i < 3; ++i)
              row[idx.index(t[i], teeth[i])] = 1;
            rb.inequality(std::move(row), 4,
                          "comb " + set_string(t) + " teeth " +
                              edge_string({t[0], a}) + "," +
                              edge_string({t[1], b}) + "," +
                              edge_string({t[2], c}) + " <= 4");
          }
    }
  }
  add_nonnegativity(rb, idx);
  HPolytope p = rb.build(n <= 5);
  p.set_family(info("tsp", n, include_combs));
  return p;
}

namespace {

void matchings_rec(std::size_t n, std::size_t v, std::vector<bool> &used,
                   EdgeSet &cur, bool perfect, std::vector<EdgeSet> &out) {
  while (v < n && used[v])
    ++v;
  if (v == n) {
    out.push_back(make_edge_set(cur));
    return;
  }
  used[v] = true;
  if (!perfect)
    matchings_rec(n, v + 1, used, cur, perfect, out);
  for (std::size_t u = v + 1; u < n; ++u) {
    if (used[u])
      continue;
    used[u] = true;
    cur.emplace_back(v, u);
    matchings_rec(n, v + 1, used, cur, perfect, out);
    cur.pop_back();
    used[u] = false;
  }
  used[v] = false;
}

} // namespace

std::vector<EdgeSet> enumerate_matchings(std::size_t n) {
  check_nodes(n, 1, "matching enumeration");
  std::vector<EdgeSet> out;
  std::vector<bool> used(n, false);
  EdgeSet cur;
  matchings_rec(n, 0, used, cur, false, out);
  std::sort(out.begin(), out.end(), [](const EdgeSet &a, const EdgeSet &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<EdgeSet> enumerate_perfect_matchings(std::size_t n) {
  check_nodes(n, 2, "perfect matching enumeration");
  if (n % 2 != 0)
    return {};
  std::vector<EdgeSet> out;
  std::vector<bool> used(n, false);
  EdgeSet cur;
  matchings_rec(n, 0, used, cur, true, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tour> enumerate_tours(std::size_t n) {
  check_nodes(n, 3, "tour enumeration");
  if (n > 12)
    throw Error(ErrorCode::BudgetExceeded, "too many tours to enumerate");
  std::vector<Tour> out;
  Tour rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() < rest.back()) {
      Tour t{0};
      t.insert(t.end(), rest.begin(), rest.end());
      out.push_back(std::move(t));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::vector<RationalVector> vertex_vectors(const EdgeIndex &idx,
                                           const std::vector<EdgeSet> &sets) {
  std::vector<RationalVector> out;
  out.reserve(sets.size());
  for (const auto &s : sets)
    out.push_back(characteristic(idx, s));
  return out;
}

const char *to_string(Component::Kind k) {
  switch (k) {
  case Component::Kind::Trivial: return "trivial";
  case Component::Kind::Path: return "path";
  case Component::Kind::Cycle: return "cycle";
  }
  return "?";
}

std::vector<Component> symmetric_difference_components(std::size_t n,
                                                       const EdgeSet &m1,
                                                       const EdgeSet &m2) {
  EdgeSet diff;
  std::set_symmetric_difference(m1.begin(), m1.end(), m2.begin(), m2.end(),
                                std::back_inserter(diff));
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto &e : diff) {
    if (e.second >= n)
      throw Error(ErrorCode::InvalidArgument, "edge outside K_n");
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    Component c;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      c.nodes.push_back(v);
      for (std::size_t u : adj[v])
        if (comp[u] < 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(c.nodes.begin(), c.nodes.end());
    for (const auto &e : diff)
      if (comp[e.first] == comp[s])
        c.edges.push_back(e);
    if (c.edges.empty())
      c.kind = Component::Kind::Trivial;
    else
      c.kind = c.edges.size() == c.nodes.size() ? Component::Kind::Cycle
                                                : Component::Kind::Path;
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t nontrivial_component_count(const std::vector<Component> &cs) {
  return static_cast<std::size_t>(
      std::count_if(cs.begin(), cs.end(), [](const Component &c) {
        return c.kind != Component::Kind::Trivial;
      }));
}

namespace {

// Appends the step from the walk's last point to target, which must be one
// certified circuit step away.
void step_to(const HPolytope &p, Walk &w, const RationalVector &target) {
  const RationalVector d = subtract(target, w.points.back());
  if (!is_circuit(p, d).is_circuit())
    throw Error(ErrorCode::ConstructionFailed,
                "difference " + to_string(d) + " is not a circuit");
  WalkStep s = certified_step(p, w.points.back(), d);
  if (s.to != target)
    throw Error(ErrorCode::ConstructionFailed,
                "maximal step overshoots or stops short of the target");
  w.append(std::move(s));
}

void require_valid(const HPolytope &p, const Walk &w) {
  const WalkCheck check = validate_walk(p, w);
  if (!check.ok)
    throw Error(ErrorCode::ConstructionFailed,
                "constructed walk invalid at step " +
                    std::to_string(check.index) + ": " + check.reason);
}

EdgeSet edge_union(const EdgeSet &a, const EdgeSet &b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

} // namespace

Walk matching_component_walk(const HPolytope &p, const EdgeIndex &idx,
                             const EdgeSet &m1, const EdgeSet &m2) {
  Walk w = Walk::at(characteristic(idx, m1));
  EdgeSet cur = m1;
  for (const auto &c : symmetric_difference_components(idx.nodes(), m1, m2)) {
    if (c.kind == Component::Kind::Trivial)
      continue;
    EdgeSet next;
    std::set_symmetric_difference(cur.begin(), cur.end(), c.edges.begin(),
                                  c.edges.end(), std::back_inserter(next));
    step_to(p, w, characteristic(idx, next));
    cur = std::move(next);
  }
  require_valid(p, w);
  return w;
}

Walk matching_two_step_recipe(const HPolytope &p, const EdgeIndex &idx,
                              const EdgeSet &m1, const EdgeSet &m2) {
  if (idx.nodes() < 7)
    throw Error(ErrorCode::InvalidArgument, "the two-step recipe needs n >= 7");
  const RationalVector x1 = characteristic(idx, m1);
  const RationalVector x2 = characteristic(idx, m2);
  if (m1 == m2)
    return Walk::at(x1);

  const auto comps = symmetric_difference_components(idx.nodes(), m1, m2);
  const bool m1_sub = std::includes(m2.begin(), m2.end(), m1.begin(), m1.end());
  const bool m2_sub = std::includes(m1.begin(), m1.end(), m2.begin(), m2.end());

  if (!m1_sub && !m2_sub) {
    // Either the difference is a circuit, or there are at most two
    // components (trivial ones counted) to switch one at a time.
    if (is_circuit(p, subtract(x2, x1)).is_circuit()) {
      Walk w = Walk::at(x1);
      step_to(p, w, x2);
      require_valid(p, w);
      return w;
    }
    if (comps.size() <= 2)
      return matching_component_walk(p, idx, m1, m2);
    throw Error(ErrorCode::ConstructionFailed,
                "difference has >= 3 components but is not a circuit");
  }

  if (nontrivial_component_count(comps) <= 2)
    return matching_component_walk(p, idx, m1, m2);

  // One matching contains the other and F = M1 xor M2 has >= 3 edges: join
  // endpoints of two F edges by e and pass through the larger side plus e.
  EdgeSet f;
  std::set_symmetric_difference(m1.begin(), m1.end(), m2.begin(), m2.end(),
                                std::back_inserter(f));
  const EdgeSet e = make_edge_set({{f[0].first, f[1].first}});
  const EdgeSet mid = edge_union(m1_sub ? m1 : m2, e);
  Walk w = Walk::at(x1);
  step_to(p, w, characteristic(idx, mid));
  step_to(p, w, x2);
  require_valid(p, w);
  return w;
}

DistanceBounds matching_distance_bounds(const HPolytope &p, const EdgeIndex &idx,
                                        const EdgeSet &m1, const EdgeSet &m2) {
  DistanceBounds out;
  out.witness = idx.nodes() >= 7 ? matching_two_step_recipe(p, idx, m1, m2)
                                 : matching_component_walk(p, idx, m1, m2);
  out.upper = out.witness.length();
  if (m1 == m2)
    return out;
  const RationalVector x = characteristic(idx, m1);
  const RationalVector y = characteristic(idx, m2);
  out.lower = one_step(p, x, y) ? 1 : 2;
  if (out.lower < 2 || !m1.empty())
    return out;
  // At 0 every nonnegativity row is tight, so only c >= 0 moves.
  for (const auto &c : enumerate_nonnegative_circuits(p)) {
    for (const auto &g : {c.direction, scale(c.direction, Rational(-1))}) {
      try {
        const RationalVector z = certified_step(p, x, g).to;
        if (z == y || one_step(p, z, y))
          return out;
      } catch (const Error &e) {
        if (e.code() != ErrorCode::NoStep)
          throw;
      }
    }
  }
  out.lower = 3;
  return out;
}

} // namespace circuitlab
