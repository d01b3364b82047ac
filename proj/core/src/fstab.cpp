#include "circuitlab/fstab.hpp"

#include "circuitlab/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace circuitlab {

Graph::Graph(std::size_t n,
             std::vector<std::pair<std::size_t, std::size_t>> edges)
    : adj_(n) {
  for (auto &e : edges) {
    if (e.first == e.second)
      throw Error(ErrorCode::InvalidArgument, "self-loops are not allowed");
    if (e.first >= n || e.second >= n)
      throw Error(ErrorCode::InvalidArgument,
                  "edge endpoint out of range 0.." + std::to_string(n - 1));
    if (e.first > e.second)
      std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto &e : edges) {
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
  }
  for (auto &a : adj_)
    std::sort(a.begin(), a.end());
  edges_ = std::move(edges);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::size_t> Graph::distances(std::size_t u) const {
  constexpr auto inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> d(adj_.size(), inf);
  std::vector<std::size_t> queue{u};
  d[u] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t w : adj_[queue[i]])
      if (d[w] == inf) {
        d[w] = d[queue[i]] + 1;
        queue.push_back(w);
      }
  return d;
}

bool Graph::is_connected() const {
  if (adj_.empty())
    return true;
  const auto d = distances(0);
  return std::none_of(d.begin(), d.end(),
                      [](std::size_t x) { return x == static_cast<std::size_t>(-1); });
}

namespace {

void require_connected(const Graph &g) {
  if (g.node_count() < 2)
    throw Error(ErrorCode::InvalidArgument, "graph needs at least two nodes");
  if (!g.is_connected())
    throw Error(ErrorCode::InvalidArgument, "graph must be connected");
}

bool induced_bipartite(const Graph &g, const std::vector<bool> &in) {
  std::vector<int> color(g.node_count(), -1);
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (!in[s] || color[s] >= 0)
      continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : g.neighbors(u)) {
        if (!in[w])
          continue;
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

} // namespace

BallDecomposition ball_decomposition(const Graph &g, std::size_t root) {
  require_connected(g);
  if (root >= g.node_count())
    throw Error(ErrorCode::InvalidArgument, "root out of range");
  BallDecomposition b;
  b.root = root;
  b.layer_of = g.distances(root);
  b.eccentricity = *std::max_element(b.layer_of.begin(), b.layer_of.end());
  b.layers.resize(b.eccentricity + 1);
  for (std::size_t u = 0; u < g.node_count(); ++u)
    b.layers[b.layer_of[u]].push_back(u);
  std::vector<bool> in(g.node_count(), false);
  for (std::size_t k = 0; k <= b.eccentricity; ++k) {
    for (std::size_t u : b.layers[k])
      in[u] = true;
    if (!induced_bipartite(g, in)) {
      b.odd_ball_radius = k;
      break;
    }
  }
  return b;
}

std::size_t eccentricity(const Graph &g, std::size_t v) {
  require_connected(g);
  const auto d = g.distances(v);
  return *std::max_element(d.begin(), d.end());
}

std::size_t graph_diameter(const Graph &g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    best = std::max(best, eccentricity(g, v));
  return best;
}

std::size_t graph_center(const Graph &g) {
  std::size_t best = 0;
  std::size_t best_ecc = static_cast<std::size_t>(-1);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const std::size_t e = eccentricity(g, v);
    if (e < best_ecc) {
      best_ecc = e;
      best = v;
    }
  }
  return best;
}

HPolytope build_fstab_polytope(const Graph &g) {
  require_connected(g);
  const std::size_t n = g.node_count();
  RationalMatrix ineq(n);
  RationalVector rhs;
  std::vector<std::string> labels;
  for (const auto &[u, v] : g.edges()) {
    RationalVector row = zero_vector(n);
    row[u] = 1;
    row[v] = 1;
    ineq.push_back(std::move(row));
    rhs.push_back(1);
    labels.push_back("x_" + std::to_string(u) + " + x_" + std::to_string(v) +
                     " <= 1");
  }
  for (std::size_t u = 0; u < n; ++u) {
    ineq.push_back(scale(unit_vector(n, u), -1));
    rhs.push_back(0);
    labels.push_back("x_" + std::to_string(u) + " >= 0");
  }
  HPolytope p(RationalMatrix(n), {}, std::move(ineq), std::move(rhs),
              std::move(labels), true);
  FamilyInfo f;
  f.name = "fstab";
  f.n = n;
  f.edges = g.edges();
  p.set_family(std::move(f));
  return p;
}

std::vector<RationalVector> enumerate_fstab_vertices(const Graph &g) {
  const std::size_t n = g.node_count();
  if (n > 14)
    throw Error(ErrorCode::BudgetExceeded, "too many nodes for a 3^n scan");
  const HPolytope p = build_fstab_polytope(g);
  const Rational values[3] = {Rational(0), Rational(1, 2), Rational(1)};
  std::vector<RationalVector> out;
  std::vector<int> digit(n, 0);
  RationalVector x = zero_vector(n);
  while (true) {
    bool feasible = true;
    for (const auto &[u, v] : g.edges())
      if (digit[u] + digit[v] > 2) {
        feasible = false;
        break;
      }
    if (feasible && is_vertex(p, x))
      out.push_back(x);
    std::size_t i = 0;
    while (i < n && digit[i] == 2) {
      digit[i] = 0;
      x[i] = values[0];
      ++i;
    }
    if (i == n)
      break;
    ++digit[i];
    x[i] = values[digit[i]];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_fstab_circuit(const Graph &g, const RationalVector &c) {
  if (c.size() != g.node_count())
    throw Error(ErrorCode::DimensionMismatch, "vector length != node count");
  if (is_zero(c))
    throw Error(ErrorCode::ZeroVector, "the zero vector is never a circuit");
  const std::size_t n = g.node_count();
  std::size_t start = n;
  std::size_t support = 0;
  for (std::size_t u = 0; u < n; ++u)
    if (!c[u].is_zero()) {
      ++support;
      if (start == n)
        start = u;
    }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(u))
      if (!seen[w] && !c[w].is_zero() && (c[u] + c[w]).is_zero()) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == support;
}

// ---------------------------------------------------------------------------
// Phase walk
//
// Points are half-integral, so the walker works on doubled coordinates
// (0, 1, 2 for 0, 1/2, 1) and only keeps steps that land on half-integral
// points. Specs mark free coordinates with -1.

namespace {

using IVec = std::vector<int>;
using Spec = std::vector<int>;

constexpr int kFree = -1;

int gcd_of(const IVec &v) {
  int g = 0;
  for (int x : v)
    g = std::gcd(g, std::abs(x));
  return g;
}

class PhaseWalker {
public:
  PhaseWalker(const Graph &g, const BallDecomposition &ball, const IVec &end)
      : g_(g), ball_(ball), end_(end) {}

  // Layer k has the parity of b (bipartite graphs use odd parity).
  bool same_parity(std::size_t k) const {
    const std::size_t b = ball_.odd_ball_radius.value_or(1);
    return k % 2 == b % 2;
  }
  bool below_b(std::size_t k) const {
    return !ball_.odd_ball_radius || k < *ball_.odd_ball_radius;
  }
  int star(std::size_t k) const {
    if (!same_parity(k))
      return 0;
    return below_b(k) ? 2 : 1;
  }
  int flip_one(std::size_t k) const { return same_parity(k) ? 0 : 2; }
  int flip_half(std::size_t k) const {
    return (!same_parity(k) || below_b(k)) ? 1 : 0;
  }
  int phi(std::size_t t) const { return below_b(t) ? 2 : 1; }
  int half_or_zero(std::size_t u) const { return end_[u] == 0 ? 0 : 1; }
  // Rule for layer t given the target on layer t + 1.
  int inner_rule(std::size_t u, std::size_t t) const {
    int m = -1;
    for (std::size_t w : g_.neighbors(u))
      if (ball_.layer_of[w] == t + 1)
        m = std::max(m, end_[w]);
    if (m == 2)
      return 0;
    if (m == 1)
      return 1;
    return phi(t);
  }

  template <class F> Spec layered(std::size_t upto, F value) const {
    Spec s(g_.node_count(), kFree);
    for (std::size_t u = 0; u < g_.node_count(); ++u) {
      const std::size_t k = ball_.layer_of[u];
      if (k <= upto)
        s[u] = value(u, k);
    }
    return s;
  }
  Spec star_ball(std::size_t t) const {
    return layered(t, [&](std::size_t, std::size_t k) { return star(k); });
  }
  // Invariants of the inward phase at level t.
  Spec inward(std::size_t t) const {
    return layered(ball_.eccentricity, [&](std::size_t u, std::size_t k) {
      if (k + 1 <= t)
        return star(k);
      if (k == t)
        return inner_rule(u, t);
      return end_[u];
    });
  }

  static bool matches(const IVec &x, const Spec &s) {
    for (std::size_t u = 0; u < x.size(); ++u)
      if (s[u] != kFree && x[u] != s[u])
        return false;
    return true;
  }

  struct Waypoint {
    Spec target;
    std::size_t allowance;
  };

  // Runs the waypoint chain; on failure searches directly for the last
  // waypoint within the stage allowance. Returns steps used.
  std::size_t stage(const std::vector<Waypoint> &chain, std::size_t allowance,
                    const std::string &name, bool claim_moves = false) {
    claim_moves_ = claim_moves;
    const IVec start = points_.back();
    std::vector<IVec> added;
    IVec at = start;
    bool ok = true;
    for (const auto &wp : chain) {
      auto path = reach(at, wp.target, wp.allowance);
      if (!path) {
        ok = false;
        break;
      }
      for (auto &p : *path)
        added.push_back(std::move(p));
      if (!added.empty())
        at = added.back();
    }
    if (!ok) {
      auto path = reach(start, chain.back().target, allowance);
      if (!path)
        throw Error(ErrorCode::InvariantViolated,
                    "stage '" + name + "' not completed within " +
                        std::to_string(allowance) + " steps");
      added = std::move(*path);
    }
    for (auto &p : added)
      points_.push_back(std::move(p));
    return added.size();
  }

  const IVec &current() const { return points_.back(); }
  void begin(const IVec &x) { points_ = {x}; }
  const std::vector<IVec> &points() const { return points_; }

private:
  // Maximal step from x along c when it lands on a half-integral point.
  std::optional<IVec> step(const IVec &x, const IVec &c) const {
    long num = -1;
    long den = 1;
    auto consider = [&](long slack, long rate) {
      if (rate <= 0)
        return;
      if (num < 0 || slack * den < num * rate) {
        num = slack;
        den = rate;
      }
    };
    for (const auto &[u, v] : g_.edges())
      consider(2 - x[u] - x[v], c[u] + c[v]);
    for (std::size_t u = 0; u < x.size(); ++u)
      consider(x[u], -c[u]);
    if (num <= 0)
      return std::nullopt;
    IVec y(x.size());
    for (std::size_t u = 0; u < x.size(); ++u) {
      const long moved = num * c[u];
      if (moved % den != 0)
        return std::nullopt;
      y[u] = x[u] + static_cast<int>(moved / den);
    }
    return y;
  }

  // Shortest sequence (iterative deepening) of candidate steps from x to a
  // point matching the target; returns the points after x.
  std::optional<std::vector<IVec>> reach(const IVec &x, const Spec &target,
                                         std::size_t allowance) {
    for (std::size_t depth = 0; depth <= allowance; ++depth) {
      std::vector<IVec> path;
      explored_.clear();
      if (dfs(x, target, depth, path))
        return path;
    }
    return std::nullopt;
  }

  static std::string key_of(const IVec &x) {
    return std::string(x.begin(), x.end());
  }

  bool dfs(IVec x, const Spec &target, std::size_t depth,
           std::vector<IVec> &path) {
    if (matches(x, target))
      return true;
    if (depth == 0)
      return false;
    auto [it, fresh] = explored_.emplace(key_of(x), depth);
    if (!fresh) {
      if (it->second >= depth)
        return false;
      it->second = depth;
    }
    for (const auto &c : candidates(x, target)) {
      auto y = step(x, c);
      if (!y)
        continue;
      path.push_back(std::move(*y));
      if (dfs(path.back(), target, depth - 1, path))
        return true;
      path.pop_back();
    }
    return false;
  }

  bool is_circuit_int(const IVec &c) const {
    std::size_t start = c.size();
    std::size_t support = 0;
    for (std::size_t u = 0; u < c.size(); ++u)
      if (c[u] != 0) {
        ++support;
        if (start == c.size())
          start = u;
      }
    if (support == 0)
      return false;
    std::vector<char> seen(c.size(), 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : g_.neighbors(u))
        if (!seen[w] && c[w] != 0 && c[u] + c[w] == 0) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == support;
  }

  // Target with free coordinates filled in: each free node keeps its value
  // (or 0) when possible, lowered to fit next to specified neighbours.
  IVec completion(const IVec &x, const Spec &target, bool zero_free) const {
    IVec y(x.size());
    for (std::size_t u = 0; u < x.size(); ++u) {
      if (target[u] != kFree) {
        y[u] = target[u];
        continue;
      }
      int cap = zero_free ? 0 : x[u];
      for (std::size_t w : g_.neighbors(u))
        if (target[w] != kFree)
          cap = std::min(cap, 2 - target[w]);
      y[u] = std::max(cap, 0);
    }
    return y;
  }

  // Restrictions of d to the components of its support graph.
  std::vector<IVec> components(const IVec &d) const {
    std::vector<IVec> out;
    std::vector<char> seen(d.size(), 0);
    for (std::size_t s = 0; s < d.size(); ++s) {
      if (seen[s] || d[s] == 0)
        continue;
      IVec part(d.size(), 0);
      std::vector<std::size_t> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        part[u] = d[u];
        for (std::size_t w : g_.neighbors(u))
          if (!seen[w] && d[w] != 0 && d[u] + d[w] == 0) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      out.push_back(std::move(part));
    }
    return out;
  }

  // A node outside supp(d) given value -s joins every neighbouring
  // component whose value is s into one circuit.
  void add_connectors(const IVec &d, std::vector<IVec> &out) const {
    for (std::size_t u = 0; u < d.size(); ++u) {
      if (d[u] != 0)
        continue;
      std::set<int> values;
      for (std::size_t w : g_.neighbors(u))
        if (d[w] != 0)
          values.insert(d[w]);
      for (int s : values) {
        IVec c = d;
        c[u] = -s;
        for (auto &part : components(c))
          if (part[u] != 0)
            out.push_back(std::move(part));
        out.push_back(std::move(c));
      }
    }
  }

  void add_family(const IVec &d, std::vector<IVec> &out) const {
    if (gcd_of(d) == 0)
      return;
    out.push_back(d);
    for (auto &part : components(d))
      out.push_back(std::move(part));
    IVec sg(d.size());
    for (std::size_t u = 0; u < d.size(); ++u)
      sg[u] = (d[u] > 0) - (d[u] < 0);
    out.push_back(sg);
    for (auto &part : components(sg))
      out.push_back(std::move(part));
    add_connectors(d, out);
    add_connectors(sg, out);
  }

  // Directions used to set up the alternating pattern around the root.
  void add_claim_moves(const IVec &x, std::vector<IVec> &out) const {
    const std::size_t v = ball_.root;
    const std::size_t n = x.size();
    auto layer = [&](std::size_t u) { return ball_.layer_of[u]; };
    auto make = [&](auto value) {
      IVec c(n);
      for (std::size_t u = 0; u < n; ++u)
        c[u] = value(u);
      return c;
    };
    out.push_back(make([&](std::size_t u) {
      if (u == v)
        return -1;
      if (layer(u) == 1)
        return 1;
      return (layer(u) == 2 && x[u] > 0) ? -1 : 0;
    }));
    out.push_back(make([&](std::size_t u) {
      if (u == v)
        return -1;
      if (layer(u) == 1 && x[u] == 0)
        return 1;
      return (layer(u) == 2 && x[u] == 2) ? -1 : 0;
    }));
    out.push_back(make([&](std::size_t u) {
      if (u == v)
        return 1;
      return (layer(u) == 1 && x[u] > 0) ? -1 : 0;
    }));
    out.push_back(make([&](std::size_t u) {
      if (u == v)
        return 1;
      return (layer(u) == 1 && x[u] == 1) ? -1 : 0;
    }));
    out.push_back(make([&](std::size_t u) { return u == v ? -1 : 0; }));
  }

  std::vector<IVec> candidates(const IVec &x, const Spec &target) const {
    const std::size_t n = x.size();
    std::vector<IVec> raw;
    for (bool zero_free : {false, true}) {
      IVec d = completion(x, target, zero_free);
      for (std::size_t u = 0; u < n; ++u)
        d[u] -= x[u];
      add_family(d, raw);
    }
    // Hubs: the origin and the all-halves point.
    for (int hub : {0, 1}) {
      IVec d(n);
      for (std::size_t u = 0; u < n; ++u)
        d[u] = hub - x[u];
      add_family(d, raw);
    }
    for (std::size_t u = 0; u < n; ++u)
      if (target[u] != kFree && x[u] != target[u]) {
        IVec e(n, 0);
        e[u] = target[u] > x[u] ? 1 : -1;
        raw.push_back(std::move(e));
      }
    if (claim_moves_)
      add_claim_moves(x, raw);

    std::vector<IVec> out;
    std::set<IVec> seen;
    for (auto &c : raw) {
      const int g = gcd_of(c);
      if (g == 0)
        continue;
      for (int &e : c)
        e /= g;
      if (!is_circuit_int(c))
        continue;
      if (seen.insert(c).second)
        out.push_back(std::move(c));
    }
    return out;
  }

  const Graph &g_;
  const BallDecomposition &ball_;
  const IVec &end_;
  std::vector<IVec> points_;
  bool claim_moves_ = false;
  std::unordered_map<std::string, std::size_t> explored_;
};

std::optional<IVec> doubled(const RationalVector &x) {
  IVec out;
  for (const auto &c : x) {
    if (c == Rational(0))
      out.push_back(0);
    else if (c == Rational(1, 2))
      out.push_back(1);
    else if (c == Rational(1))
      out.push_back(2);
    else
      return std::nullopt;
  }
  return out;
}

RationalVector halved(const IVec &x) {
  RationalVector out;
  for (int c : x)
    out.emplace_back(c, 2);
  return out;
}

} // namespace

FstabWalk fstab_walk(const Graph &g, const RationalVector &start,
                     const RationalVector &end, std::size_t root) {
  const HPolytope p = build_fstab_polytope(g);
  std::optional<IVec> from, to;
  if (start.size() == g.node_count() && end.size() == g.node_count()) {
    from = doubled(start);
    to = doubled(end);
  }
  if (!from || !to || !contains(p, start) || !contains(p, end))
    throw Error(ErrorCode::NotInPolytope,
                "walk endpoints must be half-integral points of P_fstab(G)");
  if (!is_vertex(p, start) || !is_vertex(p, end))
    throw Error(ErrorCode::InvalidArgument, "walk endpoints must be vertices");
  const BallDecomposition ball = ball_decomposition(g, root);
  const std::size_t ecc = ball.eccentricity;

  FstabWalk result;
  result.root = root;
  result.eccentricity = ecc;
  result.odd_ball_radius = ball.odd_ball_radius;
  if (start == end) {
    result.walk = Walk::at(start);
    return result;
  }

  const IVec &x_end = *to;
  PhaseWalker w(g, ball, x_end);
  w.begin(*from);
  using Waypoint = PhaseWalker::Waypoint;

  // Outward phase.
  std::size_t t = std::min<std::size_t>(w.same_parity(1) ? 1 : 2, ecc);
  std::size_t steps = w.stage({{w.star_ball(t), t == 1 ? 4u : 6u}},
                              t == 1 ? 4 : 6, "outward start", true);
  const bool bipartite = !ball.odd_ball_radius;
  const std::size_t b = ball.odd_ball_radius.value_or(0);
  while (t < ecc) {
    const std::size_t t1 = t + 1;
    const std::size_t t2 = std::min(t + 2, ecc);
    const Spec flip_one =
        w.layered(t1, [&](std::size_t, std::size_t k) { return w.flip_one(k); });
    std::vector<Waypoint> chain;
    if (bipartite || t + 2 < b) {
      chain = {{flip_one, 2}, {w.star_ball(t2), 1}};
    } else if (t + 2 == b) {
      const Spec halves = w.layered(t2, [](std::size_t, std::size_t) { return 1; });
      chain = {{flip_one, 2}, {halves, 1}, {w.star_ball(t2), 1}};
    } else {
      const Spec flip_half = w.layered(
          t1, [&](std::size_t, std::size_t k) { return w.flip_half(k); });
      chain = {{flip_half, 1}, {w.star_ball(t2), 1}};
    }
    steps += w.stage(chain, 4, "outward step t=" + std::to_string(t));
    t = t2;
  }
  if (!PhaseWalker::matches(w.current(), w.star_ball(ecc)))
    throw Error(ErrorCode::InvariantViolated,
                "outward phase ended off the alternating pattern");
  result.phase1_steps = steps;

  // Inward phase.
  steps = 0;
  t = ecc;
  if (!w.same_parity(t)) {
    const Spec first = w.layered(ecc, [&](std::size_t u, std::size_t k) {
      return k + 1 <= t ? w.star(k) : w.half_or_zero(u);
    });
    steps += w.stage({{first, 2}, {w.inward(t - 1), 2}}, 4, "inward start");
    t -= 1;
  }
  while (t >= 2) {
    const Spec z1 = w.layered(ecc, [&](std::size_t u, std::size_t k) {
      if (k + 1 <= t)
        return w.flip_half(k);
      return k == t ? w.half_or_zero(u) : x_end[u];
    });
    const Spec z2 = w.layered(ecc, [&](std::size_t u, std::size_t k) {
      if (k + 2 <= t)
        return w.star(k);
      return k + 1 == t ? w.half_or_zero(u) : x_end[u];
    });
    const Spec z3 = w.layered(ecc, [&](std::size_t u, std::size_t k) {
      return k + 2 <= t ? w.flip_half(k) : x_end[u];
    });
    steps += w.stage({{z1, 1}, {z2, 1}, {z3, 1}, {w.inward(t - 2), 1}}, 4,
                     "inward step t=" + std::to_string(t));
    t -= 2;
  }
  steps += w.stage({{x_end, t == 0 ? 1u : 3u}}, t == 0 ? 1 : 3, "inward finish");
  result.phase2_steps = steps;

  Walk walk = Walk::at(start);
  const auto &pts = w.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IVec d(pts[i].size());
    for (std::size_t u = 0; u < d.size(); ++u)
      d[u] = pts[i][u] - pts[i - 1][u];
    const int gd = gcd_of(d);
    RationalVector dir;
    for (int e : d)
      dir.emplace_back(e / gd);
    // Doubled coordinates: the real step is gd / 2 along dir.
    walk.append({walk.points.back(), std::move(dir), Rational(gd, 2),
                 halved(pts[i])});
  }
  result.walk = std::move(walk);
  return result;
}

// ---------------------------------------------------------------------------
// Graph families for testing

std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n) {
  if (n < 1 || n > 6)
    throw Error(ErrorCode::InvalidArgument, "isomorphism classes need 1 <= n <= 6");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do
    perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pair_index[pairs[k].first][pairs[k].second] = k;
    pair_index[pairs[k].second][pairs[k].first] = k;
  }

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1)
        edges.push_back(pairs[k]);
    Graph g(n, edges);
    if (!g.is_connected())
      continue;
    std::uint32_t canon = mask;
    for (const auto &pm : perms) {
      std::uint32_t image = 0;
      for (const auto &[a, b] : edges)
        image |= 1u << pair_index[pm[a]][pm[b]];
      canon = std::min(canon, image);
      if (canon < mask)
        break;
    }
    // Masks are visited in increasing order, so each class is first met at
    // its minimal (canonical) labelling.
    if (canon == mask)
      out.push_back(std::move(g));
  }
  return out;
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64 &rng) {
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "random graph needs n >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng))
        edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

} // namespace circuitlab
