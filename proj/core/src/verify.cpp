#include "circuitlab/verify.hpp"

#include "circuitlab/circuits.hpp"
#include "circuitlab/error.hpp"
#include "circuitlab/families.hpp"
#include "circuitlab/fstab.hpp"
#include "circuitlab/parallel.hpp"
#include "circuitlab/walk.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace circuitlab {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord &c) { return c.pass; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n";
  for (const auto &c : checks) {
    out << (c.pass ? "  PASS " : "  FAIL ") << c.description
        << (c.sampled ? " [sampled]" : "") << "\n"
        << "       expected: " << c.expected << "\n"
        << "       observed: " << c.observed << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", c.seconds);
    out << "       time: " << buf << "s\n";
  }
  out << (passed() ? "PASS " : "FAIL ") << suite << "\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto &c : checks)
    j["checks"].push_back({{"description", c.description},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"pass", c.pass},
                           {"seconds", c.seconds},
                           {"sampled", c.sampled}});
  return j.dump(2) + "\n";
}

namespace {

struct Outcome {
  std::string observed;
  bool pass;
};

class Suite {
public:
  explicit Suite(std::string name) { report_.suite = std::move(name); }

  void check(const std::string &description, const std::string &expected,
             const std::function<Outcome()> &body, bool sampled = false) {
    CheckRecord rec;
    rec.description = description;
    rec.expected = expected;
    rec.sampled = sampled;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = body();
      rec.observed = o.observed;
      rec.pass = o.pass;
    } catch (const Error &e) {
      rec.observed = std::string("error ") + to_string(e.code()) + ": " + e.what();
      rec.pass = false;
    }
    rec.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    report_.checks.push_back(std::move(rec));
  }

  VerificationReport take() { return std::move(report_); }

private:
  VerificationReport report_;
};

Outcome equal(std::size_t observed, std::size_t expected) {
  return {std::to_string(observed), observed == expected};
}

std::string fraction(std::size_t good, std::size_t total) {
  return std::to_string(good) + " of " + std::to_string(total);
}

// Ordered pairs (i, j), i != j, or a seeded sample of them.
std::vector<std::pair<std::size_t, std::size_t>>
ordered_pairs(std::size_t count, std::size_t sample, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (sample == 0) {
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        if (i != j)
          out.emplace_back(i, j);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  while (out.size() < sample) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i != j)
      out.emplace_back(i, j);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
unordered_pairs(std::size_t count, std::size_t sample, std::uint64_t seed) {
  auto out = ordered_pairs(count, sample, seed);
  if (sample == 0)
    std::erase_if(out, [](const auto &p) { return p.first > p.second; });
  return out;
}

// Counts indices in [0, count) for which pred holds, in parallel.
std::size_t count_if_parallel(std::size_t count,
                              const std::function<bool(std::size_t)> &pred) {
  std::vector<char> ok(count, 0);
  parallel_for(count, [&](std::size_t i) { ok[i] = pred(i) ? 1 : 0; });
  return static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
}

std::vector<RationalVector> matching_vertices(std::size_t n) {
  return vertex_vectors(EdgeIndex(n), enumerate_matchings(n));
}

// matching-small

VerificationReport matching_small(const SuiteOptions &opts) {
  Suite s("matching-small");
  const std::size_t expected[] = {1, 1, 2, 2};
  for (std::size_t n = 2; n <= 5; ++n) {
    s.check("CD(P_match(" + std::to_string(n) +
                ")) by circuit enumeration and BFS over all vertex pairs",
            std::to_string(expected[n - 2]), [&] {
              const HPolytope p = build_matching_polytope(n);
              const auto circuits = enumerate_circuits(p, opts.budget);
              const auto d = circuit_diameter(p, matching_vertices(n), circuits,
                                              opts.depth_limit);
              return equal(d.diameter, expected[n - 2]);
            });
  }
  s.check("empty matching vs two disjoint edges in K_4: difference is a circuit",
          "false", [] {
            const EdgeIndex idx(4);
            const HPolytope p = build_matching_polytope(4);
            const auto v = is_circuit(
                p, characteristic(idx, make_edge_set({{0, 1}, {2, 3}})));
            return Outcome{to_string(v.status), !v.is_circuit()};
          });
  return s.take();
}

// matching-6

VerificationReport matching_6(const SuiteOptions &) {
  Suite s("matching-6");
  const std::size_t n = 6;
  const EdgeIndex idx(n);
  const HPolytope p = build_matching_polytope(n);
  const auto matchings = enumerate_matchings(n);
  const auto perfect = enumerate_perfect_matchings(n);
  const RationalVector zero = characteristic(idx, {});

  s.check("every step from the zero vertex lands on a single-edge matching",
          "15 distinct single-edge landings, all directions unit vectors", [&] {
            std::set<EdgeSet> landings;
            bool units = true;
            bool single = true;
            for (const auto &c : enumerate_nonnegative_circuits(p)) {
              units = units && support(c.direction).size() == 1;
              for (const auto &g :
                   {c.direction, scale(c.direction, Rational(-1))}) {
                try {
                  const EdgeSet m = edges_of(idx, certified_step(p, zero, g).to);
                  single = single && m.size() == 1 &&
                           characteristic(idx, m) == certified_step(p, zero, g).to;
                  landings.insert(m);
                } catch (const Error &e) {
                  if (e.code() != ErrorCode::NoStep)
                    throw;
                }
              }
            }
            const bool ok = units && single && landings.size() == 15;
            return Outcome{std::to_string(landings.size()) +
                               " distinct landings, unit directions " +
                               (units ? "yes" : "no") + ", single-edge " +
                               (single ? "yes" : "no"),
                           ok};
          });

  s.check("chi(M2) - chi({e}) over 15 perfect matchings M2 and 15 edges e: "
          "circuits found",
          "0 of 225", [&] {
            std::size_t circuits = 0;
            for (const auto &m2 : perfect)
              for (std::size_t e = 0; e < idx.size(); ++e)
                if (is_circuit(p, subtract(characteristic(idx, m2),
                                           unit_vector(idx.size(), e)))
                        .is_circuit())
                  ++circuits;
            return Outcome{fraction(circuits, perfect.size() * idx.size()),
                           circuits == 0};
          });

  s.check("cdist(empty, {01,23,45}): lower and upper bounds", "3", [&] {
    const auto b = matching_distance_bounds(
        p, idx, {}, make_edge_set({{0, 1}, {2, 3}, {4, 5}}));
    if (b.lower == b.upper)
      return equal(b.lower, 3);
    return Outcome{"between " + std::to_string(b.lower) + " and " +
                       std::to_string(b.upper),
                   false};
  });

  s.check("component walks for all 76*75 ordered matching pairs: validated, "
          "maximum length",
          "3", [&] {
            std::vector<std::size_t> len(matchings.size() * matchings.size(), 0);
            std::atomic<bool> ok{true};
            parallel_for(matchings.size(), [&](std::size_t i) {
              for (std::size_t j = 0; j < matchings.size(); ++j) {
                if (i == j)
                  continue;
                const Walk w =
                    matching_component_walk(p, idx, matchings[i], matchings[j]);
                if (w.points.back() != characteristic(idx, matchings[j]))
                  ok = false;
                len[i * matchings.size() + j] = w.length();
              }
            });
            const std::size_t max = *std::max_element(len.begin(), len.end());
            return Outcome{std::to_string(max) + (ok ? "" : " (wrong endpoint)"),
                           ok && max == 3};
          });
  return s.take();
}

// matching-7

VerificationReport matching_7(const SuiteOptions &opts) {
  Suite s("matching-7");
  const std::size_t n = 7;
  const EdgeIndex idx(n);
  const HPolytope p = build_matching_polytope(n);
  const auto matchings = enumerate_matchings(n);

  s.check("matchings of K_7", "232", [&] { return equal(matchings.size(), 232); });

  const auto pairs = ordered_pairs(matchings.size(), opts.sample, opts.seed);
  s.check("two-step recipe over ordered matching pairs: validated walks of "
              "length <= 2",
          opts.sample ? fraction(pairs.size(), pairs.size())
                      : "53592 of 53592",
          [&] {
            std::vector<char> good(pairs.size(), 0);
            std::vector<std::string> failures(pairs.size());
            parallel_for(pairs.size(), [&](std::size_t k) {
              const auto &[i, j] = pairs[k];
              try {
                const Walk w =
                    matching_two_step_recipe(p, idx, matchings[i], matchings[j]);
                good[k] = w.length() <= 2 &&
                          w.points.back() == characteristic(idx, matchings[j]);
              } catch (const Error &e) {
                failures[k] = e.what();
              }
            });
            const std::size_t ok = std::count(good.begin(), good.end(), 1);
            std::string obs = fraction(ok, pairs.size());
            for (const auto &f : failures)
              if (!f.empty()) {
                obs += "; first failure: " + f;
                break;
              }
            return Outcome{obs, ok == pairs.size()};
          },
          opts.sample != 0);

  s.check("empty matching vs {01,23}: difference is a circuit", "false", [&] {
    const auto v =
        is_circuit(p, characteristic(idx, make_edge_set({{0, 1}, {2, 3}})));
    return Outcome{to_string(v.status), !v.is_circuit()};
  });
  return s.take();
}

// permatch

VerificationReport permatch(const SuiteOptions &opts) {
  Suite s("permatch");
  for (std::size_t n : {4, 6}) {
    const std::size_t pairs = n == 4 ? 6 : 210;
    s.check("P_permatch(" + std::to_string(n) +
                "): ordered perfect matching pairs one circuit step apart",
            fraction(pairs, pairs), [n] {
              const HPolytope p = build_perfect_matching_polytope(n);
              const auto v =
                  vertex_vectors(EdgeIndex(n), enumerate_perfect_matchings(n));
              const auto pr = ordered_pairs(v.size(), 0, 0);
              const std::size_t ok = count_if_parallel(pr.size(), [&](std::size_t k) {
                return one_step(p, v[pr[k].first], v[pr[k].second]);
              });
              return Outcome{fraction(ok, pr.size()), ok == pr.size()};
            });
  }

  {
    const std::size_t n = 8;
    const EdgeIndex idx(n);
    const HPolytope p = build_perfect_matching_polytope(n);
    const auto v = vertex_vectors(idx, enumerate_perfect_matchings(n));
    const EdgeSet m1 = make_edge_set({{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    const EdgeSet m2 = make_edge_set({{0, 3}, {2, 1}, {4, 7}, {6, 5}});
    s.check("P_permatch(8): {01,23,45,67} vs {03,21,47,65} difference is a "
            "circuit",
            "false", [&] {
              const auto r = is_circuit(
                  p, subtract(characteristic(idx, m2), characteristic(idx, m1)));
              return Outcome{to_string(r.status), !r.is_circuit()};
            });
    s.check("P_permatch(8): perfect matchings", "105",
            [&] { return equal(v.size(), 105); });
    s.check("P_permatch(8): ordered pairs joined by one step or a two-step "
            "walk through a perfect matching",
            "10920 of 10920", [&] {
              const auto pr = ordered_pairs(v.size(), 0, 0);
              const std::size_t ok = count_if_parallel(pr.size(), [&](std::size_t k) {
                const auto &x = v[pr[k].first];
                const auto &y = v[pr[k].second];
                return one_step(p, x, y) || two_step_search(p, x, y, v).has_value();
              });
              return Outcome{fraction(ok, pr.size()), ok == pr.size()};
            });
    s.check("P_permatch(8): circuit diameter", "2", [&] {
      const auto x = characteristic(idx, m1);
      const auto y = characteristic(idx, m2);
      const bool one = one_step(p, x, y);
      const bool two = two_step_search(p, x, y, v).has_value();
      if (one)
        return Outcome{"1", false};
      return Outcome{two ? "2" : "> 2", two};
    });
  }

  {
    const std::size_t n = 10;
    const HPolytope p = build_perfect_matching_polytope(n);
    const auto v = vertex_vectors(EdgeIndex(n), enumerate_perfect_matchings(n));
    const auto pr = opts.sample ? ordered_pairs(v.size(), opts.sample, opts.seed)
                                : ordered_pairs(v.size(), 0, 0);
    s.check("P_permatch(10): perfect matching pairs one circuit step apart",
            opts.sample ? fraction(pr.size(), pr.size()) : "892080 of 892080",
            [&] {
              const std::size_t ok = count_if_parallel(pr.size(), [&](std::size_t k) {
                return one_step(p, v[pr[k].first], v[pr[k].second]);
              });
              return Outcome{fraction(ok, pr.size()), ok == pr.size()};
            },
            opts.sample != 0);
  }
  return s.take();
}

// tsp

bool edge_disjoint(const EdgeSet &a, const EdgeSet &b) {
  EdgeSet both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  return both.empty();
}

VerificationReport tsp_5(const SuiteOptions &opts) {
  Suite s("tsp-5");
  const std::size_t n = 5;
  const EdgeIndex idx(n);
  const HPolytope p = build_tsp_polytope(n, false);
  const auto tours = enumerate_tours(n);
  std::vector<EdgeSet> sets;
  for (const auto &t : tours)
    sets.push_back(tour_edges(t));
  const auto v = vertex_vectors(idx, sets);

  s.check("tours of K_5", "12", [&] { return equal(tours.size(), 12); });
  s.check("description complete", "true", [&] {
    return Outcome{p.description_complete() ? "true" : "false",
                   p.description_complete()};
  });

  DiameterResult d;
  s.check("CD(P_TSP(5)) by circuit enumeration and BFS", "2", [&] {
    d = circuit_diameter(p, v, enumerate_circuits(p, opts.budget),
                         opts.depth_limit);
    return equal(d.diameter, 2);
  });
  s.check("edge-disjoint tour pairs at distance 2", "12 of 12", [&] {
    if (d.distance.empty())
      return Outcome{"no distances", false};
    std::size_t total = 0;
    std::size_t two = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (i != j && edge_disjoint(sets[i], sets[j])) {
          ++total;
          two += d.distance[i][j] == 2;
        }
    return Outcome{fraction(two, total), two == total && total == 12};
  });
  s.check("tour pairs sharing an edge at distance 1", "120 of 120", [&] {
    if (d.distance.empty())
      return Outcome{"no distances", false};
    std::size_t total = 0;
    std::size_t one = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (i != j && !edge_disjoint(sets[i], sets[j])) {
          ++total;
          one += d.distance[i][j] == 1;
        }
    return Outcome{fraction(one, total), one == total && total == 120};
  });
  return s.take();
}

VerificationReport tsp_6(const SuiteOptions &) {
  Suite s("tsp-6");
  const std::size_t n = 6;
  const EdgeIndex idx(n);
  const HPolytope p = build_tsp_polytope(n, true);
  std::vector<EdgeSet> sets;
  for (const auto &t : enumerate_tours(n))
    sets.push_back(tour_edges(t));
  const auto v = vertex_vectors(idx, sets);

  s.check("tours of K_6", "60", [&] { return equal(v.size(), 60); });
  s.check("comb rows", "120", [&] {
    std::size_t combs = 0;
    for (std::size_t i = 0; i < p.inequality_count(); ++i)
      combs += p.inequality_label(i).rfind("comb", 0) == 0;
    return equal(combs, 120);
  });
  s.check("ordered tour pairs one circuit step apart under subtour and comb "
          "rows",
          "3540 of 3540", [&] {
            const auto pr = ordered_pairs(v.size(), 0, 0);
            const std::size_t ok = count_if_parallel(pr.size(), [&](std::size_t k) {
              return one_step(p, v[pr[k].first], v[pr[k].second]);
            });
            return Outcome{fraction(ok, pr.size()), ok == pr.size()};
          });
  return s.take();
}

// Canonical form of an unordered pair of edge masks under node relabeling.
std::pair<std::uint32_t, std::uint32_t>
canonical_pair(const EdgeIndex &idx, const EdgeSet &a, const EdgeSet &b) {
  std::vector<std::size_t> perm(idx.nodes());
  std::iota(perm.begin(), perm.end(), 0);
  auto mask = [&](const EdgeSet &es) {
    std::uint32_t m = 0;
    for (const auto &[i, j] : es)
      m |= 1u << idx.index(std::min(perm[i], perm[j]), std::max(perm[i], perm[j]));
    return m;
  };
  std::pair<std::uint32_t, std::uint32_t> best{~0u, ~0u};
  do {
    std::uint32_t x = mask(a);
    std::uint32_t y = mask(b);
    if (x > y)
      std::swap(x, y);
    best = std::min(best, {x, y});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

VerificationReport tsp_7(const SuiteOptions &opts) {
  Suite s("tsp-7");
  const std::size_t n = 7;
  const EdgeIndex idx(n);
  const HPolytope p = build_tsp_polytope(n, true);
  std::vector<EdgeSet> sets;
  for (const auto &t : enumerate_tours(n))
    sets.push_back(tour_edges(t));
  const auto v = vertex_vectors(idx, sets);

  s.check("tours of K_7", "360", [&] { return equal(v.size(), 360); });
  s.check("description complete", "false", [&] {
    return Outcome{p.description_complete() ? "true" : "false",
                   !p.description_complete()};
  });

  const auto pr = unordered_pairs(v.size(), opts.sample, opts.seed);
  s.check("tour pairs whose difference is a certified circuit",
          opts.sample ? fraction(pr.size(), pr.size()) : "64620 of 64620",
          [&] {
            const std::size_t ok = count_if_parallel(pr.size(), [&](std::size_t k) {
              return is_circuit(p, subtract(v[pr[k].second], v[pr[k].first]))
                  .is_circuit();
            });
            return Outcome{fraction(ok, pr.size()), ok == pr.size()};
          },
          opts.sample != 0);

  s.check("edge-disjoint tour pairs up to relabeling: classes, all certified",
          "3 classes, 4140 of 4140 certified", [&] {
            std::vector<std::pair<std::size_t, std::size_t>> disjoint;
            for (std::size_t i = 0; i < v.size(); ++i)
              for (std::size_t j = i + 1; j < v.size(); ++j)
                if (edge_disjoint(sets[i], sets[j]))
                  disjoint.emplace_back(i, j);
            std::vector<std::pair<std::uint32_t, std::uint32_t>> forms(disjoint.size());
            std::vector<char> ok(disjoint.size(), 0);
            parallel_for(disjoint.size(), [&](std::size_t k) {
              const auto &[i, j] = disjoint[k];
              forms[k] = canonical_pair(idx, sets[i], sets[j]);
              ok[k] = is_circuit(p, subtract(v[j], v[i])).is_circuit();
            });
            const std::set<std::pair<std::uint32_t, std::uint32_t>> classes(
                forms.begin(), forms.end());
            const std::size_t good = std::count(ok.begin(), ok.end(), 1);
            return Outcome{std::to_string(classes.size()) + " classes, " +
                               fraction(good, disjoint.size()) + " certified",
                           classes.size() == 3 && good == disjoint.size() &&
                               disjoint.size() == 4140};
          });
  return s.take();
}

// fstab

std::vector<Graph> small_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (auto &g : connected_graphs_up_to_isomorphism(n))
      out.push_back(std::move(g));
  return out;
}

// Compares both tests on every nonzero vector of {-1,-1/2,0,1/2,1}^V and on
// random rational vectors. Returns (mismatches, vectors tested).
std::pair<std::size_t, std::size_t> oracle_mismatches(const Graph &g,
                                                      std::size_t randoms,
                                                      std::mt19937_64 &rng) {
  const HPolytope p = build_fstab_polytope(g);
  const std::size_t n = g.node_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= 5;
  std::size_t bad = 0;
  std::size_t tested = 0;
  std::vector<std::int64_t> doubled(n);
  RationalVector c(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t r = code;
    for (std::size_t i = 0; i < n; ++i, r /= 5) {
      doubled[i] = static_cast<std::int64_t>(r % 5) - 2;
      c[i] = Rational(doubled[i], 2);
    }
    if (std::all_of(doubled.begin(), doubled.end(),
                    [](std::int64_t x) { return x == 0; }))
      continue;
    ++tested;
    if (is_fstab_circuit(g, c) != is_circuit(p, doubled).is_circuit())
      ++bad;
  }
  std::uniform_int_distribution<std::int64_t> num(-4, 4);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  for (std::size_t k = 0; k < randoms;) {
    for (auto &x : c)
      x = Rational(num(rng), den(rng));
    if (is_zero(c))
      continue;
    ++k;
    ++tested;
    if (is_fstab_circuit(g, c) != is_circuit(p, c).is_circuit())
      ++bad;
  }
  return {bad, tested};
}

VerificationReport fstab_oracle(const SuiteOptions &opts) {
  Suite s("fstab-oracle");
  std::mt19937_64 rng(opts.seed);
  s.check("connected graphs: 1, 1, 2, 6, 21, 112 classes on 1..6 nodes",
          "1 1 2 6 21 112", [] {
            std::string obs;
            for (std::size_t n = 1; n <= 6; ++n)
              obs += (n > 1 ? " " : "") +
                     std::to_string(connected_graphs_up_to_isomorphism(n).size());
            return Outcome{obs, obs == "1 1 2 6 21 112"};
          });
  const auto graphs = small_graphs(5);
  s.check("support-graph test equals the generic circuit test on all connected "
          "graphs with 2..5 nodes",
          "0 mismatches", [&] {
            std::size_t bad = 0;
            std::size_t tested = 0;
            for (const auto &g : graphs) {
              const auto [b, t] = oracle_mismatches(g, 100, rng);
              bad += b;
              tested += t;
            }
            return Outcome{std::to_string(bad) + " mismatches over " +
                               std::to_string(tested) + " vectors in " +
                               std::to_string(graphs.size()) + " graphs",
                           bad == 0};
          });
  s.check("support-graph test equals the generic circuit test on 100 random "
          "connected graphs with 6..7 nodes",
          "0 mismatches", [&] {
            std::size_t bad = 0;
            std::size_t tested = 0;
            for (std::size_t k = 0; k < 100; ++k) {
              const Graph g = random_connected_graph(6 + k % 2, 0.35, rng);
              const auto [b, t] = oracle_mismatches(g, 100, rng);
              bad += b;
              tested += t;
            }
            return Outcome{std::to_string(bad) + " mismatches over " +
                               std::to_string(tested) + " vectors",
                           bad == 0};
          });
  return s.take();
}

struct WalkTally {
  std::size_t walks = 0;
  std::size_t bad = 0;
  long max_overhead = -1'000'000;
  std::string first_failure;
};

void tally_walks(const Graph &g, std::size_t root, WalkTally &t,
                 bool check_bfs) {
  const HPolytope p = build_fstab_polytope(g);
  const auto v = enumerate_fstab_vertices(g);
  std::optional<CircuitSet> circuits;
  if (check_bfs)
    circuits = enumerate_circuits(p);
  for (const auto &x : v) {
    std::vector<std::size_t> lengths;
    for (const auto &y : v) {
      ++t.walks;
      std::string why;
      try {
        const FstabWalk w = fstab_walk(g, x, y, root);
        const WalkCheck chk = validate_walk(p, w.walk);
        if (!chk.ok)
          why = "invalid walk: " + chk.reason;
        else if (w.walk.points.back() != y)
          why = "wrong endpoint";
        else if (w.walk.length() > w.bound())
          why = "length " + std::to_string(w.walk.length()) + " over bound";
        t.max_overhead = std::max(t.max_overhead, w.overhead());
        lengths.push_back(w.walk.length());
      } catch (const Error &e) {
        why = e.what();
        lengths.push_back(0);
      }
      if (!why.empty()) {
        ++t.bad;
        if (t.first_failure.empty())
          t.first_failure = to_string(x) + " -> " + to_string(y) + ": " + why;
      }
    }
    if (!circuits)
      continue;
    const std::size_t limit = *std::max_element(lengths.begin(), lengths.end());
    const auto dist = distances_from(p, *circuits, x, v, limit);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!dist[j] || *dist[j] > lengths[j]) {
        ++t.bad;
        if (t.first_failure.empty())
          t.first_failure = to_string(x) + " -> " + to_string(v[j]) +
                            ": walk shorter than BFS distance";
      }
  }
}

VerificationReport fstab_walks(const SuiteOptions &) {
  Suite s("fstab-walks");
  auto run = [&](const std::string &what, std::size_t max_n, bool all_roots,
                 std::size_t bfs_up_to) {
    s.check(what, "0 failures, overhead <= 16", [&] {
      const auto graphs = small_graphs(max_n);
      std::vector<WalkTally> parts(graphs.size());
      parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph &g = graphs[i];
        const bool bfs = g.node_count() <= bfs_up_to;
        if (all_roots)
          for (std::size_t r = 0; r < g.node_count(); ++r)
            tally_walks(g, r, parts[i], bfs);
        else
          tally_walks(g, graph_center(g), parts[i], bfs);
      });
      WalkTally t;
      for (const auto &q : parts) {
        t.walks += q.walks;
        t.bad += q.bad;
        t.max_overhead = std::max(t.max_overhead, q.max_overhead);
        if (t.first_failure.empty())
          t.first_failure = q.first_failure;
      }
      std::string obs = std::to_string(t.bad) + " failures in " +
                        std::to_string(t.walks) + " walks, max overhead " +
                        std::to_string(t.max_overhead);
      if (!t.first_failure.empty())
        obs += "; first: " + t.first_failure;
      return Outcome{obs, t.bad == 0 && t.max_overhead <= 16};
    });
  };
  run("walks between all vertex pairs, every root, graphs with 2..5 nodes "
      "(BFS distance check up to 4 nodes)",
      5, true, 4);
  run("walks between all vertex pairs, centre root, graphs with 6 nodes", 6,
      false, 0);
  return s.take();
}

// nonneg-circuits

// Circuits with c >= 0 or c <= 0 that have more than one nonzero entry.
std::size_t sign_violations(const CircuitSet &cs) {
  std::size_t bad = 0;
  for (const auto &c : cs) {
    bool pos = false;
    bool neg = false;
    for (const auto &x : c.direction) {
      pos = pos || x.sign() > 0;
      neg = neg || x.sign() < 0;
    }
    if (!(pos && neg) && support(c.direction).size() != 1)
      ++bad;
  }
  return bad;
}

HPolytope random_sign_structured(std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  std::uniform_int_distribution<int> entry(0, 3);
  std::uniform_int_distribution<int> rows(1, 4);
  const std::size_t n = dim(rng);
  RationalMatrix b(n);
  RationalVector d;
  std::vector<std::string> labels;
  auto push = [&](RationalVector row, Rational rhs) {
    b.push_back(std::move(row));
    d.push_back(std::move(rhs));
    labels.push_back("r" + std::to_string(labels.size()));
  };
  for (std::size_t i = 0; i < n; ++i)
    push(scale(unit_vector(n, i), Rational(-1)), 0);
  push(RationalVector(n, Rational(1)), Rational(static_cast<std::int64_t>(n)));
  auto random_row = [&](int sign) {
    RationalVector row(n);
    while (is_zero(row))
      for (auto &x : row)
        x = Rational(sign * entry(rng));
    return row;
  };
  for (int k = rows(rng); k > 0; --k)
    push(random_row(1), Rational(entry(rng) + 1));
  for (int k = rows(rng) - 1; k > 0; --k)
    push(random_row(-1), 0);
  return HPolytope(RationalMatrix(n), {}, std::move(b), std::move(d),
                   std::move(labels), true);
}

VerificationReport nonneg_circuits(const SuiteOptions &opts) {
  Suite s("nonneg-circuits");
  for (std::size_t n : {4, 5}) {
    s.check("P_match(" + std::to_string(n) +
                "): sign-definite circuits with more than one nonzero entry",
            "0", [&] {
              const auto cs = enumerate_circuits(build_matching_polytope(n),
                                                 opts.budget);
              const std::size_t bad = sign_violations(cs);
              return Outcome{std::to_string(bad) + " of " +
                                 std::to_string(cs.size()) + " circuits",
                             bad == 0};
            });
  }
  s.check("50 random polytopes with nonnegative and nonpositive rows: "
          "sign-definite circuits with more than one nonzero entry",
          "0", [&] {
            std::mt19937_64 rng(opts.seed);
            std::size_t bad = 0;
            std::size_t total = 0;
            for (int k = 0; k < 50; ++k) {
              const HPolytope p = random_sign_structured(rng);
              const auto cs = enumerate_circuits(p, opts.budget);
              bad += sign_violations(cs);
              total += cs.size();
            }
            return Outcome{std::to_string(bad) + " of " + std::to_string(total) +
                               " circuits",
                           bad == 0};
          });
  return s.take();
}

// walk-invariants

struct StepInstance {
  std::string name;
  HPolytope polytope;
  std::vector<RationalVector> vertices;
  std::vector<RationalVector> circuits;
};

VerificationReport walk_invariants(const SuiteOptions &opts) {
  Suite s("walk-invariants");
  std::vector<StepInstance> inst;
  auto add = [&](std::string name, HPolytope p, std::vector<RationalVector> v) {
    std::vector<RationalVector> cs;
    for (const auto &c : enumerate_circuits(p, opts.budget))
      cs.push_back(c.direction);
    inst.push_back({std::move(name), std::move(p), std::move(v), std::move(cs)});
  };
  add("match4", build_matching_polytope(4), matching_vertices(4));
  add("permatch4", build_perfect_matching_polytope(4),
      vertex_vectors(EdgeIndex(4), enumerate_perfect_matchings(4)));
  {
    std::vector<EdgeSet> sets;
    for (const auto &t : enumerate_tours(5))
      sets.push_back(tour_edges(t));
    add("tsp5", build_tsp_polytope(5, false), vertex_vectors(EdgeIndex(5), sets));
  }
  {
    const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    add("fstab-C5", build_fstab_polytope(c5), enumerate_fstab_vertices(c5));
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    add("fstab-K4", build_fstab_polytope(k4), enumerate_fstab_vertices(k4));
  }

  std::size_t steps = 0;
  std::size_t feasible = 0;
  std::size_t landing = 0;
  std::size_t repeat = 0;
  std::mt19937_64 rng(opts.seed);
  s.check("random maximal circuit steps: feasible, land on a new tight row, "
          "repeat gives no step",
          "10000 of 10000 each", [&] {
            std::size_t attempts = 0;
            while (steps < 10000 && attempts < 1'000'000) {
              ++attempts;
              const auto &in = inst[rng() % inst.size()];
              const HPolytope &p = in.polytope;
              RationalVector x = in.vertices[rng() % in.vertices.size()];
              // Walk a few steps so non-vertex points are covered too.
              for (int hop = 0; hop < 3 && steps < 10000; ++hop) {
                RationalVector g = in.circuits[rng() % in.circuits.size()];
                if (rng() % 2)
                  g = scale(g, Rational(-1));
                WalkStep st;
                try {
                  st = circuit_step(p, x, g);
                } catch (const Error &e) {
                  if (e.code() != ErrorCode::NoStep)
                    throw;
                  continue;
                }
                ++steps;
                const RationalVector &y = st.to;
                feasible += contains(p, y) && y == axpy(x, st.alpha, g);
                const auto &rows = p.inequalities().rows;
                const auto &rhs = p.inequality_rhs();
                bool lands = false;
                for (std::size_t i = 0; i < rows.size() && !lands; ++i)
                  lands = dot(rows[i], g).sign() > 0 &&
                          dot(rows[i], x) != rhs[i] && dot(rows[i], y) == rhs[i];
                landing += lands;
                try {
                  circuit_step(p, y, g);
                } catch (const Error &e) {
                  repeat += e.code() == ErrorCode::NoStep;
                }
                x = y;
              }
            }
            const bool ok = steps == 10000 && feasible == steps &&
                            landing == steps && repeat == steps;
            return Outcome{std::to_string(steps) + " steps: feasible " +
                               std::to_string(feasible) + ", boundary landing " +
                               std::to_string(landing) + ", repeat no step " +
                               std::to_string(repeat),
                           ok};
          });
  return s.take();
}

using SuiteFn = VerificationReport (*)(const SuiteOptions &);

const std::map<std::string, SuiteFn> &registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"matching-small", matching_small},
      {"matching-6", matching_6},
      {"matching-7", matching_7},
      {"permatch", permatch},
      {"tsp-5", tsp_5},
      {"tsp-6", tsp_6},
      {"tsp-7", tsp_7},
      {"fstab-oracle", fstab_oracle},
      {"fstab-walks", fstab_walks},
      {"nonneg-circuits", nonneg_circuits},
      {"walk-invariants", walk_invariants},
  };
  return r;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {
      "matching-small", "matching-6",   "matching-7",      "permatch",
      "tsp-5",          "tsp-6",        "tsp-7",           "fstab-oracle",
      "fstab-walks",    "nonneg-circuits", "walk-invariants"};
  return names;
}

VerificationReport run_suite(const std::string &name, const SuiteOptions &opts) {
  const auto it = registry().find(name);
  if (it == registry().end())
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return it->second(opts);
}

} // namespace circuitlab
