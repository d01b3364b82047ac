// One line per acceptance criterion; suite details follow on stdout.

#include "circuitlab/error.hpp"
#include "circuitlab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace circuitlab;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::pair<std::string, SuiteOptions>> suites;
};

SuiteOptions sampled(std::size_t n) {
  SuiteOptions o;
  o.sample = n;
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "matching CD = 1,1,2,2 for n = 2..5", {{"matching-small", {}}}},
      {2, "matching n = 6: cdist(empty, perfect) = 3 and 3-walks everywhere",
       {{"matching-6", {}}}},
      {3, "matching n = 7: two-step recipe on all ordered pairs", {{"matching-7", {}}}},
      {4, "perfect matching n = 4, 6, 8, 10 (n = 10 sampled 20000)",
       {{"permatch", sampled(20000)}}},
      {5, "tsp n = 5, 6, 7", {{"tsp-5", {}}, {"tsp-6", {}}, {"tsp-7", {}}}},
      {6, "fstab circuit oracle equivalence", {{"fstab-oracle", {}}}},
      {7, "fstab walks within 4*ecc + 16", {{"fstab-walks", {}}}},
      {8, "sign-structured circuits have one nonzero coordinate",
       {{"nonneg-circuits", {}}}},
      {9, "walk-engine invariants over 10^4 random steps", {{"walk-invariants", {}}}},
  };

  std::vector<std::string> summary;
  std::ostringstream details;
  bool all = true;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string note;
    for (const auto &[name, opts] : c.suites) {
      try {
        const VerificationReport r = run_suite(name, opts);
        details << r.to_text();
        pass = pass && r.passed();
        std::size_t ok = 0;
        for (const auto &k : r.checks)
          ok += k.pass;
        note += (note.empty() ? "" : ", ") + name + " " + std::to_string(ok) + "/" +
                std::to_string(r.checks.size());
      } catch (const Error &e) {
        pass = false;
        note += (note.empty() ? "" : ", ") + name + " error: " + e.what();
        details << "suite " << name << " error: " << e.what() << "\n";
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    const std::string line = "criterion " + std::to_string(c.id) + ": " +
                             (pass ? "PASS" : "FAIL") + " | " + c.title + " | " + note +
                             " | " + buf;
    std::cout << line << std::endl;
    summary.push_back(line);
    all = all && pass;
  }
  std::cout << "\n" << details.str() << "\nsummary\n";
  for (const auto &l : summary)
    std::cout << l << "\n";
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
