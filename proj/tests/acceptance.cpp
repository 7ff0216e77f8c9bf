// Acceptance runner: one [PASS]/[FAIL] line per criterion, each backed by a
// verification suite. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "bck/suites.hpp"

namespace {

struct Criterion {
  const char* id;
  const char* suite;
  const char* summary;
};

constexpr Criterion kCriteria[] = {
    {"AC1", "figures", "labeled ideal lattices and primes of T_2, T_3, H"},
    {"AC2", "bbar", "Id(A^{T_n}) ~ B_n plus top, n = 1..5"},
    {"AC3", "anti-iso", "primes anti-isomorphic to T, all trees up to 7 vertices"},
    {"AC4", "unions-primes", "union primes: brute force = blockwise, C_1..C_3, 2-3 blocks"},
    {"AC5", "spectral", "T0, quasi-sober, multiplicative basis on every corpus spectrum"},
    {"AC6", "priestley", "finite corpus spectra are Priestley with antichain prime posets"},
    {"AC7", "sigma-kx", "sigma is a lattice isomorphism and KX ~ Id on the corpus"},
    {"AC8", "boolean-unions", "KX(union of n C_1) ~ B_n, n = 1..4"},
    {"AC9", "union-homeo", "union spectra are disjoint unions, 20 seeded unions"},
    {"AC10", "axioms-random", "axioms, order laws and witness equivalence on 2x10^4 instances"},
    {"AC11", "negative-f2", "no tree up to 6 vertices has Id(A^T) ~ F_2"},
};

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    bck::SuiteResult result;
    std::string error;
    try {
      result = bck::run_suite(c.suite, 0);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && result.passed();
    std::size_t bad = 0;
    for (const auto& check : result.checks) bad += !check.passed;
    std::printf("[%s] %s %s (suite %s, %zu checks, %zu failed, seed 0, %.0f ms)\n", ok ? "PASS" : "FAIL", c.id,
                c.summary, c.suite, result.checks.size(), bad, ms);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    for (const auto& check : result.checks)
      if (!check.passed) std::printf("    %s: %s\n", check.name.c_str(), check.detail.c_str());
    failed += !ok;
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}
