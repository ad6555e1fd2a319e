// Acceptance suite: formula-vs-oracle equivalences, exact to the integer.
// One line per criterion; exit 0 iff everything holds.

#include <chrono>
#include <cstdio>
#include <vector>

#include "caycov/verify.hpp"

using namespace caycov;

int main() {
  struct Criterion {
    const char* label;
    CheckResult result;
  };
  std::vector<Criterion> rows;
  auto timed = [&](const char* label, auto fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = fn();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2zu. %s (%lld checks, %.1fs)%s%s\n", r.pass ? "PASS" : "FAIL", rows.size() + 1,
                label, r.checks, dt, r.pass ? "" : " first mismatch: ", r.pass ? "" : r.detail.c_str());
    std::fflush(stdout);
    rows.push_back({label, std::move(r)});
  };

  EnumerationBudget budget;

  timed("type-count formula equals exhaustive counts (p in {2,3}, |alpha| <= 5)",
        [&] { return check_type_count_formula(budget); });
  timed("order-count formula equals exhaustive counts and type sums",
        [&] { return check_order_count_formula(budget); });
  timed("triple counts are symmetric in subgroup and quotient type",
        [&] { return check_hall_duality(budget); });
  timed("cyclic-kernel closed form equals oracle on two-block ambients",
        [&] { return check_two_block_cyclic_counts(budget); });
  timed("canonical form: row spaces, invertibility, type sizes (200 samples)",
        [&] { return check_canonical_form(budget); });
  timed("quotient types equal rectangle complements",
        [&] { return check_quotient_typing(budget); });

  auto cover_pair = check_covering_counts(budget);
  {
    const CheckResult& r = cover_pair.first;
    std::printf("[%s] %2zu. %s (%lld checks)%s%s\n", r.pass ? "PASS" : "FAIL", rows.size() + 1,
                "covering counts equal enumerated covering subgroups", r.checks,
                r.pass ? "" : " first mismatch: ", r.pass ? "" : r.detail.c_str());
    rows.push_back({"covering counts", r});
  }
  {
    const CheckResult& r = cover_pair.second;
    std::printf("[%s] %2zu. %s (%lld checks)%s%s\n", r.pass ? "PASS" : "FAIL", rows.size() + 1,
                "every enumerated covering builds and satisfies the covering axioms", r.checks,
                r.pass ? "" : " first mismatch: ", r.pass ? "" : r.detail.c_str());
    rows.push_back({"covering construction", r});
  }

  timed("cyclic-kernel and cyclic-total reductions agree with the general counts",
        [&] { return check_reductions(budget); });
  timed("marginalization identities over kernels and totals",
        [&] { return check_marginalizations(budget); });

  bool all = true;
  for (const auto& row : rows) all = all && row.result.pass;
  std::printf("%s\n", all ? "acceptance: all criteria hold" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
