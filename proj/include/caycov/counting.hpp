#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "caycov/bigint.hpp"
#include "caycov/errors.hpp"
#include "caycov/oracle.hpp"
#include "caycov/partition.hpp"

namespace caycov {

// Gaussian binomial [k over l]_p. Zero when l > k, one when l == 0. Each
// partial product is itself a Gaussian binomial, so the stepwise division is
// exact at every step.
inline BigCount gaussian_binomial(int k, int l, long long p) {
  require_prime(p, "gaussian_binomial");
  if (k < 0 || l < 0) throw ValidationError("gaussian_binomial: negative argument");
  if (l > k) return 0;
  BigCount result = 1;
  for (int i = 1; i <= l; ++i) {
    result *= pow_of(p, k - l + i) - 1;
    result = exact_div(result, pow_of(p, i) - 1, "gaussian_binomial");
  }
  return result;
}

// Number of subgroups of type beta of an abelian p-group of type alpha.
// mu_i = 1 + #{j : alpha_j >= beta_i}; the closed form is
//   p^H * prod_i (p^(mu_i - i) - 1) / prod over runs of (p^nu - 1),
// with H combining the half-terms first so it stays integral.
inline BigCount count_subgroups_of_type(long long p, const Partition& alpha, const Partition& beta) {
  require_prime(p, "count_subgroups_of_type");
  if (!contains(alpha, beta)) return 0;
  if (beta.empty()) return 1;

  const int n = static_cast<int>(alpha.size());
  const int m = static_cast<int>(beta.size());
  std::vector<int> mu(m + 1, 0);  // 1-based
  for (int i = 1; i <= m; ++i) {
    int count_ge = 0;
    for (int j = 0; j < n; ++j) {
      if (alpha.parts()[j] >= beta.parts()[i - 1]) ++count_ge;
    }
    mu[i] = count_ge + 1;
  }

  MultiplicityForm runs = multiplicity_form(beta);
  long long sum_sq = 0;
  for (auto [v, mult] : runs.runs) sum_sq += static_cast<long long>(mult) * mult;
  long long half_term = sum_sq - static_cast<long long>(m) * m;
  if (half_term % 2 != 0) throw InternalError("count_subgroups_of_type: odd half term");

  long long H = half_term / 2;
  for (int i = 1; i <= m; ++i) {
    H += static_cast<long long>(mu[i] - 2 * i) * (beta.parts()[i - 1] - 1);
    for (int eta = mu[i]; eta <= n; ++eta) H += alpha.parts()[eta - 1];
  }
  if (H < 0) throw InternalError("count_subgroups_of_type: negative exponent");

  BigCount num = pow_of(p, H);
  for (int i = 1; i <= m; ++i) num *= pow_of(p, mu[i] - i) - 1;
  BigCount den = 1;
  for (auto [v, mult] : runs.runs) {
    for (int nu = 1; nu <= mult; ++nu) den *= pow_of(p, nu) - 1;
  }
  return exact_div(num, den, "count_subgroups_of_type");
}

// Number of subgroups K with L/K of type beta; equals the type count by duality.
inline BigCount count_subgroups_with_quotient(long long p, const Partition& alpha, const Partition& beta) {
  return count_subgroups_of_type(p, alpha, beta);
}

// Number of subgroups of order p^r of a p-group of type alpha, as a sum over
// sub-partitions with conjugate data a, b:
//   sum_beta prod_i [a_i - b_(i+1) over b_i - b_(i+1)]_p * p^((a_i - b_i) b_(i+1)).
inline BigCount count_subgroups_of_order(long long p, const Partition& alpha, int r) {
  require_prime(p, "count_subgroups_of_order");
  if (r < 0 || r > alpha.weight()) return 0;
  if (r == 0) return 1;
  const Partition a = conjugate(alpha);
  BigCount total = 0;
  for (const Partition& beta : sub_partitions_of_weight(alpha, r)) {
    const Partition b = conjugate(beta);
    BigCount term = 1;
    for (int i = 1; i <= alpha.first(); ++i) {
      int ai = a.part1(i);
      int bi = b.part1(i);
      int bnext = b.part1(i + 1);
      term *= gaussian_binomial(ai - bnext, bi - bnext, p);
      term *= pow_of(p, static_cast<long long>(ai - bi) * bnext);
    }
    total += term;
  }
  return total;
}

// Shrink the ambient: when every part of alpha is >= beta_1, subgroups of type
// beta live in the p^(beta_1)-torsion subgroup, so alpha may be replaced by
// the rectangle beta_1^n without changing the count.
inline Partition reduce_ambient(long long p, const Partition& alpha, const Partition& beta) {
  require_prime(p, "reduce_ambient");
  if (!beta.empty() && (alpha.empty() || alpha.last() < beta.first())) {
    throw ValidationError("reduce_ambient: alpha must have all parts >= beta_1");
  }
  return Partition::rectangle(beta.first(), static_cast<int>(alpha.size()));
}

// Ambient with at most two distinct exponent values: a1^n1 * a2^n2, a1 > a2.
struct TwoBlockType {
  int a1 = 1;
  int n1 = 1;
  int a2 = 0;
  int n2 = 0;

  TwoBlockType(int a1_, int n1_, int a2_, int n2_) : a1(a1_), n1(n1_), a2(a2_), n2(n2_) {
    if (n1 < 1 || a1 <= a2 || a2 < 0 || n2 < 0) throw ValidationError("TwoBlockType: invalid blocks");
    if ((n2 == 0) != (a2 == 0)) throw ValidationError("TwoBlockType: n2 and a2 must vanish together");
  }

  static TwoBlockType of(const Partition& alpha) {
    if (alpha.empty() || alpha.distinct_values() > 2) {
      throw ValidationError("TwoBlockType::of: not a two-block partition");
    }
    MultiplicityForm mf = multiplicity_form(alpha);
    if (mf.runs.size() == 1) return TwoBlockType(mf.runs[0].first, mf.runs[0].second, 0, 0);
    return TwoBlockType(mf.runs[0].first, mf.runs[0].second, mf.runs[1].first, mf.runs[1].second);
  }

  Partition as_partition() const {
    std::vector<int> parts;
    for (int i = 0; i < n1; ++i) parts.push_back(a1);
    for (int i = 0; i < n2; ++i) parts.push_back(a2);
    return Partition(std::move(parts));
  }
};

// Cyclic subgroups of order p^s of a1^n1 * a2^n2 with quotient type beta.
//
// Generators are classified by the pair (b1, b2) of blockwise minimal
// p-degrees (b_i = a_i for an all-zero block). A generator profile fixes the
// quotient type through the Smith data of the pair subgroup <(p^b1, p^b2)>,
// and the number of cyclic subgroups per profile is T1(b1)*T2(b2)/phi(p^s).
inline BigCount count_cyclic_with_quotient(long long p, const TwoBlockType& ambient, int s,
                                           const Partition& beta) {
  require_prime(p, "count_cyclic_with_quotient");
  if (s < 1 || s > ambient.a1) {
    throw ValidationError("count_cyclic_with_quotient: need 1 <= s <= a1");
  }
  const int a1 = ambient.a1, n1 = ambient.n1, a2 = ambient.a2, n2 = ambient.n2;

  auto block_count = [&](int a, int n, int b) -> BigCount {
    // elements of Z_{p^a}^n whose minimal degree is exactly b (b == a: zero block)
    if (b == a) return 1;
    if (n == 0) return 0;
    return pow_of(p, static_cast<long long>(a - b) * n) -
           pow_of(p, static_cast<long long>(a - b - 1) * n);
  };

  const BigCount phi = pow_of(p, s - 1) * (p - 1);
  BigCount total = 0;
  for (int b1 = 0; b1 <= a1; ++b1) {
    for (int b2 = 0; b2 <= a2; ++b2) {
      if (std::max(a1 - b1, a2 - b2) != s) continue;
      BigCount t1 = block_count(a1, n1, b1);
      BigCount t2 = block_count(a2, n2, b2);
      if (t1 == 0 || t2 == 0) continue;
      int y = std::min(b1, b2);
      int x = std::min(b1 + a2, b2 + a1) - y;
      std::vector<int> parts;
      for (int i = 0; i < n1 - 1; ++i) parts.push_back(a1);
      for (int i = 0; i < std::max(n2 - 1, 0); ++i) parts.push_back(a2);
      parts.push_back(x);
      parts.push_back(y);
      if (Partition::normalized(std::move(parts)) == beta) {
        total += exact_div(t1 * t2, phi, "count_cyclic_with_quotient");
      }
    }
  }
  return total;
}

enum class TripleMethod { kTrivial, kRectangular, kCyclicClosedForm, kOracle };

inline const char* to_string(TripleMethod m) {
  switch (m) {
    case TripleMethod::kTrivial: return "closed-form";
    case TripleMethod::kRectangular: return "closed-form";
    case TripleMethod::kCyclicClosedForm: return "closed-form";
    case TripleMethod::kOracle: return "oracle";
  }
  return "?";
}

struct TripleCount {
  BigCount value;
  TripleMethod method = TripleMethod::kTrivial;
};

// Subgroups of type beta with quotient of type gamma inside a group of type
// alpha. Closed forms where available, exhaustive enumeration otherwise:
//  - rectangular alpha: the quotient type is forced, so the pair count
//    collapses to the plain type count;
//  - beta (or, by duality, gamma) a single part with two-block alpha: the
//    cyclic-kernel closed form.
inline TripleCount count_triple_explained(long long p, const Partition& alpha, const Partition& beta,
                                          const Partition& gamma, const EnumerationBudget& budget = {}) {
  require_prime(p, "count_triple");
  if (!contains(alpha, beta) || !contains(alpha, gamma)) return {0, TripleMethod::kTrivial};
  if (beta.weight() + gamma.weight() != alpha.weight()) return {0, TripleMethod::kTrivial};
  if (beta.empty()) return {gamma == alpha ? 1 : 0, TripleMethod::kTrivial};
  if (gamma.empty()) return {beta == alpha ? 1 : 0, TripleMethod::kTrivial};

  if (alpha.rectangular()) {
    const int k = alpha.first();
    const int n = static_cast<int>(alpha.size());
    if (complement(k, n, beta) != gamma) return {0, TripleMethod::kRectangular};
    return {count_subgroups_of_type(p, alpha, beta), TripleMethod::kRectangular};
  }
  if (alpha.distinct_values() == 2) {
    if (beta.size() == 1) {
      return {count_cyclic_with_quotient(p, TwoBlockType::of(alpha), beta.first(), gamma),
              TripleMethod::kCyclicClosedForm};
    }
    if (gamma.size() == 1) {
      // subgroup/quotient symmetry of the pair count
      return {count_cyclic_with_quotient(p, TwoBlockType::of(alpha), gamma.first(), beta),
              TripleMethod::kCyclicClosedForm};
    }
  }

  BigCount order = pow_of(p, alpha.weight());
  if (order > budget.triple_oracle_cap(p)) {
    throw BudgetExceededError("count_triple: ambient order " + order.str() +
                              " exceeds the enumeration budget for p=" + std::to_string(p));
  }
  EnumerationBudget widened = budget;
  widened.max_group_order = std::max<std::uint64_t>(budget.max_group_order,
                                                    static_cast<std::uint64_t>(order));
  return {count_triple_oracle(p, alpha, beta, gamma, widened), TripleMethod::kOracle};
}

inline BigCount count_triple(long long p, const Partition& alpha, const Partition& beta,
                             const Partition& gamma, const EnumerationBudget& budget = {}) {
  return count_triple_explained(p, alpha, beta, gamma, budget).value;
}

}  // namespace caycov
