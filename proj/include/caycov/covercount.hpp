#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "caycov/bigint.hpp"
#include "caycov/cayley.hpp"
#include "caycov/counting.hpp"
#include "caycov/covering.hpp"
#include "caycov/errors.hpp"
#include "caycov/partition.hpp"

namespace caycov {

struct PrimeFactor {
  long long prime = 0;
  BigCount value;
  std::string method;  // "closed-form" or "oracle"
};

struct CoverCountResult {
  BigCount value = 1;
  std::vector<PrimeFactor> factors;

  void multiply(long long p, BigCount v, std::string method) {
    value *= v;
    factors.push_back({p, std::move(v), std::move(method)});
  }
};

namespace covercount_detail {

// 2-part of the kernel-count formula: the subgroup count inside the rectangle
// beta_1^l padded with 1^l0, split at the last part exceeding 1.
inline BigCount kernel_factor_two(int l, int l0, const Partition& beta) {
  if (beta.empty()) return 1;
  const int m = static_cast<int>(beta.size());
  int mp = 0;
  while (mp < m && beta.parts()[mp] > 1) ++mp;
  if (mp > l || m > l + l0) return 0;

  MultiplicityForm runs = multiplicity_form(beta);
  long long sum_sq = 0;
  for (auto [v, mult] : runs.runs) sum_sq += static_cast<long long>(mult) * mult;
  long long half = sum_sq - static_cast<long long>(m) * m;
  if (half % 2 != 0) throw InternalError("kernel_factor_two: odd half term");
  long long H = half / 2 + static_cast<long long>(l0) * mp;
  for (int i = 1; i <= mp; ++i) {
    H += static_cast<long long>(l + 1 - 2 * i) * (beta.parts()[i - 1] - 1);
  }
  if (H < 0) throw InternalError("kernel_factor_two: negative exponent");

  BigCount num = pow_of(2, H);
  for (int i = 1; i <= mp; ++i) num *= pow_of(2, l + 1 - i) - 1;
  for (int j = mp + 1; j <= m; ++j) num *= pow_of(2, l + l0 + 1 - j) - 1;
  BigCount den = 1;
  for (auto [v, mult] : runs.runs) {
    for (int nu = 1; nu <= mult; ++nu) den *= pow_of(2, nu) - 1;
  }
  return exact_div(num, den, "kernel_factor_two");
}

// Odd-p part: the subgroup count inside the rectangle beta_1^(l+l').
inline BigCount kernel_factor_odd(long long p, int width, const Partition& beta) {
  if (beta.empty()) return 1;
  const int m = static_cast<int>(beta.size());
  if (m > width) return 0;

  MultiplicityForm runs = multiplicity_form(beta);
  long long sum_sq = 0;
  for (auto [v, mult] : runs.runs) sum_sq += static_cast<long long>(mult) * mult;
  long long half = sum_sq - static_cast<long long>(m) * m;
  if (half % 2 != 0) throw InternalError("kernel_factor_odd: odd half term");
  long long H = half / 2;
  for (int i = 1; i <= m; ++i) {
    H += static_cast<long long>(width + 1 - 2 * i) * (beta.parts()[i - 1] - 1);
  }
  if (H < 0) throw InternalError("kernel_factor_odd: negative exponent");

  BigCount num = pow_of(p, H);
  for (int i = 1; i <= m; ++i) num *= pow_of(p, width + 1 - i) - 1;
  BigCount den = 1;
  for (auto [v, mult] : runs.runs) {
    for (int nu = 1; nu <= mult; ++nu) den *= pow_of(p, nu) - 1;
  }
  return exact_div(num, den, "kernel_factor_odd");
}

// One prime's worth of the q-fold count: sum over conjugate sequences
// b_1 >= ... >= b_k >= 1 with sum s, b_1 <= first_width, later parts <=
// rest_width; the k-th term is the order-count expansion in the rectangle of
// height k. Sequences are the conjugates of the kernel types with largest
// part exactly k, so trailing zero parts are excluded.
inline BigCount qfold_factor(long long p, int s, int first_width, int rest_width) {
  if (s == 0) return 1;
  BigCount total = 0;
  std::vector<int> b;
  auto term_of = [&]() {
    BigCount term = 1;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int width = i == 0 ? first_width : rest_width;
      int cur = b[i];
      int nxt = i + 1 < b.size() ? b[i + 1] : 0;
      term *= gaussian_binomial(width - nxt, cur - nxt, p);
      term *= pow_of(p, static_cast<long long>(width - cur) * nxt);
    }
    return term;
  };
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      total += term_of();
      return;
    }
    int hi = b.empty() ? std::min(first_width, remaining) : std::min({b.back(), rest_width, remaining});
    for (int v = hi; v >= 1; --v) {
      b.push_back(v);
      rec(remaining - v);
      b.pop_back();
    }
  };
  rec(s);
  return total;
}

inline std::vector<long long> primes_of(const GroupType& a, const GroupType& b, const GroupType& c) {
  std::set<long long> primes;
  for (long long p : a.primes()) primes.insert(p);
  for (long long p : b.primes()) primes.insert(p);
  for (long long p : c.primes()) primes.insert(p);
  return {primes.begin(), primes.end()};
}

}  // namespace covercount_detail

// Number of typical abelian coverings with covering transformation group
// isomorphic to `kernel`: a closed-form product over the primes of the kernel.
inline CoverCountResult count_with_kernel(const CayleySpec& spec, const GroupType& kernel) {
  RelationData rd = relation_data(spec);
  const int l = static_cast<int>(spec.pair_count());
  CoverCountResult result;
  for (const auto& [p, beta] : kernel.components()) {
    // At odd primes the parity sublattice fills the involution coordinates,
    // so only the pair slots remain; at 2 they survive as 1^l0.
    BigCount f = p == 2 ? covercount_detail::kernel_factor_two(l, rd.involution_rel_rank, beta)
                        : covercount_detail::kernel_factor_odd(p, l, beta);
    result.multiply(p, std::move(f), "closed-form");
  }
  return result;
}

// Number of typical abelian coverings with prescribed total group and kernel.
// Odd primes get triple counts in the complement types; the 2-part is an
// exhaustive count over the 2-primary relation image. Incompatible orders
// yield 0 (no such covering exists).
inline CoverCountResult count_with_group_and_kernel(const CayleySpec& spec, const GroupType& kernel,
                                                    const GroupType& total, const EnumerationBudget& budget = {}) {
  CoverCountResult result;
  GroupType base = b_type(spec);
  if (total.order() != base.order() * kernel.order()) {
    result.value = 0;
    result.factors.push_back({0, 0, "order-mismatch"});
    return result;
  }
  if (kernel.trivial()) {
    result.value = (total == base) ? 1 : 0;
    result.factors.push_back({0, result.value, "closed-form"});
    return result;
  }

  const int slots = static_cast<int>(spec.generator_slots());
  const int pairs = static_cast<int>(spec.pair_count());
  for (long long p : covercount_detail::primes_of(base, kernel, total)) {
    const Partition& alpha_p = base.at(p);
    const Partition& beta_p = kernel.at(p);
    const Partition& gamma_p = total.at(p);
    const int kp = alpha_p.first() + beta_p.first();
    // odd primes see only the pair slots: the parity sublattice is p-divisible
    // there and fills the involution coordinates of every admissible subgroup
    const int width = p == 2 ? slots : pairs;
    if (static_cast<int>(gamma_p.size()) > width || gamma_p.first() > kp) {
      result.multiply(p, 0, "closed-form");
      continue;
    }
    if (p == 2) {
      BigCount f = two_primary_kernel_factor(spec, kp, complement(kp, width, gamma_p), beta_p, budget);
      result.multiply(p, std::move(f), "oracle");
    } else {
      Partition ambient = complement(kp, width, alpha_p);
      TripleCount tc =
          count_triple_explained(p, ambient, complement(kp, width, gamma_p), beta_p, budget);
      result.multiply(p, std::move(tc.value), to_string(tc.method));
    }
  }
  return result;
}

// Number of q-fold typical abelian coverings: per prime, a sum of
// order-count expansions over kernel-type conjugates.
inline CoverCountResult count_q_fold(const CayleySpec& spec, std::uint64_t folds) {
  if (folds == 0) throw ValidationError("count_q_fold: fold count must be positive");
  RelationData rd = relation_data(spec);
  const int l = static_cast<int>(spec.pair_count());
  CoverCountResult result;
  for (auto [p, s] : factorize(folds)) {
    BigCount f = p == 2 ? covercount_detail::qfold_factor(2, s, l + rd.involution_rel_rank, l)
                        : covercount_detail::qfold_factor(p, s, l, l);
    result.multiply(p, std::move(f), "closed-form");
  }
  return result;
}

inline BigCount circulant_cyclic_total_count(const CayleySpec& spec, std::uint64_t f);

// Cyclic-kernel reduction of the kernel count.
inline CoverCountResult count_cyclic_circulant(const CayleySpec& spec, const GroupType& kernel) {
  if (!kernel.cyclic()) throw NonCyclicKernelError("count_cyclic_circulant: kernel type is not cyclic");
  RelationData rd = relation_data(spec);
  const int l = static_cast<int>(spec.pair_count());
  const int l0 = rd.involution_rel_rank;

  CoverCountResult result;
  for (const auto& [p, beta] : kernel.components()) {
    const int b1 = beta.first();
    BigCount f;
    if (p == 2) {
      if (b1 == 1) {
        f = pow_of(2, l + l0) - 1;
      } else if (l == 0) {
        f = 0;
      } else {
        f = pow_of(2, static_cast<long long>(l - 1) * (b1 - 1) + l0) * (pow_of(2, l) - 1);
      }
    } else if (l == 0) {
      f = 0;  // odd kernel parts need pair slots
    } else {
      f = pow_of(p, static_cast<long long>(l - 1) * (b1 - 1)) *
          exact_div(pow_of(p, l) - 1, BigCount(p - 1), "count_cyclic_circulant");
    }
    result.multiply(p, std::move(f), "closed-form");
  }
  // Where one generator slot forces a cyclic total group, this must agree
  // with the cyclic-total reduction below.
  if (spec.generator_slots() == 1 && b_type(spec).cyclic()) {
    std::uint64_t f = kernel.exponent();
    BigCount direct = circulant_cyclic_total_count(spec, f);
    if (direct != result.value) {
      throw InternalError("count_cyclic_circulant: reductions disagree on a forced-cyclic query");
    }
  }
  return result;
}

// Coverings with cyclic kernel of order f and cyclic total group, for cyclic
// base groups. Zero for odd valence and even f; otherwise a product over the
// primes of f with exponents in ceil(d/2).
inline BigCount circulant_cyclic_total_count(const CayleySpec& spec, std::uint64_t f) {
  GroupType base = b_type(spec);
  if (!base.cyclic()) throw ValidationError("circulant_cyclic_total_count: base group is not cyclic");
  if (f == 0) throw ValidationError("circulant_cyclic_total_count: f must be positive");
  const int d = static_cast<int>(valence(spec));
  if (d % 2 == 1 && f % 2 == 0) return 0;
  const int half = d / 2;  // the pair count: an odd valence contributes one involution
  BigCount result = 1;
  for (auto [p, e] : factorize(f)) {
    if (!base.at(p).empty()) {
      result *= pow_of(p, static_cast<long long>(e) * (half - 1));
    } else if (half == 0) {
      return 0;
    } else {
      result *= pow_of(p, static_cast<long long>(e - 1) * (half - 1)) *
                exact_div(pow_of(p, half) - 1, BigCount(p - 1), "circulant_cyclic_total_count");
    }
  }
  return result;
}

// A single covering-count request; exactly one of the three modes.
struct CoverQuery {
  std::optional<GroupType> kernel;
  std::optional<GroupType> total;
  std::optional<std::uint64_t> folds;

  void validate() const {
    if (total && !kernel) {
      throw OrderMismatchError("cover query: --total requires --kernel");
    }
    if (folds && (kernel || total)) {
      throw OrderMismatchError("cover query: --folds excludes --kernel/--total");
    }
    if (!folds && !kernel) {
      throw ValidationError("cover query: one of --kernel, --kernel+--total, --folds is required");
    }
    if (folds && *folds == 0) throw ValidationError("cover query: fold count must be positive");
  }
};

inline CoverCountResult count_coverings(const CayleySpec& spec, const CoverQuery& query,
                                        const EnumerationBudget& budget = {}) {
  query.validate();
  if (query.folds) return count_q_fold(spec, *query.folds);
  if (query.total) return count_with_group_and_kernel(spec, *query.kernel, *query.total, budget);
  return count_with_kernel(spec, *query.kernel);
}

}  // namespace caycov
