#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "caycov/bigint.hpp"
#include "caycov/cayley.hpp"
#include "caycov/counting.hpp"
#include "caycov/covercount.hpp"
#include "caycov/covering.hpp"
#include "caycov/modring.hpp"
#include "caycov/oracle.hpp"
#include "caycov/partition.hpp"

namespace caycov {

struct CheckResult {
  std::string name;
  bool pass = true;
  long long checks = 0;
  std::string detail;  // first counterexample, or a summary

  explicit CheckResult(std::string name_) : name(std::move(name_)) {}

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

namespace verify_detail {

inline std::string big_str(const BigCount& v) { return v.str(); }

template <class K>
long long lookup(const std::map<K, long long>& m, const K& key) {
  auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

}  // namespace verify_detail

// The desk-scale covering fixtures.
inline std::vector<std::pair<std::string, CayleySpec>> covering_fixtures() {
  std::vector<std::pair<std::string, CayleySpec>> out;
  out.emplace_back("C3", CayleySpec::parse_and_validate({3}, {{1}, {2}}));
  out.emplace_back("C4", CayleySpec::parse_and_validate({4}, {{1}, {3}}));
  out.emplace_back("C5", CayleySpec::parse_and_validate({5}, {{1}, {4}}));
  out.emplace_back("C6", CayleySpec::parse_and_validate({6}, {{1}, {5}}));
  out.emplace_back("K2", CayleySpec::parse_and_validate({2}, {{1}}));
  out.emplace_back("K4", CayleySpec::parse_and_validate({2, 2}, {{1, 0}, {0, 1}, {1, 1}}));
  out.emplace_back("Z2xZ4", CayleySpec::parse_and_validate({2, 4}, {{0, 1}, {0, 3}, {1, 0}}));
  out.emplace_back("Z12", CayleySpec::parse_and_validate({12}, {{1}, {11}, {6}}));
  return out;
}

// criterion 1: type-count formula == exhaustive count, p in {2,3}, |alpha| <= 5
inline CheckResult check_type_count_formula(const EnumerationBudget& base = {}, int max_weight = 5) {
  CheckResult res{"type-count formula vs oracle"};
  EnumerationBudget budget = base;
  for (long long p : {2LL, 3LL}) {
    for (int w = 0; w <= max_weight; ++w) {
      for (const Partition& alpha : partitions_of_weight(w)) {
        SubgroupCensus census = census_p_group(p, alpha, budget);
        for (const Partition& beta : sub_partitions(alpha)) {
          BigCount formula = count_subgroups_of_type(p, alpha, beta);
          long long oracle = verify_detail::lookup(census.by_type, beta);
          ++res.checks;
          if (formula != oracle) {
            res.fail("p=" + std::to_string(p) + " alpha=" + alpha.str() + " beta=" + beta.str() +
                     " formula=" + formula.str() + " oracle=" + std::to_string(oracle));
          }
        }
      }
    }
  }
  return res;
}

// criterion 2: order-count formula == oracle == sum of type counts
inline CheckResult check_order_count_formula(const EnumerationBudget& base = {}, int max_weight = 5) {
  CheckResult res{"order-count formula vs oracle and type sums"};
  EnumerationBudget budget = base;
  for (long long p : {2LL, 3LL}) {
    for (int w = 0; w <= max_weight; ++w) {
      for (const Partition& alpha : partitions_of_weight(w)) {
        SubgroupCensus census = census_p_group(p, alpha, budget);
        BigCount total_formula = 0;
        for (int r = 0; r <= w; ++r) {
          BigCount formula = count_subgroups_of_order(p, alpha, r);
          total_formula += formula;
          BigCount type_sum = 0;
          for (const Partition& beta : sub_partitions_of_weight(alpha, r)) {
            type_sum += count_subgroups_of_type(p, alpha, beta);
          }
          long long oracle = verify_detail::lookup(census.by_order_exp, r);
          ++res.checks;
          if (formula != oracle || formula != type_sum) {
            res.fail("p=" + std::to_string(p) + " alpha=" + alpha.str() + " r=" + std::to_string(r) +
                     " formula=" + formula.str() + " oracle=" + std::to_string(oracle) +
                     " type-sum=" + type_sum.str());
          }
        }
        ++res.checks;
        if (total_formula != census.total) {
          res.fail("total subgroup count mismatch for p=" + std::to_string(p) + " alpha=" + alpha.str());
        }
      }
    }
  }
  return res;
}

// criterion 3: subgroup/quotient type symmetry of the exhaustive triple counts
inline CheckResult check_hall_duality(const EnumerationBudget& base = {}, int max_weight = 5) {
  CheckResult res{"triple-count symmetry (oracle)"};
  EnumerationBudget budget = base;
  for (long long p : {2LL, 3LL}) {
    for (int w = 0; w <= max_weight; ++w) {
      for (const Partition& alpha : partitions_of_weight(w)) {
        SubgroupCensus census = census_p_group(p, alpha, budget);
        for (const auto& [key, count] : census.by_type_and_quotient) {
          std::pair<Partition, Partition> swapped{key.second, key.first};
          ++res.checks;
          if (verify_detail::lookup(census.by_type_and_quotient, swapped) != count) {
            res.fail("p=" + std::to_string(p) + " alpha=" + alpha.str() + " beta=" + key.first.str() +
                     " gamma=" + key.second.str());
          }
        }
      }
    }
  }
  return res;
}

// criterion 4: cyclic-kernel closed form == oracle on the two-block grid
inline CheckResult check_two_block_cyclic_counts(const EnumerationBudget& base = {}) {
  CheckResult res{"cyclic-subgroup quotient counts vs oracle (two-block ambients)"};
  EnumerationBudget budget = base;
  budget.max_group_order = std::max<std::uint64_t>(budget.max_group_order, 60000);  // covers 3^10
  for (long long p : {2LL, 3LL}) {
    for (int a1 = 1; a1 <= 3; ++a1) {
      for (int a2 = 0; a2 < a1; ++a2) {
        for (int n1 = 1; n1 <= 2; ++n1) {
          for (int n2 = (a2 == 0 ? 0 : 1); n2 <= (a2 == 0 ? 0 : 2); ++n2) {
            TwoBlockType tb(a1, n1, a2, n2);
            Partition alpha = tb.as_partition();
            for (int s = 1; s <= a1; ++s) {
              auto oracle = cyclic_quotient_census(p, alpha, s, budget);
              for (const Partition& gamma : partitions_of_weight(alpha.weight() - s)) {
                BigCount formula = count_cyclic_with_quotient(p, tb, s, gamma);
                long long direct = verify_detail::lookup(oracle, gamma);
                ++res.checks;
                if (formula != direct) {
                  res.fail("p=" + std::to_string(p) + " alpha=" + alpha.str() + " s=" + std::to_string(s) +
                           " gamma=" + gamma.str() + " formula=" + formula.str() +
                           " oracle=" + std::to_string(direct));
                }
              }
            }
          }
        }
      }
    }
  }
  return res;
}

// spec invariants: quotient duality, gaussian symmetry, triple marginalization
inline CheckResult check_counting_invariants(const EnumerationBudget& base = {}) {
  CheckResult res{"counting invariants (duality, symmetry, marginalization)"};
  for (long long p : {2LL, 3LL}) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= 3; ++n) {
        Partition rect = Partition::rectangle(k, n);
        for (const Partition& beta : sub_partitions(rect)) {
          ++res.checks;
          if (count_subgroups_of_type(p, rect, beta) !=
              count_subgroups_of_type(p, rect, complement(k, n, beta))) {
            res.fail("rectangle duality: p=" + std::to_string(p) + " k=" + std::to_string(k) +
                     " n=" + std::to_string(n) + " beta=" + beta.str());
          }
        }
      }
    }
  }
  for (long long p : {2LL, 3LL, 5LL}) {
    for (int k = 0; k <= 8; ++k) {
      for (int l = 0; l <= k; ++l) {
        ++res.checks;
        if (gaussian_binomial(k, l, p) != gaussian_binomial(k, k - l, p)) {
          res.fail("gaussian symmetry: p=" + std::to_string(p) + " k=" + std::to_string(k) +
                   " l=" + std::to_string(l));
        }
      }
    }
  }
  EnumerationBudget budget = base;
  for (long long p : {2LL, 3LL}) {
    for (int w = 0; w <= 4; ++w) {
      for (const Partition& alpha : partitions_of_weight(w)) {
        for (const Partition& beta : sub_partitions(alpha)) {
          BigCount sum = 0;
          for (const Partition& gamma : partitions_of_weight(alpha.weight() - beta.weight())) {
            sum += count_triple(p, alpha, beta, gamma, budget);
          }
          ++res.checks;
          if (sum != count_subgroups_of_type(p, alpha, beta)) {
            res.fail("triple marginalization: p=" + std::to_string(p) + " alpha=" + alpha.str() +
                     " beta=" + beta.str());
          }
        }
      }
    }
  }
  return res;
}

// criterion 5: canonical form on pseudorandom matrices
inline CheckResult check_canonical_form(const EnumerationBudget& base = {}, int samples = 200, unsigned seed = 9291) {
  CheckResult res{"canonical form: row space, invertibility, type size"};
  EnumerationBudget budget = base;
  budget.max_rowspace_order = std::max<std::uint64_t>(budget.max_rowspace_order, 600000);  // 3^12 fits
  std::mt19937 rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    long long p = (rng() % 2 == 0) ? 2 : 3;
    int k = 1 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 4);
    PModMatrix mat(p, k, m, n);
    std::uniform_int_distribution<std::uint64_t> pick(0, mat.modulus() - 1);
    for (auto& e : mat.entries) e = pick(rng);

    CanonicalSubgroupForm cf = canonical_form(mat);
    ++res.checks;
    if (!invertible_check(cf.q)) {
      res.fail("q not invertible at trial " + std::to_string(trial));
      continue;
    }
    // multiply P*Q mod p^k
    PModMatrix pq(p, k, std::max<std::size_t>(cf.p_matrix.rows, 1), n);
    pq.rows = cf.p_matrix.rows;
    pq.entries.assign(pq.rows * n, 0);
    for (std::size_t i = 0; i < cf.p_matrix.rows; ++i) {
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < static_cast<std::size_t>(n); ++t) {
          acc = (acc + modops::mulmod(cf.p_matrix.at(i, t), cf.q.at(t, j), mat.modulus())) % mat.modulus();
        }
        pq.at(i, j) = acc;
      }
    }
    auto space_m = row_space_closure(mat, budget);
    auto space_pq = pq.rows == 0 ? std::vector<ElemCode>{0} : row_space_closure(pq, budget);
    if (space_m != space_pq) {
      res.fail("row space changed at trial " + std::to_string(trial));
      continue;
    }
    BigCount expect = pow_of(p, cf.beta.weight());
    if (expect != BigCount(space_m.size())) {
      res.fail("|beta| does not match row-space order at trial " + std::to_string(trial));
    }
  }
  return res;
}

// criterion 6: quotient typing by complement, across small homocyclic groups
inline CheckResult check_quotient_typing(const EnumerationBudget& base = {}, long long max_order = 4096,
                                         long long max_subgroups = 20000) {
  CheckResult res{"quotient types equal rectangle complements"};
  EnumerationBudget budget = base;
  for (long long p : {2LL, 3LL, 5LL}) {
    for (int k = 1;; ++k) {
      BigCount pk = pow_of(p, k);
      if (pk > max_order) break;
      for (int n = 1;; ++n) {
        BigCount size = big_pow(pk, n);
        if (size > max_order) break;
        Partition rect = Partition::rectangle(k, n);
        BigCount lattice_size = 0;
        for (int r = 0; r <= k * n; ++r) lattice_size += count_subgroups_of_order(p, rect, r);
        if (lattice_size > max_subgroups) continue;  // unenumerable at desk scale

        ProductGroup g = p_group_of_type(p, rect);
        std::vector<ElemCode> whole(g.size());
        for (ElemCode x = 0; x < g.size(); ++x) whole[x] = x;
        for (const auto& sub : enumerate_subgroups(g, budget)) {
          Partition type = subgroup_group_type(g, sub).at(p);
          Partition quot = quotient_group_type_of(g, whole, sub).at(p);
          ++res.checks;
          if (quot != complement(k, n, type)) {
            res.fail("p=" + std::to_string(p) + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                     " type=" + type.str() + " quotient=" + quot.str());
          }
        }
      }
    }
  }
  return res;
}

// criterion 7 + 8: covering-count formulas vs subgroup enumeration, and
// construction of every enumerated covering
inline std::pair<CheckResult, CheckResult> check_covering_counts(const EnumerationBudget& base = {},
                                                                 std::uint64_t max_kernel_order = 9,
                                                                 std::uint64_t max_folds = 16) {
  CheckResult counts{"covering counts vs enumerated subgroups"};
  CheckResult build{"every enumerated covering builds and verifies"};
  EnumerationBudget budget = base;
  for (const auto& [name, spec] : covering_fixtures()) {
    // kernel mode (and construction of every D found)
    for (std::uint64_t f = 1; f <= max_kernel_order; ++f) {
      for (const GroupType& kernel : group_types_of_order(f)) {
        CoveringEnumeration oracle = enumerate_covering_subgroups_with_kernel(spec, kernel, budget);
        BigCount formula = count_with_kernel(spec, kernel).value;
        ++counts.checks;
        if (formula != oracle.subgroups.size()) {
          counts.fail(name + " kernel=" + kernel.str() + " formula=" + formula.str() + " oracle=" +
                      std::to_string(oracle.subgroups.size()));
        }
        for (const auto& d : oracle.subgroups) {
          ++build.checks;
          try {
            build_and_verify_covering(spec, oracle.context, d);
          } catch (const Error& e) {
            build.fail(name + " kernel=" + kernel.str() + ": " + e.what());
          }
        }
        // total-group refinements of this kernel query
        BigCount order64 = spec.group_order() * f;
        std::uint64_t total_order = static_cast<std::uint64_t>(order64);
        for (const GroupType& total : group_types_of_order(total_order)) {
          CoveringEnumeration refined = enumerate_covering_subgroups_with_total(spec, kernel, total, budget);
          BigCount refined_formula = count_with_group_and_kernel(spec, kernel, total, budget).value;
          ++counts.checks;
          if (refined_formula != refined.subgroups.size()) {
            counts.fail(name + " kernel=" + kernel.str() + " total=" + total.str() + " formula=" +
                        refined_formula.str() + " oracle=" + std::to_string(refined.subgroups.size()));
          }
        }
      }
    }
    // fold mode
    for (std::uint64_t q = 1; q <= max_folds; ++q) {
      CoveringEnumeration oracle = enumerate_covering_subgroups_q_fold(spec, q, budget);
      BigCount formula = count_q_fold(spec, q).value;
      ++counts.checks;
      if (formula != oracle.subgroups.size()) {
        counts.fail(name + " folds=" + std::to_string(q) + " formula=" + formula.str() + " oracle=" +
                    std::to_string(oracle.subgroups.size()));
      }
      for (const auto& d : oracle.subgroups) {
        ++build.checks;
        try {
          build_and_verify_covering(spec, oracle.context, d);
        } catch (const Error& e) {
          build.fail(name + " folds=" + std::to_string(q) + ": " + e.what());
        }
      }
    }
  }
  return {counts, build};
}

// criterion 9: cyclic-kernel and cyclic-total reductions
inline CheckResult check_reductions(const EnumerationBudget& base = {}, std::uint64_t max_kernel_order = 9) {
  CheckResult res{"cyclic-kernel/cyclic-total reductions"};
  EnumerationBudget budget = base;
  for (const auto& [name, spec] : covering_fixtures()) {
    const bool base_cyclic = b_type(spec).cyclic();
    for (std::uint64_t f = 1; f <= max_kernel_order; ++f) {
      for (const GroupType& kernel : group_types_of_order(f)) {
        if (!kernel.cyclic()) continue;
        BigCount via_reduction = count_cyclic_circulant(spec, kernel).value;
        BigCount via_general = count_with_kernel(spec, kernel).value;
        ++res.checks;
        if (via_reduction != via_general) {
          res.fail(name + " f=" + std::to_string(f) + " reduction=" + via_reduction.str() +
                   " general=" + via_general.str());
        }
      }
      if (!base_cyclic) continue;
      BigCount circulant = circulant_cyclic_total_count(spec, f);
      GroupType kernel = f == 1 ? GroupType() : group_type_of({static_cast<long long>(f)});
      std::uint64_t total_order = static_cast<std::uint64_t>(spec.group_order()) * f;
      GroupType total = group_type_of({static_cast<long long>(total_order)});
      BigCount via_total = count_with_group_and_kernel(spec, kernel, total, budget).value;
      ++res.checks;
      if (circulant != via_total) {
        res.fail(name + " f=" + std::to_string(f) + " circulant=" + circulant.str() +
                 " total-mode=" + via_total.str());
      }
      ++res.checks;
      if (valence(spec) % 2 == 1 && f % 2 == 0) {
        if (circulant != 0) res.fail(name + " f=" + std::to_string(f) + ": odd-valence obstruction violated");
      } else {
        // a cyclic kernel over a cyclic base forces a cyclic total group here
        if (circulant != count_with_kernel(spec, kernel).value) {
          res.fail(name + " f=" + std::to_string(f) + ": cyclic-total count disagrees with kernel count");
        }
      }
    }
  }
  return res;
}

// criterion 10: marginalization identities
inline CheckResult check_marginalizations(const EnumerationBudget& base = {}, std::uint64_t max_kernel_order = 9,
                                          std::uint64_t max_folds = 16) {
  CheckResult res{"marginalization identities"};
  EnumerationBudget budget = base;
  for (const auto& [name, spec] : covering_fixtures()) {
    for (std::uint64_t q = 1; q <= max_folds; ++q) {
      BigCount sum = 0;
      for (const GroupType& kernel : group_types_of_order(q)) {
        sum += count_with_kernel(spec, kernel).value;
      }
      ++res.checks;
      if (sum != count_q_fold(spec, q).value) {
        res.fail(name + " q=" + std::to_string(q) + " sum-over-kernels=" + sum.str() + " direct=" +
                 count_q_fold(spec, q).value.str());
      }
    }
    for (std::uint64_t f = 1; f <= max_kernel_order; ++f) {
      for (const GroupType& kernel : group_types_of_order(f)) {
        BigCount sum = 0;
        std::uint64_t total_order = static_cast<std::uint64_t>(spec.group_order()) * f;
        for (const GroupType& total : group_types_of_order(total_order)) {
          sum += count_with_group_and_kernel(spec, kernel, total, budget).value;
        }
        ++res.checks;
        if (sum != count_with_kernel(spec, kernel).value) {
          res.fail(name + " kernel=" + kernel.str() + " sum-over-totals=" + sum.str() + " direct=" +
                   count_with_kernel(spec, kernel).value.str());
        }
      }
    }
  }
  return res;
}

inline std::vector<CheckResult> verify_formulas(const EnumerationBudget& base = {}) {
  std::vector<CheckResult> out;
  out.push_back(check_type_count_formula(base));
  out.push_back(check_order_count_formula(base));
  out.push_back(check_hall_duality(base));
  out.push_back(check_two_block_cyclic_counts(base));
  out.push_back(check_counting_invariants(base));
  return out;
}

inline std::vector<CheckResult> verify_canonical_form(const EnumerationBudget& base = {}) {
  std::vector<CheckResult> out;
  out.push_back(check_canonical_form(base));
  out.push_back(check_quotient_typing(base));
  return out;
}

inline std::vector<CheckResult> verify_coverings(const EnumerationBudget& base = {}) {
  std::vector<CheckResult> out;
  auto [counts, build] = check_covering_counts(base);
  out.push_back(counts);
  out.push_back(build);
  out.push_back(check_reductions(base));
  out.push_back(check_marginalizations(base));
  return out;
}

}  // namespace caycov
