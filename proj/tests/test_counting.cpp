#include <catch2/catch_amalgamated.hpp>

#include "caycov/counting.hpp"
#include "caycov/oracle.hpp"

using namespace caycov;

namespace {
long long oracle_type_count(long long p, const Partition& alpha, const Partition& beta) {
  EnumerationBudget budget;
  SubgroupCensus census = census_p_group(p, alpha, budget);
  auto it = census.by_type.find(beta);
  return it == census.by_type.end() ? 0 : it->second;
}
}  // namespace

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(2, 1, 2) == oracle_type_count(2, Partition({1, 1}), Partition({1})));
  CHECK(gaussian_binomial(5, 0, 7) == 1);
  CHECK(gaussian_binomial(1, 2, 3) == 0);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 4), ValidationError);
  CHECK_THROWS_AS(gaussian_binomial(-1, 0, 2), ValidationError);
}

TEST_CASE("subgroups of a given type") {
  CHECK(count_subgroups_of_type(2, Partition({1, 1}), Partition({1})) == 3);
  CHECK(count_subgroups_of_type(5, Partition({3}), Partition({2})) == 1);
  CHECK(count_subgroups_of_type(2, Partition({2, 1}), Partition({2})) == 2);
  CHECK(count_subgroups_of_type(2, Partition({2, 1}), Partition({1})) == 3);
  CHECK(count_subgroups_of_type(2, Partition({2, 1}), Partition({1})) ==
        oracle_type_count(2, Partition({2, 1}), Partition({1})));

  // degenerate shapes
  CHECK(count_subgroups_of_type(2, Partition({2, 1}), Partition({3})) == 0);
  CHECK(count_subgroups_of_type(2, Partition({1}), Partition({1, 1})) == 0);
  CHECK(count_subgroups_of_type(3, Partition(), Partition()) == 1);
  CHECK(count_subgroups_of_type(3, Partition({2, 2}), Partition({2, 2})) == 1);
  CHECK_THROWS_AS(count_subgroups_of_type(6, Partition({1}), Partition({1})), ValidationError);
}

TEST_CASE("subgroups with a given quotient") {
  CHECK(count_subgroups_with_quotient(2, Partition({2, 1}), Partition({1})) == 3);
  CHECK(count_subgroups_with_quotient(2, Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(count_subgroups_with_quotient(3, Partition({1, 1}), Partition({1})) == 4);
}

TEST_CASE("subgroups of a given order") {
  CHECK(count_subgroups_of_order(2, Partition({2, 1}), 1) == 3);
  CHECK(count_subgroups_of_order(3, Partition({2, 2}), 0) == 1);
  CHECK(count_subgroups_of_order(3, Partition({2, 2}), 4) == 1);
  CHECK(count_subgroups_of_order(2, Partition({2, 1}), 4) == 0);
  CHECK_THROWS_AS(count_subgroups_of_order(9, Partition({1}), 1), ValidationError);

  // order counts refine into type counts
  for (long long p : {2LL, 3LL}) {
    for (const Partition& alpha : partitions_of_weight(4)) {
      for (int r = 0; r <= 4; ++r) {
        BigCount by_type = 0;
        for (const Partition& beta : sub_partitions_of_weight(alpha, r)) {
          by_type += count_subgroups_of_type(p, alpha, beta);
        }
        CHECK(count_subgroups_of_order(p, alpha, r) == by_type);
      }
    }
  }
}

TEST_CASE("ambient reduction") {
  CHECK(reduce_ambient(2, Partition({3, 2}), Partition({1, 1})) == Partition({1, 1}));
  CHECK(reduce_ambient(2, Partition({2, 2}), Partition({2})) == Partition({2, 2}));
  CHECK(reduce_ambient(3, Partition({4, 3, 2}), Partition({2, 1})) == Partition({2, 2, 2}));
  CHECK_THROWS_AS(reduce_ambient(2, Partition({2, 1}), Partition({2})), ValidationError);

  for (long long p : {2LL, 3LL}) {
    for (const Partition& beta : sub_partitions(Partition({2, 2}))) {
      Partition alpha({3, 2});
      if (beta.first() > alpha.last()) continue;
      CHECK(count_subgroups_of_type(p, alpha, beta) ==
            count_subgroups_of_type(p, reduce_ambient(p, alpha, beta), beta));
    }
  }
}

TEST_CASE("two-block types") {
  TwoBlockType tb = TwoBlockType::of(Partition({3, 3, 1}));
  CHECK(tb.a1 == 3);
  CHECK(tb.n1 == 2);
  CHECK(tb.a2 == 1);
  CHECK(tb.n2 == 1);
  CHECK(tb.as_partition() == Partition({3, 3, 1}));
  CHECK(TwoBlockType::of(Partition({2})).n2 == 0);
  CHECK_THROWS_AS(TwoBlockType::of(Partition({3, 2, 1})), ValidationError);
  CHECK_THROWS_AS(TwoBlockType(2, 1, 0, 2), ValidationError);
}

TEST_CASE("cyclic subgroups with prescribed quotient") {
  CHECK(count_cyclic_with_quotient(2, TwoBlockType(2, 1, 1, 1), 1, Partition({1, 1})) == 1);
  CHECK(count_cyclic_with_quotient(2, TwoBlockType(2, 1, 1, 1), 1, Partition({2})) == 2);
  CHECK(count_cyclic_with_quotient(3, TwoBlockType(1, 2, 0, 0), 1, Partition({1})) == 4);
  CHECK_THROWS_AS(count_cyclic_with_quotient(2, TwoBlockType(2, 1, 1, 1), 3, Partition({1})),
                  ValidationError);

  // the quotient types refine the plain cyclic-subgroup count
  EnumerationBudget budget;
  for (long long p : {2LL, 3LL}) {
    TwoBlockType tb(3, 1, 1, 1);
    for (int s = 1; s <= 3; ++s) {
      BigCount total = 0;
      for (const Partition& gamma : partitions_of_weight(tb.as_partition().weight() - s)) {
        total += count_cyclic_with_quotient(p, tb, s, gamma);
      }
      CHECK(total == count_subgroups_of_type(p, tb.as_partition(), Partition({s})));
    }
  }
}

TEST_CASE("triple counts") {
  EnumerationBudget budget;
  CHECK(count_triple(2, Partition({2, 1}), Partition({1}), Partition({2}), budget) == 2);
  CHECK(count_triple(2, Partition({2, 1}), Partition(), Partition({2, 1}), budget) == 1);
  CHECK(count_triple(2, Partition({2, 1}), Partition({1}), Partition({1, 1}), budget) == 1);
  CHECK(count_triple(2, Partition({2, 1}), Partition({1}), Partition({2})) ==
        count_triple_oracle(2, Partition({2, 1}), Partition({1}), Partition({2}), budget));

  SECTION("weight and containment zeros") {
    CHECK(count_triple(2, Partition({2, 1}), Partition({1}), Partition({1})) == 0);
    CHECK(count_triple(2, Partition({2, 1}), Partition({3}), Partition()) == 0);
  }

  SECTION("routing") {
    CHECK(count_triple_explained(2, Partition({2, 2}), Partition({1}), Partition({2, 1})).method ==
          TripleMethod::kRectangular);
    CHECK(count_triple_explained(2, Partition({2, 1}), Partition({1}), Partition({2})).method ==
          TripleMethod::kCyclicClosedForm);
    CHECK(count_triple_explained(2, Partition({2, 1}), Partition({2}), Partition({1})).method ==
          TripleMethod::kCyclicClosedForm);
    CHECK(count_triple_explained(2, Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})).method ==
          TripleMethod::kOracle);
  }

  SECTION("oracle budget is enforced") {
    EnumerationBudget small;
    CHECK_THROWS_AS(count_triple(2, Partition({5, 4, 3, 2}), Partition({2, 2}), Partition({5, 4, 1}), small),
                    BudgetExceededError);
  }

  SECTION("subgroup/quotient symmetry on oracle-feasible inputs") {
    EnumerationBudget wide;
    for (long long p : {2LL, 3LL}) {
      for (const Partition& alpha : partitions_of_weight(4)) {
        for (const Partition& beta : sub_partitions(alpha)) {
          for (const Partition& gamma : partitions_of_weight(alpha.weight() - beta.weight())) {
            CHECK(count_triple(p, alpha, beta, gamma, wide) == count_triple(p, alpha, gamma, beta, wide));
          }
        }
      }
    }
  }
}

TEST_CASE("rectangle quotient duality") {
  for (long long p : {2LL, 3LL}) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= 3; ++n) {
        Partition rect = Partition::rectangle(k, n);
        for (const Partition& beta : sub_partitions(rect)) {
          CHECK(count_subgroups_of_type(p, rect, beta) ==
                count_subgroups_of_type(p, rect, complement(k, n, beta)));
        }
      }
    }
  }
}
