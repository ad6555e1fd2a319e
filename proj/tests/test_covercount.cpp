#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "caycov/covercount.hpp"
#include "caycov/covering.hpp"
#include "caycov/verify.hpp"

using namespace caycov;

namespace {
CayleySpec c3() { return CayleySpec::parse_and_validate({3}, {{1}, {2}}); }
CayleySpec c4() { return CayleySpec::parse_and_validate({4}, {{1}, {3}}); }
CayleySpec k4() { return CayleySpec::parse_and_validate({2, 2}, {{1, 0}, {0, 1}, {1, 1}}); }
CayleySpec z12() { return CayleySpec::parse_and_validate({12}, {{1}, {11}, {6}}); }
}  // namespace

TEST_CASE("kernel-count closed form") {
  CHECK(count_with_kernel(c3(), group_type_of({5})).value == 1);
  CHECK(count_with_kernel(c4(), group_type_of({2})).value == 1);
  CHECK(count_with_kernel(k4(), group_type_of({2})).value == 1);
  CHECK(count_with_kernel(c3(), GroupType()).value == 1);

  // involutions carry no odd-primary freedom
  CHECK(count_with_kernel(k4(), group_type_of({3})).value == 0);
  CHECK(count_with_kernel(z12(), group_type_of({3})).value == 1);
}

TEST_CASE("kernel-count two-part matches the rectangle subgroup count") {
  // dual route: the 2-factor equals a plain type count in beta_1^l + 1^l0
  for (int l = 0; l <= 3; ++l) {
    for (int l0 = 0; l0 <= 2; ++l0) {
      for (int w = 1; w <= 4; ++w) {
        for (const Partition& beta : partitions_of_weight(w)) {
          std::vector<int> ambient_parts;
          for (int i = 0; i < l; ++i) ambient_parts.push_back(beta.first());
          for (int i = 0; i < l0; ++i) ambient_parts.push_back(1);
          Partition ambient = Partition::normalized(std::move(ambient_parts));
          CHECK(covercount_detail::kernel_factor_two(l, l0, beta) ==
                count_subgroups_of_type(2, ambient, beta));
        }
      }
    }
  }
}

TEST_CASE("total-and-kernel counts") {
  EnumerationBudget budget;
  CHECK(count_with_group_and_kernel(c3(), GroupType(), group_type_of({3}), budget).value == 1);
  CHECK(count_with_group_and_kernel(c3(), group_type_of({5}), group_type_of({15}), budget).value == 1);

  SECTION("incompatible orders count zero") {
    GroupType too_big;
    too_big.set(5, Partition({1, 1}));
    too_big.set(3, Partition({1}));
    CHECK(count_with_group_and_kernel(c3(), group_type_of({5}), too_big, budget).value == 0);
  }
  SECTION("non-cyclic total over one generator slot") {
    GroupType square;
    square.set(5, Partition({1, 1}));
    CHECK(count_with_group_and_kernel(c3(), group_type_of({25}), square, budget).value == 0);
  }
}

TEST_CASE("fold counts") {
  CHECK(count_q_fold(c3(), 1).value == 1);
  CHECK(count_q_fold(c3(), 2).value == 1);
  CHECK(count_q_fold(c3(), 4).value == 1);
  CHECK_THROWS_AS(count_q_fold(c3(), 0), ValidationError);

  // valence-4 circulant: richer kernel lattice
  CayleySpec c5_2 = CayleySpec::parse_and_validate({5}, {{1}, {4}, {2}, {3}});
  CHECK(count_q_fold(c5_2, 4).value == 7);
  BigCount by_kernel = 0;
  for (const GroupType& kernel : group_types_of_order(4)) {
    by_kernel += count_with_kernel(c5_2, kernel).value;
  }
  CHECK(by_kernel == 7);
}

TEST_CASE("cyclic-kernel reduction") {
  CHECK(count_cyclic_circulant(c3(), group_type_of({5})).value == 1);
  CHECK(count_cyclic_circulant(c4(), group_type_of({2})).value == 1);
  CHECK_THROWS_AS(count_cyclic_circulant(c3(), group_type_of({2, 2})), NonCyclicKernelError);

  for (std::uint64_t f = 2; f <= 9; ++f) {
    for (const GroupType& kernel : group_types_of_order(f)) {
      if (!kernel.cyclic()) continue;
      CHECK(count_cyclic_circulant(z12(), kernel).value == count_with_kernel(z12(), kernel).value);
    }
  }
}

TEST_CASE("cyclic totals over cyclic bases") {
  CHECK(circulant_cyclic_total_count(c4(), 2) == 1);
  CHECK(circulant_cyclic_total_count(z12(), 2) == 0);  // odd valence, even folds
  CHECK(circulant_cyclic_total_count(z12(), 3) == 1);
  CHECK_THROWS_AS(circulant_cyclic_total_count(k4(), 2), ValidationError);
}

TEST_CASE("covering subgroup enumeration") {
  EnumerationBudget budget;
  SECTION("unique five-fold cover of the triangle") {
    auto result = enumerate_covering_subgroups_with_kernel(c3(), group_type_of({5}), budget);
    CHECK(result.subgroups.size() == 1);
  }
  SECTION("trivial kernel gives the identity covering") {
    auto result = enumerate_covering_subgroups_with_kernel(c3(), GroupType(), budget);
    REQUIRE(result.subgroups.size() == 1);
    CHECK(result.subgroups[0] == result.context.relation_image);
  }
  SECTION("unique double cover of the square") {
    auto result = enumerate_covering_subgroups_q_fold(c4(), 2, budget);
    CHECK(result.subgroups.size() == 1);
  }
  SECTION("total-group refinement") {
    auto result =
        enumerate_covering_subgroups_with_total(c3(), group_type_of({5}), group_type_of({15}), budget);
    CHECK(result.subgroups.size() == 1);
  }
}

TEST_CASE("covering construction") {
  EnumerationBudget budget;
  SECTION("the 15-cycle covers the triangle") {
    auto result = enumerate_covering_subgroups_with_kernel(c3(), group_type_of({5}), budget);
    REQUIRE(result.subgroups.size() == 1);
    CoveringInstance inst = build_and_verify_covering(c3(), result.context, result.subgroups[0]);
    CHECK(inst.fold_count == 5);
    REQUIRE(inst.total_adjacency.size() == 15);
    std::set<std::uint32_t> seen{0};
    std::uint32_t at = 0, prev = 0;
    for (int step = 0; step < 14; ++step) {
      REQUIRE(inst.total_adjacency[at].size() == 2);
      std::uint32_t next =
          inst.total_adjacency[at][0] == prev && step > 0 ? inst.total_adjacency[at][1] : inst.total_adjacency[at][0];
      prev = at;
      at = next;
      CHECK(seen.insert(at).second);
    }
  }
  SECTION("identity covering") {
    auto result = enumerate_covering_subgroups_with_kernel(k4(), GroupType(), budget);
    REQUIRE(result.subgroups.size() == 1);
    CoveringInstance inst = build_and_verify_covering(k4(), result.context, result.subgroups[0]);
    CHECK(inst.fold_count == 1);
    CHECK(inst.total_adjacency.size() == 4);
  }
  SECTION("cubic double cover of K4") {
    auto result = enumerate_covering_subgroups_with_kernel(k4(), group_type_of({2}), budget);
    REQUIRE(result.subgroups.size() == 1);
    CoveringInstance inst = build_and_verify_covering(k4(), result.context, result.subgroups[0]);
    CHECK(inst.fold_count == 2);
    REQUIRE(inst.total_adjacency.size() == 8);
    for (const auto& nbrs : inst.total_adjacency) CHECK(nbrs.size() == 3);
  }
}

TEST_CASE("query validation") {
  CoverQuery q;
  CHECK_THROWS_AS(q.validate(), ValidationError);
  q.total = group_type_of({15});
  CHECK_THROWS_AS(q.validate(), OrderMismatchError);
  q.total.reset();
  q.kernel = group_type_of({5});
  CHECK_NOTHROW(q.validate());
  q.folds = 2;
  CHECK_THROWS_AS(q.validate(), OrderMismatchError);
}

TEST_CASE("counts are presentation-independent") {
  // the same graph through a different symmetric generating pair
  CayleySpec a = CayleySpec::parse_and_validate({5}, {{1}, {4}});
  CayleySpec b = CayleySpec::parse_and_validate({5}, {{2}, {3}});
  EnumerationBudget budget;
  for (std::uint64_t f = 1; f <= 6; ++f) {
    for (const GroupType& kernel : group_types_of_order(f)) {
      CHECK(count_with_kernel(a, kernel).value == count_with_kernel(b, kernel).value);
      CHECK(enumerate_covering_subgroups_with_kernel(a, kernel, budget).subgroups.size() ==
            enumerate_covering_subgroups_with_kernel(b, kernel, budget).subgroups.size());
    }
    CHECK(count_q_fold(a, f).value == count_q_fold(b, f).value);
  }
}

TEST_CASE("distinct covering subgroups stay distinct") {
  EnumerationBudget budget;
  CayleySpec c5_2 = CayleySpec::parse_and_validate({5}, {{1}, {4}, {2}, {3}});
  auto result = enumerate_covering_subgroups_q_fold(c5_2, 4, budget);
  REQUIRE(result.subgroups.size() == 7);
  std::set<std::vector<ElemCode>> unique(result.subgroups.begin(), result.subgroups.end());
  CHECK(unique.size() == result.subgroups.size());
}

TEST_CASE("factor breakdown is reported") {
  auto result = count_with_group_and_kernel(z12(), group_type_of({6}), group_type_of({72}), {});
  REQUIRE(result.factors.size() == 2);
  CHECK(result.factors[0].prime == 2);
  CHECK(result.factors[0].method == "oracle");
  CHECK(result.factors[1].prime == 3);
  CHECK(result.factors[1].method == "closed-form");
}
