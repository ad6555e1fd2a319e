#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "caycov/io.hpp"
#include "caycov/modring.hpp"

using namespace caycov;

namespace {

PModMatrix from_rows(long long p, int k, std::vector<std::vector<long long>> rows) {
  PModMatrix m(p, k, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = m.reduce(rows[i][j]);
  }
  return m;
}

PModMatrix mat_mul(const PModMatrix& a, const PModMatrix& b) {
  PModMatrix out(a.p, a.k, std::max<std::size_t>(a.rows, 1), b.cols);
  out.rows = a.rows;
  out.entries.assign(a.rows * b.cols, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < a.cols; ++t) {
        acc = (acc + modops::mulmod(a.at(i, t), b.at(t, j), a.modulus())) % a.modulus();
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("p-degree") {
  CHECK(p_degree(12, 2, 4) == 2);
  CHECK(p_degree(1, 5, 3) == 0);
  CHECK_FALSE(p_degree(0, 3, 2).has_value());
  CHECK_THROWS_AS(p_degree(16, 2, 4), ValidationError);
}

TEST_CASE("canonical form on prepared matrices") {
  SECTION("already diagonal with equal degrees") {
    auto m = from_rows(3, 2, {{3, 0}, {0, 3}});
    auto cf = canonical_form(m);
    CHECK(cf.beta == Partition({1, 1}));
    CHECK(cf.q.entries == PModMatrix::identity(3, 2, 2).entries);
  }
  SECTION("diagonal with mixed degrees gets reordered") {
    auto m = from_rows(2, 2, {{2, 0}, {0, 1}});
    auto cf = canonical_form(m);
    CHECK(cf.beta == Partition({2, 1}));
    CHECK(cf.p_matrix.at(0, 0) == 1);
    CHECK(cf.p_matrix.at(1, 1) == 2);
  }
  SECTION("zero matrix") {
    auto m = from_rows(2, 3, {{0, 0}, {0, 0}});
    auto cf = canonical_form(m);
    CHECK(cf.beta == Partition());
    CHECK(cf.p_matrix.rows == 0);
    CHECK(invertible_check(cf.q));
  }
}

TEST_CASE("canonical form preserves the row space") {
  EnumerationBudget budget;
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 60; ++trial) {
    long long p = trial % 2 ? 2 : 3;
    int k = 1 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    PModMatrix mat(p, k, m, n);
    std::uniform_int_distribution<std::uint64_t> pick(0, mat.modulus() - 1);
    for (auto& e : mat.entries) e = pick(rng);

    CanonicalSubgroupForm cf = canonical_form(mat);
    CHECK(invertible_check(cf.q));
    auto lhs = row_space_closure(mat, budget);
    PModMatrix pq = mat_mul(cf.p_matrix, cf.q);
    auto rhs = pq.rows == 0 ? std::vector<ElemCode>{0} : row_space_closure(pq, budget);
    CHECK(lhs == rhs);
    CHECK(pow_of(p, cf.beta.weight()) == BigCount(lhs.size()));
  }
}

TEST_CASE("subgroup types from matrices") {
  CHECK(subgroup_type_mod(from_rows(3, 2, {{1, 0}, {0, 1}})) == Partition({2, 2}));
  CHECK(subgroup_type_mod(from_rows(3, 2, {{3, 0}, {0, 3}})) == Partition({1, 1}));
  CHECK(subgroup_type_mod(from_rows(2, 2, {{2, 2}})) == Partition({1}));
}

TEST_CASE("quotient type by complement") {
  CHECK(quotient_type_mod(Partition({2}), 2, 2) == Partition({2}));
  CHECK(quotient_type_mod(Partition(), 3, 2) == Partition({3, 3}));
  CHECK(quotient_type_mod(Partition({1, 1}), 2, 2) == Partition({1, 1}));
  CHECK_THROWS_AS(quotient_type_mod(Partition({3}), 2, 2), ValidationError);
}

TEST_CASE("invertibility over Z_{p^k}") {
  CHECK(invertible_check(PModMatrix::identity(2, 2, 2)));
  CHECK_FALSE(invertible_check(from_rows(2, 2, {{2, 0}, {0, 1}})));
  CHECK(invertible_check(from_rows(2, 3, {{1, 1}, {0, 1}})));
  CHECK_THROWS_AS(invertible_check(from_rows(2, 2, {{1, 0, 0}, {0, 1, 0}})), ValidationError);
}

TEST_CASE("matrix serialization round trip") {
  auto m = from_rows(3, 2, {{4, 0, 7}, {1, 8, 2}});
  PModMatrix back = pmod_matrix_from_json(to_json(m));
  CHECK(back.p == m.p);
  CHECK(back.k == m.k);
  CHECK(back.entries == m.entries);
  CHECK_THROWS_AS(pmod_matrix_from_json(json::parse(
                      R"({"p":3,"k":2,"rows":1,"cols":2,"entries":[1]})")),
                  ValidationError);
}

TEST_CASE("integer kernels") {
  SECTION("kernel of Z -> Z_n") {
    IntLattice lat = integer_kernel({{1}}, {6});
    CHECK(lat.index() == 6);
    CHECK(lat.member({BigCount(6)}));
    CHECK(lat.member({BigCount(-12)}));
    CHECK_FALSE(lat.member({BigCount(3)}));
  }
  SECTION("parity condition") {
    IntLattice lat = integer_kernel({{1}, {1}}, {2});
    CHECK(lat.index() == 2);
    CHECK(lat.member({BigCount(1), BigCount(1)}));
    CHECK(lat.member({BigCount(2), BigCount(0)}));
    CHECK_FALSE(lat.member({BigCount(1), BigCount(0)}));
  }
  SECTION("weighted congruence") {
    IntLattice lat = integer_kernel({{1}, {2}}, {4});
    CHECK(lat.index() == 4);
    CHECK(lat.member({BigCount(4), BigCount(0)}));
    CHECK(lat.member({BigCount(2), BigCount(1)}));
    CHECK_FALSE(lat.member({BigCount(1), BigCount(1)}));
  }
  SECTION("closure and annihilator membership") {
    IntLattice lat = integer_kernel({{1, 0}, {1, 1}, {0, 2}}, {4, 6});
    REQUIRE(lat.basis.size() == 3);
    for (const auto& r1 : lat.basis) {
      for (const auto& r2 : lat.basis) {
        std::vector<BigCount> sum(lat.rank);
        for (std::size_t j = 0; j < lat.rank; ++j) sum[j] = r1[j] + r2[j];
        CHECK(lat.member(sum));
      }
    }
    for (std::size_t i = 0; i < lat.rank; ++i) {
      std::vector<BigCount> e(lat.rank, 0);
      e[i] = 24;  // product of the target orders
      CHECK(lat.member(e));
    }
  }
  SECTION("empty target is rejected") {
    CHECK_THROWS_AS(integer_kernel({{}}, {}), ValidationError);
  }
}
