#include <catch2/catch_amalgamated.hpp>

#include "caycov/cayley.hpp"
#include "caycov/io.hpp"

using namespace caycov;

TEST_CASE("parse and validate") {
  SECTION("one inverse pair") {
    CayleySpec spec = CayleySpec::parse_and_validate({5}, {{1}, {4}});
    CHECK(spec.pair_count() == 1);
    CHECK(spec.involution_count() == 0);
    CHECK(spec.pairs()[0] == std::vector<long long>{1});
  }
  SECTION("all involutions") {
    CayleySpec spec = CayleySpec::parse_and_validate({2, 2}, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(spec.pair_count() == 0);
    CHECK(spec.involution_count() == 3);
  }
  SECTION("rejections") {
    CHECK_THROWS_AS(CayleySpec::parse_and_validate({6}, {{1}}), MissingInverseError);
    CHECK_THROWS_AS(CayleySpec::parse_and_validate({6}, {{0}, {1}, {5}}), ContainsZeroError);
    CHECK_THROWS_AS(CayleySpec::parse_and_validate({6}, {{1}, {5}, {7}}), DuplicateGeneratorError);
    CHECK_THROWS_AS(CayleySpec::parse_and_validate({4}, {{2}}), NotGeneratingError);
    CHECK_THROWS_AS(CayleySpec::parse_and_validate({4}, {{1, 0}}), ValidationError);
  }
  SECTION("coordinates are reduced") {
    CayleySpec spec = CayleySpec::parse_and_validate({5}, {{6}, {-1}});
    CHECK(spec.pairs()[0] == std::vector<long long>{1});
  }
}

TEST_CASE("valence") {
  CHECK(valence(CayleySpec::parse_and_validate({5}, {{1}, {4}})) == 2);
  CHECK(valence(CayleySpec::parse_and_validate({2, 2}, {{1, 0}, {0, 1}, {1, 1}})) == 3);
  CHECK(valence(CayleySpec::parse_and_validate({12}, {{1}, {11}, {6}})) == 3);
}

TEST_CASE("base group type") {
  CHECK(b_type(CayleySpec::parse_and_validate({4, 2}, {{1, 0}, {3, 0}, {0, 1}})).at(2) ==
        Partition({2, 1}));
  CHECK(b_type(CayleySpec::parse_and_validate({3}, {{1}, {2}})).at(3) == Partition({1}));
  GroupType t = b_type(CayleySpec::parse_and_validate({6}, {{1}, {5}}));
  CHECK(t.at(2) == Partition({1}));
  CHECK(t.at(3) == Partition({1}));
}

TEST_CASE("relation data") {
  SECTION("single pair") {
    CayleySpec spec = CayleySpec::parse_and_validate({5}, {{1}, {4}});
    RelationData rd = relation_data(spec);
    CHECK(rd.relations.index() == 5);
    CHECK(rd.relations.member({BigCount(5)}));
    CHECK(rd.involution_rel_rank == 0);
    CHECK(rd.exponent == 5);
  }
  SECTION("dependent involutions") {
    CayleySpec spec = CayleySpec::parse_and_validate({2, 2}, {{1, 0}, {0, 1}, {1, 1}});
    RelationData rd = relation_data(spec);
    CHECK(rd.involution_rel_rank == 1);
    CHECK(rd.relations.index() == 4);
    CHECK(rd.relations.member({BigCount(1), BigCount(1), BigCount(1)}));
  }
  SECTION("single involution") {
    CayleySpec spec = CayleySpec::parse_and_validate({2}, {{1}});
    RelationData rd = relation_data(spec);
    CHECK(spec.pair_count() == 0);
    CHECK(spec.involution_count() == 1);
    CHECK(rd.involution_rel_rank == 0);
  }
  SECTION("parity relations sit inside the full relation lattice") {
    for (auto orders_gens : std::vector<std::pair<std::vector<long long>, std::vector<std::vector<long long>>>>{
             {{12}, {{1}, {11}, {6}}},
             {{2, 4}, {{0, 1}, {0, 3}, {1, 0}}},
         }) {
      CayleySpec spec = CayleySpec::parse_and_validate(orders_gens.first, orders_gens.second);
      RelationData rd = relation_data(spec);
      CHECK(rd.relations.index() == spec.group_order());
      for (const auto& row : rd.parity_relations.basis) {
        CHECK(rd.relations.member(row));
      }
    }
  }
}

TEST_CASE("canonical serialization") {
  CayleySpec spec = CayleySpec::parse_and_validate({2, 4}, {{1, 0}, {0, 3}, {0, 1}});
  json j = canonical_json(spec);
  CHECK(j.dump() == R"({"involutions":[[1,0]],"orders":[2,4],"pairs":[[0,1]]})");

  // generator order does not matter
  CayleySpec reordered = CayleySpec::parse_and_validate({2, 4}, {{0, 1}, {1, 0}, {0, 3}});
  CHECK(canonical_json(reordered) == j);
}

TEST_CASE("json round trip") {
  json doc = json::parse(R"({"orders":[12],"generators":[[1],[11],[6]]})");
  CayleySpec spec = spec_from_json(doc);
  CHECK(spec.pair_count() == 1);
  CHECK(spec.involution_count() == 1);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"orders":[12]})")), ValidationError);
}
