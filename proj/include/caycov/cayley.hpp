#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "caycov/errors.hpp"
#include "caycov/modring.hpp"
#include "caycov/partition.hpp"

namespace caycov {

// A validated Cayley-graph description on a finite abelian group: the group as
// a product of cyclic factors, plus a symmetric generating set split into
// inverse pairs (one representative each) and involutions.
class CayleySpec {
 public:
  static CayleySpec parse_and_validate(const std::vector<long long>& factor_orders,
                                       const std::vector<std::vector<long long>>& generator_list) {
    if (factor_orders.empty()) throw ValidationError("CayleySpec: group must have at least one factor");
    for (long long o : factor_orders) {
      if (o < 2) throw ValidationError("CayleySpec: factor orders must be >= 2");
    }
    if (generator_list.empty()) throw NotGeneratingError("CayleySpec: empty generating set");

    auto reduce = [&](const std::vector<long long>& coords) {
      if (coords.size() != factor_orders.size()) {
        throw ValidationError("CayleySpec: generator arity does not match the factor list");
      }
      std::vector<long long> out(coords.size());
      for (std::size_t i = 0; i < coords.size(); ++i) {
        long long r = coords[i] % factor_orders[i];
        if (r < 0) r += factor_orders[i];
        out[i] = r;
      }
      return out;
    };
    auto negate = [&](const std::vector<long long>& coords) {
      std::vector<long long> out(coords.size());
      for (std::size_t i = 0; i < coords.size(); ++i) {
        out[i] = coords[i] == 0 ? 0 : factor_orders[i] - coords[i];
      }
      return out;
    };
    auto is_zero = [](const std::vector<long long>& coords) {
      return std::all_of(coords.begin(), coords.end(), [](long long v) { return v == 0; });
    };

    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> reduced;
    for (const auto& gen : generator_list) {
      auto y = reduce(gen);
      if (is_zero(y)) throw ContainsZeroError("CayleySpec: the generating set contains 0");
      if (!seen.insert(y).second) {
        throw DuplicateGeneratorError("CayleySpec: generator listed twice");
      }
      reduced.push_back(std::move(y));
    }

    std::vector<std::vector<long long>> pairs, involutions;
    for (const auto& y : reduced) {
      auto ny = negate(y);
      if (ny == y) {
        involutions.push_back(y);
        continue;
      }
      if (!seen.count(ny)) {
        throw MissingInverseError("CayleySpec: generating set is not symmetric");
      }
      if (y < ny) pairs.push_back(y);  // one representative per inverse pair
    }
    std::sort(pairs.begin(), pairs.end());
    std::sort(involutions.begin(), involutions.end());

    CayleySpec spec;
    spec.factor_orders_ = factor_orders;
    spec.pairs_ = std::move(pairs);
    spec.involutions_ = std::move(involutions);

    // connectivity: the generators must span the whole group, i.e. the
    // relation lattice must have index |B|
    BigCount group_order = 1;
    for (long long o : factor_orders) group_order *= o;
    if (spec.relation_lattice().index() != group_order) {
      throw NotGeneratingError("CayleySpec: generating set does not generate the group");
    }
    return spec;
  }

  const std::vector<long long>& factor_orders() const { return factor_orders_; }
  const std::vector<std::vector<long long>>& pairs() const { return pairs_; }
  const std::vector<std::vector<long long>>& involutions() const { return involutions_; }

  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t involution_count() const { return involutions_.size(); }
  std::size_t generator_slots() const { return pairs_.size() + involutions_.size(); }

  BigCount group_order() const {
    BigCount n = 1;
    for (long long o : factor_orders_) n *= o;
    return n;
  }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (long long o : factor_orders_) e = std::lcm(e, static_cast<std::uint64_t>(o));
    return e;
  }

  // Generator tuple in slot order: pair representatives, then involutions.
  std::vector<std::vector<long long>> generator_rows() const {
    std::vector<std::vector<long long>> rows = pairs_;
    rows.insert(rows.end(), involutions_.begin(), involutions_.end());
    return rows;
  }

  // Kernel of the slot map Z^(l+l') -> B.
  IntLattice relation_lattice() const { return integer_kernel(generator_rows(), factor_orders_); }

 private:
  CayleySpec() = default;

  std::vector<long long> factor_orders_;
  std::vector<std::vector<long long>> pairs_;
  std::vector<std::vector<long long>> involutions_;
};

inline std::size_t valence(const CayleySpec& spec) {
  return 2 * spec.pair_count() + spec.involution_count();
}

inline GroupType b_type(const CayleySpec& spec) { return group_type_of(spec.factor_orders()); }

// Structural data the covering formulas consume.
struct RelationData {
  IntLattice relations;         // exponent vectors annihilating the generator tuple
  IntLattice parity_relations;  // pair slots 0, involution slots even
  int involution_rel_rank = 0;  // F2-dimension of the involution relation space
  std::uint64_t exponent = 1;   // exp(B)
};

namespace cayley_detail {

inline int f2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    std::size_t piv = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (rows[i] >> bit & 1) {
        piv = i;
        break;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != static_cast<std::size_t>(rank) && (rows[i] >> bit & 1)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cayley_detail

inline RelationData relation_data(const CayleySpec& spec) {
  RelationData data;
  data.relations = spec.relation_lattice();
  data.exponent = spec.exponent();

  const std::size_t l = spec.pair_count();
  const std::size_t lp = spec.involution_count();
  const std::size_t slots = l + lp;

  data.parity_relations.rank = slots;
  for (std::size_t j = 0; j < lp; ++j) {
    std::vector<BigCount> row(slots, 0);
    row[l + j] = 2;
    data.parity_relations.basis.push_back(std::move(row));
  }

  // Involutions live in the 2-torsion subgroup, one bit per even factor;
  // the relation space among them is the F2 null space of that bit matrix.
  std::vector<int> even_factors;
  for (std::size_t t = 0; t < spec.factor_orders().size(); ++t) {
    if (spec.factor_orders()[t] % 2 == 0) even_factors.push_back(static_cast<int>(t));
  }
  if (even_factors.size() > 64) throw ValidationError("relation_data: too many even factors");
  std::vector<std::uint64_t> bits;
  for (const auto& y : spec.involutions()) {
    std::uint64_t row = 0;
    for (std::size_t b = 0; b < even_factors.size(); ++b) {
      int t = even_factors[b];
      if (y[t] == spec.factor_orders()[t] / 2) row |= 1ull << b;
    }
    bits.push_back(row);
  }
  data.involution_rel_rank = static_cast<int>(lp) - cayley_detail::f2_rank(std::move(bits));
  return data;
}

}  // namespace caycov
