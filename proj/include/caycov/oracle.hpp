#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "caycov/bigint.hpp"
#include "caycov/errors.hpp"
#include "caycov/partition.hpp"

namespace caycov {

// Elements of desk-scale groups are dense codes into [0, size).
using ElemCode = std::uint32_t;
inline constexpr ElemCode kNoElem = 0xFFFFFFFFu;

// Hard cap on the number of elements any enumerated universe may have; the
// membership tables used below are O(universe) words.
inline constexpr std::uint64_t kMaxUniverse = 1ull << 26;

struct EnumerationBudget {
  // Largest group whose subgroup lattice may be enumerated exhaustively.
  std::uint64_t max_group_order = 4096;
  // Largest row space that may be expanded by closure in matrix checks.
  std::uint64_t max_rowspace_order = 1ull << 16;
  // Safety valve: abort enumerations that discover more subgroups than this.
  std::uint64_t max_subgroup_count = 200000;

  // Cap for oracle-backed triple counts, per prime.
  std::uint64_t triple_oracle_cap(long long p) const {
    if (p == 2) return 1ull << 12;
    if (p == 3) return 6561;  // 3^8
    return max_group_order;
  }
};

inline std::vector<std::pair<long long, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<long long, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(static_cast<long long>(p), e);
    }
  }
  if (n > 1) out.emplace_back(static_cast<long long>(n), 1);
  return out;
}

// prod Z_{orders[i]}; code = mixed-radix encoding, coordinate 0 least significant.
// The empty product is the trivial group.
class ProductGroup {
 public:
  ProductGroup() : size_(1) {}

  explicit ProductGroup(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
    size_ = 1;
    stride_.reserve(orders_.size());
    for (std::uint64_t o : orders_) {
      if (o < 1) throw ValidationError("ProductGroup: factor order must be >= 1");
      if (size_ > kMaxUniverse / o) throw BudgetExceededError("ProductGroup: group too large to index");
      stride_.push_back(size_);
      size_ *= o;
    }
  }

  std::uint64_t size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }
  const std::vector<std::uint64_t>& orders() const { return orders_; }

  ElemCode zero() const { return 0; }

  ElemCode add(ElemCode a, ElemCode b) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::uint64_t da = (a / stride_[i]) % orders_[i];
      std::uint64_t db = (b / stride_[i]) % orders_[i];
      std::uint64_t d = da + db;
      if (d >= orders_[i]) d -= orders_[i];
      out += d * stride_[i];
    }
    return static_cast<ElemCode>(out);
  }

  ElemCode neg(ElemCode a) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::uint64_t da = (a / stride_[i]) % orders_[i];
      if (da != 0) out += (orders_[i] - da) * stride_[i];
    }
    return static_cast<ElemCode>(out);
  }

  ElemCode scalar_mul(std::uint64_t k, ElemCode a) const {
    ElemCode acc = 0;
    ElemCode base = a;
    while (k > 0) {
      if (k & 1ULL) acc = add(acc, base);
      base = add(base, base);
      k >>= 1;
    }
    return acc;
  }

  std::vector<std::uint64_t> decode(ElemCode a) const {
    std::vector<std::uint64_t> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (a / stride_[i]) % orders_[i];
    return c;
  }

  // Coordinates may be arbitrary integers; reduced mod the factor orders.
  ElemCode encode(const std::vector<long long>& coords) const {
    if (coords.size() != orders_.size()) throw ValidationError("ProductGroup::encode: rank mismatch");
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      long long o = static_cast<long long>(orders_[i]);
      long long r = coords[i] % o;
      if (r < 0) r += o;
      out += static_cast<std::uint64_t>(r) * stride_[i];
    }
    return static_cast<ElemCode>(out);
  }

  std::uint64_t element_order(ElemCode a) const {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::uint64_t da = (a / stride_[i]) % orders_[i];
      std::uint64_t oi = orders_[i] / std::gcd(orders_[i], da == 0 ? orders_[i] : da);
      ord = std::lcm(ord, oi);
    }
    return ord;
  }

 private:
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_ = 1;
};

// A subgroup of a larger group, re-indexed with dense local codes.
template <class G>
class SubgroupView {
 public:
  SubgroupView(const G& g, std::vector<ElemCode> elements)
      : parent_(&g), elems_(std::move(elements)), local_(g.size(), kNoElem) {
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) local_[elems_[i]] = static_cast<ElemCode>(i);
    if (elems_.empty() || elems_[0] != g.zero()) {
      throw InternalError("SubgroupView: missing identity");
    }
  }

  std::uint64_t size() const { return elems_.size(); }
  ElemCode zero() const { return 0; }
  ElemCode add(ElemCode a, ElemCode b) const { return local_[parent_->add(elems_[a], elems_[b])]; }
  ElemCode neg(ElemCode a) const { return local_[parent_->neg(elems_[a])]; }
  ElemCode scalar_mul(std::uint64_t k, ElemCode a) const {
    return local_[parent_->scalar_mul(k, elems_[a])];
  }

  const std::vector<ElemCode>& elements() const { return elems_; }
  ElemCode to_parent(ElemCode local) const { return elems_[local]; }
  ElemCode from_parent(ElemCode code) const { return local_[code]; }

 private:
  const G* parent_;
  std::vector<ElemCode> elems_;
  std::vector<ElemCode> local_;
};

// G modulo a subgroup; elements are cosets, coded by rank of their least member.
template <class G>
class QuotientView {
 public:
  QuotientView(const G& g, const std::vector<ElemCode>& sub) : parent_(&g), coset_of_(g.size(), kNoElem) {
    for (ElemCode x = 0; x < g.size(); ++x) {
      if (coset_of_[x] != kNoElem) continue;
      ElemCode idx = static_cast<ElemCode>(reps_.size());
      reps_.push_back(x);
      members_.emplace_back();
      for (ElemCode s : sub) {
        ElemCode y = g.add(x, s);
        coset_of_[y] = idx;
        members_.back().push_back(y);
      }
      std::sort(members_.back().begin(), members_.back().end());
    }
  }

  std::uint64_t size() const { return reps_.size(); }
  ElemCode zero() const { return coset_of_[parent_->zero()]; }
  ElemCode add(ElemCode a, ElemCode b) const { return coset_of_[parent_->add(reps_[a], reps_[b])]; }
  ElemCode neg(ElemCode a) const { return coset_of_[parent_->neg(reps_[a])]; }
  ElemCode scalar_mul(std::uint64_t k, ElemCode a) const {
    return coset_of_[parent_->scalar_mul(k, reps_[a])];
  }

  ElemCode coset_of(ElemCode parent_code) const { return coset_of_[parent_code]; }
  ElemCode representative(ElemCode coset) const { return reps_[coset]; }
  const std::vector<ElemCode>& coset_members(ElemCode coset) const { return members_[coset]; }

 private:
  const G* parent_;
  std::vector<ElemCode> reps_;
  std::vector<std::vector<ElemCode>> members_;
  std::vector<ElemCode> coset_of_;
};

// Additive closure of a generating set. Negatives are implied by finiteness.
template <class G>
std::vector<ElemCode> closure(const G& g, const std::vector<ElemCode>& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<ElemCode> members{g.zero()};
  in[g.zero()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    ElemCode x = members[head];
    for (ElemCode gen : gens) {
      ElemCode y = g.add(x, gen);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace detail {

struct CodeVecHash {
  std::size_t operator()(const std::vector<ElemCode>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (ElemCode c : v) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// Every subgroup exactly once, canonically ordered (by order, then element
// list). Breadth-first lattice construction: grow each known subgroup S by an
// element x with q*x in S for some prime q; every subgroup is reached through
// such index-q steps.
template <class G>
std::vector<std::vector<ElemCode>> enumerate_subgroups(const G& g, const EnumerationBudget& budget) {
  if (g.size() > budget.max_group_order) {
    throw BudgetExceededError("enumerate_subgroups: group order " + std::to_string(g.size()) +
                              " exceeds budget " + std::to_string(budget.max_group_order));
  }
  std::vector<long long> primes;
  for (auto [p, e] : factorize(g.size())) primes.push_back(p);

  // q*x lookup tables, one per prime divisor
  std::vector<std::vector<ElemCode>> qmul(primes.size());
  for (std::size_t qi = 0; qi < primes.size(); ++qi) {
    qmul[qi].resize(g.size());
    for (ElemCode x = 0; x < g.size(); ++x) {
      qmul[qi][x] = g.scalar_mul(static_cast<std::uint64_t>(primes[qi]), x);
    }
  }

  std::unordered_set<std::vector<ElemCode>, detail::CodeVecHash> seen;
  std::vector<std::vector<ElemCode>> found;
  found.push_back({g.zero()});
  seen.insert(found.back());

  std::vector<char> in(g.size());
  for (std::size_t head = 0; head < found.size(); ++head) {
    const std::vector<ElemCode> current = found[head];
    std::fill(in.begin(), in.end(), 0);
    for (ElemCode s : current) in[s] = 1;
    for (std::size_t qi = 0; qi < primes.size(); ++qi) {
      const std::uint64_t q = static_cast<std::uint64_t>(primes[qi]);
      for (ElemCode x = 0; x < g.size(); ++x) {
        if (in[x] || !in[qmul[qi][x]]) continue;
        // index-q extension: <S, x> = S + <x> with x of order q mod S
        std::vector<ElemCode> bigger;
        bigger.reserve(current.size() * q);
        bigger.insert(bigger.end(), current.begin(), current.end());
        ElemCode shift = x;
        for (std::uint64_t t = 1; t < q; ++t) {
          for (ElemCode s : current) bigger.push_back(g.add(s, shift));
          shift = g.add(shift, x);
        }
        std::sort(bigger.begin(), bigger.end());
        if (seen.insert(bigger).second) {
          found.push_back(std::move(bigger));
          if (found.size() > budget.max_subgroup_count) {
            throw BudgetExceededError("enumerate_subgroups: subgroup count exceeds budget");
          }
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

// Subgroups of g containing all of `base`, via the quotient lattice.
template <class G>
std::vector<std::vector<ElemCode>> subgroups_containing(const G& g, const std::vector<ElemCode>& base,
                                                        const EnumerationBudget& budget) {
  QuotientView<G> q(g, base);
  auto quotient_subs = enumerate_subgroups(q, budget);
  std::vector<std::vector<ElemCode>> out;
  out.reserve(quotient_subs.size());
  for (const auto& qs : quotient_subs) {
    std::vector<ElemCode> lifted;
    lifted.reserve(qs.size() * base.size());
    for (ElemCode coset : qs) {
      const auto& mem = q.coset_members(coset);
      lifted.insert(lifted.end(), mem.begin(), mem.end());
    }
    std::sort(lifted.begin(), lifted.end());
    out.push_back(std::move(lifted));
  }
  return out;
}

namespace detail {

inline int exact_log(long long p, std::uint64_t value) {
  int e = 0;
  std::uint64_t v = value;
  while (v > 1) {
    if (v % static_cast<std::uint64_t>(p) != 0) throw InternalError("exact_log: not a prime power");
    v /= static_cast<std::uint64_t>(p);
    ++e;
  }
  return e;
}

// Type of a p-group given the tower of p^i-torsion sizes t[0..]; t[i] must be
// p^(c_1+...+c_i) with c weakly decreasing.
inline Partition type_from_torsion_tower(long long p, const std::vector<std::uint64_t>& t) {
  std::vector<int> conj;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] % t[i - 1] != 0) throw InternalError("torsion tower not multiplicative");
    int c = exact_log(p, t[i] / t[i - 1]);
    if (c == 0) break;
    conj.push_back(c);
    if (conj.size() >= 2 && conj[conj.size() - 2] < c) {
      throw InternalError("torsion tower not concave");
    }
  }
  return conjugate(Partition(conj));
}

}  // namespace detail

// Type of the abstract group formed by `sub` inside g, from element orders:
// the p^i-torsion sizes determine the conjugate of the p-part.
template <class G>
GroupType subgroup_group_type(const G& g, const std::vector<ElemCode>& sub) {
  GroupType type;
  for (auto [p, e] : factorize(sub.size())) {
    std::uint64_t target = 1;
    for (int i = 0; i < e; ++i) target *= static_cast<std::uint64_t>(p);
    std::vector<std::uint64_t> tower{1};
    std::vector<ElemCode> cur(sub.begin(), sub.end());
    while (tower.back() < target) {
      if (tower.size() > 64) throw InternalError("subgroup_group_type: torsion tower does not saturate");
      std::uint64_t zeros = 0;
      for (auto& x : cur) {
        x = g.scalar_mul(static_cast<std::uint64_t>(p), x);
        if (x == g.zero()) ++zeros;
      }
      tower.push_back(zeros);
    }
    type.set(p, detail::type_from_torsion_tower(p, tower));
  }
  return type;
}

// Type of K / S for subgroups S <= K <= g, by counting p^i*x membership in S.
template <class G>
GroupType quotient_group_type_of(const G& g, const std::vector<ElemCode>& k_elems,
                                 const std::vector<ElemCode>& s_elems) {
  if (k_elems.size() % s_elems.size() != 0) throw InternalError("quotient_group_type_of: not a subgroup");
  std::uint64_t qsize = k_elems.size() / s_elems.size();
  std::vector<char> in_s(g.size(), 0);
  for (ElemCode s : s_elems) in_s[s] = 1;
  GroupType type;
  for (auto [p, e] : factorize(qsize)) {
    std::uint64_t target = s_elems.size();
    for (int i = 0; i < e; ++i) target *= static_cast<std::uint64_t>(p);
    std::vector<std::uint64_t> tower{s_elems.size()};
    std::vector<ElemCode> cur(k_elems.begin(), k_elems.end());
    while (tower.back() < target) {
      if (tower.size() > 64) throw InternalError("quotient_group_type_of: torsion tower does not saturate");
      std::uint64_t hits = 0;
      for (auto& x : cur) {
        x = g.scalar_mul(static_cast<std::uint64_t>(p), x);
        if (in_s[x]) ++hits;
      }
      tower.push_back(hits);
    }
    // normalize the tower to quotient sizes
    std::vector<std::uint64_t> norm;
    norm.reserve(tower.size());
    for (std::uint64_t t : tower) norm.push_back(t / s_elems.size());
    type.set(p, detail::type_from_torsion_tower(p, norm));
  }
  return type;
}

// Type of g / sub.
template <class G>
GroupType quotient_group_type(const G& g, const std::vector<ElemCode>& sub) {
  std::vector<ElemCode> whole(g.size());
  for (ElemCode x = 0; x < g.size(); ++x) whole[x] = x;
  return quotient_group_type_of(g, whole, sub);
}

inline ProductGroup p_group_of_type(long long p, const Partition& alpha) {
  std::vector<std::uint64_t> orders;
  orders.reserve(alpha.size());
  for (int a : alpha.parts()) {
    std::uint64_t o = 1;
    for (int i = 0; i < a; ++i) o *= static_cast<std::uint64_t>(p);
    orders.push_back(o);
  }
  return ProductGroup(std::move(orders));
}

// One exhaustive pass over the subgroup lattice of the p-group of type alpha,
// bucketed every way the identities need.
struct SubgroupCensus {
  std::map<Partition, long long> by_type;
  std::map<std::pair<Partition, Partition>, long long> by_type_and_quotient;
  std::map<int, long long> by_order_exp;
  long long total = 0;
};

inline SubgroupCensus census_p_group(long long p, const Partition& alpha, const EnumerationBudget& budget) {
  require_prime(p, "census_p_group");
  ProductGroup g = p_group_of_type(p, alpha);
  if (g.size() > budget.max_group_order) {
    throw BudgetExceededError("census_p_group: order " + std::to_string(g.size()) + " over budget");
  }
  std::vector<ElemCode> whole(g.size());
  for (ElemCode x = 0; x < g.size(); ++x) whole[x] = x;

  SubgroupCensus census;
  for (const auto& sub : enumerate_subgroups(g, budget)) {
    Partition type = subgroup_group_type(g, sub).at(p);
    Partition quot = quotient_group_type_of(g, whole, sub).at(p);
    ++census.by_type[type];
    ++census.by_type_and_quotient[{type, quot}];
    ++census.by_order_exp[type.weight()];
    ++census.total;
  }
  return census;
}

// Cyclic subgroups of order p^s of the p-group of type alpha, bucketed by
// quotient type. Element orders and torsion sizes come from coordinates, so
// this scales well past full-lattice enumeration.
inline std::map<Partition, long long> cyclic_quotient_census(long long p, const Partition& alpha, int s,
                                                             const EnumerationBudget& budget) {
  require_prime(p, "cyclic_quotient_census");
  if (s < 1) throw ValidationError("cyclic_quotient_census: s must be >= 1");
  ProductGroup g = p_group_of_type(p, alpha);
  if (g.size() > budget.max_group_order) {
    throw BudgetExceededError("cyclic_quotient_census: order over budget");
  }
  std::uint64_t target_order = 1;
  for (int i = 0; i < s; ++i) target_order *= static_cast<std::uint64_t>(p);

  // |ker(z -> p^i z)| = prod_j p^min(i, alpha_j)
  const int amax = alpha.first();
  std::vector<std::uint64_t> ker(static_cast<std::size_t>(amax) + 1, 1);
  for (int i = 1; i <= amax; ++i) {
    ker[i] = 1;
    for (int a : alpha.parts()) {
      int m = std::min(i, a);
      for (int t = 0; t < m; ++t) ker[i] *= static_cast<std::uint64_t>(p);
    }
  }

  std::unordered_set<std::vector<ElemCode>, detail::CodeVecHash> seen;
  std::map<Partition, long long> out;
  for (ElemCode x = 0; x < g.size(); ++x) {
    if (g.element_order(x) != target_order) continue;
    std::vector<ElemCode> cyc;
    cyc.reserve(target_order);
    ElemCode y = g.zero();
    for (std::uint64_t t = 0; t < target_order; ++t) {
      cyc.push_back(y);
      y = g.add(y, x);
    }
    std::sort(cyc.begin(), cyc.end());
    if (!seen.insert(cyc).second) continue;

    // membership of p^i L is a coordinatewise degree condition
    std::vector<std::uint64_t> tower{1};
    for (int i = 1; i <= amax; ++i) {
      std::uint64_t img_hits = 0;
      for (ElemCode d : cyc) {
        auto coords = g.decode(d);
        bool in_image = true;
        for (std::size_t j = 0; j < coords.size(); ++j) {
          std::uint64_t step = 1;
          for (int t = 0; t < std::min(i, alpha.parts()[j]); ++t) step *= static_cast<std::uint64_t>(p);
          if (coords[j] % step != 0) {
            in_image = false;
            break;
          }
        }
        if (in_image) ++img_hits;
      }
      std::uint64_t scaled = img_hits * ker[i];
      if (scaled % target_order != 0) throw InternalError("cyclic_quotient_census: non-integral torsion");
      tower.push_back(scaled / target_order);
    }
    Partition quot = detail::type_from_torsion_tower(p, tower);
    ++out[quot];
  }
  return out;
}

// Subgroups of type beta with quotient of type gamma, by exhaustion.
inline BigCount count_triple_oracle(long long p, const Partition& alpha, const Partition& beta,
                                    const Partition& gamma, const EnumerationBudget& budget) {
  require_prime(p, "count_triple_oracle");
  if (beta.size() == 1) {
    auto buckets = cyclic_quotient_census(p, alpha, beta.first(), budget);
    auto it = buckets.find(gamma);
    return it == buckets.end() ? BigCount(0) : BigCount(it->second);
  }
  SubgroupCensus census = census_p_group(p, alpha, budget);
  auto it = census.by_type_and_quotient.find({beta, gamma});
  return it == census.by_type_and_quotient.end() ? BigCount(0) : BigCount(it->second);
}

}  // namespace caycov
