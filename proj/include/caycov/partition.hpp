#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "caycov/bigint.hpp"
#include "caycov/errors.hpp"

namespace caycov {

// Weakly decreasing positive integers. The empty partition is the type of the
// trivial group; zero parts are never stored.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw ValidationError("Partition: parts must be >= 1");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
        throw ValidationError("Partition: parts must be weakly decreasing");
      }
    }
  }

  // Sorts and drops zeros, so callers can assemble parts in any order.
  static Partition normalized(std::vector<int> parts) {
    std::vector<int> kept;
    kept.reserve(parts.size());
    for (int v : parts) {
      if (v < 0) throw ValidationError("Partition: negative part");
      if (v > 0) kept.push_back(v);
    }
    std::sort(kept.begin(), kept.end(), std::greater<int>());
    return Partition(std::move(kept));
  }

  // part^count, e.g. rectangle(3,2) == (3,3). rectangle(0,n) is empty.
  static Partition rectangle(int part, int count) {
    if (part == 0 || count == 0) return Partition();
    if (part < 0 || count < 0) throw ValidationError("Partition::rectangle: negative argument");
    return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // 1-based part access with the usual tail convention: part(i) == 0 for i > size.
  int part1(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_[0]; }
  int last() const { return parts_.empty() ? 0 : parts_.back(); }

  int weight() const {
    int w = 0;
    for (int v : parts_) w += v;
    return w;
  }

  bool rectangular() const {
    return parts_.empty() || parts_.front() == parts_.back();
  }

  std::size_t distinct_values() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i == 0 || parts_[i] != parts_[i - 1]) ++d;
    }
    return d;
  }

  auto operator<=>(const Partition&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

inline int weight(const Partition& p) { return p.weight(); }

// beta fits slotwise inside alpha.
inline bool contains(const Partition& alpha, const Partition& beta) {
  if (beta.size() > alpha.size()) return false;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta.parts()[i] > alpha.parts()[i]) return false;
  }
  return true;
}

// a_i = number of parts >= i, for i = 1..alpha_1.
inline Partition conjugate(const Partition& alpha) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(alpha.first()));
  for (int i = 1; i <= alpha.first(); ++i) {
    int c = 0;
    for (int v : alpha.parts()) {
      if (v >= i) ++c;
    }
    out.push_back(c);
  }
  return Partition(std::move(out));
}

// The complement of beta inside the n-by-k rectangle: parts k - beta_i together
// with k^(n-m), zero parts dropped. Self-inverse for fixed (k, n).
inline Partition complement(int k, int n, const Partition& beta) {
  if (k < 0 || n < 0) throw ValidationError("complement: k and n must be nonnegative");
  if (static_cast<int>(beta.size()) > n || beta.first() > k) {
    throw ValidationError("complement: partition does not fit in the " + std::to_string(k) + "^" +
                          std::to_string(n) + " rectangle");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  if (k > 0) {
    for (int i = 0; i < n - static_cast<int>(beta.size()); ++i) out.push_back(k);
  }
  for (std::size_t i = beta.size(); i-- > 0;) {
    int v = k - beta.parts()[i];
    if (v > 0) out.push_back(v);
  }
  return Partition(std::move(out));
}

// Run-length encoding with strictly decreasing values.
struct MultiplicityForm {
  // (value, multiplicity) pairs
  std::vector<std::pair<int, int>> runs;

  std::size_t run_count() const { return runs.size(); }
};

inline MultiplicityForm multiplicity_form(const Partition& beta) {
  MultiplicityForm mf;
  for (int v : beta.parts()) {
    if (!mf.runs.empty() && mf.runs.back().first == v) {
      ++mf.runs.back().second;
    } else {
      mf.runs.emplace_back(v, 1);
    }
  }
  return mf;
}

inline Partition expand(const MultiplicityForm& mf) {
  std::vector<int> parts;
  for (auto [v, m] : mf.runs) {
    for (int i = 0; i < m; ++i) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

// Primary decomposition type of a finite abelian group: prime -> partition.
// No prime maps to the empty partition.
class GroupType {
 public:
  GroupType() = default;

  void set(long long p, Partition part) {
    require_prime(p, "GroupType");
    if (part.empty()) {
      components_.erase(p);
    } else {
      components_[p] = std::move(part);
    }
  }

  // Empty partition for primes without a component.
  const Partition& at(long long p) const {
    static const Partition kEmpty;
    auto it = components_.find(p);
    return it == components_.end() ? kEmpty : it->second;
  }

  bool trivial() const { return components_.empty(); }

  const std::map<long long, Partition>& components() const { return components_; }

  std::vector<long long> primes() const {
    std::vector<long long> ps;
    ps.reserve(components_.size());
    for (const auto& [p, _] : components_) ps.push_back(p);
    return ps;
  }

  BigCount order() const {
    BigCount n = 1;
    for (const auto& [p, part] : components_) n *= pow_of(p, part.weight());
    return n;
  }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (const auto& [p, part] : components_) {
      std::uint64_t pe = 1;
      for (int i = 0; i < part.first(); ++i) pe *= static_cast<std::uint64_t>(p);
      e *= pe;
    }
    return e;
  }

  // One part per prime.
  bool cyclic() const {
    for (const auto& [_, part] : components_) {
      if (part.size() > 1) return false;
    }
    return true;
  }

  auto operator<=>(const GroupType&) const = default;

  std::string str() const {
    if (components_.empty()) return "{}";
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [p, part] : components_) {
      if (!first) os << ", ";
      first = false;
      os << p << " -> " << part.str();
    }
    os << '}';
    return os.str();
  }

 private:
  std::map<long long, Partition> components_;
};

// Primary decomposition of prod Z_{orders[i]}. Orders may appear in any order
// and need not be in invariant-factor form.
inline GroupType group_type_of(const std::vector<long long>& orders) {
  std::map<long long, std::vector<int>> exps;
  for (long long n : orders) {
    if (n < 2) throw ValidationError("group_type_of: cyclic factor orders must be >= 2");
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        int e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        exps[p].push_back(e);
      }
    }
    if (m > 1) exps[m].push_back(1);
  }
  GroupType t;
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    t.set(p, Partition(es));
  }
  return t;
}

// --- enumeration helpers used by the formulas and the verification suites ---

// All partitions of weight exactly w, in decreasing lexicographic order.
inline std::vector<Partition> partitions_of_weight(int w) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (int v = std::min(remaining, maxPart); v >= 1; --v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  rec(w, w == 0 ? 1 : w);
  return out;
}

// All beta contained in alpha with |beta| = r.
inline std::vector<Partition> sub_partitions_of_weight(const Partition& alpha, int r) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t slot, int remaining, int prev) {
    if (remaining == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    if (slot >= alpha.size()) return;
    int hi = std::min({alpha.parts()[slot], prev, remaining});
    for (int v = hi; v >= 1; --v) {
      cur.push_back(v);
      rec(slot + 1, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(0, r, r == 0 ? 1 : r);
  return out;
}

// All beta contained in alpha (any weight).
inline std::vector<Partition> sub_partitions(const Partition& alpha) {
  std::vector<Partition> out;
  for (int r = 0; r <= alpha.weight(); ++r) {
    auto some = sub_partitions_of_weight(alpha, r);
    out.insert(out.end(), some.begin(), some.end());
  }
  return out;
}

// All group types of a given order, by combining per-prime partitions.
inline std::vector<GroupType> group_types_of_order(std::uint64_t n) {
  std::vector<GroupType> out;
  if (n == 0) return out;
  std::map<long long, int> fact;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      ++fact[static_cast<long long>(p)];
      m /= p;
    }
  }
  if (m > 1) ++fact[static_cast<long long>(m)];
  out.emplace_back();  // trivial type; extended prime by prime
  for (const auto& [p, e] : fact) {
    std::vector<GroupType> next;
    for (const auto& base : out) {
      for (const auto& part : partitions_of_weight(e)) {
        GroupType t = base;
        t.set(p, part);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace caycov
