#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caycov/bigint.hpp"
#include "caycov/errors.hpp"
#include "caycov/oracle.hpp"
#include "caycov/partition.hpp"

namespace caycov {

// Matrix over Z_{p^k}, entries reduced into [0, p^k).
struct PModMatrix {
  long long p = 2;
  int k = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> entries;  // row-major

  PModMatrix() = default;

  PModMatrix(long long p_, int k_, std::size_t rows_, std::size_t cols_)
      : p(p_), k(k_), rows(rows_), cols(cols_), entries(rows_ * cols_, 0) {
    require_prime(p, "PModMatrix");
    if (k < 1) throw ValidationError("PModMatrix: k must be >= 1");
    if (cols < 1) throw ValidationError("PModMatrix: need at least one column");
    modulus_ = 1;
    for (int i = 0; i < k; ++i) {
      if (modulus_ > (1ull << 62) / static_cast<std::uint64_t>(p)) {
        throw ValidationError("PModMatrix: p^k too large");
      }
      modulus_ *= static_cast<std::uint64_t>(p);
    }
  }

  static PModMatrix identity(long long p, int k, std::size_t n) {
    PModMatrix m(p, k, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  std::uint64_t reduce(long long v) const {
    long long m = static_cast<long long>(modulus_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

 private:
  std::uint64_t modulus_ = 2;
};

namespace modops {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

// inverse of a unit mod m by extended Euclid
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
  while (newr != 0) {
    long long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw InternalError("invmod: not a unit");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace modops

// The exponent i with lambda = p^i * unit; infinite (nullopt) for lambda == 0.
inline std::optional<int> p_degree(std::uint64_t lambda, long long p, int k) {
  std::uint64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= static_cast<std::uint64_t>(p);
  if (lambda >= pk) throw ValidationError("p_degree: residue out of range");
  if (lambda == 0) return std::nullopt;
  int d = 0;
  while (lambda % static_cast<std::uint64_t>(p) == 0) {
    lambda /= static_cast<std::uint64_t>(p);
    ++d;
  }
  return d;
}

// K = <P*Q> with Q invertible and P diagonal prime-power: the row space in
// normal position, plus the subgroup type it reveals.
struct CanonicalSubgroupForm {
  Partition beta;
  PModMatrix q;         // n x n, invertible
  PModMatrix p_matrix;  // m x n, (i,i) entry p^(k - beta_i); may have zero rows for the zero matrix
};

// Diagonalize by repeatedly moving a minimal-p-degree entry of the active
// minor to the pivot, clearing its row and column, and normalizing the pivot
// to a pure p-power. Q accumulates the inverse of the column transforms, so
// <input> == <p_matrix * q> as subgroups of Z_{p^k}^n.
inline CanonicalSubgroupForm canonical_form(const PModMatrix& input) {
  const long long p = input.p;
  const int k = input.k;
  const std::uint64_t mod = input.modulus();
  const std::size_t r = input.rows;
  const std::size_t n = input.cols;

  PModMatrix w = input;
  PModMatrix q = PModMatrix::identity(p, k, n);
  std::vector<int> degs;

  auto deg_of = [&](std::uint64_t v) { return p_degree(v, p, k).value_or(k); };
  std::uint64_t ppow_cache = 1;  // p^d recomputed per pivot below

  std::size_t t = 0;
  while (t < r && t < n) {
    int best_deg = k;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < r; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        int d = deg_of(w.at(i, j));
        if (d < best_deg) {
          best_deg = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (best_deg >= k) break;  // active minor vanished
    if (!degs.empty() && best_deg < degs.back()) {
      throw InternalError("canonical_form: pivot degrees must not decrease");
    }

    if (bi != t) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(t, j), w.at(bi, j));
    }
    if (bj != t) {
      for (std::size_t i = 0; i < r; ++i) std::swap(w.at(i, t), w.at(i, bj));
      for (std::size_t j = 0; j < n; ++j) std::swap(q.at(t, j), q.at(bj, j));
    }

    const int d = best_deg;
    ppow_cache = 1;
    for (int i = 0; i < d; ++i) ppow_cache *= static_cast<std::uint64_t>(p);
    const std::uint64_t unit = w.at(t, t) / ppow_cache;
    if (unit * ppow_cache != w.at(t, t) || unit % static_cast<std::uint64_t>(p) == 0) {
      throw InternalError("canonical_form: pivot is not p^d * unit");
    }
    const std::uint64_t unit_inv = modops::invmod(unit, mod);

    // clear the pivot column below
    for (std::size_t i = t + 1; i < r; ++i) {
      if (w.at(i, t) == 0) continue;
      if (w.at(i, t) % ppow_cache != 0) throw InternalError("canonical_form: pivot not minimal");
      std::uint64_t f = modops::mulmod(w.at(i, t) / ppow_cache, unit_inv, mod);
      for (std::size_t j = t; j < n; ++j) {
        w.at(i, j) = modops::submod(w.at(i, j), modops::mulmod(f, w.at(t, j), mod), mod);
      }
    }
    // clear the pivot row to the right (column ops mirrored into q)
    for (std::size_t j = t + 1; j < n; ++j) {
      if (w.at(t, j) == 0) continue;
      if (w.at(t, j) % ppow_cache != 0) throw InternalError("canonical_form: pivot not minimal");
      std::uint64_t g = modops::mulmod(w.at(t, j) / ppow_cache, unit_inv, mod);
      for (std::size_t i = 0; i < r; ++i) {
        w.at(i, j) = modops::submod(w.at(i, j), modops::mulmod(g, w.at(i, t), mod), mod);
      }
      for (std::size_t jj = 0; jj < n; ++jj) {
        q.at(t, jj) = (q.at(t, jj) + modops::mulmod(g, q.at(j, jj), mod)) % mod;
      }
    }
    // normalize the pivot row by the unit
    for (std::size_t j = t; j < n; ++j) w.at(t, j) = modops::mulmod(w.at(t, j), unit_inv, mod);
    if (w.at(t, t) != ppow_cache) throw InternalError("canonical_form: pivot normalization failed");

    degs.push_back(d);
    ++t;
  }

  std::vector<int> beta_parts;
  beta_parts.reserve(degs.size());
  for (int d : degs) beta_parts.push_back(k - d);
  Partition beta(beta_parts);

  PModMatrix diag(p, k, std::max<std::size_t>(degs.size(), 1), n);
  diag.rows = degs.size();
  diag.entries.assign(degs.size() * n, 0);
  for (std::size_t i = 0; i < degs.size(); ++i) {
    std::uint64_t pw = 1;
    for (int e = 0; e < degs[i]; ++e) pw *= static_cast<std::uint64_t>(p);
    diag.at(i, i) = pw;
  }
  return {std::move(beta), std::move(q), std::move(diag)};
}

// Type of the subgroup generated by the rows.
inline Partition subgroup_type_mod(const PModMatrix& m) { return canonical_form(m).beta; }

// Type of Z_{p^k}^n / K for K of type beta: the rectangle complement.
inline Partition quotient_type_mod(const Partition& beta, int k, int n) {
  if (static_cast<int>(beta.size()) > n || beta.first() > k) {
    throw ValidationError("quotient_type_mod: beta does not fit in k^n");
  }
  return complement(k, n, beta);
}

// det has p-degree 0, i.e. the matrix is invertible over Z_{p^k}.
inline bool invertible_check(const PModMatrix& q) {
  if (q.rows != q.cols) throw ValidationError("invertible_check: matrix must be square");
  const long long p = q.p;
  const std::size_t n = q.rows;
  std::vector<std::uint64_t> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = q.entries[i] % static_cast<std::uint64_t>(p);
  // elimination over the p-element field
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[col * n + j], m[piv * n + j]);
    }
    std::uint64_t inv = modops::invmod(m[col * n + col], static_cast<std::uint64_t>(p));
    for (std::size_t i = col + 1; i < n; ++i) {
      std::uint64_t f = modops::mulmod(m[i * n + col], inv, static_cast<std::uint64_t>(p));
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        m[i * n + j] = modops::submod(m[i * n + j], modops::mulmod(f, m[col * n + j], static_cast<std::uint64_t>(p)),
                                      static_cast<std::uint64_t>(p));
      }
    }
  }
  return true;
}

// All Z_{p^k}-combinations of the rows, as codes of Z_{p^k}^cols.
inline std::vector<ElemCode> row_space_closure(const PModMatrix& m, const EnumerationBudget& budget) {
  BigCount universe = big_pow(BigCount(m.modulus()), static_cast<long long>(m.cols));
  if (universe > budget.max_rowspace_order) {
    throw BudgetExceededError("row_space_closure: p^(k*n) exceeds the row-space budget");
  }
  ProductGroup g(std::vector<std::uint64_t>(m.cols, m.modulus()));
  std::vector<ElemCode> gens;
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::vector<long long> coords(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) coords[j] = static_cast<long long>(m.at(i, j));
    gens.push_back(g.encode(coords));
  }
  return closure(g, gens);
}

// ---------------------------------------------------------------------------
// Integer lattices and kernels
// ---------------------------------------------------------------------------

// Full-rank sublattice of Z^rank, basis rows in Hermite (row echelon) form.
struct IntLattice {
  std::size_t rank = 0;
  std::vector<std::vector<BigCount>> basis;

  // [Z^rank : L]; the product of the Hermite pivots.
  BigCount index() const {
    if (basis.size() != rank) return 0;
    BigCount d = 1;
    std::size_t col = 0;
    for (const auto& row : basis) {
      while (col < rank && row[col] == 0) ++col;
      if (col == rank) return 0;
      d *= row[col];
      ++col;
    }
    return d;
  }

  bool member(std::vector<BigCount> v) const {
    for (const auto& row : basis) {
      std::size_t piv = 0;
      while (piv < rank && row[piv] == 0) ++piv;
      if (piv == rank) continue;
      BigCount q = v[piv] / row[piv];
      if (v[piv] % row[piv] != 0) return false;
      for (std::size_t j = piv; j < rank; ++j) v[j] -= q * row[j];
    }
    for (const auto& x : v) {
      if (x != 0) return false;
    }
    return true;
  }
};

namespace hnf_detail {

// Row Hermite form with transform: returns (H, U) with U*A == H, U unimodular.
// Pivots positive, entries above a pivot reduced into [0, pivot).
inline std::pair<std::vector<std::vector<BigCount>>, std::vector<std::vector<BigCount>>> hermite_with_transform(
    std::vector<std::vector<BigCount>> a) {
  const std::size_t r = a.size();
  const std::size_t c = r == 0 ? 0 : a[0].size();
  std::vector<std::vector<BigCount>> u(r, std::vector<BigCount>(r, 0));
  for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;

  std::size_t pr = 0;
  for (std::size_t col = 0; col < c && pr < r; ++col) {
    // gcd the column below pr into a single entry
    while (true) {
      std::size_t best = r;
      for (std::size_t i = pr; i < r; ++i) {
        if (a[i][col] != 0 && (best == r || abs(a[i][col]) < abs(a[best][col]))) best = i;
      }
      if (best == r) break;
      std::swap(a[pr], a[best]);
      std::swap(u[pr], u[best]);
      bool done = true;
      for (std::size_t i = pr + 1; i < r; ++i) {
        if (a[i][col] == 0) continue;
        BigCount q = a[i][col] / a[pr][col];
        for (std::size_t j = 0; j < c; ++j) a[i][j] -= q * a[pr][j];
        for (std::size_t j = 0; j < r; ++j) u[i][j] -= q * u[pr][j];
        if (a[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[pr][col] == 0) continue;
    if (a[pr][col] < 0) {
      for (auto& x : a[pr]) x = -x;
      for (auto& x : u[pr]) x = -x;
    }
    for (std::size_t i = 0; i < pr; ++i) {
      BigCount q = a[i][col] / a[pr][col];
      if (a[i][col] - q * a[pr][col] < 0) q -= 1;  // floor division
      if (q == 0) continue;
      for (std::size_t j = 0; j < c; ++j) a[i][j] -= q * a[pr][j];
      for (std::size_t j = 0; j < r; ++j) u[i][j] -= q * u[pr][j];
    }
    ++pr;
  }
  return {std::move(a), std::move(u)};
}

inline std::vector<std::vector<BigCount>> hermite_rows(std::vector<std::vector<BigCount>> a) {
  auto [h, u] = hermite_with_transform(std::move(a));
  std::vector<std::vector<BigCount>> out;
  for (auto& row : h) {
    bool nonzero = false;
    for (const auto& x : row) {
      if (x != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hnf_detail

// Kernel of the map Z^rank -> prod Z_{target_orders[j]} given by map_rows (one
// row per ambient generator). Stacks the congruence moduli below the map and
// reads the left kernel off the Hermite transform.
inline IntLattice integer_kernel(const std::vector<std::vector<long long>>& map_rows,
                                 const std::vector<long long>& target_orders) {
  if (target_orders.empty()) throw ValidationError("integer_kernel: empty target");
  const std::size_t rank = map_rows.size();
  const std::size_t t = target_orders.size();
  for (const auto& row : map_rows) {
    if (row.size() != t) throw ValidationError("integer_kernel: row width mismatch");
  }
  for (long long o : target_orders) {
    if (o < 1) throw ValidationError("integer_kernel: moduli must be positive");
  }

  std::vector<std::vector<BigCount>> stacked(rank + t, std::vector<BigCount>(t, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < t; ++j) stacked[i][j] = map_rows[i][j];
  }
  for (std::size_t j = 0; j < t; ++j) stacked[rank + j][j] = target_orders[j];

  auto [h, u] = hnf_detail::hermite_with_transform(std::move(stacked));

  std::vector<std::vector<BigCount>> kernel_rows;
  for (std::size_t i = 0; i < h.size(); ++i) {
    bool zero = true;
    for (const auto& x : h[i]) {
      if (x != 0) {
        zero = false;
        break;
      }
    }
    if (!zero) continue;
    std::vector<BigCount> proj(rank);
    for (std::size_t j = 0; j < rank; ++j) proj[j] = u[i][j];
    kernel_rows.push_back(std::move(proj));
  }
  IntLattice lat;
  lat.rank = rank;
  lat.basis = hnf_detail::hermite_rows(std::move(kernel_rows));
  if (lat.basis.size() != rank) throw InternalError("integer_kernel: kernel not full rank");
  return lat;
}

}  // namespace caycov
