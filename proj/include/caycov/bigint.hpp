#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "caycov/errors.hpp"

namespace caycov {

// All counts are exact; they routinely exceed 64 bits.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(const BigCount& base, long long exp) {
  if (exp < 0) throw InternalError("big_pow: negative exponent");
  BigCount result = 1;
  BigCount b = base;
  unsigned long long e = static_cast<unsigned long long>(exp);
  while (e > 0) {
    if (e & 1ULL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

inline BigCount pow_of(long long p, long long e) { return big_pow(BigCount(p), e); }

// Division that is exact by theorem; a remainder signals an implementation bug.
inline BigCount exact_div(const BigCount& num, const BigCount& den, const char* what) {
  if (den == 0) throw InternalError(std::string("exact_div by zero in ") + what);
  BigCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw InternalError(std::string("inexact division in ") + what);
  return q;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void require_prime(long long p, const char* where) {
  if (!is_prime(p)) {
    throw ValidationError(std::string(where) + ": " + std::to_string(p) + " is not prime");
  }
}

}  // namespace caycov
