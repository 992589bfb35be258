#pragma once

#include <gmpxx.h>

#include <string>

#include "treegf/errors.hpp"

namespace treegf {

/// Exact arbitrary-precision signed integer. Counts grow like 2^(n-1), so
/// fixed-width arithmetic is never used anywhere in the library.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline BigInt big_from_decimal(const std::string& s) {
  if (s.empty()) throw Error("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw Error("bad integer literal: " + s);
  return BigInt(s);
}

inline BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

}  // namespace treegf
