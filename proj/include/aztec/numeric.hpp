#pragma once

#include <gmpxx.h>

#include <string>

namespace aztec {

// Every count and probability in the library is exact.
using BigCount = mpz_class;
using Rational = mpq_class;

inline BigCount pow2(unsigned long exponent) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

inline std::string to_decimal(const BigCount& v) { return v.get_str(10); }

/// Always "p/q" with q >= 1, including integers ("3/1") and zero ("0/1").
inline std::string to_fraction(const Rational& v) {
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

/// Decimal rendering with 12 significant digits, for CSV reports only.
std::string to_decimal12(const Rational& v);

}  // namespace aztec
