#include "aztec/numeric.hpp"

#include <cstdio>

namespace aztec {

std::string to_decimal12(const Rational& v) {
  mpf_class f(v, 256);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.12Fg", f.get_mpf_t());
  return buf;
}

}  // namespace aztec
