#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace altdesc {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow2(unsigned n);

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace altdesc
