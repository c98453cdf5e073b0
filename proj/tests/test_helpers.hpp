#pragma once

#include <string>
#include <vector>

#include "altdesc/int_poly.hpp"
#include "doctest.h"

namespace test {

inline altdesc::IntPoly poly(const std::vector<long long>& c) {
  std::vector<altdesc::BigInt> v;
  for (long long x : c) v.emplace_back(static_cast<long>(x));
  return altdesc::IntPoly(std::move(v));
}

}  // namespace test

namespace doctest {
template <>
struct StringMaker<altdesc::IntPoly> {
  static String convert(const altdesc::IntPoly& p) { return ("[" + altdesc::to_plain(p) + "]").c_str(); }
};
template <>
struct StringMaker<altdesc::BigInt> {
  static String convert(const altdesc::BigInt& v) { return v.get_str().c_str(); }
};
}  // namespace doctest
