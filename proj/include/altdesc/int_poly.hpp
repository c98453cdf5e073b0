#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "altdesc/bigint.hpp"

namespace altdesc {

/// Dense univariate polynomial over arbitrary-precision integers.
/// coeffs()[k] is the coefficient of x^k; trailing zeros are never stored, so
/// the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, unsigned k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero past the degree.
  BigInt coeff(int k) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  IntPoly operator-() const;

  bool operator==(const IntPoly&) const = default;

  IntPoly derivative() const;
  IntPoly pow(unsigned e) const;
  BigInt evaluate(const BigInt& x) const;

  /// Adds c to the coefficient of x^k (used by mutation tests).
  void add_to_coeff(unsigned k, const BigInt& c);

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Space separated coefficients, low degree first ("0" for the zero polynomial).
std::string to_plain(const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Smallest k where the coefficients of x^k differ.
std::optional<int> first_difference(const IntPoly& a, const IntPoly& b);

/// sum_k p_k (1+x)^k (1-x)^(m-k): the substitution x -> (1+x)/(1-x) cleared
/// by (1-x)^m. Throws std::invalid_argument if deg P > m.
IntPoly mobius_hom_sub(const IntPoly& p, unsigned m);

/// sum_k p_k (x-1)^k (x+1)^(m-k): the substitution x -> (x-1)/(x+1) cleared
/// by (1+x)^m. Composed with mobius_hom_sub it multiplies by 2^m.
IntPoly inverse_mobius_hom_sub(const IntPoly& p, unsigned m);

/// x^n P(1/x). Throws std::invalid_argument if deg P > n.
IntPoly reciprocal_transform(const IntPoly& p, unsigned n);

/// Q with P = D * Q. Throws std::invalid_argument if D is zero and
/// ExactnessError if D does not divide P over the integers.
IntPoly exact_divide(const IntPoly& p, const IntPoly& d);
IntPoly exact_divide(const IntPoly& p, const BigInt& d);

}  // namespace altdesc
