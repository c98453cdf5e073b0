#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "altdesc/bigint.hpp"
#include "altdesc/int_poly.hpp"

namespace altdesc {

/// Polynomial in x with exact rational coefficients; trailing zeros trimmed.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);
  static RatPoly from(const IntPoly& p);
  static RatPoly constant(const Rational& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  RatPoly operator-() const;

  bool operator==(const RatPoly&) const = default;

  /// Drop every term above x^max_degree.
  RatPoly truncated(int max_degree) const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// Product truncated above x^max_degree.
RatPoly mul_truncated(const RatPoly& a, const RatPoly& b, int max_degree);

/// Inverse modulo x^(max_degree+1). Throws std::domain_error when the
/// constant term is zero.
RatPoly inverse_truncated(const RatPoly& a, int max_degree);

/// Truncated power series in z with coefficients in Q[x], themselves truncated
/// above x^x_order. Two series are compared only when both truncation orders
/// agree.
class SeriesQx {
 public:
  SeriesQx(int order, int x_order);

  static SeriesQx constant(const RatPoly& c, int order, int x_order);
  /// The series "z".
  static SeriesQx variable(int order, int x_order);

  int order() const { return order_; }
  int x_order() const { return x_order_; }
  const RatPoly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  void set(int n, const RatPoly& c);

  SeriesQx& operator+=(const SeriesQx& rhs);
  SeriesQx& operator-=(const SeriesQx& rhs);
  friend SeriesQx operator+(SeriesQx a, const SeriesQx& b) { return a += b; }
  friend SeriesQx operator-(SeriesQx a, const SeriesQx& b) { return a -= b; }
  friend SeriesQx operator*(const SeriesQx& a, const SeriesQx& b);
  friend SeriesQx operator/(const SeriesQx& a, const SeriesQx& b);
  /// Multiplies every coefficient by the polynomial c.
  friend SeriesQx operator*(const RatPoly& c, const SeriesQx& s);

 private:
  void check_compatible(const SeriesQx& rhs) const;

  int order_;
  int x_order_;
  std::vector<RatPoly> coeffs_;
};

SeriesQx series_add(const SeriesQx& a, const SeriesQx& b);
SeriesQx series_mul(const SeriesQx& a, const SeriesQx& b);
/// Requires the z^0 coefficient of b to have a nonzero constant term in x;
/// throws std::domain_error otherwise.
SeriesQx series_div(const SeriesQx& a, const SeriesQx& b);

enum class Trig { sin, cos, tan, sec };

/// Maclaurin series of sin, cos (direct) or tan = sin/cos, sec = 1/cos.
SeriesQx trig_series(Trig fn, int order, int x_order);

/// The substitution z -> c z: coefficient of z^n multiplied by c^n.
SeriesQx scale_z(const SeriesQx& s, const RatPoly& c);

/// sum_{n=start..order} f(n) z^n / n!.
SeriesQx egf_from_family(const std::function<IntPoly(int)>& f, int order, int start,
                         int x_order);

struct SeriesMismatch {
  int n = 0;         // power of z
  int x_degree = 0;  // power of x
  std::string lhs;
  std::string rhs;
};

struct SeriesComparison {
  bool equal = true;
  std::optional<SeriesMismatch> first_mismatch;
  int order = 0;
  int x_order = 0;
};

/// Exact coefficientwise comparison; reports the smallest (n, x-degree) that
/// differs. Throws std::invalid_argument when the truncation orders differ.
SeriesComparison series_equal(const SeriesQx& a, const SeriesQx& b);

std::string to_string(const Rational& q);

}  // namespace altdesc
