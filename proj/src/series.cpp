#include "altdesc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace altdesc {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly RatPoly::from(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

RatPoly RatPoly::truncated(int max_degree) const {
  if (degree() <= max_degree) return *this;
  return RatPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

RatPoly mul_truncated(const RatPoly& a, const RatPoly& b, int max_degree) {
  if (a.is_zero() || b.is_zero() || max_degree < 0) return {};
  const int top = std::min(a.degree() + b.degree(), max_degree);
  std::vector<Rational> out(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= std::min(a.degree(), top); ++i) {
    const Rational& ai = a.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(ai) == 0) continue;
    for (int j = 0; j <= std::min(b.degree(), top - i); ++j) {
      out[static_cast<std::size_t>(i + j)] += ai * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return RatPoly(std::move(out));
}

RatPoly inverse_truncated(const RatPoly& a, int max_degree) {
  const Rational a0 = a.coeff(0);
  if (sgn(a0) == 0) throw std::domain_error("inverse_truncated: zero constant term");
  std::vector<Rational> inv(static_cast<std::size_t>(max_degree) + 1);
  inv[0] = 1 / a0;
  for (int k = 1; k <= max_degree; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= std::min(k, a.degree()); ++j) {
      acc += a.coeffs()[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
    }
    inv[static_cast<std::size_t>(k)] = -acc / a0;
  }
  return RatPoly(std::move(inv));
}

SeriesQx::SeriesQx(int order, int x_order)
    : order_(order), x_order_(x_order), coeffs_(static_cast<std::size_t>(order) + 1) {
  if (order < 0 || x_order < 0) throw std::invalid_argument("SeriesQx: negative order");
}

SeriesQx SeriesQx::constant(const RatPoly& c, int order, int x_order) {
  SeriesQx s(order, x_order);
  s.set(0, c);
  return s;
}

SeriesQx SeriesQx::variable(int order, int x_order) {
  SeriesQx s(order, x_order);
  if (order >= 1) s.set(1, RatPoly{1});
  return s;
}

void SeriesQx::set(int n, const RatPoly& c) {
  if (n < 0 || n > order_) throw std::out_of_range("SeriesQx::set: index past order");
  coeffs_[static_cast<std::size_t>(n)] = c.truncated(x_order_);
}

void SeriesQx::check_compatible(const SeriesQx& rhs) const {
  if (order_ != rhs.order_ || x_order_ != rhs.x_order_) {
    throw std::invalid_argument("SeriesQx: truncation orders differ");
  }
}

SeriesQx& SeriesQx::operator+=(const SeriesQx& rhs) {
  check_compatible(rhs);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

SeriesQx& SeriesQx::operator-=(const SeriesQx& rhs) {
  check_compatible(rhs);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

SeriesQx operator*(const SeriesQx& a, const SeriesQx& b) {
  a.check_compatible(b);
  SeriesQx out(a.order_, a.x_order_);
  for (int n = 0; n <= a.order_; ++n) {
    RatPoly acc;
    for (int k = 0; k <= n; ++k) acc += mul_truncated(a[k], b[n - k], a.x_order_);
    out.coeffs_[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return out;
}

SeriesQx operator/(const SeriesQx& a, const SeriesQx& b) {
  a.check_compatible(b);
  if (sgn(b[0].coeff(0)) == 0) {
    throw std::domain_error("series_div: divisor constant term is not invertible");
  }
  const RatPoly inv0 = inverse_truncated(b[0], a.x_order_);
  SeriesQx out(a.order_, a.x_order_);
  for (int n = 0; n <= a.order_; ++n) {
    RatPoly acc = a[n];
    for (int k = 0; k < n; ++k) acc -= mul_truncated(out[k], b[n - k], a.x_order_);
    out.coeffs_[static_cast<std::size_t>(n)] = mul_truncated(acc, inv0, a.x_order_);
  }
  return out;
}

SeriesQx operator*(const RatPoly& c, const SeriesQx& s) {
  SeriesQx out(s.order_, s.x_order_);
  for (int n = 0; n <= s.order_; ++n) {
    out.coeffs_[static_cast<std::size_t>(n)] = mul_truncated(c, s[n], s.x_order_);
  }
  return out;
}

SeriesQx series_add(const SeriesQx& a, const SeriesQx& b) { return a + b; }
SeriesQx series_mul(const SeriesQx& a, const SeriesQx& b) { return a * b; }
SeriesQx series_div(const SeriesQx& a, const SeriesQx& b) { return a / b; }

SeriesQx trig_series(Trig fn, int order, int x_order) {
  auto maclaurin = [&](bool odd) {
    SeriesQx s(order, x_order);
    for (int n = odd ? 1 : 0; n <= order; n += 2) {
      const int sign = ((n / 2) % 2 == 0) ? 1 : -1;
      s.set(n, RatPoly::constant(Rational(BigInt(sign), factorial(static_cast<unsigned>(n)))));
    }
    return s;
  };
  switch (fn) {
    case Trig::sin: return maclaurin(true);
    case Trig::cos: return maclaurin(false);
    case Trig::tan: return maclaurin(true) / maclaurin(false);
    case Trig::sec: return SeriesQx::constant(RatPoly{1}, order, x_order) / maclaurin(false);
  }
  throw std::invalid_argument("trig_series: unknown function");
}

SeriesQx scale_z(const SeriesQx& s, const RatPoly& c) {
  SeriesQx out(s.order(), s.x_order());
  RatPoly power{1};
  for (int n = 0; n <= s.order(); ++n) {
    out.set(n, mul_truncated(s[n], power, s.x_order()));
    power = mul_truncated(power, c, s.x_order());
  }
  return out;
}

SeriesQx egf_from_family(const std::function<IntPoly(int)>& f, int order, int start,
                         int x_order) {
  SeriesQx out(order, x_order);
  for (int n = std::max(start, 0); n <= order; ++n) {
    const BigInt fact = factorial(static_cast<unsigned>(n));
    out.set(n, RatPoly::from(f(n)) * Rational(BigInt(1), fact));
  }
  return out;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

SeriesComparison series_equal(const SeriesQx& a, const SeriesQx& b) {
  if (a.order() != b.order() || a.x_order() != b.x_order()) {
    throw std::invalid_argument("series_equal: truncation orders differ");
  }
  SeriesComparison cmp;
  cmp.order = a.order();
  cmp.x_order = a.x_order();
  for (int n = 0; n <= a.order(); ++n) {
    if (a[n] == b[n]) continue;
    const int top = std::max(a[n].degree(), b[n].degree());
    for (int k = 0; k <= top; ++k) {
      if (a[n].coeff(k) != b[n].coeff(k)) {
        cmp.equal = false;
        cmp.first_mismatch = SeriesMismatch{n, k, to_string(a[n].coeff(k)), to_string(b[n].coeff(k))};
        return cmp;
      }
    }
  }
  return cmp;
}

}  // namespace altdesc
