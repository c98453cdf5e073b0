#include "altdesc/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "altdesc/errors.hpp"

namespace altdesc {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, unsigned k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result{1};
  IntPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void IntPoly::add_to_coeff(unsigned k, const BigInt& c) {
  if (k >= coeffs_.size()) coeffs_.resize(k + 1);
  coeffs_[k] += c;
  normalize();
}

std::string to_plain(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k != 0) out += ' ';
    out += to_decimal(p.coeffs()[k]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << '-';
    const BigInt mag = abs(c);
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os;
}

std::optional<int> first_difference(const IntPoly& a, const IntPoly& b) {
  const int top = std::max(a.degree(), b.degree());
  for (int k = 0; k <= top; ++k) {
    if (a.coeff(k) != b.coeff(k)) return k;
  }
  return std::nullopt;
}

namespace {

// sum_k p_k f^k g^(m-k)
IntPoly homogeneous_substitution(const IntPoly& p, unsigned m, const IntPoly& f,
                                 const IntPoly& g) {
  if (p.degree() > static_cast<int>(m)) {
    throw std::invalid_argument("degree exceeds the homogenizing degree");
  }
  std::vector<IntPoly> f_pow{IntPoly{1}};
  std::vector<IntPoly> g_pow{IntPoly{1}};
  for (unsigned k = 1; k <= m; ++k) {
    f_pow.push_back(f_pow.back() * f);
    g_pow.push_back(g_pow.back() * g);
  }
  IntPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    out += c * (f_pow[static_cast<std::size_t>(k)] * g_pow[m - static_cast<unsigned>(k)]);
  }
  return out;
}

}  // namespace

IntPoly mobius_hom_sub(const IntPoly& p, unsigned m) {
  return homogeneous_substitution(p, m, IntPoly{1, 1}, IntPoly{1, -1});
}

IntPoly inverse_mobius_hom_sub(const IntPoly& p, unsigned m) {
  return homogeneous_substitution(p, m, IntPoly{-1, 1}, IntPoly{1, 1});
}

IntPoly reciprocal_transform(const IntPoly& p, unsigned n) {
  if (p.degree() > static_cast<int>(n)) {
    throw std::invalid_argument("reciprocal_transform: degree exceeds window");
  }
  std::vector<BigInt> out(n + 1);
  for (int k = 0; k <= p.degree(); ++k) out[n - static_cast<unsigned>(k)] = p.coeffs()[static_cast<std::size_t>(k)];
  return IntPoly(std::move(out));
}

IntPoly exact_divide(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw ExactnessError("exact_divide: divisor degree exceeds dividend");

  std::vector<BigInt> rem = p.coeffs();
  const BigInt& lead = d.coeffs().back();
  const int dd = d.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - dd + 1));
  for (int k = p.degree() - dd; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + dd)];
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw ExactnessError("exact_divide: non-integral quotient coefficient");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * d.coeffs()[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) throw ExactnessError("exact_divide: nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly exact_divide(const IntPoly& p, const BigInt& d) {
  if (sgn(d) == 0) throw std::invalid_argument("exact_divide: division by zero");
  std::vector<BigInt> out = p.coeffs();
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw ExactnessError("exact_divide: coefficient not divisible by " + to_decimal(d));
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

}  // namespace altdesc
