#include "wmu/ratfn.hpp"

#include <algorithm>

#include "wmu/error.hpp"

namespace wmu {

namespace {

std::string rational_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Pseudo-remainder of integer polynomials: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
  const int db = b.degree();
  const BigRational lb = b.leading();
  std::vector<BigRational> r = a.coefficients();
  int dr = a.degree();
  while (dr >= db && dr >= 0) {
    const BigRational lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int k = 0; k <= db; ++k) r[dr - db + k] -= lr * b.coefficient(k);
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  return Polynomial(std::move(r));
}

}  // namespace

Polynomial::Polynomial(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(long value) {
  if (value != 0) coeffs_.emplace_back(value);
}

Polynomial::Polynomial(const BigRational& value) {
  if (value != 0) coeffs_.push_back(value);
}

Polynomial Polynomial::monomial(const BigRational& c, int degree) {
  if (c == 0) return Polynomial();
  std::vector<BigRational> v(static_cast<std::size_t>(degree + 1), 0);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<long>& roots) {
  Polynomial p(1);
  for (long r : roots) p *= Polynomial({BigRational(-r), BigRational(1)});
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRational Polynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

BigRational Polynomial::content() const {
  if (is_zero()) return 0;
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational out(num_gcd, den_lcm);
  out.canonicalize();
  if (leading() < 0) out = -out;
  return out;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const BigRational c = content();
  for (auto& x : p.coeffs_) x /= c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigRational c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string coef;
    if (c != 1 || k == 0) {
      coef = c.get_den() == 1 ? c.get_num().get_str()
                              : "(" + rational_string(c) + ")";
    }
    out += coef;
    if (k >= 1) out += "n";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigRational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial(), a};
  std::vector<BigRational> quo(static_cast<std::size_t>(da - db + 1), 0);
  const BigRational lb = b.leading();
  for (int k = da; k >= db; --k) {
    const BigRational q = rem[static_cast<std::size_t>(k)] / lb;
    quo[static_cast<std::size_t>(k - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coefficient(j);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  Polynomial x = a.primitive_part();
  Polynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

RationalFunction::RationalFunction(const BigRational& value)
    : num_(value), den_(1) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(1) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const BigRational c = den_.content();
  const BigRational inv = 1 / c;
  num_ *= inv;
  den_ *= inv;
}

BigRational RationalFunction::evaluate(const BigRational& x) const {
  const BigRational d = den_.evaluate(x);
  if (d == 0) {
    throw PoleError("pole of " + to_string() + " at n = " + rational_string(x));
  }
  return num_.evaluate(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::scaled(const BigRational& c) const {
  RationalFunction r = *this;
  r.num_ *= c;
  if (r.num_.is_zero()) r.den_ = Polynomial(1);
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

BigRational LaurentSeries::coefficient_at(int exponent) const {
  if (identically_zero) return 0;
  const int k = leading_exponent - exponent;
  if (k < 0 || k >= static_cast<int>(coefficients.size())) return 0;
  return coefficients[static_cast<std::size_t>(k)];
}

std::string LaurentSeries::to_string() const {
  if (identically_zero) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    BigRational c = coefficients[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += rational_string(c);
    const int e = leading_exponent - static_cast<int>(k);
    if (e != 0) out += " n^" + std::to_string(e);
  }
  out += " + O(n^" + std::to_string(truncation_order) + ")";
  return out;
}

LaurentSeries laurent_at_infinity(const RationalFunction& f, int terms) {
  LaurentSeries s;
  if (terms < 1) throw DomainError("laurent expansion needs at least one term");
  if (f.is_zero()) {
    s.identically_zero = true;
    s.leading_exponent = 0;
    s.truncation_order = 0;
    return s;
  }
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  const int p = num.degree(), q = den.degree();
  s.leading_exponent = p - q;
  s.truncation_order = s.leading_exponent - terms;
  // In u = 1/n: num = n^p * A(u), den = n^q * B(u); the series is A/B.
  auto a = [&](int k) { return num.coefficient(p - k); };
  auto b = [&](int k) { return den.coefficient(q - k); };
  const BigRational b0 = b(0);
  s.coefficients.reserve(static_cast<std::size_t>(terms));
  for (int k = 0; k < terms; ++k) {
    BigRational c = a(k);
    for (int j = 1; j <= std::min(k, q); ++j) {
      c -= b(j) * s.coefficients[static_cast<std::size_t>(k - j)];
    }
    c /= b0;
    s.coefficients.push_back(c);
  }
  return s;
}

}  // namespace wmu
