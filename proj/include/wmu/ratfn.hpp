#pragma once

// Exact polynomials and rational functions in the formal dimension variable n.
//
// Coefficients are GMP rationals. A RationalFunction is always kept in its
// canonical form: numerator and denominator coprime, denominator a primitive
// integer polynomial with positive leading coefficient. Two equal functions
// therefore compare equal field by field.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace wmu {

using BigInt = mpz_class;
using BigRational = mpq_class;

class Polynomial {
 public:
  Polynomial() = default;
  // coefficients[k] multiplies n^k; trailing zeros are trimmed.
  explicit Polynomial(std::vector<BigRational> coefficients);
  Polynomial(long value);  // NOLINT: constants convert implicitly
  explicit Polynomial(const BigRational& value);

  static Polynomial monomial(const BigRational& c, int degree);
  static Polynomial variable() { return monomial(1, 1); }
  // Product of (n - r) over the given integer roots.
  static Polynomial from_roots(const std::vector<long>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  BigRational coefficient(int k) const;
  const BigRational& leading() const { return coeffs_.back(); }

  BigRational evaluate(const BigRational& x) const;

  // Positive rational c with this == c * primitive part (sign follows the
  // leading coefficient). Zero for the zero polynomial.
  BigRational content() const;
  Polynomial primitive_part() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human form, e.g. "n^3 - n", "9n^2 + 36", "(1/2)n".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

// Quotient and remainder over Q. Throws DomainError for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);

// Greatest common divisor as a primitive integer polynomial with positive
// leading coefficient (gcd(0, 0) = 0). Uses the primitive remainder sequence.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(long value) : num_(value), den_(1) {}  // NOLINT
  explicit RationalFunction(const BigRational& value);
  explicit RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Throws PoleError when the denominator vanishes at x.
  BigRational evaluate(const BigRational& x) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  RationalFunction scaled(const BigRational& c) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "(-4)/(n^3 - n)"; a polynomial prints without the denominator.
  std::string to_string() const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

// Expansion c0 n^e + c1 n^(e-1) + ... at n = infinity, truncated after
// `coefficients.size()` terms (first omitted exponent is truncation_order).
struct LaurentSeries {
  bool identically_zero = false;
  int leading_exponent = 0;
  std::vector<BigRational> coefficients;
  int truncation_order = 0;

  // Coefficient of n^exponent, zero when outside the stored range.
  BigRational coefficient_at(int exponent) const;
  std::string to_string() const;
};

LaurentSeries laurent_at_infinity(const RationalFunction& f, int terms);

}  // namespace wmu
