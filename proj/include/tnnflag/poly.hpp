#pragma once

// Exact univariate polynomials over Q and the rational function field Q(t).

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tnnflag {

using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q"; throws InputError on malformed text or a zero
/// denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Dense polynomial in t with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, long degree);
  static Poly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
  long order() const;
  const Rational& lead() const { return c_.back(); }
  Rational coeff(long d) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  /// True when no coefficient is negative.
  bool nonnegative() const;
  bool is_constant() const { return c_.size() <= 1; }

  Poly scaled(const Rational& s) const;
  Poly shift_up(long k) const;
  /// Divides by t^k; requires order() >= k.
  Poly shift_down(long k) const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DomainError when b is zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic greatest common divisor (zero if both are zero).
  static Poly gcd(Poly a, Poly b);
  /// Exact quotient; throws DomainError if b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Number of distinct real roots of p in the open interval (0, +inf),
/// by Sturm's theorem. p must be nonzero.
int count_positive_roots(const Poly& p);

/// Element of the field Q(t), kept in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                    // NOLINT
  RatFunc(Poly num, Poly den);

  static RatFunc t() { return RatFunc(Poly::t(), Poly(Rational(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// ord_t(num) - ord_t(den); throws DomainError on zero.
  long valuation() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_, Normalized{}); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Normalized {};
  RatFunc(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace tnnflag
