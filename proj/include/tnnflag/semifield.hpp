#pragma once

// Semifield arithmetic for the four concrete semifields used throughout the
// library, the adjoined absorbing zero, and semifield homomorphisms.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tnnflag/poly.hpp"

namespace tnnflag {

/// Runtime tag identifying which semifield a value belongs to.
enum class SemifieldKind {
  PositiveRational,          // Q_{>0}
  PositiveRationalFunction,  // Q_{>0}(t): ratios of nonnegative polynomials
  Tropical,                  // (Z, min, +)
  One,                       // {1}
};

/// Short CLI names: qpos, qtpos, trop, one.
std::string_view kind_name(SemifieldKind k);
SemifieldKind parse_kind(std::string_view name);
/// True for the semifields that sit inside a field (Q or Q(t)).
bool has_field_embedding(SemifieldKind k);

class SemifieldValue {
 public:
  struct PositiveRational {
    Rational value;
  };
  /// Stored un-normalized; equality is decided by cross-multiplication.
  struct PositiveRationalFunction {
    Poly num;
    Poly den;
  };
  struct Tropical {
    long value;
  };
  struct OneElement {};

  /// Multiplicative unit of the given semifield.
  static SemifieldValue one(SemifieldKind k);

  /// Throws DomainError unless q > 0.
  static SemifieldValue rational(const Rational& q);
  static SemifieldValue rational(long p, long q = 1) { return rational(Rational(p, q)); }
  static SemifieldValue tropical(long n);
  static SemifieldValue one_element();
  /// Throws DomainError if either polynomial is zero or has a negative
  /// coefficient.
  static SemifieldValue rational_function(Poly num, Poly den);
  /// c * t^n with c > 0; n may be negative.
  static SemifieldValue monomial(const Rational& c, long n);

  SemifieldKind kind() const;

  const Rational& as_rational() const;
  long as_tropical() const;
  const Poly& num() const;
  const Poly& den() const;

  friend SemifieldValue operator+(const SemifieldValue& a, const SemifieldValue& b);
  friend SemifieldValue operator*(const SemifieldValue& a, const SemifieldValue& b);
  friend SemifieldValue operator/(const SemifieldValue& a, const SemifieldValue& b);
  SemifieldValue& operator+=(const SemifieldValue& o) { return *this = *this + o; }
  SemifieldValue& operator*=(const SemifieldValue& o) { return *this = *this * o; }

  SemifieldValue inv() const;
  SemifieldValue pow(long e) const;

  /// Semantic equality; throws InstanceMismatch across semifields.
  friend bool operator==(const SemifieldValue& a, const SemifieldValue& b);
  friend bool operator!=(const SemifieldValue& a, const SemifieldValue& b) { return !(a == b); }

  std::string to_string() const;

 private:
  using Repr = std::variant<PositiveRational, PositiveRationalFunction, Tropical, OneElement>;
  explicit SemifieldValue(Repr r) : v_(std::move(r)) {}
  Repr v_;
};

SemifieldValue inv(const SemifieldValue& a);
std::ostream& operator<<(std::ostream& os, const SemifieldValue& a);

/// Throws InstanceMismatch when the kinds differ.
void require_same_kind(const SemifieldValue& a, const SemifieldValue& b);

/// K^! : a semifield value or the absorbing zero o.
class ExtendedValue {
 public:
  ExtendedValue() = default;  // o
  ExtendedValue(SemifieldValue v) : v_(std::move(v)) {}  // NOLINT

  static ExtendedValue zero() { return {}; }
  bool is_zero() const { return !v_.has_value(); }
  const SemifieldValue& value() const;

  friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b);
  friend ExtendedValue operator*(const ExtendedValue& a, const ExtendedValue& b);
  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);

 private:
  std::optional<SemifieldValue> v_;
};

/// One of the four homomorphisms between the registered semifields.
class SemifieldHom {
 public:
  enum class Type { ToOne, ConstEmbed, MonomialLift, Valuation };

  static SemifieldHom to_one(SemifieldKind source) { return {Type::ToOne, source}; }
  /// Q_{>0} -> Q_{>0}(t), constants.
  static SemifieldHom const_embed() { return {Type::ConstEmbed, SemifieldKind::PositiveRational}; }
  /// Z^trop -> Q_{>0}(t), n -> t^n. Multiplicative, and a section of the
  /// valuation, but not additive: t^min(a, b) != t^a + t^b.
  static SemifieldHom monomial_lift() { return {Type::MonomialLift, SemifieldKind::Tropical}; }
  /// Q_{>0}(t) -> Z^trop, f/g -> ord_t f - ord_t g.
  static SemifieldHom valuation() {
    return {Type::Valuation, SemifieldKind::PositiveRationalFunction};
  }

  Type type() const { return type_; }
  SemifieldKind source() const { return source_; }
  SemifieldKind target() const;

  /// Throws InstanceMismatch when a is not in the source semifield.
  SemifieldValue operator()(const SemifieldValue& a) const;

 private:
  SemifieldHom(Type t, SemifieldKind s) : type_(t), source_(s) {}
  Type type_;
  SemifieldKind source_;
};

inline SemifieldValue hom_apply(const SemifieldHom& r, const SemifieldValue& a) { return r(a); }

// Bridges between semifields and their ambient fields.

/// Q_{>0} value as a rational; NoFieldEmbedding for other kinds.
Rational to_rational(const SemifieldValue& a);
/// Q_{>0} or Q_{>0}(t) value as an element of Q(t).
RatFunc to_ratfunc(const SemifieldValue& a);

/// Field element back into Q_{>0}; NotInNonnegativePart unless x > 0.
SemifieldValue from_field(const Rational& x);
/// Field element back into Q_{>0}(t). Succeeds iff f is positive on (0, inf);
/// a subtraction-free representative is found by multiplying numerator and
/// denominator by a power of (1 + t).
SemifieldValue from_field(const RatFunc& f);

}  // namespace tnnflag
