#include "tnnflag/semifield.hpp"

#include <algorithm>
#include <ostream>

#include "tnnflag/errors.hpp"

namespace tnnflag {

std::string_view kind_name(SemifieldKind k) {
  switch (k) {
    case SemifieldKind::PositiveRational: return "qpos";
    case SemifieldKind::PositiveRationalFunction: return "qtpos";
    case SemifieldKind::Tropical: return "trop";
    case SemifieldKind::One: return "one";
  }
  return "?";
}

SemifieldKind parse_kind(std::string_view name) {
  if (name == "qpos") return SemifieldKind::PositiveRational;
  if (name == "qtpos") return SemifieldKind::PositiveRationalFunction;
  if (name == "trop") return SemifieldKind::Tropical;
  if (name == "one") return SemifieldKind::One;
  throw InputError("unknown semifield '" + std::string(name) + "'");
}

bool has_field_embedding(SemifieldKind k) {
  return k == SemifieldKind::PositiveRational || k == SemifieldKind::PositiveRationalFunction;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Cheap partial reduction that keeps both polynomials nonnegative: strip the
// common power of t, cancel a gcd only when the quotients stay nonnegative,
// and scale the denominator to be monic.
void tidy(Poly& num, Poly& den) {
  long k = std::min(num.order(), den.order());
  if (k > 0) {
    num = num.shift_down(k);
    den = den.shift_down(k);
  }
  if (!num.is_constant() && !den.is_constant()) {
    Poly g = Poly::gcd(num, den);
    if (!g.is_constant()) {
      Poly n2 = Poly::exact_div(num, g);
      Poly d2 = Poly::exact_div(den, g);
      if (n2.nonnegative() && d2.nonnegative()) {
        num = std::move(n2);
        den = std::move(d2);
      }
    }
  }
  Rational l = den.lead();
  if (l != 1) {
    num = num.scaled(1 / l);
    den = den.scaled(1 / l);
  }
}

[[noreturn]] void mismatch(const SemifieldValue& a, const SemifieldValue& b) {
  throw InstanceMismatch("semifield mismatch: " + std::string(kind_name(a.kind())) + " vs " +
                         std::string(kind_name(b.kind())));
}

}  // namespace

void require_same_kind(const SemifieldValue& a, const SemifieldValue& b) {
  if (a.kind() != b.kind()) mismatch(a, b);
}

SemifieldValue SemifieldValue::one(SemifieldKind k) {
  switch (k) {
    case SemifieldKind::PositiveRational: return rational(Rational(1));
    case SemifieldKind::PositiveRationalFunction:
      return SemifieldValue(PositiveRationalFunction{Poly(Rational(1)), Poly(Rational(1))});
    case SemifieldKind::Tropical: return tropical(0);
    case SemifieldKind::One: return one_element();
  }
  throw DomainError("unknown semifield kind");
}

SemifieldValue SemifieldValue::rational(const Rational& q) {
  if (q <= 0) throw DomainError("positive rational required, got " + tnnflag::to_string(q));
  Rational c = q;
  c.canonicalize();
  return SemifieldValue(PositiveRational{c});
}

SemifieldValue SemifieldValue::tropical(long n) { return SemifieldValue(Tropical{n}); }

SemifieldValue SemifieldValue::one_element() { return SemifieldValue(OneElement{}); }

SemifieldValue SemifieldValue::rational_function(Poly num, Poly den) {
  if (num.is_zero() || den.is_zero())
    throw DomainError("positive rational function needs nonzero numerator and denominator");
  if (!num.nonnegative() || !den.nonnegative())
    throw DomainError("positive rational function needs nonnegative coefficients");
  tidy(num, den);
  return SemifieldValue(PositiveRationalFunction{std::move(num), std::move(den)});
}

SemifieldValue SemifieldValue::monomial(const Rational& c, long n) {
  if (c <= 0) throw DomainError("monomial coefficient must be positive");
  if (n >= 0) return rational_function(Poly::monomial(c, n), Poly(Rational(1)));
  return rational_function(Poly(c), Poly::monomial(Rational(1), -n));
}

SemifieldKind SemifieldValue::kind() const {
  return std::visit(Overloaded{
                        [](const PositiveRational&) { return SemifieldKind::PositiveRational; },
                        [](const PositiveRationalFunction&) {
                          return SemifieldKind::PositiveRationalFunction;
                        },
                        [](const Tropical&) { return SemifieldKind::Tropical; },
                        [](const OneElement&) { return SemifieldKind::One; },
                    },
                    v_);
}

const Rational& SemifieldValue::as_rational() const {
  if (auto* p = std::get_if<PositiveRational>(&v_)) return p->value;
  throw InstanceMismatch("value is not a positive rational");
}

long SemifieldValue::as_tropical() const {
  if (auto* p = std::get_if<Tropical>(&v_)) return p->value;
  throw InstanceMismatch("value is not tropical");
}

const Poly& SemifieldValue::num() const {
  if (auto* p = std::get_if<PositiveRationalFunction>(&v_)) return p->num;
  throw InstanceMismatch("value is not a rational function");
}

const Poly& SemifieldValue::den() const {
  if (auto* p = std::get_if<PositiveRationalFunction>(&v_)) return p->den;
  throw InstanceMismatch("value is not a rational function");
}

SemifieldValue operator+(const SemifieldValue& a, const SemifieldValue& b) {
  require_same_kind(a, b);
  using V = SemifieldValue;
  switch (a.kind()) {
    case SemifieldKind::PositiveRational:
      return V(V::PositiveRational{a.as_rational() + b.as_rational()});
    case SemifieldKind::Tropical:
      return V::tropical(std::min(a.as_tropical(), b.as_tropical()));
    case SemifieldKind::One: return a;
    case SemifieldKind::PositiveRationalFunction: {
      Poly num, den;
      if (a.den() == b.den()) {
        num = a.num() + b.num();
        den = a.den();
      } else {
        num = a.num() * b.den() + b.num() * a.den();
        den = a.den() * b.den();
      }
      tidy(num, den);
      return V(V::PositiveRationalFunction{std::move(num), std::move(den)});
    }
  }
  throw DomainError("unknown semifield kind");
}

SemifieldValue operator*(const SemifieldValue& a, const SemifieldValue& b) {
  require_same_kind(a, b);
  using V = SemifieldValue;
  switch (a.kind()) {
    case SemifieldKind::PositiveRational:
      return V(V::PositiveRational{a.as_rational() * b.as_rational()});
    case SemifieldKind::Tropical: return V::tropical(a.as_tropical() + b.as_tropical());
    case SemifieldKind::One: return a;
    case SemifieldKind::PositiveRationalFunction: {
      Poly num = a.num() * b.num();
      Poly den = a.den() * b.den();
      tidy(num, den);
      return V(V::PositiveRationalFunction{std::move(num), std::move(den)});
    }
  }
  throw DomainError("unknown semifield kind");
}

SemifieldValue operator/(const SemifieldValue& a, const SemifieldValue& b) { return a * b.inv(); }

SemifieldValue SemifieldValue::inv() const {
  switch (kind()) {
    case SemifieldKind::PositiveRational: return SemifieldValue(PositiveRational{1 / as_rational()});
    case SemifieldKind::Tropical: return tropical(-as_tropical());
    case SemifieldKind::One: return *this;
    case SemifieldKind::PositiveRationalFunction: {
      Poly num = den(), d = this->num();
      tidy(num, d);
      return SemifieldValue(PositiveRationalFunction{std::move(num), std::move(d)});
    }
  }
  throw DomainError("unknown semifield kind");
}

SemifieldValue inv(const SemifieldValue& a) { return a.inv(); }

SemifieldValue SemifieldValue::pow(long e) const {
  SemifieldValue base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  SemifieldValue acc = one(kind());
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

bool operator==(const SemifieldValue& a, const SemifieldValue& b) {
  require_same_kind(a, b);
  switch (a.kind()) {
    case SemifieldKind::PositiveRational: return a.as_rational() == b.as_rational();
    case SemifieldKind::Tropical: return a.as_tropical() == b.as_tropical();
    case SemifieldKind::One: return true;
    case SemifieldKind::PositiveRationalFunction:
      return a.num() * b.den() == b.num() * a.den();
  }
  return false;
}

std::string SemifieldValue::to_string() const {
  switch (kind()) {
    case SemifieldKind::PositiveRational: return tnnflag::to_string(as_rational());
    case SemifieldKind::Tropical: return std::to_string(as_tropical());
    case SemifieldKind::One: return "1";
    case SemifieldKind::PositiveRationalFunction:
      if (den() == Poly(Rational(1))) return num().to_string();
      return "(" + num().to_string() + ")/(" + den().to_string() + ")";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const SemifieldValue& a) { return os << a.to_string(); }

// -------------------------------------------------------- ExtendedValue

const SemifieldValue& ExtendedValue::value() const {
  if (!v_) throw DomainError("the absorbing zero has no semifield value");
  return *v_;
}

ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return ExtendedValue(a.value() + b.value());
}

ExtendedValue operator*(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_zero() || b.is_zero()) return ExtendedValue::zero();
  return ExtendedValue(a.value() * b.value());
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.value() == b.value();
}

// --------------------------------------------------------- SemifieldHom

SemifieldKind SemifieldHom::target() const {
  switch (type_) {
    case Type::ToOne: return SemifieldKind::One;
    case Type::ConstEmbed:
    case Type::MonomialLift: return SemifieldKind::PositiveRationalFunction;
    case Type::Valuation: return SemifieldKind::Tropical;
  }
  return SemifieldKind::One;
}

SemifieldValue SemifieldHom::operator()(const SemifieldValue& a) const {
  if (a.kind() != source_)
    throw InstanceMismatch("homomorphism source is " + std::string(kind_name(source_)) +
                           ", value lies in " + std::string(kind_name(a.kind())));
  switch (type_) {
    case Type::ToOne: return SemifieldValue::one_element();
    case Type::ConstEmbed:
      return SemifieldValue::rational_function(Poly(a.as_rational()), Poly(Rational(1)));
    case Type::MonomialLift: return SemifieldValue::monomial(Rational(1), a.as_tropical());
    case Type::Valuation: return SemifieldValue::tropical(a.num().order() - a.den().order());
  }
  throw DomainError("unknown homomorphism");
}

// -------------------------------------------------------- field bridges

Rational to_rational(const SemifieldValue& a) {
  if (a.kind() != SemifieldKind::PositiveRational)
    throw NoFieldEmbedding("semifield " + std::string(kind_name(a.kind())) +
                           " has no embedding into Q");
  return a.as_rational();
}

RatFunc to_ratfunc(const SemifieldValue& a) {
  switch (a.kind()) {
    case SemifieldKind::PositiveRational: return RatFunc(a.as_rational());
    case SemifieldKind::PositiveRationalFunction: return RatFunc(a.num(), a.den());
    default:
      throw NoFieldEmbedding("semifield " + std::string(kind_name(a.kind())) +
                             " has no embedding into Q(t)");
  }
}

SemifieldValue from_field(const Rational& x) {
  if (x <= 0) throw NotInNonnegativePart("value " + to_string(x) + " is not positive");
  return SemifieldValue::rational(x);
}

namespace {

// Smallest N with (1 + t)^N p having nonnegative coefficients. p must be
// strictly positive on [0, inf) after removing its t-power, which guarantees
// termination.
long polya_exponent(const Poly& p) {
  Poly q = p.shift_down(p.order());
  const Poly one_plus_t(std::vector<Rational>{Rational(1), Rational(1)});
  long n = 0;
  while (!q.nonnegative()) {
    q *= one_plus_t;
    ++n;
  }
  return n;
}

}  // namespace

SemifieldValue from_field(const RatFunc& f) {
  if (f.is_zero()) throw NotInNonnegativePart("zero is not in Q>0(t)");
  const Poly& num = f.num();
  const Poly& den = f.den();
  if (num.nonnegative() && den.nonnegative()) return SemifieldValue::rational_function(num, den);
  // den is monic; positivity on (0, inf) needs a positive leading numerator
  // coefficient and no positive roots on either side.
  if (num.lead() < 0 || count_positive_roots(num) != 0 || count_positive_roots(den) != 0)
    throw NotInNonnegativePart("rational function " + f.to_string() +
                               " is not positive on (0, inf)");
  // Each side must also be positive at t = 0 once its t-power is removed.
  auto low = [](const Poly& p) { return p.coeff(p.order()); };
  if (low(num) < 0 || low(den) < 0)
    throw NotInNonnegativePart("rational function " + f.to_string() + " is negative near 0");
  long n = std::max(polya_exponent(num), polya_exponent(den));
  Poly mult(Rational(1));
  const Poly one_plus_t(std::vector<Rational>{Rational(1), Rational(1)});
  for (long i = 0; i < n; ++i) mult *= one_plus_t;
  return SemifieldValue::rational_function(num * mult, den * mult);
}

}  // namespace tnnflag
