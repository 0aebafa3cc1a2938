#include "tnnflag/random.hpp"

namespace tnnflag {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

SemifieldValue random_value(SemifieldKind kind, Rng& rng) {
  switch (kind) {
    case SemifieldKind::PositiveRational:
      return SemifieldValue::rational(uniform(rng, 1, 9), uniform(rng, 1, 9));
    case SemifieldKind::PositiveRationalFunction: {
      Poly num(std::vector<Rational>{Rational(uniform(rng, 0, 3)), Rational(uniform(rng, 1, 3))});
      Poly den = Poly(Rational(uniform(rng, 1, 3))) + Poly::monomial(Rational(uniform(rng, 0, 2)), uniform(rng, 1, 2));
      return SemifieldValue::rational_function(num.shift_up(uniform(rng, 0, 1)), den);
    }
    case SemifieldKind::Tropical:
      return SemifieldValue::tropical(uniform(rng, -4, 4));
    case SemifieldKind::One:
      return SemifieldValue::one_element();
  }
  throw DomainError("unknown semifield kind");
}

Params random_params(SemifieldKind kind, std::size_t n, Rng& rng) {
  Params p;
  for (std::size_t k = 0; k < n; ++k) p.push_back(random_value(kind, rng));
  return p;
}

WeylElement random_weyl(const DatumPtr& datum, int max_length, Rng& rng) {
  WeylElement w = WeylElement::identity(datum);
  const int steps = static_cast<int>(uniform(rng, 0, max_length));
  for (int k = 0; k < 4 * steps && w.length() < steps; ++k) {
    int i = static_cast<int>(uniform(rng, 0, datum->rank() - 1));
    if (!w.right_descent(i)) w = w.times_simple(i);
  }
  return w;
}

UElement random_u(const DatumPtr& datum, SemifieldKind kind, int max_length, Rng& rng) {
  WeylElement w = random_weyl(datum, max_length, rng);
  return UElement(datum, w.reduced_word(), random_params(kind, static_cast<std::size_t>(w.length()), rng), kind);
}

GElement random_g(const DatumPtr& datum, SemifieldKind kind, int max_length, Rng& rng) {
  UElement x = random_u(datum, kind, max_length, rng);
  Params t = random_params(kind, static_cast<std::size_t>(datum->rank()), rng);
  UElement y = random_u(datum, kind, max_length, rng);
  return GElement(std::move(x), std::move(t), std::move(y));
}

CellPoint random_point(const CellIndex& cell, SemifieldKind kind, Rng& rng) {
  const auto n = static_cast<std::size_t>(cell.w.length() - cell.v.length());
  return CellPoint(cell.v, cell.w.reduced_word(), random_params(kind, n, rng), kind);
}

}  // namespace tnnflag
