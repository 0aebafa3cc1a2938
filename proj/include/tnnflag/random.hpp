#pragma once

// Seeded random inputs for self-tests and property checks.

#include <random>

#include "tnnflag/flag.hpp"
#include "tnnflag/monoid.hpp"

namespace tnnflag {

using Rng = std::mt19937_64;

/// qpos: p/q with 1 <= p, q <= 9; qtpos: (c0 + c1 t) / (d0 + d1 t^k) with
/// small nonnegative coefficients; trop: integer in [-4, 4]; one: 1.
SemifieldValue random_value(SemifieldKind kind, Rng& rng);
Params random_params(SemifieldKind kind, std::size_t n, Rng& rng);

/// Random element of W with length <= max_length (a random walk that keeps
/// only length-increasing steps).
WeylElement random_weyl(const DatumPtr& datum, int max_length, Rng& rng);

UElement random_u(const DatumPtr& datum, SemifieldKind kind, int max_length, Rng& rng);
GElement random_g(const DatumPtr& datum, SemifieldKind kind, int max_length, Rng& rng);

/// Random point of the cell (v, w), in the reduced word of w found by the
/// descent algorithm.
CellPoint random_point(const CellIndex& cell, SemifieldKind kind, Rng& rng);

}  // namespace tnnflag
