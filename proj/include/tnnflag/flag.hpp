#pragma once

// Points and cells of the flag manifold B(K) in Marsh-Rietsch coordinates:
// evaluation, Chamber Ansatz inversion, transition maps, the action of G(K)
// and tropical computation by lifting to Q_{>0}(t).

#include <functional>
#include <vector>

#include "tnnflag/matrix_a.hpp"
#include "tnnflag/monoid.hpp"

namespace tnnflag {

/// A pair v <= w: a point of B({1}).
struct CellIndex {
  WeylElement v;
  WeylElement w;
  friend bool operator==(const CellIndex& a, const CellIndex& b) { return a.v == b.v && a.w == b.w; }
};

/// Point of the cell R_{v,w}(K): a reduced word of w and one parameter per
/// position of J0 of the positive subexpression for v.
class CellPoint {
 public:
  /// Throws InputError for a non-reduced word or a wrong parameter count,
  /// OrderViolation when v is not below w.
  CellPoint(WeylElement v, Word word, Params params, SemifieldKind kind);

  const DatumPtr& datum() const { return v_.datum(); }
  const WeylElement& v() const { return v_; }
  const WeylElement& w() const { return w_; }
  const Word& word() const { return sub_.word; }
  const Params& params() const { return params_; }
  SemifieldKind kind() const { return kind_; }
  const Subexpression& subexpression() const { return sub_; }
  CellIndex index() const { return {v_, w()}; }

  /// Same cell, same word and equal parameters.
  friend bool operator==(const CellPoint& a, const CellPoint& b);
  friend bool operator!=(const CellPoint& a, const CellPoint& b) { return !(a == b); }

 private:
  WeylElement v_;
  WeylElement w_;
  Subexpression sub_;
  Params params_;
  SemifieldKind kind_;
};

/// Base point (e, e) of B(K).
CellPoint base_point(const DatumPtr& datum, SemifieldKind kind);

/// g_1 ... g_n with y-generators on J0 and sdot^{-1} on J+. Throws
/// NoFieldEmbedding for tropical or one-element points.
template <class F>
Matrix<F> mr_evaluate(const Realization& r, const CellPoint& p);
FieldMatrix mr_evaluate(const Realization& r, const CellPoint& p);

/// Chamber minors of the prefix flags: entry [k][p] is the ratio of flag
/// minors for v_(k) and w_(k) at ambient node p, k = 0..n, computed along
/// the expanded word in the ambient datum.
template <class F>
std::vector<std::vector<F>> chamber_minors(const Realization& r, const Matrix<F>& g, const Word& word);

/// Inverts mr_evaluate. Throws NotInNonnegativePart when a coordinate falls
/// outside K (Q_{>0} for F = Rational, Q_{>0}(t) for F = RatFunc).
template <class F>
CellPoint chamber_ansatz(const Realization& r, const Matrix<F>& g, const Word& word);
CellPoint chamber_ansatz(const Realization& r, const FieldMatrix& g, const Word& word);

/// Lift from Z^trop to Q_{>0}(t); must preserve valuations.
using Lift = std::function<SemifieldValue(long)>;
/// n -> t^n.
Lift monomial_lift();

CellPoint base_change_cell(const SemifieldHom& r, const CellPoint& p);
CellPoint lift_cell(const Lift& lift, const CellPoint& p);
GElement lift_element(const Lift& lift, const GElement& g);

/// The same point in the coordinates of another reduced word of w.
/// Throws MismatchError when the word is for a different element.
CellPoint transition(const CellPoint& p, const Word& word, const Lift& lift = monomial_lift());

/// g * p. The target word is the reduced word of y * w from the descent
/// algorithm.
CellPoint act(const GElement& g, const CellPoint& p, const Lift& lift = monomial_lift());

/// (x o_l v, y * w).
CellIndex star_index(const WeylElement& x, const WeylElement& y, const CellIndex& c);

/// All pairs v <= w with l(w) <= max_length. A negative bound enumerates
/// the whole (finite) Weyl group and throws DomainError for infinite ones.
std::vector<CellIndex> enumerate_cells(const DatumPtr& datum, int max_length = -1);

}  // namespace tnnflag
