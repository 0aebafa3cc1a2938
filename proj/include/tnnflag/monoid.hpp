#pragma once

// The monoids U(K) and G(K) of a Kac-Moody root datum over a semifield K,
// stored in canonical cell coordinates.
//
// A UElement is i_1^{a_1} ... i_n^{a_n} for a reduced word (i_1, ..., i_n).
// A GElement is x * t * y: a positive UElement x, a torus element
// prod_j jbar^{t_j}, and a negative part y whose letters are the generators
// (-i)^c, written in the order of y's word.

#include <vector>

#include "tnnflag/semifield.hpp"
#include "tnnflag/weyl.hpp"

namespace tnnflag {

using Params = std::vector<SemifieldValue>;

/// Exchange map for the braid relation of (i, j): the coordinates of
/// i^{a_1} j^{a_2} i^{a_3} ... (m_ij letters) rewritten in the word
/// j i j .... m = 4 and m = 6 are computed through a rank-two folding.
/// Throws NoBraidRelation when m_ij is infinite.
Params braid_R(const GCM& a, int i, int j, const Params& params);

/// Applies braid moves to a word and its coordinates in place.
void transport(const GCM& a, Word& word, Params& params, const std::vector<BraidMove>& path);

class UElement {
 public:
  /// Throws InputError when the word is not reduced or the parameter count
  /// differs from its length, InstanceMismatch for mixed semifields.
  UElement(DatumPtr datum, Word word, Params params, SemifieldKind kind);

  static UElement identity(const DatumPtr& datum, SemifieldKind kind);
  static UElement generator(const DatumPtr& datum, int i, const SemifieldValue& a);

  const DatumPtr& datum() const { return datum_; }
  const WeylElement& element() const { return w_; }
  const Word& word() const { return word_; }
  const Params& params() const { return params_; }
  SemifieldKind kind() const { return kind_; }
  int length() const { return static_cast<int>(word_.size()); }

  /// The same element in the coordinates of another reduced word of w.
  /// Throws MismatchError when the word represents a different element.
  UElement in_word(const Word& target) const;
  /// Reversed word and coordinates, an element over w^{-1}.
  UElement reversed() const;

  /// Equality of elements (not of coordinate vectors).
  friend bool operator==(const UElement& a, const UElement& b);
  friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

 private:
  DatumPtr datum_;
  WeylElement w_;
  Word word_;
  Params params_;
  SemifieldKind kind_;
};

/// Product in U(K). The Weyl index of the result is w1 * w2 (Demazure).
UElement u_mul(const UElement& u1, const UElement& u2);

class GElement {
 public:
  /// Throws InputError when the torus vector has the wrong size and
  /// InstanceMismatch when data or semifields differ.
  GElement(UElement x, Params torus, UElement y);

  static GElement identity(const DatumPtr& datum, SemifieldKind kind);
  static GElement positive(UElement x);
  static GElement negative(UElement y);
  static GElement torus(const DatumPtr& datum, Params t);
  /// Generators i^a, (-i)^a and ibar^a.
  static GElement gen_x(const DatumPtr& datum, int i, const SemifieldValue& a);
  static GElement gen_y(const DatumPtr& datum, int i, const SemifieldValue& a);
  static GElement gen_torus(const DatumPtr& datum, int i, const SemifieldValue& a);

  const DatumPtr& datum() const { return x_.datum(); }
  SemifieldKind kind() const { return x_.kind(); }
  const UElement& x() const { return x_; }
  const Params& t() const { return t_; }
  const UElement& y() const { return y_; }

  friend bool operator==(const GElement& a, const GElement& b);
  friend bool operator!=(const GElement& a, const GElement& b) { return !(a == b); }

 private:
  UElement x_;
  Params t_;
  UElement y_;
};

GElement g_mul(const GElement& g1, const GElement& g2);

/// Automorphism with i^a -> (-i)^a and ibar^a -> ibar^{1/a}.
GElement phi(const GElement& g);
/// Anti-automorphism with i^a -> (-i)^a and ibar^a -> ibar^a.
GElement tau(const GElement& g);

/// Embedding of G(K) of a folded datum into G(K) of its ambient datum:
/// i^a -> prod_{p in i} p^a, and likewise for torus and negative letters.
GElement iota_fold(const FoldingData& f, const GElement& g);
/// Inverse of iota_fold on its image; throws NotInImage for an element that
/// is not sigma-fixed.
GElement unfold(const FoldingData& f, const DatumPtr& folded, const GElement& g);

/// Applies a semifield homomorphism to every coordinate.
UElement base_change(const SemifieldHom& r, const UElement& u);
GElement base_change_monoid(const SemifieldHom& r, const GElement& g);

}  // namespace tnnflag
