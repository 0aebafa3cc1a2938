#pragma once

// Weyl groups of (possibly infinite) Kac-Moody root data: elements as
// integer matrices on the root lattice, Bruhat order, subexpressions,
// Demazure products and braid-move connectivity of reduced words.

#include <cstddef>
#include <vector>

#include "tnnflag/rootdata.hpp"

namespace tnnflag {

/// Sequence of node indices (0-based).
using Word = std::vector<int>;

class WeylElement {
 public:
  static WeylElement identity(const DatumPtr& datum);
  static WeylElement simple(const DatumPtr& datum, int i);
  static WeylElement from_word(const DatumPtr& datum, const Word& word);

  const DatumPtr& datum() const { return datum_; }
  int rank() const { return datum_->rank(); }
  int length() const { return static_cast<int>(word_.size()); }
  /// The reduced word found by peeling right descents (lexicographically
  /// smallest descent first).
  const Word& reduced_word() const { return word_; }
  /// Row-major rank x rank matrix; column j holds the coordinates of w(alpha_j).
  const std::vector<long>& matrix() const { return m_; }
  bool is_identity() const { return word_.empty(); }

  /// Image of a root-lattice vector.
  std::vector<long> apply(const std::vector<long>& v) const;

  WeylElement times_simple(int i) const;  // w s_i
  WeylElement simple_times(int i) const;  // s_i w
  WeylElement inverse() const;
  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);

  /// l(w s_i) < l(w).
  bool right_descent(int i) const;
  /// l(s_i w) < l(w).
  bool left_descent(int i) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b);
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  /// Arbitrary total order (length, then matrix) for use as a map key.
  friend bool operator<(const WeylElement& a, const WeylElement& b);

 private:
  WeylElement(DatumPtr d, std::vector<long> m);
  void compute_word();
  DatumPtr datum_;
  std::vector<long> m_;
  Word word_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const;
};

enum class Side { Left, Right };

inline int length(const WeylElement& w) { return w.length(); }
inline WeylElement inv(const WeylElement& w) { return w.inverse(); }
bool descent(const WeylElement& w, int i, Side side);

/// Throws InstanceMismatch unless both elements live over the same datum.
void require_same_datum(const WeylElement& a, const WeylElement& b);

/// True iff the word is a reduced expression. Throws InputError for letters
/// out of range.
bool is_reduced(const DatumPtr& datum, const Word& word);
/// Throws InputError unless the word is reduced.
void require_reduced(const DatumPtr& datum, const Word& word);

/// Bruhat order, by the descent recursion; memoized per datum.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

/// Subexpression (v_(0), ..., v_(n)) of a reduced word with its index sets.
/// Positions in the index sets are 0-based letter positions.
struct Subexpression {
  Word word;
  std::vector<WeylElement> seq;
  std::vector<int> j_plus;
  std::vector<int> j_zero;
  std::vector<int> j_minus;

  const WeylElement& end() const { return seq.back(); }
};

/// Validates v_(0) = e and v_(j) in {v_(j-1), v_(j-1) s_{i_j}} and fills the
/// index sets. Throws InputError on violation.
Subexpression make_subexpression(const Word& word, std::vector<WeylElement> seq);

/// Unique positive subexpression for v in the reduced word, built greedily
/// from the right. Throws OrderViolation when v is not below the word's
/// product, InputError when the word is not reduced.
Subexpression positive_subexpression(const WeylElement& v, const Word& word);

bool is_distinguished(const Subexpression& sub);
bool is_positive(const Subexpression& sub);

/// u * w' with s_i * w' = max(w', s_i w').
WeylElement demazure_star(const WeylElement& u, const WeylElement& w);
/// u o_l w' with s_i o_l w' = min(w', s_i w').
WeylElement demazure_circ(const WeylElement& u, const WeylElement& w);

/// Element of the 0-Hecke monoid W#, multiplied by the Demazure product.
class SharpElement {
 public:
  explicit SharpElement(WeylElement w) : w_(std::move(w)) {}
  static SharpElement generator(const DatumPtr& d, int i) {
    return SharpElement(WeylElement::simple(d, i));
  }
  const WeylElement& element() const { return w_; }
  friend SharpElement operator*(const SharpElement& a, const SharpElement& b) {
    return SharpElement(demazure_star(a.w_, b.w_));
  }
  friend bool operator==(const SharpElement& a, const SharpElement& b) { return a.w_ == b.w_; }

 private:
  WeylElement w_;
};

/// Replace the alternating factor i j i ... (m letters) starting at
/// `position` by j i j ... .
struct BraidMove {
  int position;
  int i;
  int j;
  int m;
  friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

/// Throws InputError when the move does not match the word.
Word apply_braid_move(const Word& word, const BraidMove& move);

/// Shortest sequence of braid moves from one reduced word to another
/// (breadth-first search; memoized). Throws MismatchError when the words
/// represent different elements.
std::vector<BraidMove> reduced_word_path(const DatumPtr& datum, const Word& from, const Word& to);

/// Shortest sequence of braid moves to some reduced word ending in i.
/// Requires s_i to be a right descent of the word's product.
std::vector<BraidMove> path_to_suffix(const DatumPtr& datum, const Word& from, int i);

/// All reduced words of w (exhaustive; intended for small lengths).
std::vector<Word> all_reduced_words(const WeylElement& w);

/// Every element of length <= max_length, ordered by length.
std::vector<WeylElement> elements_up_to_length(const DatumPtr& datum, int max_length);

/// Cap on memo table sizes; TNNFLAG_MEMO_LIMIT overrides the default.
std::size_t memo_limit();

}  // namespace tnnflag
