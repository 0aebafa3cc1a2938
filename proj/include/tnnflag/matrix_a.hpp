#pragma once

// Exact matrix realization of type A root data (and of data folded from
// type A) inside SL_N over Q or Q(t): pinning, flag minors, Bruhat cell
// detection and factorization.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tnnflag/errors.hpp"
#include "tnnflag/monoid.hpp"
#include "tnnflag/poly.hpp"
#include "tnnflag/rootdata.hpp"
#include "tnnflag/weyl.hpp"

namespace tnnflag {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, F(0)) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int size() const { return n_; }
  F& operator()(int r, int c) { return e_[static_cast<std::size_t>(r) * n_ + c]; }
  const F& operator()(int r, int c) const { return e_[static_cast<std::size_t>(r) * n_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw InputError("matrix sizes differ");
    Matrix m(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const F& x = a(i, k);
        if (x == F(0)) continue;
        for (int j = 0; j < a.n_; ++j)
          if (!(b(k, j) == F(0))) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Determinant of the submatrix on the given rows and columns.
  F minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
    const std::size_t k = rows.size();
    std::vector<std::vector<F>> m(k, std::vector<F>(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) m[r][c] = (*this)(rows[r], cols[c]);
    F det(1);
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && m[p][c] == F(0)) ++p;
      if (p == k) return F(0);
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        if (m[r][c] == F(0)) continue;
        F f = m[r][c] / m[c][c];
        for (std::size_t q = c; q < k; ++q) m[r][q] -= f * m[c][q];
      }
    }
    return det;
  }

  F det() const {
    std::vector<int> all(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) all[static_cast<std::size_t>(i)] = i;
    return minor(all, all);
  }

 private:
  int n_ = 0;
  std::vector<F> e_;
};

/// Gauss-Jordan inverse; throws DomainError for singular input.
template <class F>
Matrix<F> inverse(Matrix<F> a) {
  const int n = a.size();
  Matrix<F> b = Matrix<F>::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == F(0)) ++p;
    if (p == n) throw DomainError("matrix is singular");
    for (int q = 0; q < n; ++q) {
      std::swap(a(p, q), a(c, q));
      std::swap(b(p, q), b(c, q));
    }
    const F piv = a(c, c);
    for (int q = 0; q < n; ++q) {
      a(c, q) /= piv;
      b(c, q) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == F(0)) continue;
      const F f = a(r, c);
      for (int q = 0; q < n; ++q) {
        a(r, q) -= f * a(c, q);
        b(r, q) -= f * b(c, q);
      }
    }
  }
  return b;
}

/// g B+ == h B+, i.e. h^{-1} g is upper triangular.
template <class F>
bool same_flag(const Matrix<F>& g, const Matrix<F>& h) {
  const Matrix<F> q = inverse(h) * g;
  for (int r = 0; r < q.size(); ++r)
    for (int c = 0; c < r; ++c)
      if (!(q(r, c) == F(0))) return false;
  return true;
}

using FieldMatrix = std::variant<Matrix<Rational>, Matrix<RatFunc>>;

/// Field value of a semifield element (Q for qpos, Q(t) for qtpos).
template <class F>
F field_value(const SemifieldValue& a);

/// Placement of a root datum in SL_N. Type A components are realized
/// directly, one diagonal block per component; non-symmetric data go
/// through their folding when the ambient datum is of type A. Anything else
/// raises UnsupportedRealization.
class Realization {
 public:
  static Realization make(const DatumPtr& datum);

  const DatumPtr& datum() const { return datum_; }
  const FoldingData& folding() const { return folding_; }
  const DatumPtr& ambient() const { return folding_.ambient; }
  int size() const { return n_; }
  /// Generator p of the ambient datum acts on rows row(p), row(p) + 1.
  int row(int p) const { return row_[static_cast<std::size_t>(p)]; }
  /// First row of the diagonal block containing ambient node p.
  int block_start(int p) const { return start_[static_cast<std::size_t>(p)]; }

  /// Datum word to ambient word (each letter replaced by its orbit).
  Word expand(const Word& word) const;
  WeylElement lift(const WeylElement& w) const;
  /// Inverse of lift; throws NotInImage for elements that are not sigma-fixed.
  WeylElement descend(const WeylElement& ambient_w) const;

  /// perm[j] = w(j) for an ambient Weyl element acting on {0..N-1}.
  std::vector<int> permutation(const WeylElement& ambient_w) const;
  /// Throws NotInImage when the permutation leaves the realized subgroup.
  WeylElement from_permutation(const std::vector<int>& perm) const;

 private:
  DatumPtr datum_;
  FoldingData folding_;
  int n_ = 0;
  std::vector<int> row_;
  std::vector<int> start_;
};

// Pinning. Node indices refer to the ambient datum.
template <class F>
Matrix<F> gen_x(const Realization& r, int p, const F& a);
template <class F>
Matrix<F> gen_y(const Realization& r, int p, const F& a);
template <class F>
Matrix<F> gen_sdot(const Realization& r, int p);
/// sdot^{-1} = x(-1) y(1) x(-1), the representative used in cell parametrizations.
template <class F>
Matrix<F> gen_sdot_inv(const Realization& r, int p);
template <class F>
Matrix<F> gen_torus(const Realization& r, int p, const F& b);

/// Permutation matrix P with P e_j = e_{w(j)} (ambient element).
template <class F>
Matrix<F> permutation_matrix(const Realization& r, const WeylElement& ambient_w);

/// Determinant on rows u({s..row(p)}) in increasing order and columns
/// {s..row(p)}, where s is the block start of ambient node p.
template <class F>
F flag_minor(const Realization& r, const Matrix<F>& g, const std::vector<int>& perm, int p);

/// Bruhat cells: g in B+ w B+ and g in B- v B+, as ambient elements.
template <class F>
std::pair<WeylElement, WeylElement> detect_cell_ambient(const Realization& r, const Matrix<F>& g);
/// detect_cell_ambient followed by descend; returns (v, w).
template <class F>
std::pair<WeylElement, WeylElement> detect_cell(const Realization& r, const Matrix<F>& g);

/// Upper triangular b with g B+ = b w B+. Throws FactorizationFailure when
/// g is not in B+ w B+.
template <class F>
Matrix<F> bruhat_factor(const Realization& r, const Matrix<F>& g, const WeylElement& ambient_w);

/// Image of a monoid element: x letters, torus and y letters in order.
/// Throws NoFieldEmbedding for tropical and one-element coordinates.
template <class F>
Matrix<F> to_matrix(const Realization& r, const GElement& g);

FieldMatrix to_field_matrix(const Realization& r, const GElement& g);

}  // namespace tnnflag
