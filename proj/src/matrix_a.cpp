#include "tnnflag/matrix_a.hpp"

#include <algorithm>
#include <numeric>

namespace tnnflag {

template <>
Rational field_value<Rational>(const SemifieldValue& a) {
  return to_rational(a);
}

template <>
RatFunc field_value<RatFunc>(const SemifieldValue& a) {
  return to_ratfunc(a);
}

// -------------------------------------------------------------- Realization

Realization Realization::make(const DatumPtr& datum) {
  Realization r;
  r.datum_ = datum;
  r.folding_ = build_folding(datum);
  const GCM& amb = r.folding_.ambient->gcm();
  r.row_.assign(static_cast<std::size_t>(amb.rank()), -1);
  r.start_ = r.row_;
  int offset = 0;
  for (const auto& comp : components(amb)) {
    const int k = static_cast<int>(comp.size());
    IntMatrix sub(comp.size(), std::vector<int>(comp.size()));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = amb(comp[i], comp[j]);
    auto iso = find_isomorphism(GCM(sub), named_gcm("A" + std::to_string(k)));
    if (!iso)
      throw UnsupportedRealization("no type A matrix realization for " +
                                   (datum->name().empty() ? std::string("this datum") : datum->name()));
    for (int i = 0; i < k; ++i) {
      int node = comp[static_cast<std::size_t>((*iso)[i])];
      r.row_[static_cast<std::size_t>(node)] = offset + i;
      r.start_[static_cast<std::size_t>(node)] = offset;
    }
    offset += k + 1;
  }
  r.n_ = offset;
  return r;
}

Word Realization::expand(const Word& word) const {
  Word out;
  for (int i : word)
    for (int p : folding_.orbits.at(static_cast<std::size_t>(i))) out.push_back(p);
  return out;
}

WeylElement Realization::lift(const WeylElement& w) const {
  return WeylElement::from_word(ambient(), expand(w.reduced_word()));
}

WeylElement Realization::descend(const WeylElement& ambient_w) const {
  WeylElement rest = ambient_w;
  Word rev;
  for (;;) {
    int p = -1;
    for (int q = 0; q < rest.rank() && p < 0; ++q)
      if (rest.right_descent(q)) p = q;
    if (p < 0) break;
    int i = folding_.orbit_of[static_cast<std::size_t>(p)];
    for (int q : folding_.orbits[static_cast<std::size_t>(i)]) {
      if (!rest.right_descent(q)) throw NotInImage("Weyl element is not sigma-fixed");
      rest = rest.times_simple(q);
    }
    rev.push_back(i);
  }
  return WeylElement::from_word(datum_, Word(rev.rbegin(), rev.rend()));
}

std::vector<int> Realization::permutation(const WeylElement& ambient_w) const {
  std::vector<int> perm(static_cast<std::size_t>(n_));
  std::iota(perm.begin(), perm.end(), 0);
  for (int p : ambient_w.reduced_word()) std::swap(perm[row(p)], perm[row(p) + 1]);
  return perm;
}

WeylElement Realization::from_permutation(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InputError("permutation has the wrong size");
  std::vector<int> node_at(static_cast<std::size_t>(n_), -1);
  for (std::size_t p = 0; p < row_.size(); ++p) node_at[static_cast<std::size_t>(row_[p])] = static_cast<int>(p);
  std::vector<int> u = perm;
  Word rev;
  for (bool found = true; found;) {
    found = false;
    for (int k = 0; k + 1 < n_; ++k) {
      if (u[k] <= u[k + 1]) continue;
      if (node_at[k] < 0) throw NotInImage("permutation mixes diagonal blocks");
      std::swap(u[k], u[k + 1]);
      rev.push_back(node_at[k]);
      found = true;
      break;
    }
  }
  return WeylElement::from_word(ambient(), Word(rev.rbegin(), rev.rend()));
}

// ------------------------------------------------------------------ pinning

namespace {

void check_node(const Realization& r, int p) {
  if (p < 0 || p >= r.ambient()->rank()) throw InputError("node index out of range");
}

// Elimination to a monomial matrix. Upper mode uses upper triangular row and
// column operations (bottom-most pivots) and records b with g B+ = b P B+;
// lower mode uses lower triangular row operations (top-most pivots).
template <class F>
std::vector<int> eliminate(Matrix<F> g, bool upper, Matrix<F>* b) {
  const int n = g.size();
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    int r = -1;
    for (int k = 0; k < n; ++k) {
      int row = upper ? n - 1 - k : k;
      if (!used[row] && !(g(row, j) == F(0))) {
        r = row;
        break;
      }
    }
    if (r < 0) throw DomainError("matrix is singular");
    used[r] = true;
    perm[j] = r;
    const F piv = g(r, j);
    for (int s = 0; s < n; ++s) {
      if (s == r || (upper ? s > r : s < r) || g(s, j) == F(0)) continue;
      F c = g(s, j) / piv;
      for (int q = j; q < n; ++q) g(s, q) -= c * g(r, q);
      if (b != nullptr)
        for (int q = 0; q < n; ++q) (*b)(q, r) += c * (*b)(q, s);
    }
    for (int q = j + 1; q < n; ++q) g(r, q) = F(0);
  }
  return perm;
}

}  // namespace

template <class F>
Matrix<F> gen_x(const Realization& r, int p, const F& a) {
  check_node(r, p);
  Matrix<F> m = Matrix<F>::identity(r.size());
  m(r.row(p), r.row(p) + 1) = a;
  return m;
}

template <class F>
Matrix<F> gen_y(const Realization& r, int p, const F& a) {
  check_node(r, p);
  Matrix<F> m = Matrix<F>::identity(r.size());
  m(r.row(p) + 1, r.row(p)) = a;
  return m;
}

template <class F>
Matrix<F> gen_sdot(const Realization& r, int p) {
  check_node(r, p);
  Matrix<F> m = Matrix<F>::identity(r.size());
  const int k = r.row(p);
  m(k, k) = F(0);
  m(k + 1, k + 1) = F(0);
  m(k, k + 1) = F(1);
  m(k + 1, k) = F(-1);
  return m;
}

template <class F>
Matrix<F> gen_sdot_inv(const Realization& r, int p) {
  Matrix<F> m = gen_sdot<F>(r, p);
  std::swap(m(r.row(p), r.row(p) + 1), m(r.row(p) + 1, r.row(p)));
  return m;
}

template <class F>
Matrix<F> gen_torus(const Realization& r, int p, const F& b) {
  check_node(r, p);
  if (b == F(0)) throw DomainError("torus parameter must be invertible");
  Matrix<F> m = Matrix<F>::identity(r.size());
  m(r.row(p), r.row(p)) = b;
  m(r.row(p) + 1, r.row(p) + 1) = F(1) / b;
  return m;
}

template <class F>
Matrix<F> permutation_matrix(const Realization& r, const WeylElement& ambient_w) {
  auto perm = r.permutation(ambient_w);
  Matrix<F> m(r.size());
  for (int j = 0; j < r.size(); ++j) m(perm[j], j) = F(1);
  return m;
}

template <class F>
F flag_minor(const Realization& r, const Matrix<F>& g, const std::vector<int>& perm, int p) {
  check_node(r, p);
  std::vector<int> rows, cols;
  for (int c = r.block_start(p); c <= r.row(p); ++c) {
    cols.push_back(c);
    rows.push_back(perm[c]);
  }
  std::sort(rows.begin(), rows.end());
  return g.minor(rows, cols);
}

template <class F>
std::pair<WeylElement, WeylElement> detect_cell_ambient(const Realization& r, const Matrix<F>& g) {
  if (g.size() != r.size()) throw InputError("matrix size does not match the realization");
  auto w = eliminate<F>(g, true, nullptr);
  auto v = eliminate<F>(g, false, nullptr);
  return {r.from_permutation(v), r.from_permutation(w)};
}

template <class F>
std::pair<WeylElement, WeylElement> detect_cell(const Realization& r, const Matrix<F>& g) {
  auto [v, w] = detect_cell_ambient(r, g);
  return {r.descend(v), r.descend(w)};
}

template <class F>
Matrix<F> bruhat_factor(const Realization& r, const Matrix<F>& g, const WeylElement& ambient_w) {
  if (g.size() != r.size()) throw InputError("matrix size does not match the realization");
  Matrix<F> b = Matrix<F>::identity(r.size());
  if (eliminate<F>(g, true, &b) != r.permutation(ambient_w))
    throw FactorizationFailure("matrix is not in the Bruhat cell of the given element");
  return b;
}

template <class F>
Matrix<F> to_matrix(const Realization& r, const GElement& g) {
  if (!g.datum()->same_as(*r.datum())) throw InstanceMismatch("element is not over the realized datum");
  const auto& orbits = r.folding().orbits;
  Matrix<F> m = Matrix<F>::identity(r.size());
  for (std::size_t k = 0; k < g.x().word().size(); ++k) {
    F a = field_value<F>(g.x().params()[k]);
    for (int p : orbits[static_cast<std::size_t>(g.x().word()[k])]) m = m * gen_x(r, p, a);
  }
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    F b = field_value<F>(g.t()[i]);
    for (int p : orbits[i]) m = m * gen_torus(r, p, b);
  }
  for (std::size_t k = 0; k < g.y().word().size(); ++k) {
    F c = field_value<F>(g.y().params()[k]);
    for (int p : orbits[static_cast<std::size_t>(g.y().word()[k])]) m = m * gen_y(r, p, c);
  }
  return m;
}

FieldMatrix to_field_matrix(const Realization& r, const GElement& g) {
  switch (g.kind()) {
    case SemifieldKind::PositiveRational: return to_matrix<Rational>(r, g);
    case SemifieldKind::PositiveRationalFunction: return to_matrix<RatFunc>(r, g);
    default: throw NoFieldEmbedding("semifield has no field embedding");
  }
}

#define TNNFLAG_INSTANTIATE(F)                                                                      \
  template Matrix<F> gen_x(const Realization&, int, const F&);                                     \
  template Matrix<F> gen_y(const Realization&, int, const F&);                                     \
  template Matrix<F> gen_sdot(const Realization&, int);                                            \
  template Matrix<F> gen_sdot_inv(const Realization&, int);                                        \
  template Matrix<F> gen_torus(const Realization&, int, const F&);                                 \
  template Matrix<F> permutation_matrix(const Realization&, const WeylElement&);                   \
  template F flag_minor(const Realization&, const Matrix<F>&, const std::vector<int>&, int);       \
  template std::pair<WeylElement, WeylElement> detect_cell_ambient(const Realization&,             \
                                                                   const Matrix<F>&);              \
  template std::pair<WeylElement, WeylElement> detect_cell(const Realization&, const Matrix<F>&);  \
  template Matrix<F> bruhat_factor(const Realization&, const Matrix<F>&, const WeylElement&);      \
  template Matrix<F> to_matrix(const Realization&, const GElement&);

TNNFLAG_INSTANTIATE(Rational)
TNNFLAG_INSTANTIATE(RatFunc)

#undef TNNFLAG_INSTANTIATE

}  // namespace tnnflag
