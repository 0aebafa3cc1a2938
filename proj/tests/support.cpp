#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

using namespace tnnflag;

QMat identity(int n) {
  QMat m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat mul(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

QMat elem_x(int n, int i, const Rational& a) {
  QMat m = identity(n);
  m[i][i + 1] = a;
  return m;
}

QMat elem_y(int n, int i, const Rational& a) {
  QMat m = identity(n);
  m[i + 1][i] = a;
  return m;
}

QMat elem_torus(int n, int i, const Rational& b) {
  QMat m = identity(n);
  m[i][i] = b;
  m[i + 1][i + 1] = 1 / b;
  return m;
}

int rank(QMat m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t q = r + 1; q < rows; ++q) {
      if (m[q][c] == 0) continue;
      Rational f = m[q][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[q][k] -= f * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

QMat g_matrix(const GElement& g) {
  const int n = g.datum()->rank() + 1;
  QMat m = identity(n);
  for (std::size_t k = 0; k < g.x().word().size(); ++k)
    m = mul(m, elem_x(n, g.x().word()[k], g.x().params()[k].as_rational()));
  for (int i = 0; i + 1 < n; ++i) m = mul(m, elem_torus(n, i, g.t()[i].as_rational()));
  for (std::size_t k = 0; k < g.y().word().size(); ++k)
    m = mul(m, elem_y(n, g.y().word()[k], g.y().params()[k].as_rational()));
  return m;
}

QMat to_qmat(const Matrix<Rational>& m) {
  QMat q(m.size(), std::vector<Rational>(m.size()));
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) q[r][c] = m(r, c);
  return q;
}

// ------------------------------------------------------------ permutations

Perm perm_of_word(int n, const Word& word) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i : word) std::swap(p[i], p[i + 1]);
  return p;
}

Word word_of_perm(Perm p) {
  Word rev;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if (p[k] > p[k + 1]) {
        std::swap(p[k], p[k + 1]);
        rev.push_back(static_cast<int>(k));
        found = true;
        break;
      }
  }
  return Word(rev.rbegin(), rev.rend());
}

int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++n;
  return n;
}

bool perm_bruhat_leq(const Perm& v, const Perm& w) {
  for (std::size_t k = 1; k <= v.size(); ++k) {
    std::vector<int> a(v.begin(), v.begin() + k), b(w.begin(), w.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[b[j]];
  return c;
}

namespace {

QMat perm_matrix(const Perm& p) {
  QMat m(p.size(), std::vector<Rational>(p.size(), Rational(0)));
  for (std::size_t j = 0; j < p.size(); ++j) m[p[j]][j] = 1;
  return m;
}

QMat block(const QMat& g, int r0, int r1, int c0, int c1) {
  QMat b;
  for (int r = r0; r < r1; ++r) b.emplace_back(g[r].begin() + c0, g[r].begin() + c1);
  return b;
}

template <class Profile>
Perm by_profile(const QMat& g, Profile profile) {
  const auto target = profile(g);
  for (const auto& p : all_perms(static_cast<int>(g.size())))
    if (profile(perm_matrix(p)) == target) return p;
  throw std::logic_error("no permutation matches the rank profile");
}

}  // namespace

Perm w_by_rank(const QMat& g) {
  return by_profile(g, [](const QMat& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> out;
    for (int p = 0; p < n; ++p)
      for (int q = 1; q <= n; ++q) out.push_back(rank(block(m, p, n, 0, q)));
    return out;
  });
}

Perm v_by_rank(const QMat& g) {
  return by_profile(g, [](const QMat& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> out;
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) out.push_back(rank(block(m, 0, p, 0, q)));
    return out;
  });
}

// ---------------------------------------------------------------- subwords

bool subword_leq(const WeylElement& v, const Word& word) {
  const std::size_t n = word.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1UL) sub.push_back(word[k]);
    if (WeylElement::from_word(v.datum(), sub) == v) return true;
  }
  return false;
}

std::vector<std::vector<WeylElement>> all_subexpressions(const DatumPtr& d, const Word& word) {
  std::vector<std::vector<WeylElement>> out;
  const std::size_t n = word.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<WeylElement> seq{WeylElement::identity(d)};
    for (std::size_t k = 0; k < n; ++k)
      seq.push_back(mask >> k & 1UL ? seq.back().times_simple(word[k]) : seq.back());
    out.push_back(std::move(seq));
  }
  return out;
}

// ---------------------------------------------------------------- dihedral

Dihedral dihedral_times(const Dihedral& w, int i) {
  Dihedral out = w;
  if (!out.word.empty() && out.word.back() == i)
    out.word.pop_back();
  else
    out.word.push_back(i);
  return out;
}

Dihedral dihedral_simple_times(int i, const Dihedral& w) {
  Dihedral out = w;
  if (!out.word.empty() && out.word.front() == i)
    out.word.erase(out.word.begin());
  else
    out.word.insert(out.word.begin(), i);
  return out;
}

std::vector<Dihedral> dihedral_up_to(int max_length) {
  std::vector<Dihedral> out{Dihedral{}};
  for (int len = 1; len <= max_length; ++len)
    for (int first = 0; first < 2; ++first) {
      Dihedral d;
      for (int k = 0; k < len; ++k) d.word.push_back((first + k) % 2);
      out.push_back(d);
    }
  return out;
}

bool dihedral_leq(const Dihedral& v, const Dihedral& w) { return v == w || v.word.size() < w.word.size(); }

Dihedral dihedral_star(const Dihedral& u, const Dihedral& w) {
  Dihedral acc = w;
  for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) {
    Dihedral s = dihedral_simple_times(*it, acc);
    if (s.word.size() > acc.word.size()) acc = s;
  }
  return acc;
}

Dihedral dihedral_circ(const Dihedral& u, const Dihedral& w) {
  Dihedral acc = w;
  for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) {
    Dihedral s = dihedral_simple_times(*it, acc);
    if (s.word.size() < acc.word.size()) acc = s;
  }
  return acc;
}

std::vector<long> reflect_weight(const GCM& a, int i, std::vector<long> l) {
  const long li = l[i];
  for (int q = 0; q < a.rank(); ++q) l[q] -= li * a(q, i);
  return l;
}

}  // namespace oracle
