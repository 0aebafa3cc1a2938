// Acceptance suite: ten properties, each with a time limit. Prints one
// PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "support.hpp"

using namespace tnnflag;
using oracle::Perm;
using oracle::QMat;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

const SemifieldKind Q = SemifieldKind::PositiveRational;
const SemifieldKind QT = SemifieldKind::PositiveRationalFunction;
const SemifieldKind TROP = SemifieldKind::Tropical;

std::vector<WeylElement> below(const WeylElement& w, const std::vector<WeylElement>& all) {
  std::vector<WeylElement> out;
  for (const auto& v : all)
    if (bruhat_leq(v, w)) out.push_back(v);
  return out;
}

template <class T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

GElement g_with_index(const WeylElement& x, const WeylElement& y, Rng& rng) {
  const DatumPtr& d = x.datum();
  UElement ux(d, x.reduced_word(), random_params(Q, x.length(), rng), Q);
  UElement uy(d, y.reduced_word(), random_params(Q, y.length(), rng), Q);
  return GElement(ux, random_params(Q, d->rank(), rng), uy);
}

Lift second_lift() {
  return [](long n) {
    return SemifieldValue::monomial(Rational(1), n) *
           SemifieldValue::rational_function(Poly(std::vector<Rational>{3, 1}), Poly(std::vector<Rational>{1, 2}));
  };
}

// ---------------------------------------------------------------- criteria

void braid_coherence() {
  Rng rng(101);
  const DatumPtr a2 = RootDatum::named("A2");
  for (int k = 0; k < 1000; ++k) {
    Params p = random_params(Q, 3, rng);
    expect(braid_R(a2->gcm(), 1, 0, braid_R(a2->gcm(), 0, 1, p)) == p, "m=3 round trip");
  }
  const DatumPtr c2 = RootDatum::named("C2");
  for (int k = 0; k < 100; ++k) {
    Params p = random_params(Q, 4, rng);
    const int i = k % 2, j = 1 - i;
    expect(braid_R(c2->gcm(), j, i, braid_R(c2->gcm(), i, j, p)) == p, "m=4 round trip");
  }
}

void braid_matrix_oracle() {
  Rng rng(102);
  const DatumPtr a2 = RootDatum::named("A2");
  for (int k = 0; k < 1000; ++k) {
    const int i = k % 2, j = 1 - i;
    Params p = random_params(Q, 3, rng);
    Params r = braid_R(a2->gcm(), i, j, p);
    auto x = [](int node, const SemifieldValue& a) { return oracle::elem_x(3, node, a.as_rational()); };
    QMat lhs = oracle::mul(oracle::mul(x(i, p[0]), x(j, p[1])), x(i, p[2]));
    QMat rhs = oracle::mul(oracle::mul(x(j, r[0]), x(i, r[1])), x(j, r[2]));
    expect(lhs == rhs, "x_i x_j x_i differs from x_j x_i x_j");
  }
}

void mr_roundtrip() {
  Rng rng(103);
  for (const char* type : {"A2", "A3", "C2"}) {
    const DatumPtr d = RootDatum::named(type);
    const Realization r = Realization::make(d);
    int pairs = 0;
    for (const auto& cell : enumerate_cells(d)) {
      ++pairs;
      for (const auto& word : all_reduced_words(cell.w))
        for (int rep = 0; rep < 3; ++rep) {
          CellPoint p(cell.v, word, random_params(Q, cell.w.length() - cell.v.length(), rng), Q);
          expect(chamber_ansatz(r, mr_evaluate<Rational>(r, p), word) == p,
                 std::string("round trip in ") + type);
        }
    }
    if (std::string(type) == "A2") expect(pairs == 19, "A2 should have 19 cells");
  }
}

void mr_weight_formula() {
  Rng rng(104);
  const DatumPtr d = RootDatum::named("A3");
  const Realization r = Realization::make(d);
  const auto all = elements_up_to_length(d, 6);
  for (int rep = 0; rep < 50; ++rep) {
    const WeylElement& w = pick(all, rng);
    const WeylElement v = pick(below(w, all), rng);
    const Word word = pick(all_reduced_words(w), rng);
    CellPoint p(v, word, random_params(Q, w.length() - v.length(), rng), Q);
    const auto minors = chamber_minors(r, mr_evaluate<Rational>(r, p), word);
    const auto& sub = p.subexpression();
    std::vector<Rational> t(word.size(), Rational(1));
    for (std::size_t m = 0; m < sub.j_zero.size(); ++m) t[sub.j_zero[m]] = p.params()[m].as_rational();
    for (std::size_t k = 0; k <= word.size(); ++k)
      for (int j = 0; j < d->rank(); ++j) {
        Rational expected = 1;
        for (std::size_t l = 1; l <= k; ++l) {
          std::vector<long> mu(d->rank(), 0);
          mu[j] = 1;
          for (std::size_t q = k; q > l; --q) mu = oracle::reflect_weight(d->gcm(), word[q - 1], mu);
          const long e = -mu[word[l - 1]];
          for (long s = 0; s < std::abs(e); ++s) {
            if (e > 0)
              expected *= t[l - 1];
            else
              expected /= t[l - 1];
          }
        }
        expect(minors[k][j] == expected, "prefix chamber minor differs from the weight formula");
      }
  }
}

void star_action() {
  Rng rng(105);
  const DatumPtr d = RootDatum::named("A2");
  const Realization r = Realization::make(d);
  const auto all = elements_up_to_length(d, 3);
  const auto cells = enumerate_cells(d);
  auto perm = [](const WeylElement& w) { return oracle::perm_of_word(3, w.reduced_word()); };
  // s_i * w and s_i o_l w on permutations: left multiplication swaps values.
  auto left = [](int i, Perm w) {
    for (int& x : w) x = x == i ? i + 1 : x == i + 1 ? i : x;
    return w;
  };
  auto fold = [&](const WeylElement& u, Perm w, bool up) {
    const Word& word = u.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      Perm s = left(*it, w);
      if ((oracle::inversions(s) > oracle::inversions(w)) == up) w = s;
    }
    return w;
  };
  int cases = 0;
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& c : cells)
        for (int rep = 0; rep < 2; ++rep) {
          GElement g = g_with_index(x, y, rng);
          CellPoint p = random_point(c, Q, rng);
          QMat m = oracle::mul(oracle::g_matrix(g), oracle::to_qmat(mr_evaluate<Rational>(r, p)));
          expect(oracle::v_by_rank(m) == fold(x, perm(c.v), false), "v of the product cell");
          expect(oracle::w_by_rank(m) == fold(y, perm(c.w), true), "w of the product cell");
          const CellIndex s = star_index(x, y, c);
          expect(perm(s.v) == fold(x, perm(c.v), false) && perm(s.w) == fold(y, perm(c.w), true),
                 "star_index disagrees with the permutation model");
          ++cases;
        }
  expect(cases == 36 * 19 * 2, "case count");
}

void monoid_faithfulness() {
  Rng rng(106);
  for (const char* type : {"A2", "A3"}) {
    const DatumPtr d = RootDatum::named(type);
    const int maxlen = d->rank() == 2 ? 3 : 6;
    for (int rep = 0; rep < 500; ++rep) {
      GElement g1 = random_g(d, Q, maxlen, rng);
      GElement g2 = random_g(d, Q, maxlen, rng);
      GElement h = g_mul(g1, g2);
      const QMat mh = oracle::g_matrix(h);
      expect(mh == oracle::mul(oracle::g_matrix(g1), oracle::g_matrix(g2)), "matrix of the product");

      GElement h2(h.x().in_word(pick(all_reduced_words(h.x().element()), rng)), h.t(),
                  h.y().in_word(pick(all_reduced_words(h.y().element()), rng)));
      expect(h == h2 && oracle::g_matrix(h2) == mh, "same element in other reduced words");

      GElement h3 = g_mul(g2, g1);
      expect((h == h3) == (oracle::g_matrix(h3) == mh), "equality disagrees with matrices");

      Params t = h.t();
      t[0] = t[0] * SemifieldValue::rational(2);
      GElement h4(h.x(), t, h.y());
      expect(h != h4 && oracle::g_matrix(h4) != mh, "perturbed element");
    }
  }
}

void folding_isomorphism() {
  Rng rng(107);
  const DatumPtr c2 = RootDatum::named("C2");
  const FoldingData f = build_folding(c2);
  for (int rep = 0; rep < 100; ++rep) {
    GElement g1 = random_g(c2, Q, 4, rng);
    GElement g2 = random_g(c2, Q, 4, rng);
    const GElement i1 = iota_fold(f, g1), i2 = iota_fold(f, g2);
    expect(unfold(f, c2, i1) == g1, "unfold after iota");
    const GElement native = g_mul(g1, g2);
    const GElement ambient = g_mul(i1, i2);
    expect(iota_fold(f, native) == ambient, "iota is multiplicative");
    expect(unfold(f, c2, ambient) == native, "native product equals the ambient product");
    expect(oracle::g_matrix(ambient) == oracle::mul(oracle::g_matrix(i1), oracle::g_matrix(i2)),
           "ambient product matrix");
  }
}

void base_change_naturality() {
  Rng rng(108);
  const DatumPtr d = RootDatum::named("A2");
  const auto all = elements_up_to_length(d, 3);
  const auto cells = enumerate_cells(d);
  const SemifieldHom one = SemifieldHom::to_one(Q);
  const SemifieldHom val = SemifieldHom::valuation();
  const Lift lift2 = second_lift();
  for (int rep = 0; rep < 100; ++rep) {
    {
      GElement g1 = random_g(d, Q, 3, rng), g2 = random_g(d, Q, 3, rng);
      expect(base_change_monoid(one, g_mul(g1, g2)) ==
                 g_mul(base_change_monoid(one, g1), base_change_monoid(one, g2)),
             "to_one and g_mul");
      CellPoint p = random_point(pick(cells, rng), Q, rng);
      expect(base_change_cell(one, act(g1, p)) == act(base_change_monoid(one, g1), base_change_cell(one, p)),
             "to_one and act");
      const Word w2 = pick(all_reduced_words(p.w()), rng);
      expect(base_change_cell(one, transition(p, w2)) == transition(base_change_cell(one, p), w2),
             "to_one and transition");
    }
    {
      GElement g1 = random_g(d, QT, 3, rng), g2 = random_g(d, QT, 3, rng);
      expect(base_change_monoid(val, g_mul(g1, g2)) ==
                 g_mul(base_change_monoid(val, g1), base_change_monoid(val, g2)),
             "valuation and g_mul");
      CellPoint p = random_point(pick(cells, rng), QT, rng);
      expect(base_change_cell(val, act(g1, p)) == act(base_change_monoid(val, g1), base_change_cell(val, p)),
             "valuation and act");
      const Word w2 = pick(all_reduced_words(p.w()), rng);
      expect(base_change_cell(val, transition(p, w2)) == transition(base_change_cell(val, p), w2),
             "valuation and transition");
    }
    {
      GElement g = random_g(d, TROP, 3, rng);
      CellPoint p = random_point(pick(cells, rng), TROP, rng);
      expect(act(g, p) == act(g, p, lift2), "tropical act depends on the lift");
      const Word w2 = pick(all_reduced_words(p.w()), rng);
      expect(transition(p, w2) == transition(p, w2, lift2), "tropical transition depends on the lift");
    }
  }
}

void combinatorics() {
  for (const char* type : {"A2", "A3", "C2"}) {
    const DatumPtr d = RootDatum::named(type);
    const auto all = elements_up_to_length(d, 1 << 10);
    const bool type_a = type[0] == 'A';
    const int n = d->rank() + 1;
    for (const auto& w : all)
      for (const auto& v : all) {
        const bool leq = bruhat_leq(v, w);
        expect(leq == oracle::subword_leq(v, w.reduced_word()), std::string("Bruhat vs subwords in ") + type);
        if (type_a)
          expect(leq == oracle::perm_bruhat_leq(oracle::perm_of_word(n, v.reduced_word()),
                                                oracle::perm_of_word(n, w.reduced_word())),
                 "Bruhat vs tableau criterion");
      }
    for (const auto& w : all) {
      if (w.length() > 4) continue;
      for (const auto& word : all_reduced_words(w)) {
        const auto subs = oracle::all_subexpressions(d, word);
        for (const auto& v : all) {
          std::vector<const std::vector<WeylElement>*> positive;
          for (const auto& seq : subs) {
            if (seq.back() != v) continue;
            bool ok = true;
            for (std::size_t j = 1; j < seq.size() && ok; ++j)
              ok = seq[j - 1].times_simple(word[j - 1]).length() > seq[j - 1].length();
            if (ok) positive.push_back(&seq);
          }
          if (!bruhat_leq(v, w)) {
            expect(positive.empty(), "positive subexpression for v not below w");
            continue;
          }
          expect(positive.size() == 1, "positive subexpression is not unique");
          expect(positive_subexpression(v, word).seq == *positive[0], "positive subexpression differs");
        }
      }
    }
  }

  const DatumPtr a2 = RootDatum::named("A2");
  const auto all = elements_up_to_length(a2, 3);
  for (const auto& u : all)
    for (const auto& v : all) {
      // u * v is the Bruhat-maximum of {u'v' : u' <= u, v' <= v}.
      WeylElement best = WeylElement::identity(a2);
      for (const auto& u1 : below(u, all))
        for (const auto& v1 : below(v, all))
          if (best.length() < (u1 * v1).length()) best = u1 * v1;
      for (const auto& u1 : below(u, all))
        for (const auto& v1 : below(v, all)) expect(bruhat_leq(u1 * v1, best), "no Bruhat maximum");
      expect(demazure_star(u, v) == best, "Demazure product vs maximum of products");
      for (const auto& x : all)
        expect(demazure_star(demazure_star(u, v), x) == demazure_star(u, demazure_star(v, x)),
               "Demazure product is not associative");
    }
  expect(enumerate_cells(a2).size() == 19, "A2 cell count");
  int pairs = 0;
  for (const auto& v : oracle::all_perms(3))
    for (const auto& w : oracle::all_perms(3)) pairs += oracle::perm_bruhat_leq(v, w);
  expect(pairs == 19, "A2 pair count in the permutation model");
}

void affine_sanity() {
  const DatumPtr d = RootDatum::named("A1~");
  const auto model = oracle::dihedral_up_to(8);
  auto lib = [&](const oracle::Dihedral& m) { return WeylElement::from_word(d, m.word); };
  for (const auto& m : model) {
    const WeylElement w = lib(m);
    expect(w.length() == static_cast<int>(m.word.size()), "length");
    for (int i = 0; i < 2; ++i) {
      expect(w.right_descent(i) == (!m.word.empty() && m.word.back() == i), "right descent");
      expect(w.left_descent(i) == (!m.word.empty() && m.word.front() == i), "left descent");
    }
  }
  std::size_t pairs = 0;
  for (const auto& w : model)
    for (const auto& v : model) {
      const bool leq = oracle::dihedral_leq(v, w);
      expect(bruhat_leq(lib(v), lib(w)) == leq, "Bruhat order");
      if (!leq) continue;
      ++pairs;
      // Brute-force positive subexpression in the model.
      const std::size_t n = w.word.size();
      std::vector<std::vector<oracle::Dihedral>> found;
      for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<oracle::Dihedral> seq{oracle::Dihedral{}};
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
          oracle::Dihedral next = oracle::dihedral_times(seq.back(), w.word[k]);
          ok = next.word.size() > seq.back().word.size();
          seq.push_back(mask >> k & 1UL ? next : seq.back());
        }
        if (ok && seq.back() == v) found.push_back(seq);
      }
      expect(found.size() == 1, "unique positive subexpression in the model");
      const auto sub = positive_subexpression(lib(v), w.word);
      for (std::size_t k = 0; k <= n; ++k) expect(sub.seq[k] == lib(found[0][k]), "positive subexpression");
    }
  expect(enumerate_cells(d, 8).size() == pairs, "cell count up to length 8");
  const auto small = oracle::dihedral_up_to(4);
  for (const auto& x : small)
    for (const auto& y : small)
      for (const auto& w : small)
        for (const auto& v : small) {
          if (!oracle::dihedral_leq(v, w)) continue;
          const CellIndex c = star_index(lib(x), lib(y), {lib(v), lib(w)});
          expect(c.v == lib(oracle::dihedral_circ(x, v)) && c.w == lib(oracle::dihedral_star(y, w)),
                 "star action");
        }
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "braid coherence", 5, braid_coherence},
      {2, "braid matrix oracle", 5, braid_matrix_oracle},
      {3, "Marsh-Rietsch / Chamber Ansatz round trip", 60, mr_roundtrip},
      {4, "prefix chamber minors vs weight formula", 60, mr_weight_formula},
      {5, "star action on cells", 120, star_action},
      {6, "monoid faithfulness", 60, monoid_faithfulness},
      {7, "folding isomorphism", 30, folding_isomorphism},
      {8, "base change naturality", 60, base_change_naturality},
      {9, "combinatorial brute force", 30, combinatorics},
      {10, "affine sanity", 30, affine_sanity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && secs > c.limit) error = "time limit exceeded";
    std::printf("criterion %2d %-44s %s  %.2fs / %.0fs%s%s\n", c.id, c.name, error.empty() ? "PASS" : "FAIL", secs,
                c.limit, error.empty() ? "" : "  ", error.c_str());
    std::fflush(stdout);
    if (!error.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
