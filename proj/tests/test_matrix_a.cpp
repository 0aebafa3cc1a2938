#include "doctest.h"
#include "support.hpp"
#include "tnnflag/errors.hpp"
#include "tnnflag/matrix_a.hpp"

using namespace tnnflag;

namespace {

using QM = Matrix<Rational>;
const SemifieldKind Q = SemifieldKind::PositiveRational;

QM from_rows(const oracle::QMat& rows) {
  QM m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) m(r, c) = rows[r][c];
  return m;
}

bool upper_triangular(const QM& m) {
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < r; ++c)
      if (m(r, c) != 0) return false;
  return true;
}

oracle::Perm as_perm(const Realization& r, const WeylElement& ambient_w) { return r.permutation(ambient_w); }

}  // namespace

TEST_CASE("pinning in rank one") {
  auto r = Realization::make(RootDatum::named("A1"));
  CHECK(r.size() == 2);
  CHECK(gen_x<Rational>(r, 0, Rational(5)) == from_rows({{1, 5}, {0, 1}}));
  CHECK(gen_y<Rational>(r, 0, Rational(5)) == from_rows({{1, 0}, {5, 1}}));
  const QM s = gen_sdot<Rational>(r, 0);
  CHECK(s == from_rows({{0, 1}, {-1, 0}}));
  CHECK(s == gen_x<Rational>(r, 0, Rational(1)) * gen_y<Rational>(r, 0, Rational(-1)) * gen_x<Rational>(r, 0, Rational(1)));
  CHECK(s * s == gen_torus<Rational>(r, 0, Rational(-1)));
  CHECK(s * gen_sdot_inv<Rational>(r, 0) == QM::identity(2));
  CHECK(gen_x<Rational>(r, 0, Rational(0)) == QM::identity(2));
  CHECK(gen_torus<Rational>(r, 0, Rational(3)) == from_rows({{3, 0}, {0, Rational(1, 3)}}));
  CHECK_THROWS_AS(gen_x<Rational>(r, 1, Rational(1)), InputError);
  CHECK_THROWS_AS(gen_torus<Rational>(r, 0, Rational(0)), DomainError);
}

TEST_CASE("generators have determinant one and cocharacters multiply") {
  auto r = Realization::make(RootDatum::named("A3"));
  for (int p = 0; p < 3; ++p) {
    CHECK(gen_x<Rational>(r, p, Rational(7, 3)).det() == 1);
    CHECK(gen_y<Rational>(r, p, Rational(-2)).det() == 1);
    CHECK(gen_sdot<Rational>(r, p).det() == 1);
    CHECK(gen_torus<Rational>(r, p, Rational(5, 2)).det() == 1);
    CHECK(gen_torus<Rational>(r, p, Rational(5, 2)) * gen_torus<Rational>(r, p, Rational(3)) ==
          gen_torus<Rational>(r, p, Rational(15, 2)));
    const QM s = gen_sdot<Rational>(r, p);
    CHECK(s * s == gen_torus<Rational>(r, p, Rational(-1)));
    CHECK(oracle::to_qmat(gen_x<Rational>(r, p, Rational(4))) == oracle::elem_x(4, p, Rational(4)));
  }
  RatFunc t(Poly(std::vector<Rational>{0, 1}), Poly(std::vector<Rational>{1}));
  CHECK(gen_y<RatFunc>(r, 1, t).det() == RatFunc(1));
}

TEST_CASE("flag minors") {
  auto a1 = RootDatum::named("A1");
  auto r = Realization::make(a1);
  const auto e = r.permutation(WeylElement::identity(a1));
  const auto s = r.permutation(WeylElement::simple(a1, 0));
  CHECK(flag_minor(r, QM::identity(2), e, 0) == 1);
  CHECK(flag_minor(r, QM::identity(2), s, 0) == 0);
  CHECK(flag_minor(r, gen_y<Rational>(r, 0, Rational(3, 4)), s, 0) == Rational(3, 4));

  auto a3 = RootDatum::named("A3");
  auto r3 = Realization::make(a3);
  for (const auto& u : elements_up_to_length(a3, 6)) {
    const auto perm = r3.permutation(u);
    for (int p = 0; p < 3; ++p) {
      bool fixes = true;
      for (int k = 0; k <= p; ++k) fixes = fixes && perm[k] <= p;
      CHECK(flag_minor(r3, QM::identity(4), perm, p) == (fixes ? 1 : 0));
    }
  }
}

TEST_CASE("realization permutations agree with words") {
  auto a3 = RootDatum::named("A3");
  auto r = Realization::make(a3);
  for (const auto& w : elements_up_to_length(a3, 6)) {
    CHECK(r.permutation(w) == oracle::perm_of_word(4, w.reduced_word()));
    CHECK(r.from_permutation(r.permutation(w)) == w);
    const QM pm = permutation_matrix<Rational>(r, w);
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) CHECK(pm(i, j) == (i == r.permutation(w)[j] ? 1 : 0));
  }
}

TEST_CASE("cell detection examples") {
  auto a1 = RootDatum::named("A1");
  auto r = Realization::make(a1);
  auto [v, w] = detect_cell(r, QM::identity(2));
  CHECK(v.is_identity());
  CHECK(w.is_identity());
  std::tie(v, w) = detect_cell(r, gen_y<Rational>(r, 0, Rational(3)));
  CHECK(v.is_identity());
  CHECK(w == WeylElement::simple(a1, 0));
  std::tie(v, w) = detect_cell(r, gen_sdot<Rational>(r, 0));
  CHECK(v == WeylElement::simple(a1, 0));
  CHECK(w == WeylElement::simple(a1, 0));
}

TEST_CASE("cell detection agrees with rank conditions") {
  Rng rng(51);
  for (const char* name : {"A2", "A3"}) {
    CAPTURE(name);
    auto d = RootDatum::named(name);
    auto r = Realization::make(d);
    for (int rep = 0; rep < 60; ++rep) {
      GElement g = random_g(d, Q, 6, rng);
      QM m = to_matrix<Rational>(r, g);
      CHECK(oracle::to_qmat(m) == oracle::g_matrix(g));
      auto [v, w] = detect_cell(r, m);
      CHECK(v.is_identity());
      CHECK(w == g.y().element());
      // Left multiplication by a permutation matrix moves v away from e.
      WeylElement u = random_weyl(d, 6, rng);
      QM mixed = permutation_matrix<Rational>(r, u) * m;
      std::tie(v, w) = detect_cell(r, mixed);
      CHECK(as_perm(r, w) == oracle::w_by_rank(oracle::to_qmat(mixed)));
      CHECK(as_perm(r, v) == oracle::v_by_rank(oracle::to_qmat(mixed)));
      CHECK(bruhat_leq(v, w));
    }
  }
}

TEST_CASE("bruhat factorization") {
  auto a1 = RootDatum::named("A1");
  auto r = Realization::make(a1);
  const WeylElement s = WeylElement::simple(a1, 0);
  const QM sdot = gen_sdot<Rational>(r, 0);
  QM b = bruhat_factor(r, sdot, s);
  CHECK(upper_triangular(b));
  CHECK(same_flag(sdot, b * permutation_matrix<Rational>(r, s)));
  CHECK(same_flag(b, QM::identity(2)));
  const QM yc = gen_y<Rational>(r, 0, Rational(5));
  b = bruhat_factor(r, yc, s);
  CHECK(upper_triangular(b));
  CHECK(same_flag(yc, b * sdot));
  CHECK_THROWS_AS(bruhat_factor(r, yc, WeylElement::identity(a1)), FactorizationFailure);

  Rng rng(52);
  auto a3 = RootDatum::named("A3");
  auto r3 = Realization::make(a3);
  for (int rep = 0; rep < 40; ++rep) {
    QM m = to_matrix<Rational>(r3, random_g(a3, Q, 6, rng));
    m = permutation_matrix<Rational>(r3, random_weyl(a3, 6, rng)) * m;
    const WeylElement w = detect_cell(r3, m).second;
    QM f = bruhat_factor(r3, m, w);
    CHECK(upper_triangular(f));
    CHECK(same_flag(m, f * permutation_matrix<Rational>(r3, w)));
    if (!w.is_identity()) CHECK_THROWS_AS(bruhat_factor(r3, m, WeylElement::identity(a3)), FactorizationFailure);
  }
}

TEST_CASE("projections to prefixes") {
  Rng rng(53);
  auto a3 = RootDatum::named("A3");
  auto r = Realization::make(a3);
  for (const auto& w : elements_up_to_length(a3, 6)) {
    const Word& word = w.reduced_word();
    std::vector<QM> prefix{QM::identity(4)};
    for (int i : word) prefix.push_back(prefix.back() * gen_y<Rational>(r, i, random_value(Q, rng).as_rational()));
    const QM g = prefix.back();
    REQUIRE(detect_cell(r, g).second == w);
    const QM b = bruhat_factor(r, g, w);
    for (std::size_t k = 0; k <= word.size(); ++k) {
      const WeylElement wk = WeylElement::from_word(a3, Word(word.begin(), word.begin() + k));
      const QM proj = b * permutation_matrix<Rational>(r, wk);
      CHECK(same_flag(proj, prefix[k]));
      for (int p = 0; p < 3; ++p) {
        const auto perm = r.permutation(wk);
        CHECK(flag_minor(r, proj, perm, p) != 0);
      }
    }
  }
}

TEST_CASE("folded type C inside type A") {
  Rng rng(54);
  auto c2 = RootDatum::named("C2");
  auto r = Realization::make(c2);
  CHECK(r.size() == 4);
  CHECK(r.expand({0, 1}) == Word{0, 2, 1});
  for (int rep = 0; rep < 40; ++rep) {
    GElement g = random_g(c2, Q, 4, rng);
    QM m = to_matrix<Rational>(r, g);
    CHECK(oracle::to_qmat(m) == oracle::g_matrix(iota_fold(r.folding(), g)));
    WeylElement u = random_weyl(c2, 4, rng);
    m = permutation_matrix<Rational>(r, r.lift(u)) * m;
    auto [va, wa] = detect_cell_ambient(r, m);
    auto [v, w] = detect_cell(r, m);
    CHECK(r.lift(v) == va);
    CHECK(r.lift(w) == wa);
    CHECK(r.descend(r.lift(w)) == w);
    CHECK(bruhat_leq(v, w));
  }
  auto a3 = r.ambient();
  CHECK_THROWS_AS(r.descend(WeylElement::simple(a3, 0)), NotInImage);
}

TEST_CASE("rational function matrices") {
  auto a2 = RootDatum::named("A2");
  auto r = Realization::make(a2);
  Rng rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    GElement g1 = random_g(a2, SemifieldKind::PositiveRationalFunction, 3, rng);
    GElement g2 = random_g(a2, SemifieldKind::PositiveRationalFunction, 3, rng);
    CHECK(to_matrix<RatFunc>(r, g_mul(g1, g2)) == to_matrix<RatFunc>(r, g1) * to_matrix<RatFunc>(r, g2));
    CHECK(detect_cell(r, to_matrix<RatFunc>(r, g1)).second == g1.y().element());
  }
  CHECK(std::holds_alternative<Matrix<RatFunc>>(
      to_field_matrix(r, GElement::identity(a2, SemifieldKind::PositiveRationalFunction))));
  CHECK(std::holds_alternative<Matrix<Rational>>(to_field_matrix(r, GElement::identity(a2, Q))));
  CHECK_THROWS_AS(to_field_matrix(r, GElement::identity(a2, SemifieldKind::Tropical)), NoFieldEmbedding);
  CHECK_THROWS_AS(to_matrix<Rational>(r, GElement::identity(RootDatum::named("A3"), Q)), InstanceMismatch);
}

TEST_CASE("unsupported realizations") {
  CHECK_THROWS_AS(Realization::make(RootDatum::named("B3")), UnsupportedRealization);
  CHECK_THROWS_AS(Realization::make(RootDatum::named("G2")), UnsupportedRealization);
  CHECK_THROWS_AS(Realization::make(RootDatum::named("D4")), UnsupportedRealization);
  CHECK_THROWS_AS(Realization::make(RootDatum::named("A2~")), UnsupportedRealization);
  CHECK_NOTHROW(Realization::make(RootDatum::named("C3")));
  auto prod = RootDatum::make(GCM({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}}));
  auto r = Realization::make(prod);
  CHECK(r.size() == 5);
  CHECK(r.block_start(2) == 3);
}
