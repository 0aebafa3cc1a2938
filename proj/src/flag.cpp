#include "tnnflag/flag.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <type_traits>

namespace tnnflag {

namespace {

template <class F>
F field_pow(const F& x, int e) {
  F acc(1);
  F base = x;
  if (e < 0) base = F(1) / x;
  for (int k = 0; k < std::abs(e); ++k) acc *= base;
  return acc;
}

template <class F>
constexpr SemifieldKind kind_of() {
  return std::is_same_v<F, Rational> ? SemifieldKind::PositiveRational : SemifieldKind::PositiveRationalFunction;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

// ---------------------------------------------------------------- CellPoint

CellPoint::CellPoint(WeylElement v, Word word, Params params, SemifieldKind kind)
    : v_(std::move(v)),
      w_(WeylElement::from_word(v_.datum(), word)),
      sub_(positive_subexpression(v_, word)),
      params_(std::move(params)), kind_(kind) {
  if (params_.size() != sub_.j_zero.size())
    throw InputError("expected " + std::to_string(sub_.j_zero.size()) + " parameters, got " +
                     std::to_string(params_.size()));
  for (const auto& p : params_)
    if (p.kind() != kind_) throw InstanceMismatch("parameter from a different semifield");
}

bool operator==(const CellPoint& a, const CellPoint& b) {
  if (a.kind_ != b.kind_) throw InstanceMismatch("points over different semifields");
  if (a.v_ != b.v_ || a.word() != b.word()) return false;
  for (std::size_t k = 0; k < a.params_.size(); ++k)
    if (a.params_[k] != b.params_[k]) return false;
  return true;
}

CellPoint base_point(const DatumPtr& datum, SemifieldKind kind) {
  return CellPoint(WeylElement::identity(datum), {}, {}, kind);
}

// ----------------------------------------------------------- Marsh-Rietsch

template <class F>
Matrix<F> mr_evaluate(const Realization& r, const CellPoint& p) {
  if (!p.datum()->same_as(*r.datum())) throw InstanceMismatch("point is not over the realized datum");
  const Subexpression& sub = p.subexpression();
  const auto& orbits = r.folding().orbits;
  Matrix<F> g = Matrix<F>::identity(r.size());
  std::size_t next = 0;
  for (std::size_t k = 0; k < sub.word.size(); ++k) {
    const auto& orbit = orbits[static_cast<std::size_t>(sub.word[k])];
    if (contains(sub.j_zero, static_cast<int>(k))) {
      F t = field_value<F>(p.params()[next++]);
      for (int q : orbit) g = g * gen_y(r, q, t);
    } else {
      for (int q : orbit) g = g * gen_sdot_inv<F>(r, q);
    }
  }
  return g;
}

FieldMatrix mr_evaluate(const Realization& r, const CellPoint& p) {
  switch (p.kind()) {
    case SemifieldKind::PositiveRational: return mr_evaluate<Rational>(r, p);
    case SemifieldKind::PositiveRationalFunction: return mr_evaluate<RatFunc>(r, p);
    default: throw NoFieldEmbedding("semifield has no field embedding");
  }
}

template <class F>
std::vector<std::vector<F>> chamber_minors(const Realization& r, const Matrix<F>& g, const Word& word) {
  require_reduced(r.datum(), word);
  const DatumPtr& amb = r.ambient();
  const Word expanded = r.expand(word);
  const WeylElement w = WeylElement::from_word(amb, expanded);
  const auto [v, w_detected] = detect_cell_ambient(r, g);
  if (w_detected != w) throw MismatchError("matrix does not lie in the Bruhat cell of the word");
  const Subexpression sub = positive_subexpression(v, expanded);
  const Matrix<F> b = bruhat_factor(r, g, w);

  std::vector<std::vector<F>> out;
  WeylElement prefix = WeylElement::identity(amb);
  for (std::size_t k = 0; k <= expanded.size(); ++k) {
    if (k > 0) prefix = prefix.times_simple(expanded[k - 1]);
    const Matrix<F> flag = b * permutation_matrix<F>(r, prefix);
    const auto pw = r.permutation(prefix);
    const auto pv = r.permutation(sub.seq[k]);
    std::vector<F> row;
    for (int q = 0; q < amb->rank(); ++q) {
      F num = flag_minor(r, flag, pv, q);
      if (num == F(0)) throw NotInNonnegativePart("a chamber minor vanishes");
      row.push_back(num / flag_minor(r, flag, pw, q));
    }
    out.push_back(std::move(row));
  }
  return out;
}

template <class F>
CellPoint chamber_ansatz(const Realization& r, const Matrix<F>& g, const Word& word) {
  const auto minors = chamber_minors(r, g, word);
  const DatumPtr& amb = r.ambient();
  const Word expanded = r.expand(word);
  const WeylElement v_amb = detect_cell_ambient(r, g).first;
  const WeylElement v = r.descend(v_amb);
  const Subexpression sub = positive_subexpression(v_amb, expanded);

  std::vector<F> t;
  for (std::size_t k = 1; k <= expanded.size(); ++k) {
    const int i = expanded[k - 1];
    F num(1);
    for (int q = 0; q < amb->rank(); ++q)
      if (q != i && amb->a(q, i) != 0) num *= field_pow(minors[k][q], -amb->a(q, i));
    F val = num / (minors[k][i] * minors[k - 1][i]);
    if (contains(sub.j_plus, static_cast<int>(k - 1)) && !(val == F(1)))
      throw NotInNonnegativePart("coordinate at a J+ position differs from 1");
    t.push_back(std::move(val));
  }

  // Read back one coordinate per folded letter on J0.
  Params params;
  std::size_t pos = 0;
  for (int i : word) {
    const std::size_t len = r.folding().orbits[static_cast<std::size_t>(i)].size();
    if (contains(sub.j_zero, static_cast<int>(pos))) {
      for (std::size_t q = 1; q < len; ++q)
        if (!(t[pos + q] == t[pos])) throw NotInImage("flag is not sigma-fixed");
      params.push_back(from_field(t[pos]));
    }
    pos += len;
  }
  return CellPoint(v, word, std::move(params), kind_of<F>());
}

CellPoint chamber_ansatz(const Realization& r, const FieldMatrix& g, const Word& word) {
  return std::visit([&](const auto& m) { return chamber_ansatz(r, m, word); }, g);
}

// --------------------------------------------------------------- lifting

Lift monomial_lift() {
  return [](long n) { return SemifieldValue::monomial(Rational(1), n); };
}

CellPoint base_change_cell(const SemifieldHom& r, const CellPoint& p) {
  if (p.kind() != r.source()) throw InstanceMismatch("point is not over the homomorphism's source");
  Params params;
  for (const auto& x : p.params()) params.push_back(r(x));
  return CellPoint(p.v(), p.word(), std::move(params), r.target());
}

CellPoint lift_cell(const Lift& lift, const CellPoint& p) {
  if (p.kind() != SemifieldKind::Tropical) throw InstanceMismatch("only tropical points are lifted");
  Params params;
  for (const auto& x : p.params()) params.push_back(lift(x.as_tropical()));
  return CellPoint(p.v(), p.word(), std::move(params), SemifieldKind::PositiveRationalFunction);
}

GElement lift_element(const Lift& lift, const GElement& g) {
  if (g.kind() != SemifieldKind::Tropical) throw InstanceMismatch("only tropical elements are lifted");
  auto lift_u = [&](const UElement& u) {
    Params p;
    for (const auto& x : u.params()) p.push_back(lift(x.as_tropical()));
    return UElement(u.datum(), u.word(), std::move(p), SemifieldKind::PositiveRationalFunction);
  };
  Params t;
  for (const auto& x : g.t()) t.push_back(lift(x.as_tropical()));
  return GElement(lift_u(g.x()), std::move(t), lift_u(g.y()));
}

// ------------------------------------------------------- transition, act

CellPoint transition(const CellPoint& p, const Word& word, const Lift& lift) {
  require_reduced(p.datum(), word);
  if (WeylElement::from_word(p.datum(), word) != p.w())
    throw MismatchError("the new word does not represent w");
  switch (p.kind()) {
    case SemifieldKind::One:
      return CellPoint(p.v(), word, p.params(), p.kind());
    case SemifieldKind::Tropical:
      return base_change_cell(SemifieldHom::valuation(), transition(lift_cell(lift, p), word));
    default: {
      const Realization r = Realization::make(p.datum());
      return chamber_ansatz(r, mr_evaluate(r, p), word);
    }
  }
}

CellPoint act(const GElement& g, const CellPoint& p, const Lift& lift) {
  if (!g.datum()->same_as(*p.datum())) throw InstanceMismatch("element and point over different root data");
  if (g.kind() != p.kind()) throw InstanceMismatch("element and point over different semifields");
  const CellIndex target = star_index(g.x().element(), g.y().element(), p.index());
  const Word& word = target.w.reduced_word();
  switch (p.kind()) {
    case SemifieldKind::One: {
      const std::size_t n = static_cast<std::size_t>(target.w.length() - target.v.length());
      return CellPoint(target.v, word, Params(n, SemifieldValue::one_element()), p.kind());
    }
    case SemifieldKind::Tropical:
      return base_change_cell(SemifieldHom::valuation(), act(lift_element(lift, g), lift_cell(lift, p)));
    default: {
      const Realization r = Realization::make(p.datum());
      FieldMatrix m = std::visit(
          [&](const auto& mp) -> FieldMatrix {
            using M = std::decay_t<decltype(mp)>;
            return std::get<M>(to_field_matrix(r, g)) * mp;
          },
          mr_evaluate(r, p));
      CellPoint out = chamber_ansatz(r, m, word);
      if (!(out.index() == target)) throw MismatchError("action left the predicted cell");
      return out;
    }
  }
}

CellIndex star_index(const WeylElement& x, const WeylElement& y, const CellIndex& c) {
  return {demazure_circ(x, c.v), demazure_star(y, c.w)};
}

std::vector<CellIndex> enumerate_cells(const DatumPtr& datum, int max_length) {
  if (max_length < 0) {
    if (classify(datum->gcm()).kind != Classification::Kind::Finite)
      throw DomainError("the Weyl group is infinite; a length bound is required");
    max_length = 1 << 20;
  }
  const auto elements = elements_up_to_length(datum, max_length);
  std::vector<CellIndex> out;
  for (const auto& w : elements)
    for (const auto& v : elements) {
      if (v.length() > w.length()) break;
      if (bruhat_leq(v, w)) out.push_back({v, w});
    }
  return out;
}

#define TNNFLAG_INSTANTIATE(F)                                                                          \
  template Matrix<F> mr_evaluate(const Realization&, const CellPoint&);                                 \
  template std::vector<std::vector<F>> chamber_minors(const Realization&, const Matrix<F>&, const Word&); \
  template CellPoint chamber_ansatz(const Realization&, const Matrix<F>&, const Word&);

TNNFLAG_INSTANTIATE(Rational)
TNNFLAG_INSTANTIATE(RatFunc)

#undef TNNFLAG_INSTANTIATE

}  // namespace tnnflag
