#include "tnnflag/monoid.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "tnnflag/errors.hpp"

namespace tnnflag {

namespace {

// Rank-two symmetric data used to evaluate the m = 4 and m = 6 exchange maps.
struct LocalFold {
  DatumPtr ambient;
  Word short_orbit;  // orbit of the node i with a_ij = -k
  Word long_orbit;
};

const LocalFold& local_fold(int k) {
  static const LocalFold b2{RootDatum::make(GCM({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})), {0, 2}, {1}};
  static const LocalFold g2{
      RootDatum::make(GCM({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}})),
      {0, 2, 3},
      {1}};
  return k == 2 ? b2 : g2;
}

Params braid_R_folded(const GCM& a, int i, int j, int m, const Params& params) {
  const bool i_short = a(i, j) < a(j, i);
  const LocalFold& lf = local_fold(std::max(-a(i, j), -a(j, i)));
  const Word& oi = i_short ? lf.short_orbit : lf.long_orbit;
  const Word& oj = i_short ? lf.long_orbit : lf.short_orbit;

  Word from, to;
  Params ambient_params;
  for (int k = 0; k < m; ++k) {
    const Word& block = (k % 2 == 0) ? oi : oj;
    for (int p : block) {
      from.push_back(p);
      ambient_params.push_back(params[static_cast<std::size_t>(k)]);
    }
    for (int p : (k % 2 == 0) ? oj : oi) to.push_back(p);
  }
  auto path = reduced_word_path(lf.ambient, from, to);
  Word word = from;
  transport(lf.ambient->gcm(), word, ambient_params, path);

  Params out;
  std::size_t pos = 0;
  for (int k = 0; k < m; ++k) {
    const std::size_t len = ((k % 2 == 0) ? oj : oi).size();
    for (std::size_t q = 1; q < len; ++q)
      if (ambient_params[pos + q] != ambient_params[pos])
        throw MismatchError("folded braid move left the fixed locus");
    out.push_back(ambient_params[pos]);
    pos += len;
  }
  return out;
}

void check_kind(const UElement& a, const UElement& b) {
  if (!a.datum()->same_as(*b.datum())) throw InstanceMismatch("elements over different root data");
  if (a.kind() != b.kind()) throw InstanceMismatch("elements over different semifields");
}

// Value of the character alpha_i on the torus element t.
SemifieldValue character(const DatumPtr& d, const Params& t, int i) {
  SemifieldValue acc = SemifieldValue::one(t.front().kind());
  for (int l = 0; l < d->rank(); ++l) {
    int e = d->a(l, i);
    if (e != 0) acc *= t[static_cast<std::size_t>(l)].pow(e);
  }
  return acc;
}

Params ones(int n, SemifieldKind k) { return Params(static_cast<std::size_t>(n), SemifieldValue::one(k)); }

Params expand_word(const FoldingData& f, const Word& word, const Params& params, Word& out_word) {
  Params out;
  for (std::size_t k = 0; k < word.size(); ++k)
    for (int p : f.orbits[static_cast<std::size_t>(word[k])]) {
      out_word.push_back(p);
      out.push_back(params[k]);
    }
  return out;
}

UElement fold_up(const FoldingData& f, const UElement& u) {
  Word w;
  Params p = expand_word(f, u.word(), u.params(), w);
  return UElement(f.ambient, std::move(w), std::move(p), u.kind());
}

UElement fold_down(const FoldingData& f, const DatumPtr& folded, const UElement& u) {
  WeylElement rest = u.element();
  Word rev;
  for (;;) {
    int p = -1;
    for (int q = 0; q < rest.rank() && p < 0; ++q)
      if (rest.right_descent(q)) p = q;
    if (p < 0) break;
    int i = f.orbit_of[static_cast<std::size_t>(p)];
    for (int q : f.orbits[static_cast<std::size_t>(i)]) {
      if (!rest.right_descent(q)) throw NotInImage("Weyl index is not sigma-fixed");
      rest = rest.times_simple(q);
    }
    rev.push_back(i);
  }
  Word word(rev.rbegin(), rev.rend());
  Word expanded;
  for (int i : word)
    for (int p : f.orbits[static_cast<std::size_t>(i)]) expanded.push_back(p);
  UElement moved = u.in_word(expanded);

  Params params;
  std::size_t pos = 0;
  for (int i : word) {
    const auto& orbit = f.orbits[static_cast<std::size_t>(i)];
    for (std::size_t q = 1; q < orbit.size(); ++q)
      if (moved.params()[pos + q] != moved.params()[pos])
        throw NotInImage("coordinates are not sigma-fixed");
    params.push_back(moved.params()[pos]);
    pos += orbit.size();
  }
  return UElement(folded, std::move(word), std::move(params), u.kind());
}

}  // namespace

// ------------------------------------------------------------------ braids

Params braid_R(const GCM& a, int i, int j, const Params& params) {
  auto m = m_value(a, i, j);
  if (!m) throw NoBraidRelation("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                " satisfy no braid relation");
  if (params.size() != static_cast<std::size_t>(*m))
    throw InputError("braid move expects " + std::to_string(*m) + " parameters");
  for (const auto& p : params) require_same_kind(p, params.front());
  switch (*m) {
    case 2:
      return {params[1], params[0]};
    case 3: {
      const auto& [x, y, z] = std::tie(params[0], params[1], params[2]);
      SemifieldValue s = x + z;
      return {y * z / s, s, x * y / s};
    }
    default:
      return braid_R_folded(a, i, j, *m, params);
  }
}

void transport(const GCM& a, Word& word, Params& params, const std::vector<BraidMove>& path) {
  for (const BraidMove& mv : path) {
    auto first = params.begin() + mv.position;
    Params slice(first, first + mv.m);
    Params moved = braid_R(a, mv.i, mv.j, slice);
    std::copy(moved.begin(), moved.end(), first);
    word = apply_braid_move(word, mv);
  }
}

// ---------------------------------------------------------------- UElement

UElement::UElement(DatumPtr datum, Word word, Params params, SemifieldKind kind)
    : datum_(std::move(datum)),
      w_(WeylElement::from_word(datum_, word)),
      word_(std::move(word)),
      params_(std::move(params)),
      kind_(kind) {
  if (w_.length() != static_cast<int>(word_.size())) throw InputError("word is not reduced");
  if (params_.size() != word_.size())
    throw InputError("expected " + std::to_string(word_.size()) + " parameters, got " +
                     std::to_string(params_.size()));
  for (const auto& p : params_)
    if (p.kind() != kind_) throw InstanceMismatch("parameter from a different semifield");
}

UElement UElement::identity(const DatumPtr& datum, SemifieldKind kind) { return UElement(datum, {}, {}, kind); }

UElement UElement::generator(const DatumPtr& datum, int i, const SemifieldValue& a) {
  return UElement(datum, {i}, {a}, a.kind());
}

UElement UElement::in_word(const Word& target) const {
  if (target == word_) return *this;
  auto path = reduced_word_path(datum_, word_, target);
  Word word = word_;
  Params params = params_;
  transport(datum_->gcm(), word, params, path);
  return UElement(datum_, std::move(word), std::move(params), kind_);
}

UElement UElement::reversed() const {
  return UElement(datum_, Word(word_.rbegin(), word_.rend()), Params(params_.rbegin(), params_.rend()), kind_);
}

bool operator==(const UElement& a, const UElement& b) {
  check_kind(a, b);
  if (a.w_ != b.w_) return false;
  UElement moved = b.in_word(a.word_);
  for (std::size_t k = 0; k < a.params_.size(); ++k)
    if (a.params_[k] != moved.params_[k]) return false;
  return true;
}

UElement u_mul(const UElement& u1, const UElement& u2) {
  check_kind(u1, u2);
  const DatumPtr& d = u1.datum();
  WeylElement w = u1.element();
  Word word = u1.word();
  Params params = u1.params();
  for (std::size_t k = 0; k < u2.word().size(); ++k) {
    int i = u2.word()[k];
    const SemifieldValue& a = u2.params()[k];
    if (!w.right_descent(i)) {
      word.push_back(i);
      params.push_back(a);
      w = w.times_simple(i);
      continue;
    }
    transport(d->gcm(), word, params, path_to_suffix(d, word, i));
    params.back() += a;
  }
  return UElement(d, std::move(word), std::move(params), u1.kind());
}

// ---------------------------------------------------------------- GElement

GElement::GElement(UElement x, Params torus, UElement y)
    : x_(std::move(x)), t_(std::move(torus)), y_(std::move(y)) {
  check_kind(x_, y_);
  if (t_.size() != static_cast<std::size_t>(x_.datum()->rank()))
    throw InputError("torus vector must have one entry per node");
  for (const auto& v : t_)
    if (v.kind() != x_.kind()) throw InstanceMismatch("torus entry from a different semifield");
}

GElement GElement::identity(const DatumPtr& datum, SemifieldKind kind) {
  return GElement(UElement::identity(datum, kind), ones(datum->rank(), kind), UElement::identity(datum, kind));
}

GElement GElement::positive(UElement x) {
  auto d = x.datum();
  auto k = x.kind();
  return GElement(std::move(x), ones(d->rank(), k), UElement::identity(d, k));
}

GElement GElement::negative(UElement y) {
  auto d = y.datum();
  auto k = y.kind();
  return GElement(UElement::identity(d, k), ones(d->rank(), k), std::move(y));
}

GElement GElement::torus(const DatumPtr& datum, Params t) {
  if (t.empty()) throw InputError("torus vector must have one entry per node");
  auto k = t.front().kind();
  return GElement(UElement::identity(datum, k), std::move(t), UElement::identity(datum, k));
}

GElement GElement::gen_x(const DatumPtr& datum, int i, const SemifieldValue& a) {
  return positive(UElement::generator(datum, i, a));
}

GElement GElement::gen_y(const DatumPtr& datum, int i, const SemifieldValue& a) {
  return negative(UElement::generator(datum, i, a));
}

GElement GElement::gen_torus(const DatumPtr& datum, int i, const SemifieldValue& a) {
  if (i < 0 || i >= datum->rank()) throw InputError("node index out of range");
  Params t = ones(datum->rank(), a.kind());
  t[static_cast<std::size_t>(i)] = a;
  return torus(datum, std::move(t));
}

bool operator==(const GElement& a, const GElement& b) {
  if (!(a.x_ == b.x_)) return false;
  for (std::size_t k = 0; k < a.t_.size(); ++k)
    if (a.t_[k] != b.t_[k]) return false;
  return a.y_ == b.y_;
}

GElement g_mul(const GElement& g1, const GElement& g2) {
  check_kind(g1.x(), g2.x());
  const DatumPtr& d = g1.datum();
  const SemifieldKind kind = g1.kind();

  // x1 * [x_acc * T * Y] * rest of x2 * t2 * y2, with T starting at t1.
  Params torus = g1.t();
  Word x_word;
  Params x_params;
  Word y_word = g1.y().word();
  Params y_params = g1.y().params();

  for (std::size_t k = 0; k < g2.x().word().size(); ++k) {
    const int i = g2.x().word()[k];
    SemifieldValue a = g2.x().params()[k];
    Params local = ones(d->rank(), kind);
    for (std::size_t q = y_word.size(); q-- > 0;) {
      const int j = y_word[q];
      SemifieldValue chi = character(d, local, j);
      if (j == i) {
        SemifieldValue s = SemifieldValue::one(kind) + a * y_params[q];
        SemifieldValue dinv = s.inv();
        a = a * dinv;
        y_params[q] = y_params[q] * dinv;
        local[static_cast<std::size_t>(i)] *= dinv;
      }
      y_params[q] *= chi;
    }
    x_word.push_back(i);
    x_params.push_back(a * character(d, torus, i));
    for (std::size_t l = 0; l < torus.size(); ++l) torus[l] *= local[l];
  }
  for (std::size_t q = 0; q < y_word.size(); ++q) y_params[q] *= character(d, g2.t(), y_word[q]);
  for (std::size_t l = 0; l < torus.size(); ++l) torus[l] *= g2.t()[l];

  UElement x = u_mul(g1.x(), UElement(d, std::move(x_word), std::move(x_params), kind));
  UElement y = u_mul(UElement(d, std::move(y_word), std::move(y_params), kind), g2.y());
  return GElement(std::move(x), std::move(torus), std::move(y));
}

GElement phi(const GElement& g) {
  Params t;
  for (const auto& v : g.t()) t.push_back(v.inv());
  return g_mul(g_mul(GElement::negative(g.x()), GElement::torus(g.datum(), std::move(t))),
               GElement::positive(g.y()));
}

GElement tau(const GElement& g) { return GElement(g.y().reversed(), g.t(), g.x().reversed()); }

// ---------------------------------------------------------------- folding

GElement iota_fold(const FoldingData& f, const GElement& g) {
  if (static_cast<int>(f.orbits.size()) != g.datum()->rank())
    throw InstanceMismatch("folding does not match the element's root datum");
  Params t;
  for (int p = 0; p < f.ambient->rank(); ++p) t.push_back(g.t()[static_cast<std::size_t>(f.orbit_of[p])]);
  return GElement(fold_up(f, g.x()), std::move(t), fold_up(f, g.y()));
}

GElement unfold(const FoldingData& f, const DatumPtr& folded, const GElement& g) {
  if (!g.datum()->same_as(*f.ambient)) throw InstanceMismatch("element is not over the ambient datum");
  Params t;
  for (const auto& orbit : f.orbits) {
    for (int p : orbit)
      if (g.t()[static_cast<std::size_t>(p)] != g.t()[static_cast<std::size_t>(orbit.front())])
        throw NotInImage("torus coordinates are not sigma-fixed");
    t.push_back(g.t()[static_cast<std::size_t>(orbit.front())]);
  }
  return GElement(fold_down(f, folded, g.x()), std::move(t), fold_down(f, folded, g.y()));
}

// ------------------------------------------------------------ base change

UElement base_change(const SemifieldHom& r, const UElement& u) {
  if (u.kind() != r.source()) throw InstanceMismatch("element is not over the homomorphism's source");
  Params p;
  for (const auto& v : u.params()) p.push_back(r(v));
  return UElement(u.datum(), u.word(), std::move(p), r.target());
}

GElement base_change_monoid(const SemifieldHom& r, const GElement& g) {
  Params t;
  for (const auto& v : g.t()) {
    if (v.kind() != r.source()) throw InstanceMismatch("element is not over the homomorphism's source");
    t.push_back(r(v));
  }
  return GElement(base_change(r, g.x()), std::move(t), base_change(r, g.y()));
}

}  // namespace tnnflag
