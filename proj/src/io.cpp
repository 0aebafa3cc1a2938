#include "tnnflag/io.hpp"

#include <string>

namespace tnnflag {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational number, got " + j.dump());
}

IntMatrix int_matrix(const Json& j) {
  if (!j.is_array()) throw InputError("\"gcm\" must be an array of rows");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("\"gcm\" must be an array of rows");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw InputError("Cartan entries must be integers");
      r.push_back(e.get<int>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

Json ratfunc_to_json(const RatFunc& f) { return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }

RatFunc ratfunc_from_json(const Json& j) {
  if (j.is_object()) return RatFunc(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
  return RatFunc(rational_from_json(j));
}

}  // namespace

DatumPtr datum_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("datum must be a JSON object");
  if (j.contains("type")) {
    if (!j.at("type").is_string()) throw InputError("\"type\" must be a string");
    return RootDatum::named(j.at("type").get<std::string>());
  }
  IntMatrix a = int_matrix(field(j, "gcm"));
  if (!j.contains("symmetrizer")) return RootDatum::make(GCM(std::move(a)));
  std::vector<int> d;
  for (const auto& e : j.at("symmetrizer")) {
    if (!e.is_number_integer()) throw InputError("symmetrizer entries must be integers");
    d.push_back(e.get<int>());
  }
  return RootDatum::make(GCM(std::move(a), std::move(d)));
}

// ------------------------------------------------------------------- values

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (long d = 0; d <= p.degree(); ++d) {
    Rational c = p.coeff(d);
    if (c != 0) out.push_back(Json::array({to_string(c), d}));
  }
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be a list of [coeff, deg] pairs");
  Poly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_number_integer())
      throw InputError("polynomial term must be [coeff, deg], got " + term.dump());
    long deg = term[1].get<long>();
    if (deg < 0) throw InputError("negative degree in polynomial");
    p += Poly::monomial(rational_from_json(term[0]), deg);
  }
  return p;
}

Json to_json(const SemifieldValue& a) {
  switch (a.kind()) {
    case SemifieldKind::PositiveRational: return to_string(a.as_rational());
    case SemifieldKind::Tropical: return a.as_tropical();
    case SemifieldKind::One: return "1";
    case SemifieldKind::PositiveRationalFunction:
      return {{"num", poly_to_json(a.num())}, {"den", poly_to_json(a.den())}};
  }
  return nullptr;
}

static SemifieldValue value_in(const Json& j, SemifieldKind kind) {
  switch (kind) {
    case SemifieldKind::PositiveRational: return SemifieldValue::rational(rational_from_json(j));
    case SemifieldKind::Tropical:
      if (!j.is_number_integer()) throw InputError("tropical value must be an integer, got " + j.dump());
      return SemifieldValue::tropical(j.get<long>());
    case SemifieldKind::One:
      if (j != Json("1") && j != Json(1)) throw InputError("the one-element semifield only has \"1\"");
      return SemifieldValue::one_element();
    case SemifieldKind::PositiveRationalFunction:
      if (j.is_object())
        return SemifieldValue::rational_function(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
      return SemifieldValue::monomial(rational_from_json(j), 0);
  }
  throw InputError("unknown semifield");
}

SemifieldValue value_from_json(const Json& j, SemifieldKind kind) {
  try {
    return value_in(j, kind);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

Json params_to_json(const Params& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(to_json(x));
  return out;
}

Params params_from_json(const Json& j, SemifieldKind kind) {
  if (!j.is_array()) throw InputError("parameters must be a JSON array");
  Params out;
  for (const auto& e : j) out.push_back(value_from_json(e, kind));
  return out;
}

// ------------------------------------------------------------------- words

Json word_to_json(const DatumPtr& d, const Word& w) {
  Json out = Json::array();
  for (int i : w) out.push_back(d->label(i));
  return out;
}

Word word_from_json(const DatumPtr& d, const Json& j) {
  if (!j.is_array()) throw InputError("word must be a JSON array of node labels");
  Word out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("node labels are integers, got " + e.dump());
    out.push_back(d->index_of(e.get<int>()));
  }
  return out;
}

Json element_to_json(const WeylElement& w) { return word_to_json(w.datum(), w.reduced_word()); }

WeylElement element_from_json(const DatumPtr& d, const Json& j) {
  return WeylElement::from_word(d, word_from_json(d, j));
}

// ---------------------------------------------------------------- monoid

Json to_json(const GElement& g) {
  const DatumPtr& d = g.datum();
  return {{"x", word_to_json(d, g.x().word())},
          {"a", params_to_json(g.x().params())},
          {"t", params_to_json(g.t())},
          {"y", word_to_json(d, g.y().word())},
          {"c", params_to_json(g.y().params())}};
}

GElement g_from_json(const DatumPtr& d, const Json& j, SemifieldKind kind) {
  if (!j.is_object()) throw InputError("monoid element must be a JSON object");
  auto part = [&](const char* wkey, const char* pkey) {
    Word w = j.contains(wkey) ? word_from_json(d, j.at(wkey)) : Word{};
    Params p = j.contains(pkey) ? params_from_json(j.at(pkey), kind) : Params{};
    return UElement(d, std::move(w), std::move(p), kind);
  };
  UElement x = part("x", "a");
  UElement y = part("y", "c");
  Params t = j.contains("t") ? params_from_json(j.at("t"), kind)
                             : Params(static_cast<std::size_t>(d->rank()), SemifieldValue::one(kind));
  if (static_cast<int>(t.size()) != d->rank())
    throw InputError("torus part needs " + std::to_string(d->rank()) + " values");
  return GElement(std::move(x), std::move(t), std::move(y));
}

// ------------------------------------------------------------------ points

Json to_json(const CellPoint& p) {
  const DatumPtr& d = p.datum();
  return {{"v", element_to_json(p.v())},
          {"w", element_to_json(p.w())},
          {"word", word_to_json(d, p.word())},
          {"params", params_to_json(p.params())}};
}

Json to_json(const CellIndex& c) { return {{"v", element_to_json(c.v)}, {"w", element_to_json(c.w)}}; }

CellPoint point_from_json(const DatumPtr& d, const Json& j, SemifieldKind kind) {
  if (!j.is_object()) throw InputError("cell point must be a JSON object");
  WeylElement v = j.contains("v") ? element_from_json(d, j.at("v")) : WeylElement::identity(d);
  Word word;
  if (j.contains("word")) {
    word = word_from_json(d, j.at("word"));
    require_reduced(d, word);
    if (j.contains("w") && element_from_json(d, j.at("w")) != WeylElement::from_word(d, word))
      throw MismatchError("\"word\" does not represent \"w\"");
  } else if (j.contains("w")) {
    word = word_from_json(d, j.at("w"));
    if (!is_reduced(d, word)) word = WeylElement::from_word(d, word).reduced_word();
  }
  Params params = j.contains("params") ? params_from_json(j.at("params"), kind) : Params{};
  return CellPoint(std::move(v), std::move(word), std::move(params), kind);
}

// ---------------------------------------------------------------- matrices

Json to_json(const FieldMatrix& m) {
  return std::visit(
      [](const auto& mat) {
        using M = std::decay_t<decltype(mat)>;
        Json rows = Json::array();
        for (int r = 0; r < mat.size(); ++r) {
          Json row = Json::array();
          for (int c = 0; c < mat.size(); ++c) {
            if constexpr (std::is_same_v<M, Matrix<Rational>>)
              row.push_back(to_string(mat(r, c)));
            else
              row.push_back(ratfunc_to_json(mat(r, c)));
          }
          rows.push_back(std::move(row));
        }
        return rows;
      },
      m);
}

FieldMatrix matrix_from_json(const Json& j, SemifieldKind kind) {
  if (!has_field_embedding(kind)) throw NoFieldEmbedding("semifield has no field embedding");
  const Json& rows = j.is_object() ? field(j, "matrix") : j;
  if (!rows.is_array()) throw InputError("matrix must be an array of rows");
  const int n = static_cast<int>(rows.size());
  for (const auto& row : rows)
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw InputError("matrix must be square");
  if (kind == SemifieldKind::PositiveRational) {
    Matrix<Rational> m(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = rational_from_json(rows[r][c]);
    return m;
  }
  Matrix<RatFunc> m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = ratfunc_from_json(rows[r][c]);
  return m;
}

}  // namespace tnnflag
