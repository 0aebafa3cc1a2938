#include "tnnflag/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tnnflag/io.hpp"
#include "tnnflag/random.hpp"

namespace tnnflag {

namespace {

struct Options {
  std::string type;
  std::string gcm_file;
  std::string semifield = "qpos";
  bool oracle = false;
  std::optional<unsigned long> seed;
  int max_len = -1;
  int cases = 20;
  std::string cell, params, word, point, g, g1, g2, matrix, op, lift = "monomial";
};

enum class Verdict { Pass, Fail, Skip };

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : o_(o), in_(in), out_(out), err_(err) {}

  DatumPtr datum() {
    if (!datum_) {
      if (!o_.type.empty() && !o_.gcm_file.empty()) throw InputError("give either --type or --gcm-file");
      if (!o_.type.empty())
        datum_ = RootDatum::named(o_.type);
      else if (!o_.gcm_file.empty())
        datum_ = datum_from_json(read_file(o_.gcm_file));
      else
        throw InputError("a root datum is required (--type or --gcm-file)");
    }
    return datum_;
  }

  SemifieldKind kind() const { return parse_kind(o_.semifield); }

  // Inline JSON, "@path" for a file, "-" for standard input.
  Json payload(const std::string& text, const char* name) {
    if (text.empty()) throw InputError(std::string("missing --") + name);
    if (text == "-") {
      std::stringstream ss;
      ss << in_.rdbuf();
      return Json::parse(ss.str());
    }
    if (text[0] == '@') return read_file(text.substr(1));
    return Json::parse(text);
  }

  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  // Runs the check only under --oracle; a failed check makes the exit code 3.
  void oracle(const std::function<Verdict(std::string&)>& check) {
    if (!o_.oracle) return;
    std::string detail;
    Verdict v;
    try {
      v = check(detail);
    } catch (const UnsupportedRealization& e) {
      v = Verdict::Skip;
      detail = e.what();
    } catch (const Error& e) {
      v = Verdict::Fail;
      detail = e.what();
    }
    const char* word = v == Verdict::Pass ? "PASS" : v == Verdict::Fail ? "FAIL" : "SKIP";
    err_ << "oracle: " << word;
    if (!detail.empty()) err_ << " (" << detail << ")";
    err_ << '\n';
    if (v == Verdict::Fail) failed_ = true;
  }

  bool failed() const { return failed_; }
  const Options& opts() const { return o_; }

 private:
  static Json read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    return Json::parse(f);
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  DatumPtr datum_;
  bool failed_ = false;
};

Verdict pass_if(bool ok, std::string& detail, const char* what) {
  if (!ok) detail = what;
  return ok ? Verdict::Pass : Verdict::Fail;
}

FieldMatrix field_product(const FieldMatrix& a, const FieldMatrix& b) {
  return std::visit(
      [&](const auto& ma) -> FieldMatrix {
        using M = std::decay_t<decltype(ma)>;
        return ma * std::get<M>(b);
      },
      a);
}

bool field_same_flag(const FieldMatrix& a, const FieldMatrix& b) {
  return std::visit(
      [&](const auto& ma) {
        using M = std::decay_t<decltype(ma)>;
        return same_flag(ma, std::get<M>(b));
      },
      a);
}

Lift shifted_lift() {
  return [](long n) {
    return SemifieldValue::monomial(Rational(1), n) *
           SemifieldValue::rational_function(Poly(std::vector<Rational>{2, 1}), Poly(Rational(2)));
  };
}

Lift lift_named(const std::string& name) {
  if (name == "monomial") return monomial_lift();
  if (name == "shifted") return shifted_lift();
  throw InputError("unknown lift '" + name + "' (monomial, shifted)");
}

GElement tropical_mul(const GElement& g1, const GElement& g2, const Lift& lift) {
  return base_change_monoid(SemifieldHom::valuation(), g_mul(lift_element(lift, g1), lift_element(lift, g2)));
}

// ----------------------------------------------------------------- commands

void cmd_cells(Session& s) {
  Json out = Json::array();
  for (const auto& c : enumerate_cells(s.datum(), s.opts().max_len)) out.push_back(to_json(c));
  s.emit(out);
}

void cmd_mr(Session& s) {
  const DatumPtr d = s.datum();
  Json cell = s.payload(s.opts().cell, "cell");
  if (!s.opts().params.empty()) {
    if (!cell.is_object()) throw InputError("cell point must be a JSON object");
    cell["params"] = s.payload(s.opts().params, "params");
  }
  const CellPoint p = point_from_json(d, cell, s.kind());
  const Realization r = Realization::make(d);
  const FieldMatrix m = mr_evaluate(r, p);
  s.emit(to_json(m));
  s.oracle([&](std::string& detail) {
    auto [v, w] = std::visit([&](const auto& mat) { return detect_cell(r, mat); }, m);
    return pass_if(v == p.v() && w == p.w(), detail, "matrix lies in a different cell");
  });
}

void cmd_ca(Session& s) {
  const DatumPtr d = s.datum();
  const Realization r = Realization::make(d);
  const FieldMatrix m = matrix_from_json(s.payload(s.opts().matrix, "matrix"), s.kind());
  Word word;
  if (!s.opts().word.empty())
    word = word_from_json(d, s.payload(s.opts().word, "word"));
  else
    word = std::visit([&](const auto& mat) { return detect_cell(r, mat).second; }, m).reduced_word();
  const CellPoint p = chamber_ansatz(r, m, word);
  s.emit(to_json(p));
  s.oracle([&](std::string& detail) {
    return pass_if(field_same_flag(mr_evaluate(r, p), m), detail, "parameters give a different flag");
  });
}

void cmd_trans(Session& s) {
  const DatumPtr d = s.datum();
  const CellPoint p = point_from_json(d, s.payload(s.opts().point, "point"), s.kind());
  const Word word = word_from_json(d, s.payload(s.opts().word, "word"));
  const CellPoint q = transition(p, word);
  s.emit(to_json(q));
  s.oracle([&](std::string& detail) {
    switch (p.kind()) {
      case SemifieldKind::Tropical:
        return pass_if(transition(p, word, shifted_lift()) == q, detail, "a second lift disagrees");
      case SemifieldKind::One: return pass_if(q.index() == p.index(), detail, "cell changed");
      default: {
        const Realization r = Realization::make(d);
        return pass_if(field_same_flag(mr_evaluate(r, q), mr_evaluate(r, p)), detail, "flags differ");
      }
    }
  });
}

void cmd_act(Session& s) {
  const DatumPtr d = s.datum();
  const GElement g = g_from_json(d, s.payload(s.opts().g, "g"), s.kind());
  const CellPoint p = point_from_json(d, s.payload(s.opts().point, "point"), s.kind());
  const CellPoint q = act(g, p);
  s.emit(to_json(q));
  s.oracle([&](std::string& detail) {
    switch (p.kind()) {
      case SemifieldKind::Tropical:
        return pass_if(act(g, p, shifted_lift()) == q, detail, "a second lift disagrees");
      case SemifieldKind::One:
        return pass_if(q.index() == star_index(g.x().element(), g.y().element(), p.index()), detail,
                       "cell differs from the star action");
      default: {
        const Realization r = Realization::make(d);
        const FieldMatrix gp = field_product(to_field_matrix(r, g), mr_evaluate(r, p));
        return pass_if(field_same_flag(mr_evaluate(r, q), gp), detail, "flags differ");
      }
    }
  });
}

void cmd_mul(Session& s) {
  const DatumPtr d = s.datum();
  const GElement g1 = g_from_json(d, s.payload(s.opts().g1, "g1"), s.kind());
  const GElement g2 = g_from_json(d, s.payload(s.opts().g2, "g2"), s.kind());
  const GElement g = g_mul(g1, g2);
  s.emit(to_json(g));
  s.oracle([&](std::string& detail) {
    switch (g.kind()) {
      case SemifieldKind::Tropical:
        return pass_if(tropical_mul(g1, g2, monomial_lift()) == g, detail, "lifted product disagrees");
      case SemifieldKind::One: detail = "no matrix oracle over {1}"; return Verdict::Skip;
      default: {
        const Realization r = Realization::make(d);
        return pass_if(to_field_matrix(r, g) == field_product(to_field_matrix(r, g1), to_field_matrix(r, g2)),
                       detail, "matrix product differs");
      }
    }
  });
}

void cmd_trop(Session& s) {
  const DatumPtr d = s.datum();
  const SemifieldKind k = SemifieldKind::Tropical;
  const Lift lift = lift_named(s.opts().lift);
  const Lift other = s.opts().lift == "monomial" ? shifted_lift() : monomial_lift();
  const std::string& op = s.opts().op;
  if (op == "trans") {
    const CellPoint p = point_from_json(d, s.payload(s.opts().point, "point"), k);
    const Word word = word_from_json(d, s.payload(s.opts().word, "word"));
    const CellPoint q = transition(p, word, lift);
    s.emit(to_json(q));
    s.oracle([&](std::string& detail) {
      return pass_if(transition(p, word, other) == q, detail, "a second lift disagrees");
    });
  } else if (op == "act") {
    const GElement g = g_from_json(d, s.payload(s.opts().g, "g"), k);
    const CellPoint p = point_from_json(d, s.payload(s.opts().point, "point"), k);
    const CellPoint q = act(g, p, lift);
    s.emit(to_json(q));
    s.oracle([&](std::string& detail) {
      return pass_if(act(g, p, other) == q, detail, "a second lift disagrees");
    });
  } else if (op == "mul") {
    const GElement g1 = g_from_json(d, s.payload(s.opts().g1, "g1"), k);
    const GElement g2 = g_from_json(d, s.payload(s.opts().g2, "g2"), k);
    const GElement g = tropical_mul(g1, g2, lift);
    s.emit(to_json(g));
    s.oracle([&](std::string& detail) {
      return pass_if(g_mul(g1, g2) == g && tropical_mul(g1, g2, other) == g, detail,
                     "tropical product disagrees");
    });
  } else {
    throw InputError("--op must be one of trans, act, mul");
  }
}

void cmd_fold(Session& s) {
  const DatumPtr d = s.datum();
  const FoldingData f = build_folding(d);
  const DatumPtr& amb = f.ambient;
  Json orbits = Json::array();
  for (const auto& o : f.orbits) orbits.push_back(word_to_json(amb, o));
  Json sigma = Json::object();
  for (int p = 0; p < amb->rank(); ++p) sigma[std::to_string(amb->label(p))] = amb->label(f.sigma[p]);
  Json out = {{"ambient", amb->name()}, {"gcm", amb->gcm().entries()}, {"orbits", orbits}, {"sigma", sigma}};
  std::optional<GElement> g;
  if (!s.opts().g.empty()) {
    g = g_from_json(d, s.payload(s.opts().g, "g"), s.kind());
    out["image"] = to_json(iota_fold(f, *g));
  }
  s.emit(out);
  if (g)
    s.oracle([&](std::string& detail) {
      return pass_if(unfold(f, d, iota_fold(f, *g)) == *g, detail, "unfold does not invert the embedding");
    });
}

struct Check {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string first_failure;
};

void cmd_selftest(Session& s) {
  if (!s.opts().seed) throw InputError("selftest requires --seed");
  Rng rng(*s.opts().seed);
  const DatumPtr d = s.opts().type.empty() && s.opts().gcm_file.empty() ? RootDatum::named("A2") : s.datum();
  const int n = s.opts().cases;
  std::vector<Check> checks;
  auto run = [&](const std::string& name, const std::function<bool()>& body) {
    Check c;
    c.name = name;
    for (int k = 0; k < n; ++k) {
      ++c.total;
      try {
        if (body()) {
          ++c.passed;
          continue;
        }
        if (c.first_failure.empty()) c.first_failure = "case " + std::to_string(k);
      } catch (const UnsupportedRealization& e) {
        c.total = 0;
        c.first_failure = std::string("skipped: ") + e.what();
        break;
      } catch (const Error& e) {
        if (c.first_failure.empty()) c.first_failure = e.what();
      }
    }
    checks.push_back(std::move(c));
  };
  const int cap = 4;
  run("braid coherence", [&] {
    UElement u = random_u(d, SemifieldKind::PositiveRational, cap, rng);
    auto words = all_reduced_words(u.element());
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    return u.in_word(words[pick(rng)]).in_word(u.word()).params() == u.params();
  });
  run("monoid product vs matrices", [&] {
    const Realization r = Realization::make(d);
    GElement g1 = random_g(d, SemifieldKind::PositiveRational, cap, rng);
    GElement g2 = random_g(d, SemifieldKind::PositiveRational, cap, rng);
    return to_matrix<Rational>(r, g_mul(g1, g2)) == to_matrix<Rational>(r, g1) * to_matrix<Rational>(r, g2);
  });
  run("chamber ansatz roundtrip", [&] {
    const Realization r = Realization::make(d);
    WeylElement w = random_weyl(d, cap, rng);
    WeylElement v = random_weyl(d, w.length(), rng);
    if (!bruhat_leq(v, w)) v = WeylElement::identity(d);
    CellPoint p = random_point({v, w}, SemifieldKind::PositiveRational, rng);
    return chamber_ansatz(r, mr_evaluate(r, p), p.word()) == p;
  });
  run("tropical lift independence", [&] {
    WeylElement w = random_weyl(d, cap, rng);
    CellPoint p = random_point({WeylElement::identity(d), w}, SemifieldKind::Tropical, rng);
    GElement g = random_g(d, SemifieldKind::Tropical, 2, rng);
    return act(g, p) == act(g, p, shifted_lift());
  });

  Json report = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    Json j = {{"check", c.name}, {"passed", c.passed}, {"cases", c.total}};
    if (!c.first_failure.empty()) j["note"] = c.first_failure;
    report.push_back(std::move(j));
    ok = ok && c.passed == c.total;
  }
  s.emit({{"datum", d->name()}, {"seed", *s.opts().seed}, {"checks", report}, {"status", ok ? "PASS" : "FAIL"}});
  if (!ok) throw MismatchError("selftest failed");
}

std::string error_name(const std::exception& e) {
#define TNNFLAG_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  TNNFLAG_NAME(InstanceMismatch)
  TNNFLAG_NAME(DomainError)
  TNNFLAG_NAME(InputError)
  TNNFLAG_NAME(MismatchError)
  TNNFLAG_NAME(OrderViolation)
  TNNFLAG_NAME(UnsupportedFolding)
  TNNFLAG_NAME(UnsupportedRealization)
  TNNFLAG_NAME(NoBraidRelation)
  TNNFLAG_NAME(NoFieldEmbedding)
  TNNFLAG_NAME(NotInImage)
  TNNFLAG_NAME(FactorizationFailure)
  TNNFLAG_NAME(NotInNonnegativePart)
#undef TNNFLAG_NAME
  if (dynamic_cast<const Json::exception*>(&e)) return "JsonError";
  return "Error";
}

int report(std::ostream& out, const std::exception& e, int code) {
  out << Json{{"error", error_name(e)}, {"message", e.what()}, {"exit", code}}.dump() << '\n';
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cells, coordinates and monoid actions on Kac-Moody flags over semifields", "tnnflag"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Named Cartan type, e.g. A3, C2, A1~");
    sub->add_option("--gcm-file", o.gcm_file, "JSON datum file: {\"type\": ...} or {\"gcm\": ..., \"symmetrizer\": ...}");
    sub->add_option("--semifield", o.semifield, "qpos, qtpos, trop or one")
        ->check(CLI::IsMember({"qpos", "qtpos", "trop", "one"}));
    sub->add_flag("--oracle", o.oracle, "Re-verify the result and report on stderr");
    sub->add_option("--seed", o.seed, "Random seed");
    return sub;
  };
  std::vector<std::pair<CLI::App*, std::function<void(Session&)>>> commands;
  auto add = [&](const char* name, const char* help, std::function<void(Session&)> fn) {
    CLI::App* sub = common(app.add_subcommand(name, help));
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  add("cells", "List the cells (v <= w)", cmd_cells)->add_option("--max-len", o.max_len, "Bound on l(w)");
  auto* mr = add("mr", "Matrix of a Marsh-Rietsch point", cmd_mr);
  mr->add_option("--cell", o.cell, "Cell point JSON")->required();
  mr->add_option("--params", o.params, "Parameter list JSON");
  auto* ca = add("ca", "Chamber Ansatz: matrix to cell point", cmd_ca);
  ca->add_option("--matrix", o.matrix, "Matrix JSON")->required();
  ca->add_option("--word", o.word, "Reduced word of w");
  auto* tr = add("trans", "Change the reduced word of a cell point", cmd_trans);
  tr->add_option("--point", o.point, "Cell point JSON")->required();
  tr->add_option("--word", o.word, "New reduced word")->required();
  auto* ac = add("act", "Action of a monoid element on a cell point", cmd_act);
  ac->add_option("--g", o.g, "Monoid element JSON")->required();
  ac->add_option("--point", o.point, "Cell point JSON")->required();
  auto* mu = add("mul", "Product of two monoid elements", cmd_mul);
  mu->add_option("--g1", o.g1, "Left factor JSON")->required();
  mu->add_option("--g2", o.g2, "Right factor JSON")->required();
  auto* tp = add("trop", "Tropical computation through a lift to Q(t)", cmd_trop);
  tp->add_option("--op", o.op, "trans, act or mul")->required();
  tp->add_option("--lift", o.lift, "monomial (t^n) or shifted ((1 + t/2) t^n)");
  tp->add_option("--point", o.point, "Cell point JSON (trans, act)");
  tp->add_option("--word", o.word, "New reduced word (trans)");
  tp->add_option("--g", o.g, "Monoid element JSON (act)");
  tp->add_option("--g1", o.g1, "Left factor JSON (mul)");
  tp->add_option("--g2", o.g2, "Right factor JSON (mul)");
  add("fold", "Folding data, optionally the image of an element", cmd_fold)
      ->add_option("--g", o.g, "Monoid element JSON");
  add("selftest", "Randomized consistency checks", cmd_selftest)
      ->add_option("--cases", o.cases, "Cases per check");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  Session session(o, in, out, err);
  try {
    for (auto& [sub, fn] : commands)
      if (sub->parsed()) fn(session);
  } catch (const Json::exception& e) {
    return report(out, e, 2);
  } catch (const InputError& e) {
    return report(out, e, 2);
  } catch (const NotInNonnegativePart& e) {
    return report(out, e, 4);
  } catch (const Error& e) {
    return report(out, e, 3);
  }
  return session.failed() ? 3 : 0;
}

}  // namespace tnnflag
