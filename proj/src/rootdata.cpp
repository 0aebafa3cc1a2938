#include "tnnflag/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <regex>
#include <set>

#include "tnnflag/errors.hpp"
#include "tnnflag/poly.hpp"

namespace tnnflag {

namespace {

void validate_entries(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InputError("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InputError("Cartan matrix is not square");
    if (a[i][i] != 2) throw InputError("Cartan matrix diagonal entry is not 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw InputError("positive off-diagonal Cartan entry");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw InputError("a_ij = 0 must coincide with a_ji = 0");
    }
}

std::vector<std::vector<int>> components_of(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && a[members[k]][j] != 0) {
          comp[j] = comp[s];
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

std::vector<int> derive_symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, Rational(0));
  for (const auto& comp : components_of(a)) {
    d[comp.front()] = 1;
    std::queue<int> todo;
    todo.push(comp.front());
    while (!todo.empty()) {
      int i = todo.front();
      todo.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rational dj = d[i] * a[i][j] / a[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          todo.push(j);
        } else if (d[j] != dj) {
          throw InputError("Cartan matrix is not symmetrizable");
        }
      }
    }
    mpz_class l = 1;
    for (int i : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[i].get_den_mpz_t());
    mpz_class g = 0;
    for (int i : comp) {
      d[i] *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i].get_num_mpz_t());
    }
    for (int i : comp) d[i] /= g;
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(d[i].get_num().get_si());
  return out;
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& idx) {
  IntMatrix s(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = a[idx[i]][idx[j]];
  return s;
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

int rank_rational(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t p = row;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = row + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[row][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[row][k];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> symmetrized(const GCM& a) {
  const int n = a.rank();
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = Rational(a.symmetrizer()[i] * a(i, j));
  return b;
}

bool positive_definite(const std::vector<std::vector<Rational>>& b) {
  const std::size_t n = b.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> lead(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = b[i][j];
    if (det_rational(lead) <= 0) return false;
  }
  return true;
}

bool positive_semidefinite(const std::vector<std::vector<Rational>>& b) {
  const std::size_t n = b.size();
  if (n > 20) throw DomainError("classification limited to rank 20");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) idx.push_back(i);
    std::vector<std::vector<Rational>> s(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = b[idx[i]][idx[j]];
    if (det_rational(s) < 0) return false;
  }
  return true;
}

// ------------------------------------------------------------ named types

struct TypeName {
  char family;
  int n;
  bool affine;
};

TypeName parse_type_name(std::string_view text) {
  static const std::regex re(R"(^\s*([A-Ga-g])_?\{?(\d+)\}?\s*(~|\^\(1\)|\^\{\(1\)\})?\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw InputError("unrecognized root datum type '" + s + "'");
  TypeName t{static_cast<char>(std::toupper(m[1].str()[0])), std::stoi(m[2].str()), m[3].matched};
  auto bad = [&]() { throw InputError("no root datum of type '" + s + "'"); };
  switch (t.family) {
    case 'A': if (t.n < 1) bad(); break;
    case 'B': if (t.n < 2) bad(); break;
    case 'C': if (t.n < 2) bad(); break;
    case 'D': if (t.n < 3 || (t.affine && t.n < 4)) bad(); break;
    case 'E': if (t.n < 6 || t.n > 8) bad(); break;
    case 'F': if (t.n != 4) bad(); break;
    case 'G': if (t.n != 2) bad(); break;
    default: bad();
  }
  return t;
}

IntMatrix finite_matrix(char family, int n) {
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (family) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      if (family == 'B') a[n - 1][n - 2] = -2;
      if (family == 'C') a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default: throw InputError("unknown family");
  }
  return a;
}

// Prepends the affine node alpha_0 = delta - theta.
IntMatrix affine_matrix(char family, int n) {
  GCM fin(finite_matrix(family, n));
  const IntMatrix& a = fin.entries();
  const auto& d = fin.symmetrizer();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    roots.insert(r);
    queue.push_back(r);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> beta = queue[k];
      int pairing = 0;
      for (int i = 0; i < n; ++i) pairing += beta[i] * a[j][i];
      beta[j] -= pairing;
      if (std::all_of(beta.begin(), beta.end(), [](int c) { return c >= 0; }) &&
          roots.insert(beta).second)
        queue.push_back(beta);
    }
  }
  auto height = [](const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::vector<int> theta = *std::max_element(
      roots.begin(), roots.end(),
      [&](const auto& x, const auto& y) { return height(x) < height(y); });
  Rational norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm += Rational(theta[i] * theta[j] * d[i] * a[i][j]);
  IntMatrix out(n + 1, std::vector<int>(n + 1, 0));
  out[0][0] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i + 1][j + 1] = a[i][j];
  for (int j = 0; j < n; ++j) {
    Rational coroot_pair = 0;  // <theta^vee, alpha_j>
    for (int i = 0; i < n; ++i) coroot_pair += Rational(2 * d[i] * theta[i] * a[i][j]) / norm;
    int root_pair = 0;  // <alpha_j^vee, theta>
    for (int i = 0; i < n; ++i) root_pair += theta[i] * a[j][i];
    out[0][j + 1] = -static_cast<int>(coroot_pair.get_num().get_si());
    out[j + 1][0] = -root_pair;
  }
  return out;
}

std::string display_name(char family, int n, bool affine) {
  std::string s(1, family);
  s += "_" + std::to_string(n);
  if (affine) s += "^(1)";
  return s;
}

std::vector<std::pair<std::string, TypeName>> candidates_of_rank(int r, bool affine) {
  std::vector<std::pair<std::string, TypeName>> out;
  auto add = [&](char f, int n) {
    out.push_back({display_name(f, n, affine), TypeName{f, n, affine}});
  };
  int n = affine ? r - 1 : r;
  if (n < 1) return out;
  add('A', n);
  if (n >= 2) add('C', n);
  if (n >= 3) add('B', n);
  if (n >= 4) add('D', n);
  if (n >= 6 && n <= 8) add('E', n);
  if (n == 4) add('F', 4);
  if (n == 2) add('G', 2);
  return out;
}

IntMatrix matrix_of(const TypeName& t) {
  return t.affine ? affine_matrix(t.family, t.n) : finite_matrix(t.family, t.n);
}

std::vector<int> labels_of(const TypeName& t) {
  std::vector<int> l(t.affine ? t.n + 1 : t.n);
  std::iota(l.begin(), l.end(), t.affine ? 0 : 1);
  return l;
}

}  // namespace

// ------------------------------------------------------------------ GCM

GCM::GCM(IntMatrix a) : a_(std::move(a)) {
  validate_entries(a_);
  d_ = derive_symmetrizer(a_);
}

GCM::GCM(IntMatrix a, std::vector<int> symmetrizer) : a_(std::move(a)), d_(std::move(symmetrizer)) {
  validate_entries(a_);
  if (d_.size() != a_.size()) throw InputError("symmetrizer length does not match the matrix");
  for (int v : d_)
    if (v <= 0) throw InputError("symmetrizer entries must be positive");
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (std::size_t j = 0; j < a_.size(); ++j)
      if (d_[i] * a_[i][j] != d_[j] * a_[j][i])
        throw InputError("symmetrizer does not symmetrize the matrix");
}

bool GCM::symmetric() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < i; ++j)
      if (a_[i][j] != a_[j][i]) return false;
  return true;
}

std::optional<int> m_value(const GCM& a, int i, int j) {
  if (i == j) throw DomainError("m_value needs distinct nodes");
  if (i < 0 || j < 0 || i >= a.rank() || j >= a.rank()) throw DomainError("node out of range");
  switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return std::nullopt;
  }
}

std::optional<std::vector<int>> find_isomorphism(const GCM& a, const GCM& b) {
  const int n = a.rank();
  if (b.rank() != n) return std::nullopt;
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) ok = a(c, p[k]) == b(i, k) && a(p[k], c) == b(k, i);
      if (!ok) continue;
      p[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return p;
}

Classification classify(const GCM& a) {
  auto b = symmetrized(a);
  const int n = a.rank();
  Classification::Kind kind;
  if (positive_definite(b)) {
    kind = Classification::Kind::Finite;
  } else if (rank_rational(b) == n - 1 && positive_semidefinite(b)) {
    kind = Classification::Kind::Affine;
  } else {
    return {Classification::Kind::Indefinite, {}};
  }
  std::string name;
  for (const auto& comp : components_of(a.entries())) {
    GCM sub(submatrix(a.entries(), comp));
    bool sub_affine = !positive_definite(symmetrized(sub));
    std::string found;
    for (const auto& [cand, t] : candidates_of_rank(sub.rank(), sub_affine)) {
      if (find_isomorphism(sub, GCM(matrix_of(t)))) {
        found = cand;
        break;
      }
    }
    if (found.empty()) return {kind, {}};
    name += (name.empty() ? "" : "x") + found;
  }
  return {kind, name};
}

std::vector<std::vector<int>> components(const GCM& a) { return components_of(a.entries()); }

GCM named_gcm(std::string_view name) { return GCM(matrix_of(parse_type_name(name))); }

// ------------------------------------------------------------ RootDatum

std::shared_ptr<const RootDatum> RootDatum::make(GCM gcm, std::vector<int> labels,
                                                 std::string name) {
  if (labels.empty()) {
    labels.resize(static_cast<std::size_t>(gcm.rank()));
    std::iota(labels.begin(), labels.end(), 1);
  }
  if (static_cast<int>(labels.size()) != gcm.rank())
    throw InputError("label count does not match the rank");
  std::set<int> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw InputError("node labels must be distinct");
  return std::shared_ptr<const RootDatum>(
      new RootDatum(std::move(gcm), std::move(labels), std::move(name)));
}

std::shared_ptr<const RootDatum> RootDatum::named(std::string_view type) {
  TypeName t = parse_type_name(type);
  return make(GCM(matrix_of(t)), labels_of(t), display_name(t.family, t.n, t.affine));
}

int RootDatum::index_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown node label " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

std::shared_ptr<void> RootDatum::cache_slot(const std::string& key,
                                            std::shared_ptr<void> (*create)()) const {
  std::lock_guard lock(cache_mutex_);
  for (auto& [k, v] : caches_)
    if (k == key) return v;
  caches_.emplace_back(key, create());
  return caches_.back().second;
}

// -------------------------------------------------------------- folding

bool FoldingData::is_identity() const {
  for (std::size_t p = 0; p < sigma.size(); ++p)
    if (sigma[p] != static_cast<int>(p)) return false;
  return true;
}

GCM fold_gcm(const GCM& ambient, const std::vector<std::vector<int>>& orbits) {
  const std::size_t n = orbits.size();
  IntMatrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int q = orbits[j].front();
      int s = 0;
      for (int p : orbits[i]) s += ambient(p, q);
      a[i][j] = s;
    }
  return GCM(a);
}

void validate_folding(const FoldingData& f, const GCM& folded) {
  const GCM& amb = f.ambient->gcm();
  const int n = amb.rank();
  if (static_cast<int>(f.sigma.size()) != n) throw UnsupportedFolding("sigma has the wrong size");
  if (!amb.symmetric()) throw UnsupportedFolding("ambient datum is not symmetric");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (amb(f.sigma[p], f.sigma[q]) != amb(p, q))
        throw UnsupportedFolding("sigma does not preserve the ambient Cartan matrix");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < f.orbits.size(); ++i) {
    const auto& orb = f.orbits[i];
    for (int p : orb) {
      if (p < 0 || p >= n || f.orbit_of[p] != static_cast<int>(i))
        throw UnsupportedFolding("orbit map inconsistent");
      ++seen[p];
      std::size_t cycle = 1;
      for (int q = f.sigma[p]; q != p; q = f.sigma[q]) {
        if (std::find(orb.begin(), orb.end(), q) == orb.end())
          throw UnsupportedFolding("orbit is not sigma-stable");
        ++cycle;
      }
      if (cycle != orb.size()) throw UnsupportedFolding("orbit is not a single sigma-orbit");
      for (int q : orb)
        if (p != q && amb(p, q) != 0)
          throw UnsupportedFolding("nodes of one sigma-orbit are adjacent");
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw UnsupportedFolding("orbits do not partition the ambient nodes");
  if (!(fold_gcm(amb, f.orbits) == folded))
    throw UnsupportedFolding("folded ambient matrix does not reproduce the input");
}

namespace {

struct FoldRule {
  TypeName target;
  TypeName ambient;
  std::vector<std::pair<int, int>> sigma;  // label -> label, identity elsewhere
};

std::vector<FoldRule> fold_rules(int r) {
  std::vector<FoldRule> rules;
  if (r >= 2) {
    std::vector<std::pair<int, int>> s;
    for (int p = 1; p < 2 * r; ++p) s.push_back({p, 2 * r - p});
    rules.push_back({{'C', r, false}, {'A', 2 * r - 1, false}, s});
  }
  if (r >= 3) rules.push_back({{'B', r, false}, {'D', r + 1, false}, {{r, r + 1}, {r + 1, r}}});
  if (r == 4) rules.push_back({{'F', 4, false}, {'E', 6, false}, {{1, 6}, {6, 1}, {3, 5}, {5, 3}}});
  if (r == 2) rules.push_back({{'G', 2, false}, {'D', 4, false}, {{1, 3}, {3, 4}, {4, 1}}});
  const int n = r - 1;  // affine rank r has n + 1 nodes
  if (n >= 2) {
    std::vector<std::pair<int, int>> s;
    for (int p = 0; p < 2 * n; ++p) s.push_back({p, (2 * n - p) % (2 * n)});
    rules.push_back({{'C', n, true}, {'A', 2 * n - 1, true}, s});
  }
  if (n >= 3) rules.push_back({{'B', n, true}, {'D', n + 1, true}, {{n, n + 1}, {n + 1, n}}});
  if (n == 4) rules.push_back({{'F', 4, true}, {'E', 6, true}, {{1, 6}, {6, 1}, {3, 5}, {5, 3}}});
  if (n == 2) rules.push_back({{'G', 2, true}, {'D', 4, true}, {{1, 3}, {3, 4}, {4, 1}}});
  return rules;
}

struct ComponentFold {
  GCM ambient;
  std::vector<int> sigma;
  std::vector<std::vector<int>> orbits;  // component-local node -> ambient-local nodes
};

ComponentFold fold_component(const GCM& comp) {
  if (comp.symmetric()) {
    std::vector<int> id(static_cast<std::size_t>(comp.rank()));
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> orbits;
    for (int i : id) orbits.push_back({i});
    return {comp, id, orbits};
  }
  for (const auto& rule : fold_rules(comp.rank())) {
    if (!find_isomorphism(comp, GCM(matrix_of(rule.target)))) continue;
    GCM amb(matrix_of(rule.ambient));
    std::vector<int> labels = labels_of(rule.ambient);
    auto idx = [&](int label) {
      return static_cast<int>(std::find(labels.begin(), labels.end(), label) - labels.begin());
    };
    std::vector<int> sigma(static_cast<std::size_t>(amb.rank()));
    std::iota(sigma.begin(), sigma.end(), 0);
    for (auto [from, to] : rule.sigma) sigma[idx(from)] = idx(to);
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      if (seen[p]) continue;
      std::vector<int> cyc;
      for (int q = static_cast<int>(p); !seen[q]; q = sigma[q]) {
        seen[q] = true;
        cyc.push_back(q);
      }
      std::sort(cyc.begin(), cyc.end());
      cycles.push_back(cyc);
    }
    GCM folded = fold_gcm(amb, cycles);
    auto perm = find_isomorphism(folded, comp);
    if (!perm) continue;
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < comp.rank(); ++i) orbits.push_back(cycles[(*perm)[i]]);
    return {amb, sigma, orbits};
  }
  std::string what = classify(comp).name;
  throw UnsupportedFolding("no tabled symmetric folding for non-symmetric component" +
                           (what.empty() ? std::string() : " of type " + what));
}

}  // namespace

FoldingData build_folding(const DatumPtr& datum) {
  const GCM& a = datum->gcm();
  const int n = a.rank();
  if (a.symmetric()) {
    FoldingData f;
    f.ambient = datum;
    f.sigma.resize(static_cast<std::size_t>(n));
    std::iota(f.sigma.begin(), f.sigma.end(), 0);
    f.orbit_of = f.sigma;
    for (int i = 0; i < n; ++i) f.orbits.push_back({i});
    return f;
  }
  auto comps = components_of(a.entries());
  std::vector<ComponentFold> folds;
  int total = 0;
  for (const auto& c : comps) {
    folds.push_back(fold_component(GCM(submatrix(a.entries(), c))));
    total += folds.back().ambient.rank();
  }
  IntMatrix amb(total, std::vector<int>(total, 0));
  FoldingData f;
  f.sigma.resize(static_cast<std::size_t>(total));
  f.orbits.resize(static_cast<std::size_t>(n));
  f.orbit_of.resize(static_cast<std::size_t>(total));
  int offset = 0;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& cf = folds[k];
    const int m = cf.ambient.rank();
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) amb[offset + p][offset + q] = cf.ambient(p, q);
      f.sigma[offset + p] = offset + cf.sigma[p];
    }
    for (std::size_t i = 0; i < comps[k].size(); ++i) {
      int node = comps[k][i];
      for (int p : cf.orbits[i]) {
        f.orbits[node].push_back(offset + p);
        f.orbit_of[offset + p] = node;
      }
    }
    offset += m;
  }
  std::string amb_name;
  if (comps.size() == 1) {
    for (const auto& rule : fold_rules(n))
      if (find_isomorphism(a, GCM(matrix_of(rule.target)))) {
        amb_name = display_name(rule.ambient.family, rule.ambient.n, rule.ambient.affine);
        break;
      }
  }
  if (!amb_name.empty()) {
    f.ambient = RootDatum::named(amb_name);
  } else {
    f.ambient = RootDatum::make(GCM(amb));
  }
  validate_folding(f, a);
  return f;
}

}  // namespace tnnflag
