#include "tnnflag/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "tnnflag/errors.hpp"

namespace tnnflag {

std::size_t memo_limit() {
  static const std::size_t limit = [] {
    const char* env = std::getenv("TNNFLAG_MEMO_LIMIT");
    if (env == nullptr) return std::size_t{1} << 20;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    return (end == env) ? std::size_t{1} << 20 : static_cast<std::size_t>(v);
  }();
  return limit;
}

namespace {

bool negative_vector(const long* col, int r, int stride) {
  for (int k = 0; k < r; ++k) {
    long c = col[k * stride];
    if (c != 0) return c < 0;
  }
  return false;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (int x : w) h = h * 31 + static_cast<std::size_t>(x);
    return h;
  }
};

struct WeylCache {
  std::mutex mu;
  std::map<std::pair<std::vector<long>, std::vector<long>>, bool> bruhat;
  std::map<std::pair<Word, Word>, std::vector<BraidMove>> paths;
  std::map<std::pair<Word, int>, std::vector<BraidMove>> suffix_paths;
};

WeylCache& cache_of(const DatumPtr& d) {
  auto slot = d->cache_slot("weyl", [] { return std::shared_ptr<void>(std::make_shared<WeylCache>()); });
  return *static_cast<WeylCache*>(slot.get());
}

template <class Map>
void trim_memo(Map& m) {
  if (m.size() >= memo_limit()) m.clear();
}

void check_letter(const DatumPtr& d, int i) {
  if (i < 0 || i >= d->rank()) throw InputError("node index " + std::to_string(i) + " out of range");
}

}  // namespace

// ---------------------------------------------------------- WeylElement

WeylElement::WeylElement(DatumPtr d, std::vector<long> m) : datum_(std::move(d)), m_(std::move(m)) {
  compute_word();
}

void WeylElement::compute_word() {
  const int r = rank();
  std::vector<long> u = m_;
  Word rev;
  for (;;) {
    int found = -1;
    for (int i = 0; i < r && found < 0; ++i)
      if (negative_vector(&u[static_cast<std::size_t>(i)], r, r)) found = i;
    if (found < 0) break;
    // u := u s_found
    for (int j = 0; j < r; ++j) {
      if (j == found) continue;
      long a = datum_->a(found, j);
      if (a == 0) continue;
      for (int k = 0; k < r; ++k) u[k * r + j] -= a * u[k * r + found];
    }
    for (int k = 0; k < r; ++k) u[k * r + found] = -u[k * r + found];
    rev.push_back(found);
  }
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j)
      if (u[k * r + j] != (k == j ? 1 : 0))
        throw DomainError("matrix is not a Weyl group element");
  word_.assign(rev.rbegin(), rev.rend());
}

WeylElement WeylElement::identity(const DatumPtr& datum) {
  const int r = datum->rank();
  std::vector<long> m(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return WeylElement(datum, std::move(m));
}

WeylElement WeylElement::simple(const DatumPtr& datum, int i) {
  check_letter(datum, i);
  return identity(datum).times_simple(i);
}

WeylElement WeylElement::from_word(const DatumPtr& datum, const Word& word) {
  WeylElement w = identity(datum);
  for (int i : word) {
    check_letter(datum, i);
    w = w.times_simple(i);
  }
  return w;
}

std::vector<long> WeylElement::apply(const std::vector<long>& v) const {
  const int r = rank();
  std::vector<long> out(static_cast<std::size_t>(r), 0);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j) out[k] += m_[k * r + j] * v[j];
  return out;
}

WeylElement WeylElement::times_simple(int i) const {
  check_letter(datum_, i);
  const int r = rank();
  std::vector<long> u = m_;
  for (int j = 0; j < r; ++j) {
    if (j == i) continue;
    long a = datum_->a(i, j);
    if (a == 0) continue;
    for (int k = 0; k < r; ++k) u[k * r + j] -= a * u[k * r + i];
  }
  for (int k = 0; k < r; ++k) u[k * r + i] = -u[k * r + i];
  return WeylElement(datum_, std::move(u));
}

WeylElement WeylElement::simple_times(int i) const {
  check_letter(datum_, i);
  const int r = rank();
  std::vector<long> u = m_;
  for (int j = 0; j < r; ++j) {
    long s = 0;
    for (int k = 0; k < r; ++k) s += datum_->a(i, k) * m_[k * r + j];
    u[i * r + j] = m_[i * r + j] - s;
  }
  return WeylElement(datum_, std::move(u));
}

WeylElement WeylElement::inverse() const {
  WeylElement w = identity(datum_);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) w = w.times_simple(*it);
  return w;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  require_same_datum(u, v);
  const int r = u.rank();
  std::vector<long> m(static_cast<std::size_t>(r * r), 0);
  for (int a = 0; a < r; ++a)
    for (int k = 0; k < r; ++k) {
      long x = u.m_[a * r + k];
      if (x == 0) continue;
      for (int b = 0; b < r; ++b) m[a * r + b] += x * v.m_[k * r + b];
    }
  return WeylElement(u.datum_, std::move(m));
}

bool WeylElement::right_descent(int i) const {
  check_letter(datum_, i);
  return negative_vector(&m_[static_cast<std::size_t>(i)], rank(), rank());
}

bool WeylElement::left_descent(int i) const { return inverse().right_descent(i); }

bool operator==(const WeylElement& a, const WeylElement& b) {
  require_same_datum(a, b);
  return a.m_ == b.m_;
}

bool operator<(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.m_ < b.m_;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const {
  std::size_t h = 0;
  for (long x : w.matrix()) h = h * 1000003 + static_cast<std::size_t>(x);
  return h;
}

bool descent(const WeylElement& w, int i, Side side) {
  return side == Side::Right ? w.right_descent(i) : w.left_descent(i);
}

void require_same_datum(const WeylElement& a, const WeylElement& b) {
  if (!a.datum()->same_as(*b.datum())) throw InstanceMismatch("Weyl elements of different root data");
}

bool is_reduced(const DatumPtr& datum, const Word& word) {
  WeylElement w = WeylElement::identity(datum);
  for (int i : word) {
    check_letter(datum, i);
    if (w.right_descent(i)) return false;
    w = w.times_simple(i);
  }
  return true;
}

void require_reduced(const DatumPtr& datum, const Word& word) {
  if (!is_reduced(datum, word)) throw InputError("word is not reduced");
}

// --------------------------------------------------------------- Bruhat

namespace {

bool bruhat_rec(const WeylElement& v, const WeylElement& w, WeylCache& cache) {
  if (v.length() > w.length()) return false;
  if (v.is_identity()) return true;
  if (v.length() == w.length()) return v == w;
  auto key = std::make_pair(v.matrix(), w.matrix());
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.bruhat.find(key);
    if (it != cache.bruhat.end()) return it->second;
  }
  int s = w.reduced_word().back();
  WeylElement ws = w.times_simple(s);
  bool result = v.right_descent(s) ? bruhat_rec(v.times_simple(s), ws, cache) : bruhat_rec(v, ws, cache);
  std::lock_guard lock(cache.mu);
  trim_memo(cache.bruhat);
  cache.bruhat.emplace(std::move(key), result);
  return result;
}

}  // namespace

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  require_same_datum(v, w);
  return bruhat_rec(v, w, cache_of(w.datum()));
}

// -------------------------------------------------------- subexpressions

Subexpression make_subexpression(const Word& word, std::vector<WeylElement> seq) {
  if (seq.size() != word.size() + 1) throw InputError("subexpression has the wrong length");
  if (!seq.front().is_identity()) throw InputError("subexpression must start at the identity");
  Subexpression sub{word, std::move(seq), {}, {}, {}};
  for (std::size_t k = 0; k < word.size(); ++k) {
    const WeylElement& prev = sub.seq[k];
    const WeylElement& next = sub.seq[k + 1];
    if (next == prev) {
      sub.j_zero.push_back(static_cast<int>(k));
    } else if (next == prev.times_simple(word[k])) {
      (next.length() > prev.length() ? sub.j_plus : sub.j_minus).push_back(static_cast<int>(k));
    } else {
      throw InputError("subexpression step is neither stay nor multiply by the letter");
    }
  }
  return sub;
}

Subexpression positive_subexpression(const WeylElement& v, const Word& word) {
  const DatumPtr& d = v.datum();
  require_reduced(d, word);
  WeylElement w = WeylElement::from_word(d, word);
  if (!bruhat_leq(v, w)) throw OrderViolation("v is not below the product of the word");
  const std::size_t n = word.size();
  std::vector<WeylElement> seq(n + 1, v);
  for (std::size_t k = n; k > 0; --k) {
    WeylElement cand = seq[k].times_simple(word[k - 1]);
    seq[k - 1] = cand.length() < seq[k].length() ? cand : seq[k];
  }
  if (!seq.front().is_identity()) throw OrderViolation("positive subexpression does not start at e");
  return make_subexpression(word, std::move(seq));
}

bool is_distinguished(const Subexpression& sub) {
  for (std::size_t k = 0; k < sub.word.size(); ++k) {
    WeylElement alt = sub.seq[k].times_simple(sub.word[k]);
    if (!bruhat_leq(sub.seq[k + 1], alt)) return false;
  }
  return true;
}

bool is_positive(const Subexpression& sub) {
  for (std::size_t k = 0; k < sub.word.size(); ++k)
    if (sub.seq[k].right_descent(sub.word[k])) return false;
  return true;
}

// --------------------------------------------------------------- Demazure

WeylElement demazure_star(const WeylElement& u, const WeylElement& w) {
  require_same_datum(u, w);
  WeylElement acc = w;
  const Word& word = u.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (!acc.left_descent(*it)) acc = acc.simple_times(*it);
  return acc;
}

WeylElement demazure_circ(const WeylElement& u, const WeylElement& w) {
  require_same_datum(u, w);
  WeylElement acc = w;
  const Word& word = u.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (acc.left_descent(*it)) acc = acc.simple_times(*it);
  return acc;
}

// ------------------------------------------------------------ braid moves

Word apply_braid_move(const Word& word, const BraidMove& mv) {
  if (mv.position < 0 || mv.position + mv.m > static_cast<int>(word.size()))
    throw InputError("braid move outside the word");
  Word out = word;
  for (int k = 0; k < mv.m; ++k) {
    int expect = (k % 2 == 0) ? mv.i : mv.j;
    if (word[mv.position + k] != expect) throw InputError("braid move does not match the word");
    out[mv.position + k] = (k % 2 == 0) ? mv.j : mv.i;
  }
  return out;
}

namespace {

std::vector<BraidMove> moves_from(const DatumPtr& d, const Word& w) {
  std::vector<BraidMove> out;
  const int n = static_cast<int>(w.size());
  for (int p = 0; p + 1 < n; ++p) {
    int i = w[p], j = w[p + 1];
    if (i == j) continue;
    auto m = m_value(d->gcm(), i, j);
    if (!m || p + *m > n) continue;
    bool alternating = true;
    for (int k = 2; k < *m && alternating; ++k) alternating = w[p + k] == (k % 2 == 0 ? i : j);
    if (alternating) out.push_back({p, i, j, *m});
  }
  return out;
}

template <class Goal>
std::vector<BraidMove> bfs(const DatumPtr& d, const Word& from, Goal goal) {
  if (goal(from)) return {};
  std::unordered_map<Word, std::pair<Word, BraidMove>, WordHash> parent;
  std::deque<Word> queue{from};
  parent.emplace(from, std::make_pair(Word{}, BraidMove{-1, 0, 0, 0}));
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (const BraidMove& mv : moves_from(d, cur)) {
      Word next = apply_braid_move(cur, mv);
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, mv));
      if (goal(next)) {
        std::vector<BraidMove> path;
        for (Word at = next; at != from;) {
          const auto& [prev, move] = parent.at(at);
          path.push_back(move);
          at = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(std::move(next));
    }
  }
  throw MismatchError("no braid path found");
}

}  // namespace

std::vector<BraidMove> reduced_word_path(const DatumPtr& datum, const Word& from, const Word& to) {
  require_reduced(datum, from);
  require_reduced(datum, to);
  if (WeylElement::from_word(datum, from) != WeylElement::from_word(datum, to))
    throw MismatchError("reduced words represent different elements");
  WeylCache& cache = cache_of(datum);
  auto key = std::make_pair(from, to);
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.paths.find(key);
    if (it != cache.paths.end()) return it->second;
  }
  auto path = bfs(datum, from, [&](const Word& w) { return w == to; });
  std::lock_guard lock(cache.mu);
  trim_memo(cache.paths);
  cache.paths.emplace(std::move(key), path);
  return path;
}

std::vector<BraidMove> path_to_suffix(const DatumPtr& datum, const Word& from, int i) {
  require_reduced(datum, from);
  if (!WeylElement::from_word(datum, from).right_descent(i))
    throw MismatchError("letter is not a right descent of the word");
  WeylCache& cache = cache_of(datum);
  auto key = std::make_pair(from, i);
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.suffix_paths.find(key);
    if (it != cache.suffix_paths.end()) return it->second;
  }
  auto path = bfs(datum, from, [&](const Word& w) { return !w.empty() && w.back() == i; });
  std::lock_guard lock(cache.mu);
  trim_memo(cache.suffix_paths);
  cache.suffix_paths.emplace(std::move(key), path);
  return path;
}

std::vector<Word> all_reduced_words(const WeylElement& w) {
  std::set<Word> seen{w.reduced_word()};
  std::deque<Word> queue{w.reduced_word()};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (const BraidMove& mv : moves_from(w.datum(), cur)) {
      Word next = apply_braid_move(cur, mv);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<WeylElement> elements_up_to_length(const DatumPtr& datum, int max_length) {
  std::vector<WeylElement> out{WeylElement::identity(datum)};
  std::vector<WeylElement> level = out;
  for (int len = 1; len <= max_length && !level.empty(); ++len) {
    std::unordered_set<WeylElement, WeylElementHash> next_set;
    std::vector<WeylElement> next;
    for (const auto& u : level)
      for (int i = 0; i < datum->rank(); ++i) {
        if (u.right_descent(i)) continue;
        WeylElement v = u.times_simple(i);
        if (next_set.insert(v).second) next.push_back(v);
      }
    std::sort(next.begin(), next.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.reduced_word() < b.reduced_word(); });
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace tnnflag
