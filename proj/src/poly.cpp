#include "tnnflag/poly.hpp"

#include <algorithm>
#include <sstream>

#include "tnnflag/errors.hpp"

namespace tnnflag {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trimmed_begin = s.find_first_not_of(" \t");
  auto trimmed_end = s.find_last_not_of(" \t");
  if (trimmed_begin == std::string::npos) throw InputError("empty rational literal");
  s = s.substr(trimmed_begin, trimmed_end - trimmed_begin + 1);
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(start), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw InputError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, long degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long Poly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<long>(i);
  return -1;
}

Rational Poly::coeff(long d) const {
  if (d < 0 || d > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(d)];
}

bool Poly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q >= 0; });
}

Poly Poly::scaled(const Rational& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::shift_up(long k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(static_cast<std::size_t>(k), Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shift_down(long k) const {
  if (is_zero() || k == 0) return *this;
  if (order() < k) throw DomainError("shift_down past the lowest term");
  Poly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * static_cast<long>(i));
  r.trim();
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly rem = a;
  Poly quo;
  if (rem.degree() < b.degree()) return {quo, rem};
  quo.c_.assign(static_cast<std::size_t>(rem.degree() - b.degree() + 1), Rational(0));
  const Rational& lb = b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    long shift = rem.degree() - b.degree();
    Rational f = rem.lead() / lb;
    quo.c_[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem.c_[j + static_cast<std::size_t>(shift)] -= f * b.c_[j];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.scaled(1 / b.lead());
  if (b.is_zero()) return a.scaled(1 / a.lead());
  const long k = std::min(a.order(), b.order());
  a = a.shift_down(a.order());
  b = b.shift_down(b.order());
  if (a.is_constant() || b.is_constant()) return monomial(Rational(1), k);
  a = a.scaled(1 / a.lead());
  b = b.scaled(1 / b.lead());
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    if (!r.is_zero()) r = r.scaled(1 / r.lead());
    a = std::move(b);
    b = std::move(r);
  }
  return a.shift_up(k);
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational mag = abs(c);
    bool unit = mag == 1 && i != 0;
    if (!unit) os << tnnflag::to_string(mag);
    if (i >= 1) os << (unit ? "" : "*") << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

namespace {

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_positive_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  Poly q = p.shift_down(p.order());
  if (q.degree() == 0) return 0;
  std::vector<Poly> seq{q, q.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = Poly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  std::vector<int> at_zero, at_inf;
  for (const auto& s : seq) {
    at_zero.push_back(sgn(s.coeff(0)));
    at_inf.push_back(sgn(s.lead()));
  }
  return sign_changes(at_zero) - sign_changes(at_inf);
}

// ------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Poly::exact_div(num_, g);
      den_ = Poly::exact_div(den_, g);
    }
  }
  Rational l = den_.lead();
  if (l != 1) {
    num_ = num_.scaled(1 / l);
    den_ = den_.scaled(1 / l);
  }
}

long RatFunc::valuation() const {
  if (is_zero()) throw DomainError("valuation of zero");
  return num_.order() - den_.order();
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  // Both operands are reduced, so cancelling across is enough.
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly n1 = g1.is_constant() ? num_ : Poly::exact_div(num_, g1);
  Poly d2 = g1.is_constant() ? o.den_ : Poly::exact_div(o.den_, g1);
  Poly n2 = g2.is_constant() ? o.num_ : Poly::exact_div(o.num_, g2);
  Poly d1 = g2.is_constant() ? den_ : Poly::exact_div(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  Rational l = den_.lead();
  if (l != 1) {
    num_ = num_.scaled(1 / l);
    den_ = den_.scaled(1 / l);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(t)");
  return *this *= RatFunc(o.den_, o.num_, Normalized{});
}

std::string RatFunc::to_string() const {
  if (den_ == Poly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace tnnflag
