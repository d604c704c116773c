#include "hforge/poly.hpp"

#include <algorithm>

namespace hforge {

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : factors) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (auto& [w, e] : factors)
    if (w == v) return e;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto& [v, e] : factors) {
    h = hash_combine(h, static_cast<std::size_t>(v) * 1099511628211ull);
    h = hash_combine(h, static_cast<std::size_t>(e));
  }
  return h;
}

Monomial Monomial::var(VarId v, int e) {
  Monomial m;
  if (e != 0) m.factors.push_back({v, e});
  return m;
}

int monomial_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    VarId va = a.factors[i].first, vb = b.factors[j].first;
    int c = SymbolTable::instance().compare(va, vb);
    if (c < 0) return 1;   // a has the more significant variable -> larger
    if (c > 0) return -1;
    int ea = a.factors[i].second, eb = b.factors[j].second;
    if (ea != eb) return ea > eb ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < a.factors.size()) return 1;
  if (j < b.factors.size()) return -1;
  return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  auto& tab = SymbolTable::instance();
  while (i < a.factors.size() && j < b.factors.size()) {
    int c = tab.compare(a.factors[i].first, b.factors[j].first);
    if (c == 0) {
      r.factors.push_back({a.factors[i].first, a.factors[i].second + b.factors[j].second});
      ++i, ++j;
    } else if (c < 0) {
      r.factors.push_back(a.factors[i++]);
    } else {
      r.factors.push_back(b.factors[j++]);
    }
  }
  while (i < a.factors.size()) r.factors.push_back(a.factors[i++]);
  while (j < b.factors.size()) r.factors.push_back(b.factors[j++]);
  return r;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0;
  for (auto& [v, e] : b.factors) {
    while (i < a.factors.size() && var_before(a.factors[i].first, v))
      r.factors.push_back(a.factors[i++]);
    if (i >= a.factors.size() || a.factors[i].first != v || a.factors[i].second < e)
      return std::nullopt;
    if (a.factors[i].second > e) r.factors.push_back({v, a.factors[i].second - e});
    ++i;
  }
  while (i < a.factors.size()) r.factors.push_back(a.factors[i++]);
  return r;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  auto& tab = SymbolTable::instance();
  while (i < a.factors.size() && j < b.factors.size()) {
    int c = tab.compare(a.factors[i].first, b.factors[j].first);
    if (c == 0) {
      r.factors.push_back({a.factors[i].first, std::min(a.factors[i].second, b.factors[j].second)});
      ++i, ++j;
    } else if (c < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return r;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({c, Monomial::one()});
}

Poly Poly::variable(VarId v, int exp) {
  Poly p;
  if (exp == 0) return Poly(rat(1));
  p.terms_.push_back({rat(1), Monomial::var(v, exp)});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.empty() && terms_[0].coeff == 1;
}

const Rational& Poly::lc() const {
  static const Rational zero(0);
  return terms_.empty() ? zero : terms_.front().coeff;
}

const Monomial& Poly::lm() const {
  static const Monomial one;
  return terms_.empty() ? one : terms_.front().mono;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

bool Poly::contains(VarId v) const {
  for (auto& t : terms_)
    if (t.mono.exponent(v) > 0) return true;
  return false;
}

void Poly::vars_into(std::vector<VarId>& out) const {
  for (auto& t : terms_)
    for (auto& [v, e] : t.mono.factors)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::size_t Poly::hash() const {
  if (hash_ != 0) return hash_;
  std::size_t h = 14695981039346656037ull;
  for (auto& t : terms_) h = hash_combine(h, hash_combine(t.mono.hash(), hash_rational(t.coeff)));
  if (h == 0) h = 1;
  hash_ = h;
  return h;
}

Poly Poly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return monomial_compare(a.mono, b.mono) > 0;
  });
  Poly r;
  for (auto& t : ts) {
    if (t.coeff == 0) continue;
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff += t.coeff;
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  r.hash_ = 0;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = monomial_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(s), terms_[i].mono});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Rational& c, const Monomial& m) const {
  if (c == 0) return Poly();
  Poly r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.coeff * c, monomial_mul(t.mono, m)});
  // multiplying by a monomial preserves the term order
  return r;
}

Poly Poly::mul_scalar(const Rational& c) const { return mul_term(c, Monomial::one()); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].coeff, o.terms_[0].mono);
  if (terms_.size() == 1) return o.mul_term(terms_[0].coeff, terms_[0].mono);
  Poly acc;
  for (auto& t : o.terms_) acc = acc + mul_term(t.coeff, t.mono);
  return acc;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw engine_error("domain", "negative exponent on polynomial");
  Poly r(rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

Poly Poly::derivative_free(VarId v) const {
  std::vector<Term> out;
  for (auto& t : terms_) {
    int e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial m;
    for (auto& [w, k] : t.mono.factors) {
      if (w == v) {
        if (k > 1) m.factors.push_back({w, k - 1});
      } else {
        m.factors.push_back({w, k});
      }
    }
    out.push_back({t.coeff * e, std::move(m)});
  }
  return from_terms(std::move(out));
}

std::map<int, Poly> Poly::coeffs_in(VarId v) const {
  std::map<int, std::vector<Term>> buckets;
  for (auto& t : terms_) {
    int e = t.mono.exponent(v);
    Monomial m;
    for (auto& [w, k] : t.mono.factors)
      if (w != v) m.factors.push_back({w, k});
    buckets[e].push_back({t.coeff, std::move(m)});
  }
  std::map<int, Poly> r;
  for (auto& [e, ts] : buckets) r.emplace(e, from_terms(std::move(ts)));
  return r;
}

Poly Poly::from_coeffs_in(VarId v, const std::map<int, Poly>& cs) {
  std::vector<Term> ts;
  for (auto& [e, p] : cs)
    for (auto& t : p.terms())
      ts.push_back({t.coeff, monomial_mul(t.mono, Monomial::var(v, e))});
  return from_terms(std::move(ts));
}

Poly Poly::coeff_of(VarId v, int k) const {
  std::vector<Term> ts;
  for (auto& t : terms_) {
    if (t.mono.exponent(v) != k) continue;
    Monomial m;
    for (auto& [w, e] : t.mono.factors)
      if (w != v) m.factors.push_back({w, e});
    ts.push_back({t.coeff, std::move(m)});
  }
  return from_terms(std::move(ts));
}

std::optional<Poly> Poly::divided_by(const Poly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (d.is_constant()) return mul_scalar(Rational(1) / d.lc());
  Poly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    auto m = monomial_div(rem.lm(), d.lm());
    if (!m) return std::nullopt;
    Rational c = rem.lc() / d.lc();
    quot.push_back({c, *m});
    rem = rem - d.mul_term(c, *m);
  }
  return from_terms(std::move(quot));
}

Rational Poly::rational_content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (lc() < 0) c = -c;
  return c;
}

}  // namespace hforge
