#include "hforge/series.hpp"

#include <algorithm>
#include <sstream>

namespace hforge {

Puiseux Puiseux::zero(ChartPtr chart, int ram, long trunc, std::string param) {
  Puiseux s;
  s.chart = std::move(chart);
  s.ram = ram;
  s.trunc = trunc;
  s.param = std::move(param);
  return s;
}

Fe Puiseux::coeff_key(long k) const {
  auto it = c.find(k);
  if (it != c.end()) return it->second;
  return Fe::constant(chart, Rational(0));
}

Fe Puiseux::coeff_exp(long num, long den) const {
  long k = num * ram;
  if (k % den != 0) return Fe::constant(chart, Rational(0));
  return coeff_key(k / den);
}

long Puiseux::min_key() const { return c.empty() ? trunc : c.begin()->first; }

bool Puiseux::has_residue() const {
  auto it = c.find(-ram);
  return it != c.end() && !it->second.is_zero();
}

Puiseux Puiseux::truncated(long new_trunc) const {
  Puiseux r = *this;
  r.trunc = std::min(trunc, new_trunc);
  for (auto it = r.c.begin(); it != r.c.end();)
    it = (it->first >= r.trunc) ? r.c.erase(it) : std::next(it);
  return r;
}

Puiseux Puiseux::lifted(int new_ram) const {
  if (new_ram == ram) return *this;
  if (new_ram % ram != 0) throw engine_error("domain", "incompatible ramification lift");
  long f = new_ram / ram;
  Puiseux r = zero(chart, new_ram, trunc >= kExact ? kExact : trunc * f, param);
  for (auto& [k, v] : c) r.c.emplace(k * f, v);
  return r;
}

static void check_compat(const Puiseux& a, const Puiseux& b) {
  if (a.ram != b.ram) throw engine_error("domain", "mixed-ramification series arithmetic");
  if (a.chart != b.chart) throw engine_error("chart-mismatch", "series on different charts");
}

Puiseux Puiseux::operator-() const {
  Puiseux r = *this;
  for (auto& [k, v] : r.c) v = -v;
  return r;
}

Puiseux Puiseux::operator+(const Puiseux& o) const {
  check_compat(*this, o);
  Puiseux r = zero(chart, ram, std::min(trunc, o.trunc), param);
  for (auto& [k, v] : c)
    if (k < r.trunc) r.c[k] = v;
  for (auto& [k, v] : o.c) {
    if (k >= r.trunc) continue;
    auto it = r.c.find(k);
    if (it == r.c.end()) {
      r.c.emplace(k, v);
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) r.c.erase(it);
    }
  }
  return r;
}

Puiseux Puiseux::operator-(const Puiseux& o) const { return *this + (-o); }

Puiseux Puiseux::operator*(const Puiseux& o) const {
  check_compat(*this, o);
  long ma = min_key(), mb = o.min_key();
  long t = std::min(trunc >= kExact ? kExact : trunc + mb,
                    o.trunc >= kExact ? kExact : o.trunc + ma);
  t = std::min(t, kExact);
  Puiseux r = zero(chart, ram, t, param);
  for (auto& [ka, va] : c)
    for (auto& [kb, vb] : o.c) {
      long k = ka + kb;
      if (k >= t) continue;
      Fe prod = va * vb;
      if (prod.is_zero()) continue;
      auto it = r.c.find(k);
      if (it == r.c.end()) {
        r.c.emplace(k, prod);
      } else {
        it->second = it->second + prod;
        if (it->second.is_zero()) r.c.erase(it);
      }
    }
  return r;
}

Puiseux Puiseux::scaled(const Fe& f) const {
  Puiseux r = zero(chart, ram, trunc, param);
  if (f.is_zero()) return r;
  for (auto& [k, v] : c) {
    Fe p = v * f;
    if (!p.is_zero()) r.c.emplace(k, p);
  }
  return r;
}

Puiseux Puiseux::shifted(long key_shift) const {
  Puiseux r = zero(chart, ram, trunc >= kExact ? kExact : trunc + key_shift, param);
  for (auto& [k, v] : c) r.c.emplace(k + key_shift, v);
  return r;
}

Puiseux Puiseux::inverted() const {
  if (c.empty())
    throw engine_error("singular",
                       "cannot invert a series with no known nonzero term (essential "
                       "singularity or zero denominator at the expansion point)");
  long m = min_key();
  Fe lead = c.begin()->second;
  long work = (trunc >= kExact) ? 64 * ram : trunc - m;  // relative precision
  Fe inv_lead = lead.inverse();
  Puiseux u = zero(chart, ram, work, param);
  for (auto& [k, v] : c) {
    if (k == m) continue;
    if (k - m < work) u.c.emplace(k - m, v * inv_lead);
  }
  Puiseux geom = zero(chart, ram, work, param);
  geom.c.emplace(0, Fe::constant(chart, Rational(1)));
  if (!u.c.empty()) {
    Puiseux power = geom;
    long umin = u.min_key();
    for (long total = umin; total < work; total += umin) {
      power = (power * (-u)).truncated(work);
      if (power.c.empty()) break;
      geom = (geom + power).truncated(work);
    }
  }
  Puiseux r = geom.scaled(inv_lead).shifted(-m);
  return r.truncated(work - m);
}

Puiseux Puiseux::derivative() const {
  Puiseux r = zero(chart, ram, trunc >= kExact ? kExact : trunc - ram, param);
  for (auto& [k, v] : c) {
    if (k == 0) continue;
    r.c.emplace(k - ram, v.scaled(rat(k, ram)));
  }
  return r;
}

Puiseux Puiseux::antiderivative() const {
  if (has_residue())
    throw engine_error("residue", "not integrable in the local field (nonzero residue term)");
  Puiseux r = zero(chart, ram, trunc >= kExact ? kExact : trunc + ram, param);
  for (auto& [k, v] : c) {
    if (k == -ram) continue;  // exactly-zero residue coefficient
    r.c.emplace(k + ram, v.scaled(rat(ram, k + ram)));
  }
  return r;
}

std::string Puiseux::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(v) << ")*" << param << "^";
    if (k % ram == 0) {
      os << k / ram;
    } else {
      os << "(" << k << "/" << ram << ")";
    }
  }
  if (first) os << "0";
  if (trunc < kExact) {
    os << " + O(" << param << "^";
    if (trunc % ram == 0) {
      os << trunc / ram;
    } else {
      os << "(" << trunc << "/" << ram << ")";
    }
    os << ")";
  }
  return os.str();
}

Puiseux sqrt_one_plus(const Puiseux& u) {
  if (!u.c.empty() && u.min_key() <= 0)
    throw engine_error("domain", "sqrt expects a series 1 + (positive-order terms)");
  if (u.trunc >= Puiseux::kExact)
    throw engine_error("domain", "sqrt requires a finite truncation");
  long t = u.trunc;
  Puiseux s = Puiseux::zero(u.chart, u.ram, t, u.param);
  s.c.emplace(0, Fe::constant(u.chart, Rational(1)));
  // match (1 + sum s_k)^2 = 1 + u order by order
  for (long k = 1; k < t; ++k) {
    Fe acc = u.coeff_key(k);
    for (long j = 1; j < k; ++j) {
      auto it = s.c.find(j);
      if (it == s.c.end()) continue;
      auto jt = s.c.find(k - j);
      if (jt == s.c.end()) continue;
      acc = acc - it->second * jt->second;
    }
    acc = acc.scaled(Rational(1, 2));
    if (!acc.is_zero()) s.c.emplace(k, acc);
  }
  return s;
}

// ---- expansions ------------------------------------------------------------

namespace {

std::map<int, Fe> x_profile(const Poly& p, VarId x, const ChartPtr& chart) {
  std::map<int, Fe> out;
  for (auto& [e, q] : p.coeffs_in(x)) out.emplace(e, Fe::from_poly(chart, q));
  return out;
}

// Laurent data of P(1/xt), exact
Puiseux poly_at_infinity(const Poly& p, VarId x, const ChartPtr& chart, int ram) {
  Puiseux r = Puiseux::zero(chart, ram, Puiseux::kExact, "xt");
  for (auto& [e, q] : x_profile(p, x, chart))
    if (!q.is_zero()) r.c.emplace(-static_cast<long>(e) * ram, q);
  return r;
}

// P(point + s) as an exact polynomial series in s
Puiseux poly_at_point(const Poly& p, VarId x, const Fe& point, const ChartPtr& chart) {
  auto prof = x_profile(p, x, chart);
  int deg = prof.empty() ? 0 : prof.rbegin()->first;
  Fe zero = Fe::constant(chart, Rational(0));
  std::vector<Fe> cur;  // Horner in (point + s)
  for (int k = deg; k >= 0; --k) {
    std::vector<Fe> next(cur.size() + 1, zero);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] = next[i] + cur[i] * point;
      next[i + 1] = next[i + 1] + cur[i];
    }
    auto it = prof.find(k);
    if (it != prof.end()) next[0] = next[0] + it->second;
    cur = std::move(next);
  }
  Puiseux r = Puiseux::zero(chart, 1, Puiseux::kExact, "s");
  for (std::size_t i = 0; i < cur.size(); ++i)
    if (!cur[i].is_zero()) r.c.emplace(static_cast<long>(i), cur[i]);
  return r;
}

VarId x_root_of(const ChartPtr& chart, VarId x) {
  VarId found = -1;
  for (VarId r : chart->roots()) {
    if (chart->root_rhs(r).contains(x)) {
      if (found != -1) throw engine_error("domain", "two x-dependent root symbols");
      found = r;
    }
  }
  return found;
}

}  // namespace

Puiseux root_branch_at_infinity(const ChartPtr& chart, const std::string& x, long order) {
  VarId xv = chart->var(x);
  VarId y = x_root_of(chart, xv);
  if (y < 0) throw engine_error("domain", "chart has no x-dependent root symbol");
  const Poly& D = chart->root_rhs(y);
  int deg = D.degree_in(xv);
  long lead_key = -2L * deg;  // ram-2 key of the leading Laurent term of D
  Puiseux Ds = poly_at_infinity(D, xv, chart, 2);
  Fe lead = Ds.coeff_key(lead_key);
  if (!lead.is_one()) throw engine_error("domain", "defining polynomial is not monic in x");
  Puiseux u = Ds.shifted(-lead_key).truncated(order);
  u.c.erase(0);
  Puiseux s = sqrt_one_plus(u);
  return s.shifted(lead_key / 2);  // branch with leading coefficient +1
}

Puiseux expand_at_infinity(const Fe& f, const std::string& x, long order) {
  const ChartPtr& chart = f.chart();
  VarId xv = chart->var(x);
  VarId y = x_root_of(chart, xv);
  bool branched = (y >= 0) && (f.num().contains(y) || f.den().contains(y));
  int ram = branched ? 2 : 1;
  long t = order * ram;  // requested truncation in key units
  long mD = -static_cast<long>(f.den().degree_in(xv)) * ram;
  if (!branched) {
    long mN = -static_cast<long>(f.num().degree_in(xv)) * ram;
    // to know N/D below key t: t_N >= t + mD, t_D >= t + 2 mD - mN
    Puiseux N = poly_at_infinity(f.num(), xv, chart, ram).truncated(t + mD + 2);
    Puiseux D = poly_at_infinity(f.den(), xv, chart, ram).truncated(t + 2 * mD - mN + 2);
    return (N * D.inverted()).truncated(t);
  }
  Poly A = f.num().coeff_of(y, 0);
  Poly B = f.num().coeff_of(y, 1);
  long my = -static_cast<long>(chart->root_rhs(y).degree_in(xv));  // key of y's lead
  long mA = A.is_zero() ? 0 : -2L * A.degree_in(xv);
  long mB = B.is_zero() ? 0 : -2L * B.degree_in(xv) + my;  // min key of B*y
  long mN = A.is_zero() ? mB : (B.is_zero() ? mA : std::min(mA, mB));
  long t_num = t + mD + 2;
  Puiseux As = poly_at_infinity(A, xv, chart, 2).truncated(t_num);
  Puiseux Bs = poly_at_infinity(B, xv, chart, 2).truncated(t_num - my + 2);
  Puiseux Ds = poly_at_infinity(f.den(), xv, chart, 2).truncated(t + 2 * mD - mN + 2);
  Puiseux num = As;
  if (!B.is_zero()) {
    Puiseux ybr = root_branch_at_infinity(chart, x, t_num - mB + 2);
    num = As + Bs * ybr;
  }
  return (num * Ds.inverted()).truncated(t);
}

Puiseux expand_at_point(const Fe& f, const std::string& x, const Fe& point, long order) {
  const ChartPtr& chart = f.chart();
  VarId xv = chart->var(x);
  VarId y = x_root_of(chart, xv);
  if (y >= 0 && (f.num().contains(y) || f.den().contains(y)))
    throw engine_error("domain", "branch expansions at finite points are not supported");
  if (point.chart() != chart) throw engine_error("chart-mismatch", "expansion point chart");
  Puiseux N = poly_at_point(f.num(), xv, point, chart);
  Puiseux D = poly_at_point(f.den(), xv, point, chart);
  long lead = D.c.empty() ? 0 : D.min_key();
  long work = order + lead + 8;
  return (N.truncated(work) * D.truncated(work).inverted()).truncated(order);
}

}  // namespace hforge
