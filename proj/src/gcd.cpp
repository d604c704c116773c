#include "hforge/gcd.hpp"

#include <algorithm>
#include <unordered_map>

namespace hforge {

namespace {

Poly make_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = p.rational_content();
  return p.mul_scalar(Rational(1) / c);
}

// a mod b in Q(rest)[v] up to a unit: subresultant pseudo-remainder sequence
Poly prs_gcd(Poly a, Poly b, VarId v);

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_primitive(b);
  if (b.is_zero()) return make_primitive(a);
  if (a.is_constant() || b.is_constant()) return Poly(rat(1));

  std::vector<VarId> va, vb;
  a.vars_into(va);
  b.vars_into(vb);
  std::vector<VarId> shared;
  for (VarId v : va)
    if (std::find(vb.begin(), vb.end(), v) != vb.end()) shared.push_back(v);
  if (shared.empty()) return Poly(rat(1));

  // main variable: smallest max-degree, ties by smaller min-degree
  VarId main = shared[0];
  int best_max = 1 << 30, best_min = 1 << 30;
  for (VarId v : shared) {
    int da = a.degree_in(v), db = b.degree_in(v);
    int mx = std::max(da, db), mn = std::min(da, db);
    if (mx < best_max || (mx == best_max && mn < best_min)) {
      best_max = mx;
      best_min = mn;
      main = v;
    }
  }
  return prs_gcd(a, b, main);
}

struct CacheEntry {
  Poly a, b, g;
};

thread_local std::unordered_map<std::size_t, std::vector<CacheEntry>> g_cache;

Poly content_in(const Poly& p, VarId v, bool& univariate) {
  auto cs = p.coeffs_in(v);
  Poly c;
  univariate = true;
  for (auto& [e, q] : cs) {
    if (!q.is_constant()) univariate = false;
    c = c.is_zero() ? make_primitive(q) : poly_gcd(c, q);
    if (c.is_one()) {
      univariate = false;  // unknown, but no longer needed
      break;
    }
  }
  return c.is_zero() ? Poly(rat(1)) : c;
}

// pseudo-remainder of a by b in v (lc(b)^(da-db+1) * a mod b)
Poly pseudo_rem(const Poly& a, const Poly& b, VarId v) {
  auto bc = b.coeffs_in(v);
  int db = bc.rbegin()->first;
  Poly blc = bc.rbegin()->second;
  Poly rem = a;
  int dr = rem.degree_in(v);
  int steps = dr - db + 1;
  while (!rem.is_zero()) {
    dr = rem.degree_in(v);
    if (dr < db) break;
    Poly rlc = rem.coeff_of(v, dr);
    // rem = blc*rem - rlc*v^(dr-db)*b
    rem = rem * blc - (b * rlc).mul_term(rat(1), Monomial::var(v, dr - db));
    --steps;
  }
  if (steps > 0 && !rem.is_zero()) {
    Poly f = blc.pow(steps);
    rem = rem * f;
  }
  return rem;
}

Poly prs_gcd(Poly a, Poly b, VarId v) {
  bool ua = false, ub = false;
  Poly ca = content_in(a, v, ua);
  Poly cb = content_in(b, v, ub);
  Poly cg = poly_gcd(ca, cb);
  a = *a.divided_by(ca);
  b = *b.divided_by(cb);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);

  // subresultant PRS
  Poly g(rat(1)), h(rat(1));
  while (true) {
    int da = a.degree_in(v), db = b.degree_in(v);
    int delta = da - db;
    Poly r = pseudo_rem(a, b, v);
    if (r.is_zero()) {
      bool dummy;
      Poly pp = *b.divided_by(content_in(b, v, dummy));
      return make_primitive(cg * pp);
    }
    if (r.degree_in(v) == 0) return cg;
    a = b;
    Poly divisor = g * h.pow(delta);
    auto nb = r.divided_by(divisor);
    b = nb ? *nb : make_primitive(r);  // fall back defensively
    g = a.coeff_of(v, a.degree_in(v));
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      auto nh = g.pow(delta).divided_by(h.pow(delta - 1));
      h = nh ? *nh : g;
    }
  }
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_primitive(b);
  if (b.is_zero()) return make_primitive(a);
  std::size_t ha = a.hash(), hb = b.hash();
  bool swapped = hb < ha;
  const Poly& x = swapped ? b : a;
  const Poly& y = swapped ? a : b;
  std::size_t key = hash_combine(x.hash(), y.hash());
  auto& bucket = g_cache[key];
  for (auto& e : bucket)
    if (e.a == x && e.b == y) return e.g;
  Poly gg = gcd_impl(x, y);
  if (g_cache.size() < 400000) bucket.push_back({x, y, gg});
  return gg;
}

void clear_gcd_cache() { g_cache.clear(); }

}  // namespace hforge
