#include "hforge/field.hpp"

#include "hforge/gcd.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace hforge {

namespace {

// ---- atom registry ------------------------------------------------------

struct AtomTable {
  std::unordered_map<std::string, VarId> by_text;
  std::unordered_map<VarId, AtomInfo> info;
  std::unordered_map<VarId, std::string> home;  // chart name the atom lives on
};

AtomTable& atoms() {
  static AtomTable t;
  return t;
}

std::vector<VarId> root_vars_of(const Poly& p, const Chart& chart) {
  std::vector<VarId> vs, out;
  p.vars_into(vs);
  for (VarId v : vs)
    if (chart.is_root(v)) out.push_back(v);
  return out;
}

std::vector<VarId> atom_vars_of(const Poly& p) {
  std::vector<VarId> vs, out;
  p.vars_into(vs);
  for (VarId v : vs)
    if (SymbolTable::instance().is_atom(v)) out.push_back(v);
  return out;
}

// p_i^2 -> D_i until multilinear in every root symbol
Poly reduce_roots(Poly p, const Chart& chart) {
  for (bool again = true; again;) {
    again = false;
    for (VarId r : root_vars_of(p, chart)) {
      if (p.degree_in(r) < 2) continue;
      const Poly& D = chart.root_rhs(r);
      auto cs = p.coeffs_in(r);
      Poly out;
      for (auto& [e, c] : cs) {
        Poly piece = c * D.pow(e / 2);
        if (e % 2) piece = piece.mul_term(rat(1), Monomial::var(r, 1));
        out = out + piece;
      }
      p = std::move(out);
      again = true;  // D may feed other root symbols' counting
    }
  }
  return p;
}

}  // namespace

// ---- construction / normalization ---------------------------------------

FieldElement FieldElement::constant(ChartPtr chart, const Rational& c) {
  return FieldElement(std::move(chart), Poly(c), Poly(rat(1)));
}

FieldElement FieldElement::variable(ChartPtr chart, const std::string& name) {
  VarId v = chart->var(name);
  return FieldElement(std::move(chart), Poly::variable(v), Poly(rat(1)));
}

FieldElement FieldElement::from_poly(ChartPtr chart, Poly p) {
  FieldElement f(std::move(chart), std::move(p), Poly(rat(1)));
  f.normalize();
  return f;
}

FieldElement FieldElement::fraction(ChartPtr chart, Poly num, Poly den) {
  FieldElement f(std::move(chart), std::move(num), std::move(den));
  f.normalize();
  return f;
}

void FieldElement::normalize() {
  if (!chart_) throw engine_error("domain", "field element without chart");
  num_ = reduce_roots(std::move(num_), *chart_);
  den_ = reduce_roots(std::move(den_), *chart_);
  if (den_.is_zero())
    throw engine_error("division-by-zero", "division by an expression equal to zero");
  // clear root symbols out of the denominator by conjugation
  for (bool again = true; again;) {
    again = false;
    for (VarId r : root_vars_of(den_, *chart_)) {
      Poly A = den_.coeff_of(r, 0);
      Poly B = den_.coeff_of(r, 1);
      Poly conj = A - B.mul_term(rat(1), Monomial::var(r, 1));
      num_ = reduce_roots(num_ * conj, *chart_);
      den_ = A * A - B * B * chart_->root_rhs(r);
      den_ = reduce_roots(std::move(den_), *chart_);
      if (den_.is_zero())
        throw engine_error("division-by-zero",
                           "denominator is a zero divisor against the root relation");
      again = true;
      break;
    }
  }
  if (num_.is_zero()) {
    den_ = Poly(rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_constant() || g.lc() != 1) {
    num_ = *num_.divided_by(g);
    den_ = *den_.divided_by(g);
  }
  if (!(den_.lc() == 1)) {
    Rational s = Rational(1) / den_.lc();
    num_ = num_.mul_scalar(s);
    den_ = den_.mul_scalar(s);
  }
}

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw engine_error("domain", "not a rational constant");
  if (num_.is_zero()) return Rational(0);
  return num_.lc() / den_.lc();
}

bool FieldElement::operator==(const FieldElement& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::size_t FieldElement::hash() const { return hash_combine(num_.hash(), den_.hash()); }

// ---- arithmetic ----------------------------------------------------------

static void check_chart(const FieldElement& a, const FieldElement& b) {
  if (a.chart() != b.chart())
    throw engine_error("chart-mismatch", "operands live on different charts");
}

FieldElement FieldElement::operator-() const {
  return FieldElement(chart_, -num_, den_);  // still canonical
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_chart(*this, o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_)
    return fraction(chart_, num_ + o.num_, den_);
  Poly g = poly_gcd(den_, o.den_);
  if (g.is_constant()) return fraction(chart_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly d1 = *den_.divided_by(g);
  Poly d2 = *o.den_.divided_by(g);
  return fraction(chart_, num_ * d2 + o.num_ * d1, d1 * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_chart(*this, o);
  if (is_zero() || o.is_zero()) return constant(chart_, Rational(0));
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  Poly n1 = g1.is_constant() ? num_ : *num_.divided_by(g1);
  Poly d2 = g1.is_constant() ? o.den_ : *o.den_.divided_by(g1);
  Poly n2 = g2.is_constant() ? o.num_ : *o.num_.divided_by(g2);
  Poly d1 = g2.is_constant() ? den_ : *den_.divided_by(g2);
  return fraction(chart_, n1 * n2, d1 * d2);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw engine_error("division-by-zero", "division by an expression equal to zero");
  return fraction(chart_, den_, num_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_chart(*this, o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = constant(chart_, Rational(1));
  FieldElement b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FieldElement FieldElement::operator+(long n) const { return *this + constant(chart_, rat(n)); }
FieldElement FieldElement::operator-(long n) const { return *this - constant(chart_, rat(n)); }
FieldElement FieldElement::operator*(long n) const { return scaled(rat(n)); }

FieldElement FieldElement::scaled(const Rational& c) const {
  if (c == 0) return constant(chart_, Rational(0));
  return FieldElement(chart_, num_.mul_scalar(c), den_);  // canonical already
}

bool FieldElement::depends_on(VarId v) const { return num_.contains(v) || den_.contains(v); }

// ---- differentiation -----------------------------------------------------

namespace {

// derivative of a bare polynomial as a field element (chain rule through
// roots and atoms)
FieldElement dpoly(const Poly& p, VarId v, const ChartPtr& chart) {
  FieldElement r = FieldElement::from_poly(chart, p.derivative_free(v));
  for (VarId root : root_vars_of(p, *chart)) {
    const Poly& D = chart->root_rhs(root);
    Poly dD = D.derivative_free(v);
    if (dD.is_zero()) continue;
    // d(root)/dv = D_v / (2 root)
    FieldElement droot = FieldElement::fraction(
        chart, dD, Poly::variable(root).mul_scalar(rat(2)));
    FieldElement pd = FieldElement::from_poly(chart, p.derivative_free(root));
    r = r + pd * droot;
  }
  for (VarId a : atom_vars_of(p)) {
    const AtomInfo* info = atom_info(a);
    FieldElement da = FieldElement::constant(chart, Rational(0));
    for (std::size_t k = 0; k < info->args.size(); ++k) {
      FieldElement darg = info->args[k].derivative(v);
      if (darg.is_zero()) continue;
      auto parts = info->partials;
      parts.push_back(static_cast<int>(k + 1));
      std::sort(parts.begin(), parts.end());
      VarId higher = intern_atom(chart, info->fn, std::move(parts), info->args);
      da = da + FieldElement::from_poly(chart, Poly::variable(higher)) * darg;
    }
    if (da.is_zero()) continue;
    FieldElement pd = FieldElement::from_poly(chart, p.derivative_free(a));
    r = r + pd * da;
  }
  return r;
}

}  // namespace

FieldElement FieldElement::derivative(const std::string& var) const {
  return derivative(chart_->var(var));
}

FieldElement FieldElement::derivative(VarId v) const {
  if (chart_->is_root(v))
    throw engine_error("domain", "differentiation by a root symbol");
  FieldElement dn = dpoly(num_, v, chart_);
  if (den_.is_one()) return dn;
  FieldElement dd = dpoly(den_, v, chart_);
  FieldElement den = from_poly(chart_, den_);
  return dn / den - from_poly(chart_, num_) * dd / (den * den);
}

// ---- substitution ---------------------------------------------------------

namespace {

FieldElement subs_poly(const Poly& p, const std::map<VarId, FieldElement>& images,
                       const ChartPtr& target) {
  FieldElement acc = FieldElement::constant(target, Rational(0));
  for (auto& t : p.terms()) {
    FieldElement term = FieldElement::constant(target, t.coeff);
    for (auto& [v, e] : t.mono.factors) {
      auto it = images.find(v);
      FieldElement img;
      if (it != images.end()) {
        img = it->second;
      } else if (SymbolTable::instance().is_atom(v)) {
        const AtomInfo* info = atom_info(v);
        std::vector<FieldElement> new_args;
        for (auto& a : info->args) new_args.push_back(a.substitute(images, target));
        img = FieldElement::from_poly(
            target, Poly::variable(intern_atom(target, info->fn, info->partials, new_args)));
      } else {
        if (!target->declares(v))
          throw engine_error("domain", "undeclared symbol '" +
                                           SymbolTable::instance().name(v) +
                                           "' on chart " + target->name());
        img = FieldElement::from_poly(target, Poly::variable(v));
      }
      term = term * img.pow(e);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

FieldElement FieldElement::substitute(const std::map<VarId, FieldElement>& images,
                                      ChartPtr target) const {
  for (auto& [v, img] : images) {
    if (img.chart() != target)
      throw engine_error("chart-mismatch", "substitution image on wrong chart");
    if (chart_->is_root(v)) {
      // image must satisfy the defining relation
      FieldElement rel = img * img - subs_poly(chart_->root_rhs(v), images, target);
      if (!rel.is_zero())
        throw engine_error("domain", "root image violates the defining relation of " +
                                         SymbolTable::instance().name(v));
    }
  }
  FieldElement n = subs_poly(num_, images, target);
  FieldElement d = subs_poly(den_, images, target);
  return n / d;
}

FieldElement FieldElement::substitute(const std::map<VarId, FieldElement>& images) const {
  return substitute(images, chart_);
}

// ---- atoms -----------------------------------------------------------------

VarId intern_atom(const ChartPtr& chart, const std::string& fn, std::vector<int> partials,
                  std::vector<FieldElement> args) {
  int arity = chart->function_arity(fn);
  if (arity < 0)
    throw engine_error("domain", "undeclared function symbol '" + fn + "'");
  if (static_cast<int>(args.size()) != arity)
    throw engine_error("domain", "function '" + fn + "' expects " + std::to_string(arity) +
                                     " arguments");
  std::sort(partials.begin(), partials.end());
  std::ostringstream text;
  text << fn;
  if (!partials.empty()) {
    text << "_{(";
    for (std::size_t i = 0; i < partials.size(); ++i)
      text << (i ? "," : "") << partials[i];
    text << ")}";
  }
  text << "(";
  for (std::size_t i = 0; i < args.size(); ++i)
    text << (i ? ", " : "") << to_string(args[i]);
  text << ")";
  std::string key = text.str();
  auto& tab = atoms();
  auto it = tab.by_text.find(key);
  if (it != tab.by_text.end()) {
    if (tab.home.at(it->second) != chart->name())
      throw engine_error("domain", "opaque kernel '" + key + "' reused across charts");
    return it->second;
  }
  VarId v = SymbolTable::instance().intern_atom(key);
  tab.by_text.emplace(key, v);
  tab.info.emplace(v, AtomInfo{fn, std::move(partials), std::move(args)});
  tab.home.emplace(v, chart->name());
  return v;
}

const AtomInfo* atom_info(VarId v) {
  auto& tab = atoms();
  auto it = tab.info.find(v);
  if (it == tab.info.end()) throw engine_error("domain", "unknown opaque kernel");
  return &it->second;
}

FieldElement opaque_call(const ChartPtr& chart, const std::string& fn,
                         std::vector<FieldElement> args) {
  VarId v = intern_atom(chart, fn, {}, std::move(args));
  return FieldElement::from_poly(chart, Poly::variable(v));
}

// ---- printing ---------------------------------------------------------------

namespace {

void print_monomial(std::ostream& os, const Monomial& m) {
  bool first = true;
  for (auto& [v, e] : m.factors) {
    if (!first) os << "*";
    first = false;
    os << SymbolTable::instance().name(v);
    if (e != 1) os << "^" << e;
  }
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.mono.empty()) {
      os << rational_to_string(c);
    } else {
      if (c != 1) os << rational_to_string(c) << "*";
      print_monomial(os, t.mono);
    }
  }
  return os.str();
}

std::string to_string(const FieldElement& f) {
  if (f.den().is_one()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace hforge
