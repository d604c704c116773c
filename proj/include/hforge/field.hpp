#ifndef HFORGE_FIELD_HPP
#define HFORGE_FIELD_HPP

#include "hforge/chart.hpp"

#include <map>
#include <string>
#include <vector>

namespace hforge {

// Exact rational function on a chart.  Canonical form: numerator multilinear
// in every root symbol, denominator free of root symbols, monic in graded
// lex, gcd(num, den) = 1 with all symbols treated as free.  Equality of
// values is therefore structural equality.
class FieldElement {
 public:
  FieldElement() = default;  // invalid until assigned

  static FieldElement constant(ChartPtr chart, const Rational& c);
  static FieldElement integer(ChartPtr chart, long n) { return constant(chart, rat(n)); }
  static FieldElement variable(ChartPtr chart, const std::string& name);
  static FieldElement from_poly(ChartPtr chart, Poly p);
  static FieldElement fraction(ChartPtr chart, Poly num, Poly den);

  const ChartPtr& chart() const { return chart_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational to_rational() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  std::size_t hash() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(int e) const;

  FieldElement operator+(long n) const;
  FieldElement operator-(long n) const;
  FieldElement operator*(long n) const;
  FieldElement scaled(const Rational& c) const;

  // chain rule through root symbols and opaque kernels; v must be a declared
  // coordinate or transcendental
  FieldElement derivative(const std::string& var) const;
  FieldElement derivative(VarId v) const;

  // simultaneous substitution; unmapped declared symbols must exist on the
  // target chart; root images are checked against the defining relation
  FieldElement substitute(const std::map<VarId, FieldElement>& images, ChartPtr target) const;
  FieldElement substitute(const std::map<VarId, FieldElement>& images) const;

  bool depends_on(VarId v) const;

 private:
  FieldElement(ChartPtr chart, Poly num, Poly den)
      : chart_(std::move(chart)), num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  ChartPtr chart_;
  Poly num_{};
  Poly den_{Rational(1)};
};

using Fe = FieldElement;

// ---- opaque kernels ----------------------------------------------------

struct AtomInfo {
  std::string fn;
  std::vector<int> partials;  // sorted, 1-based argument slots
  std::vector<FieldElement> args;
};

// Returns the atom variable for fn with the given partials/arguments
// (arguments are normalized first; partial lists are kept sorted).
VarId intern_atom(const ChartPtr& chart, const std::string& fn,
                  std::vector<int> partials, std::vector<FieldElement> args);
const AtomInfo* atom_info(VarId v);
FieldElement opaque_call(const ChartPtr& chart, const std::string& fn,
                         std::vector<FieldElement> args);

// ---- canonical printing -------------------------------------------------

std::string to_string(const Poly& p);
std::string to_string(const FieldElement& f);

}  // namespace hforge

#endif
