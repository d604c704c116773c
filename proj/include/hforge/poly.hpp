#ifndef HFORGE_POLY_HPP
#define HFORGE_POLY_HPP

#include "hforge/symtab.hpp"
#include "hforge/util.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hforge {

// Power product, factors sorted by variable significance (most significant
// first), exponents >= 1.
struct Monomial {
  std::vector<std::pair<VarId, int>> factors;

  int degree() const;
  int exponent(VarId v) const;
  bool empty() const { return factors.empty(); }
  bool operator==(const Monomial& o) const { return factors == o.factors; }
  std::size_t hash() const;

  static Monomial one() { return {}; }
  static Monomial var(VarId v, int e = 1);
};

// graded lex; returns <0, 0, >0 with "larger" meaning earlier in print order
int monomial_compare(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
// exact division, nullopt when b does not divide a
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);

struct Term {
  Rational coeff;
  Monomial mono;
};

// Sparse multivariate polynomial over Q, terms sorted descending (leading
// term first).  Immutable by convention: operations return new values.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  static Poly variable(VarId v, int exp = 1);
  static Poly constant(long n) { return Poly(rat(n)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const Rational& lc() const;          // leading coefficient
  const Monomial& lm() const;          // leading monomial
  int total_degree() const;
  int degree_in(VarId v) const;
  bool contains(VarId v) const;
  void vars_into(std::vector<VarId>& out) const;  // distinct vars, unsorted

  bool operator==(const Poly& o) const;
  std::size_t hash() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Rational& c, const Monomial& m) const;
  Poly mul_scalar(const Rational& c) const;
  Poly pow(int e) const;

  // derivative treating every symbol as free (no chain rule)
  Poly derivative_free(VarId v) const;

  // coefficient map with respect to one variable
  std::map<int, Poly> coeffs_in(VarId v) const;
  static Poly from_coeffs_in(VarId v, const std::map<int, Poly>& cs);
  Poly coeff_of(VarId v, int k) const;

  // exact division; nullopt when not divisible
  std::optional<Poly> divided_by(const Poly& d) const;

  // rational content (gcd of coefficients with sign of the leading one) and
  // the primitive integer part
  Rational rational_content() const;

  static Poly from_terms(std::vector<Term> ts);  // sorts and combines

 private:
  std::vector<Term> terms_;
  mutable std::size_t hash_ = 0;  // lazily cached, 0 = not computed
};

}  // namespace hforge

#endif
