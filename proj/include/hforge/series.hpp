#ifndef HFORGE_SERIES_HPP
#define HFORGE_SERIES_HPP

#include "hforge/field.hpp"

#include <map>

namespace hforge {

// Truncated Puiseux series in one local parameter.  A term is c * s^(k/ram)
// stored at integer key k; every stored key is < trunc (exclusive bound on
// knowledge, also in key units).  ram is 1 or 2; no mixed-ram arithmetic.
struct Puiseux {
  ChartPtr chart;
  std::string param = "s";
  int ram = 1;
  std::map<long, Fe> c;
  long trunc = 0;

  static constexpr long kExact = 1L << 40;  // truncation bound for exact data

  static Puiseux zero(ChartPtr chart, int ram, long trunc, std::string param = "s");

  Fe coeff_key(long k) const;       // 0 when absent (and below trunc)
  Fe coeff_exp(long num, long den) const;  // exponent num/den in lowest terms
  long min_key() const;             // smallest stored key; trunc when none
  bool known_zero() const { return c.empty(); }
  bool has_residue() const;         // nonzero coefficient at exponent -1

  Puiseux truncated(long new_trunc) const;
  Puiseux lifted(int new_ram) const;  // ram 1 -> 2 key doubling

  Puiseux operator-() const;
  Puiseux operator+(const Puiseux& o) const;
  Puiseux operator-(const Puiseux& o) const;
  Puiseux operator*(const Puiseux& o) const;
  Puiseux scaled(const Fe& f) const;
  Puiseux shifted(long key_shift) const;  // multiply by s^(key_shift/ram)
  Puiseux inverted() const;
  Puiseux operator/(const Puiseux& o) const { return *this * o.inverted(); }

  // term-wise d/ds and its inverse; antiderivative throws on a residue term
  Puiseux derivative() const;
  Puiseux antiderivative() const;

  std::string to_text() const;
};

// sqrt of a series of the form 1 + u, u supported on positive keys only
Puiseux sqrt_one_plus(const Puiseux& u);

// Expansion of a field element, viewed as a function of `x`, about a finite
// point (local parameter x - point, ram 1).  Coefficients are x-free field
// elements.  order = number of key steps requested above the leading term.
Puiseux expand_at_point(const Fe& f, const std::string& x, const Fe& point, long order);

// Expansion about x = infinity in the parameter xt = 1/x.  When the chart
// carries a root symbol whose defining polynomial involves x (the curve
// branch y), the expansion uses its Puiseux branch with leading coefficient
// +1 and ram 2; otherwise ram 1.
Puiseux expand_at_infinity(const Fe& f, const std::string& x, long order);

// series of the designated x-dependent root symbol itself (branch +1)
Puiseux root_branch_at_infinity(const ChartPtr& chart, const std::string& x, long order);

}  // namespace hforge

#endif
