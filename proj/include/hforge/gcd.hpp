#ifndef HFORGE_GCD_HPP
#define HFORGE_GCD_HPP

#include "hforge/poly.hpp"

namespace hforge {

// Primitive gcd (positive leading rational content removed), memoized.
// Content/primitive-part split plus subresultant PRS on a chosen main
// variable; all symbols are treated as free.
Poly poly_gcd(const Poly& a, const Poly& b);

void clear_gcd_cache();

}  // namespace hforge

#endif
