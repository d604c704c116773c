#ifndef HFORGE_UTIL_HPP
#define HFORGE_UTIL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hforge {

using Rational = mpq_class;

// All engine failures funnel through this; `kind` is a stable machine tag
// ("parse", "domain", "singular", ...) used by the C API and the suites.
class engine_error : public std::runtime_error {
 public:
  engine_error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::size_t hash_combine(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

inline std::size_t hash_mpz(const mpz_class& z) {
  // cheap stable hash: residue mod a large prime plus the sign
  unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), 0x1fffffffffffffffull % 4294967291ul);
  return hash_combine(static_cast<std::size_t>(r),
                      static_cast<std::size_t>(sgn(z) + 2));
}

inline std::size_t hash_rational(const Rational& q) {
  return hash_combine(hash_mpz(q.get_num()), hash_mpz(q.get_den()));
}

std::string rational_to_string(const Rational& q);

}  // namespace hforge

#endif
