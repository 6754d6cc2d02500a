#ifndef ASMKIT_PRODUCT_FORMULAS_HPP
#define ASMKIT_PRODUCT_FORMULAS_HPP

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmkit/rational.hpp"

namespace asmkit {

/// n! from a shared table that grows on demand.
inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[static_cast<std::size_t>(n)];
}

namespace detail {

inline Rational fact_ratio(long a, long b) { return Rational(factorial(a), factorial(b)); }

inline BigInt require_integer(const Rational& r, const char* formula) {
  if (!r.is_integer()) throw std::logic_error(std::string(formula) + " produced the non-integer " + r.to_string());
  return r.numerator();
}

}  // namespace detail

/// |ASM(n)| = prod_{i=0}^{n-1} (3i+1)!/(n+i)!.
inline BigInt count_asm(long n) {
  if (n < 1) throw std::invalid_argument("count_asm needs n >= 1");
  Rational r(1);
  for (long i = 0; i < n; ++i) r *= detail::fact_ratio(3 * i + 1, n + i);
  return detail::require_integer(r, "count_asm");
}

/// |OSASM(2n)| = prod_{i=1}^{n} (6i-2)!/(2n+2i)!.
inline BigInt count_osasm_even(long n) {
  if (n < 1) throw std::invalid_argument("count_osasm_even needs n >= 1");
  Rational r(1);
  for (long i = 1; i <= n; ++i) r *= detail::fact_ratio(6 * i - 2, 2 * n + 2 * i);
  return detail::require_integer(r, "count_osasm_even");
}

/// |OSASM(2n+1)| = 2^{n-1} (3n+2)!/(2n+1)! prod_{i=1}^{n} (6i-2)!/(2n+2i+1)!.
inline BigInt count_osasm_odd(long n) {
  if (n < 0) throw std::invalid_argument("count_osasm_odd needs n >= 0");
  Rational r = pow(Rational(2), n - 1) * detail::fact_ratio(3 * n + 2, 2 * n + 1);
  for (long i = 1; i <= n; ++i) r *= detail::fact_ratio(6 * i - 2, 2 * n + 2 * i + 1);
  return detail::require_integer(r, "count_osasm_odd");
}

/// X^O_{2n}(1,-1) = (3n-1)!/(2^n (2n-1)!) prod_{i=1}^{n-1} (6i-2)!/(2n+2i-1)!.
inline BigInt xo_special(long n) {
  if (n < 1) throw std::invalid_argument("xo_special needs n >= 1");
  Rational r = detail::fact_ratio(3 * n - 1, 2 * n - 1) / pow(Rational(2), n);
  for (long i = 1; i < n; ++i) r *= detail::fact_ratio(6 * i - 2, 2 * n + 2 * i - 1);
  return detail::require_integer(r, "xo_special");
}

/// sp_{(n,n,...,0,0)}(1, ..., 1, -1) with 2n+1 ones
///   = 3^{n^2} (3n+2)!/(2^{n+1} (2n+1)!) prod_{i=1}^{n} (6i-2)!/(2n+2i+1)!.
inline BigInt sp_special_value(long n) {
  if (n < 0) throw std::invalid_argument("sp_special_value needs n >= 0");
  Rational r = pow(Rational(3), n * n) * detail::fact_ratio(3 * n + 2, 2 * n + 1) / pow(Rational(2), n + 1);
  for (long i = 1; i <= n; ++i) r *= detail::fact_ratio(6 * i - 2, 2 * n + 2 * i + 1);
  return detail::require_integer(r, "sp_special_value");
}

}  // namespace asmkit

#endif
