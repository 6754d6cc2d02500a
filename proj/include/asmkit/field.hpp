#ifndef ASMKIT_FIELD_HPP
#define ASMKIT_FIELD_HPP

#include <concepts>
#include <string>
#include <string_view>

#include "asmkit/cyclo12.hpp"
#include "asmkit/rational.hpp"

namespace asmkit {

// Every exact computation runs over one field chosen at compile time; the
// type system keeps rational and cyclotomic values from mixing.
template <class F>
concept ExactField = std::regular<F> && std::constructible_from<F, long> &&
                     std::constructible_from<F, Rational> && requires(const F a, const F b) {
                       { a + b } -> std::convertible_to<F>;
                       { a - b } -> std::convertible_to<F>;
                       { a * b } -> std::convertible_to<F>;
                       { a / b } -> std::convertible_to<F>;
                       { -a } -> std::convertible_to<F>;
                       { is_zero(a) } -> std::convertible_to<bool>;
                       { to_string(a) } -> std::convertible_to<std::string>;
                     };

enum class FieldKind { rational, cyclo12 };

template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr FieldKind kind = FieldKind::rational;
  static constexpr std::string_view name = "rational";
  static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <>
struct field_traits<Cyclo12> {
  static constexpr FieldKind kind = FieldKind::cyclo12;
  static constexpr std::string_view name = "cyclo12";
  static Cyclo12 parse(std::string_view s) { return Cyclo12::parse(s); }
};

inline std::string_view field_name(FieldKind k) { return k == FieldKind::rational ? "rational" : "cyclo12"; }

template <ExactField F>
F pow(const F& base, long exponent) {
  if (exponent < 0) return pow(F(1) / base, -exponent);
  F result(1);
  F b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

template <ExactField F>
F inverse(const F& x) {
  if (is_zero(x)) throw DivisionByZero("inverse of zero");
  return F(1) / x;
}

/// sigma(x) = x - 1/x.
template <ExactField F>
F sigma(const F& x) {
  if (is_zero(x)) throw DivisionByZero("sigma(0)");
  return x - F(1) / x;
}

/// sigma_hat(x) = sigma(x) / sigma(q^4); needs q^8 != 1.
template <ExactField F>
F sigma_hat(const F& x, const F& q) {
  F denom = sigma(pow(q, 4));
  if (is_zero(denom)) throw DivisionByZero("sigma(q^4) = 0 (q^8 = 1)");
  return sigma(x) / denom;
}

}  // namespace asmkit

#endif
