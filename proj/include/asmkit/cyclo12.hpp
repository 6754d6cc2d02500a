#ifndef ASMKIT_CYCLO12_HPP
#define ASMKIT_CYCLO12_HPP

#include <array>
#include <cctype>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "asmkit/rational.hpp"

namespace asmkit {

/// Element of the cyclotomic field Q(z), z a primitive 12th root of unity,
/// stored as c0 + c1*z + c2*z^2 + c3*z^3 and reduced with z^4 = z^2 - 1.
///
/// The field holds q = z with q^2 + 1/q^2 = 1, together with the imaginary
/// unit z^3 = q - 1/q and sqrt(3) = q + 1/q = 2z - z^3.
class Cyclo12 {
 public:
  Cyclo12() = default;
  template <std::integral I>
  Cyclo12(I v) : c_{Rational(v), 0, 0, 0} {}                     // NOLINT(google-explicit-constructor)
  Cyclo12(const Rational& v) : c_{v, 0, 0, 0} {}                  // NOLINT(google-explicit-constructor)
  Cyclo12(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyclo12 zeta() { return {0, 1, 0, 0}; }
  static Cyclo12 imaginary_unit() { return {0, 0, 0, 1}; }
  static Cyclo12 sqrt3() { return {0, 2, 0, -1}; }

  // z^k for any integer k (z has order 12).
  static Cyclo12 zeta_power(long k) {
    long r = ((k % 12) + 12) % 12;
    Cyclo12 out(1);
    for (long i = 0; i < r; ++i) out = out * zeta();
    return out;
  }

  const Rational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  Cyclo12 operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  Cyclo12& operator+=(const Cyclo12& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Cyclo12& operator-=(const Cyclo12& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Cyclo12& operator*=(const Cyclo12& o) { return *this = *this * o; }
  Cyclo12& operator/=(const Cyclo12& o) { return *this = *this * o.inverse(); }

  friend Cyclo12 operator+(Cyclo12 a, const Cyclo12& b) { return a += b; }
  friend Cyclo12 operator-(Cyclo12 a, const Cyclo12& b) { return a -= b; }
  friend Cyclo12 operator/(const Cyclo12& a, const Cyclo12& b) { return a * b.inverse(); }

  friend Cyclo12 operator*(const Cyclo12& a, const Cyclo12& b) {
    std::array<Rational, 7> p;
    for (std::size_t i = 0; i < 4; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < 4; ++j) {
        if (!b.c_[j].is_zero()) p[i + j] += a.c_[i] * b.c_[j];
      }
    }
    // z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
    p[0] -= p[6];
    p[3] += p[5];
    p[1] -= p[5];
    p[2] += p[4];
    p[0] -= p[4];
    return {p[0], p[1], p[2], p[3]};
  }

  // Solves a*x = 1 in the basis {1, z, z^2, z^3}.
  Cyclo12 inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
    // Column k of the system is a*z^k.
    std::array<std::array<Rational, 5>, 4> m;
    Cyclo12 col = *this;
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t r = 0; r < 4; ++r) m[r][k] = col.c_[r];
      col = col * zeta();
    }
    for (std::size_t r = 0; r < 4; ++r) m[r][4] = r == 0 ? Rational(1) : Rational(0);
    for (std::size_t k = 0; k < 4; ++k) {
      std::size_t piv = k;
      while (m[piv][k].is_zero()) ++piv;  // nonsingular: the field has no zero divisors
      std::swap(m[piv], m[k]);
      Rational inv = m[k][k].inverse();
      for (std::size_t c = k; c < 5; ++c) m[k][c] *= inv;
      for (std::size_t r = 0; r < 4; ++r) {
        if (r == k || m[r][k].is_zero()) continue;
        Rational f = m[r][k];
        for (std::size_t c = k; c < 5; ++c) m[r][c] -= f * m[k][c];
      }
    }
    return {m[0][4], m[1][4], m[2][4], m[3][4]};
  }

  friend bool operator==(const Cyclo12& a, const Cyclo12& b) { return a.c_ == b.c_; }

  // "c0 + c1*z + c2*z^2 + c3*z^3" with zero terms omitted; unit coefficients
  // on powers of z are dropped and negative ones rendered with " - ".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational& c = c_[k];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational mag = c.abs();
      std::string term;
      if (k == 0) {
        term = mag.to_string();
      } else {
        std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
        term = mag == Rational(1) ? power : mag.to_string() + "*" + power;
      }
      if (out.empty()) {
        out = neg ? "-" + term : term;
      } else {
        out += neg ? " - " : " + ";
        out += term;
      }
    }
    return out.empty() ? "0" : out;
  }

  // Inverse of to_string; also accepts z^k for k >= 4 (reduced on the fly).
  static Cyclo12 parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw std::invalid_argument("empty cyclotomic element");
    Cyclo12 out;
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      }
      std::size_t end = s.find_first_of("+-", pos);
      std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      if (term.empty()) throw std::invalid_argument("malformed cyclotomic element '" + std::string(text) + "'");
      pos = end == std::string::npos ? s.size() : end;
      Rational coef(1);
      long power = 0;
      auto zpos = term.find('z');
      if (zpos == std::string::npos) {
        coef = Rational::parse(term);
      } else {
        std::string head = term.substr(0, zpos);
        if (!head.empty()) {
          if (head.back() != '*') throw std::invalid_argument("expected '*' before z in '" + term + "'");
          coef = Rational::parse(head.substr(0, head.size() - 1));
        }
        std::string tail = term.substr(zpos + 1);
        if (tail.empty()) {
          power = 1;
        } else if (tail[0] == '^' && tail.size() > 1) {
          power = std::stol(tail.substr(1));
        } else {
          throw std::invalid_argument("malformed power in '" + term + "'");
        }
      }
      out += Cyclo12(coef * Rational(sign)) * zeta_power(power);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclo12& c) { return os << c.to_string(); }

 private:
  std::array<Rational, 4> c_{};
};

inline bool is_zero(const Cyclo12& c) { return c.is_zero(); }
inline std::string to_string(const Cyclo12& c) { return c.to_string(); }

}  // namespace asmkit

#endif
