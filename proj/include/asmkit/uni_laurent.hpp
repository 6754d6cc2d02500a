#ifndef ASMKIT_UNI_LAURENT_HPP
#define ASMKIT_UNI_LAURENT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "asmkit/errors.hpp"
#include "asmkit/field.hpp"
#include "asmkit/laurent_poly.hpp"

namespace asmkit {

// Dense univariate Laurent polynomial: sum of coeffs[k] * x^(low + k).
// Normalized so the first and last stored coefficients are nonzero; the zero
// polynomial has no coefficients.
template <ExactField F>
class UniLaurent {
 public:
  UniLaurent() = default;
  UniLaurent(const F& c) { *this = monomial(c, 0); }  // NOLINT(google-explicit-constructor)

  static UniLaurent monomial(const F& c, int exponent) {
    UniLaurent p;
    if (!is_zero(c)) {
      p.low_ = exponent;
      p.coeffs_.push_back(c);
    }
    return p;
  }

  bool is_zero_poly() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<F>& coeffs() const { return coeffs_; }

  F coefficient(int exponent) const {
    if (is_zero_poly() || exponent < low_ || exponent > high()) return F(0);
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }

  F eval(const F& x) const {
    if (is_zero_poly()) return F(0);
    if (low_ < 0 && is_zero(x)) throw PoleError("Laurent polynomial evaluated at 0");
    // Horner over the stored window, then shift by x^low.
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc * pow(x, low_);
  }

  // Value at x = 1 is the coefficient sum.
  F sum_of_coefficients() const {
    F acc(0);
    for (const auto& c : coeffs_) acc = acc + c;
    return acc;
  }

  friend UniLaurent operator+(const UniLaurent& a, const UniLaurent& b) {
    if (a.is_zero_poly()) return b;
    if (b.is_zero_poly()) return a;
    UniLaurent out;
    out.low_ = std::min(a.low_, b.low_);
    int hi = std::max(a.high(), b.high());
    out.coeffs_.assign(static_cast<std::size_t>(hi - out.low_ + 1), F(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      out.coeffs_[static_cast<std::size_t>(a.low_ - out.low_) + k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
      auto& slot = out.coeffs_[static_cast<std::size_t>(b.low_ - out.low_) + k];
      slot = slot + b.coeffs_[k];
    }
    out.normalize();
    return out;
  }

  UniLaurent operator-() const {
    UniLaurent out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend UniLaurent operator-(const UniLaurent& a, const UniLaurent& b) { return a + (-b); }

  // Skips zero coefficients, so products with sparse operands stay cheap.
  friend UniLaurent operator*(const UniLaurent& a, const UniLaurent& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return {};
    UniLaurent out;
    out.low_ = a.low_ + b.low_;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.normalize();
    return out;
  }

  friend bool operator==(const UniLaurent& a, const UniLaurent& b) {
    return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.low_ == b.low_);
  }

  /// Exact quotient in the Laurent ring F[x, 1/x]. Throws InexactDivision if
  /// the divisor does not divide, DivisionByZero if it is zero.
  friend UniLaurent exact_divide(const UniLaurent& num, const UniLaurent& den) {
    if (den.is_zero_poly()) throw DivisionByZero("division by the zero polynomial");
    if (num.is_zero_poly()) return {};
    // Both windows start at a nonzero coefficient, so the stored parts are
    // ordinary polynomials with nonzero constant term; the divisor is then
    // coprime to x and divides num iff it divides its stored part.
    std::vector<F> rem = num.coeffs_;
    const auto& d = den.coeffs_;
    if (rem.size() < d.size()) throw InexactDivision("divisor degree exceeds dividend degree");
    std::size_t qlen = rem.size() - d.size() + 1;
    std::vector<F> quot(qlen, F(0));
    F lead_inv = F(1) / d.back();
    for (std::size_t step = qlen; step-- > 0;) {
      F& top = rem[step + d.size() - 1];
      if (is_zero(top)) continue;
      F factor = top * lead_inv;
      quot[step] = factor;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (!is_zero(d[k])) rem[step + k] = rem[step + k] - factor * d[k];
      }
    }
    for (const auto& r : rem) {
      if (!is_zero(r)) throw InexactDivision("nonzero remainder in exact Laurent division");
    }
    UniLaurent out;
    out.low_ = num.low_ - den.low_;
    out.coeffs_ = std::move(quot);
    out.normalize();
    return out;
  }

  LaurentPoly<F> to_laurent(const std::string& var) const {
    LaurentPoly<F> p({var});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) p.add_term({low_ + static_cast<int>(k)}, coeffs_[k]);
    return p;
  }

  static UniLaurent from_laurent(const LaurentPoly<F>& p) {
    if (p.variables().size() != 1) throw DomainMismatch("expected a univariate Laurent polynomial");
    UniLaurent out;
    if (p.is_zero()) return out;
    // Terms are ordered by descending exponent.
    int hi = p.terms().begin()->first[0];
    out.low_ = p.terms().rbegin()->first[0];
    out.coeffs_.assign(static_cast<std::size_t>(hi - out.low_ + 1), F(0));
    for (const auto& [e, c] : p.terms()) out.coeffs_[static_cast<std::size_t>(e[0] - out.low_)] = c;
    return out;
  }

 private:
  void normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && is_zero(coeffs_[first])) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (is_zero(coeffs_[last - 1])) --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }

  int low_ = 0;
  std::vector<F> coeffs_;
};

/// num / den for univariate Laurent polynomials in the same variable.
template <ExactField F>
LaurentPoly<F> lp_exact_div_univariate(const LaurentPoly<F>& num, const LaurentPoly<F>& den) {
  if (num.variables().size() != 1 || num.variables() != den.variables())
    throw DomainMismatch("exact division needs two univariate polynomials in the same variable");
  auto q = exact_divide(UniLaurent<F>::from_laurent(num), UniLaurent<F>::from_laurent(den));
  return q.to_laurent(num.variables()[0]);
}

}  // namespace asmkit

#endif
