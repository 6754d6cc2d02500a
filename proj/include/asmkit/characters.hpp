#ifndef ASMKIT_CHARACTERS_HPP
#define ASMKIT_CHARACTERS_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmkit/errors.hpp"
#include "asmkit/field.hpp"
#include "asmkit/linalg.hpp"
#include "asmkit/pfaffian_formulas.hpp"
#include "asmkit/six_vertex.hpp"
#include "asmkit/uni_laurent.hpp"

namespace asmkit {

/// Weakly decreasing sequence of nonnegative integers; trailing zeros allowed.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 0) throw std::invalid_argument("partition parts must be nonnegative");
      if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }

  // Parts padded with zeros to exactly n entries; nonzero parts beyond n are rejected.
  std::vector<int> padded(std::size_t n) const {
    std::vector<int> out(n, 0);
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k < n) {
        out[k] = parts_[k];
      } else if (parts_[k] != 0) {
        throw std::invalid_argument("partition has more nonzero parts than arguments");
      }
    }
    return out;
  }

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// (n, n, n-1, n-1, ..., 1, 1, 0, 0), length 2n+2.
inline IntegerPartition double_staircase(int n) {
  if (n < 0) throw std::invalid_argument("double_staircase needs n >= 0");
  std::vector<int> parts;
  for (int k = n; k >= 0; --k) {
    parts.push_back(k);
    parts.push_back(k);
  }
  return IntegerPartition(std::move(parts));
}

/// Argument a * x^c of a character restricted to a curve in the formal variable x.
template <ExactField F>
struct CurvePoint {
  F a;
  int c = 1;
};

/// Curve through the given point with exponents c_m = m (1-based).
template <ExactField F>
std::vector<CurvePoint<F>> default_curve(const std::vector<F>& point) {
  std::vector<CurvePoint<F>> out;
  for (std::size_t m = 0; m < point.size(); ++m) out.push_back({point[m], static_cast<int>(m + 1)});
  return out;
}

namespace detail {

// (a x^c)^e - (a x^c)^(-e)
template <ExactField F>
UniLaurent<F> curve_alternant_entry(const CurvePoint<F>& p, int e) {
  return UniLaurent<F>::monomial(pow(p.a, e), p.c * e) - UniLaurent<F>::monomial(pow(p.a, -e), -p.c * e);
}

}  // namespace detail

/// Symplectic character sp_lambda(a_1, ..., a_N) by restricting both
/// alternants to the curve m -> a_m x^{c_m}, dividing exactly in F[x, 1/x]
/// and setting x = 1. Works at degenerate points such as (1, ..., 1, -1)
/// where both alternants vanish.
template <ExactField F>
F sp_eval(const IntegerPartition& lambda, const std::vector<CurvePoint<F>>& args) {
  const std::size_t n = args.size();
  const std::vector<int> parts = lambda.padded(n);
  std::set<int> exps;
  for (const auto& p : args) {
    if (is_zero(p.a)) throw PoleError("character argument is zero");
    if (!exps.insert(p.c).second) throw std::invalid_argument("curve exponents must be pairwise distinct");
  }
  SquareMatrix<UniLaurent<F>> num(n), den(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int base = static_cast<int>(n - j);  // N + 1 - j with 1-based j
      num(i, j) = detail::curve_alternant_entry(args[i], parts[j] + base);
      den(i, j) = detail::curve_alternant_entry(args[i], base);
    }
  }
  UniLaurent<F> d = det_minor_expansion(den);
  if (d.is_zero_poly()) throw PoleError("denominator alternant vanishes identically on the curve");
  return exact_divide(det_minor_expansion(num), d).sum_of_coefficients();
}

/// Determinant ratio evaluated pointwise in F; needs distinct generic arguments.
template <ExactField F>
F sp_ratio_direct(const IntegerPartition& lambda, const std::vector<F>& args) {
  const std::size_t n = args.size();
  const std::vector<int> parts = lambda.padded(n);
  SquareMatrix<F> num(n), den(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int base = static_cast<int>(n - j);
      num(i, j) = pow(args[i], parts[j] + base) - pow(args[i], -(parts[j] + base));
      den(i, j) = pow(args[i], base) - pow(args[i], -base);
    }
  }
  F d = det(den);
  if (is_zero(d)) throw PoleError("denominator alternant vanishes at the point");
  return det(num) / d;
}

template <ExactField F>
struct EqualityReport {
  bool equal = false;
  F lhs;
  F rhs;
};

/// Checks, at q = z in Q(zeta_12) and 2n+2 parameters u,
///   sp_{double_staircase(n)}(u_1^2, ..., u_{2n+2}^2)
///     = 3^{n(n+1)} sigma(q)^{2n+2} Zs_{2n+2}(u)|_{s=0} / prod sigma(q u_i),
/// with Zs the specialized partition function (direct sum up to order 6,
/// Pfaffian formula beyond).
inline EqualityReport<Cyclo12> sp_check_zsymp(int n, const std::vector<Cyclo12>& u) {
  const int m = 2 * n + 2;
  if (n < 0 || static_cast<int>(u.size()) != m) throw std::invalid_argument("sp_check_zsymp needs 2n+2 parameters");
  const Cyclo12 q = Cyclo12::zeta();
  std::vector<Cyclo12> squares;
  for (const auto& x : u) squares.push_back(x * x);
  EqualityReport<Cyclo12> rep;
  rep.lhs = sp_eval(double_staircase(n), default_curve(squares));
  auto params = WeightParams<Cyclo12>::specialized(Cyclo12(0), q);
  Cyclo12 z = m <= 6 ? partition_direct(m, u, params) : partition_pfaffian(m, u, params);
  Cyclo12 den(1);
  for (const auto& x : u) den = den * sigma(q * x);
  if (is_zero(den)) throw PoleError("sigma(q u_i) vanishes");
  rep.rhs = pow(Cyclo12(3), static_cast<long>(n) * (n + 1)) * pow(sigma(q), m) * z / den;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace asmkit

#endif
