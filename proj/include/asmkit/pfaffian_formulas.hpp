#ifndef ASMKIT_PFAFFIAN_FORMULAS_HPP
#define ASMKIT_PFAFFIAN_FORMULAS_HPP

#include <string>
#include <utility>
#include <vector>

#include "asmkit/asm.hpp"
#include "asmkit/errors.hpp"
#include "asmkit/field.hpp"
#include "asmkit/linalg.hpp"
#include "asmkit/six_vertex.hpp"

namespace asmkit {

namespace detail {

template <ExactField F>
F divide_or_pole(const F& num, const F& den, const char* what) {
  if (is_zero(den)) throw PoleError(std::string("vanishing denominator: ") + what);
  return num / den;
}

}  // namespace detail

/// Pfaffian evaluation of the DSASM partition function:
///   prod_{i<j} sh(q^2 u_i u_j) sh(q^2/(u_i u_j)) / sh(u_i/u_j)
///   * Pf_{chi_even(n) <= i < j <= n}(entry(i,j))
/// with entry(0,j) = Z_1(u_j) and, for i >= 1,
///   entry(i,j) = sh(u_i/u_j) Z_2(u_i,u_j) / (sh(q^2 u_i u_j) sh(q^2/(u_i u_j))).
/// Z_1 and Z_2 come from the direct sum.
template <ExactField F>
F partition_pfaffian(int n, const std::vector<F>& u, const WeightParams<F>& p) {
  if (n < 1 || static_cast<int>(u.size()) != n) throw std::invalid_argument("expected n >= 1 spectral parameters");
  const F& q = p.q;
  const EnumerationCaps small;
  auto sh = [&](const F& x) { return sigma_hat(x, q); };
  F prefactor(1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      prefactor = prefactor * sh(q * q * u[i] * u[j]) * sh(q * q / (u[i] * u[j]));
      prefactor = detail::divide_or_pole(prefactor, sh(u[i] / u[j]), "sigma_hat(u_i/u_j)");
    }
  }
  // Index k of the array corresponds to spectral index k - offset (0 marks the odd row).
  const int offset = n % 2;
  const std::size_t order = static_cast<std::size_t>(n + offset);
  auto entry = [&](std::size_t a, std::size_t b) -> F {
    const int i = static_cast<int>(a) - offset;
    const int j = static_cast<int>(b) - offset;
    if (i < 0) return partition_direct(1, std::vector<F>{u[j]}, p, small);
    F z2 = partition_direct(2, std::vector<F>{u[i], u[j]}, p, small);
    F den = sh(q * q * u[i] * u[j]) * sh(q * q / (u[i] * u[j]));
    return detail::divide_or_pole(sh(u[i] / u[j]) * z2, den, "sigma_hat(q^2 u_i u_j) sigma_hat(q^2/(u_i u_j))");
  };
  return prefactor * pfaffian(SkewMatrix<F>::from_upper(order, entry));
}

/// Right side of the relation between the specialized partition function at
/// (z, 1, ..., 1) and the DSASM generating function:
///   sigma(q^2)^{(n-1)(n-2)/2} sigma(q^2/z)^{n-1} / (sigma(q^4)^{n(n-1)/2} sigma(q^2 z))
///   * [ (q+1/q) sigma(qz) sigma(q^2/z)/sigma(q^2 z) * X_n(q^2+q^-2, s, sigma(q^2 z)/sigma(q^2/z))
///       - s sigma(z) X_{n-1}(q^2+q^-2, s, 1) ].
template <ExactField F>
F zx_rhs(int n, const F& z, const F& s, const F& q, const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const F qb = F(1) / q;
  const F s2z = sigma(q * q * z);
  const F s2zb = sigma(q * q / z);
  if (is_zero(s2z) || is_zero(s2zb)) throw PoleError("sigma(q^2 z) or sigma(q^2/z) vanishes");
  const F s4 = sigma(pow(q, 4));
  const long nn = n;
  F pre = pow(sigma(q * q), (nn - 1) * (nn - 2) / 2) * pow(s2zb, nn - 1);
  pre = detail::divide_or_pole(pre, pow(s4, nn * (nn - 1) / 2) * s2z, "sigma(q^4) sigma(q^2 z)");
  const F r = q * q + qb * qb;
  auto xn = genfunc_dsasm(n, caps).eval<F>({{"r", r}, {"s", s}, {"t", s2z / s2zb}});
  F xprev(1);
  if (n > 1) xprev = genfunc_dsasm(n - 1, caps).eval<F>({{"r", r}, {"s", s}, {"t", F(1)}});
  F bracket = (q + qb) * sigma(q * z) * s2zb / s2z * xn - s * sigma(z) * xprev;
  return pre * bracket;
}

struct PsiValues {
  Cyclo12 psi1;
  Cyclo12 psi2;
};

/// The two Pfaffians of order 2n+2 built from
///   Q_ij = -sh(u_i/u_j)(q u_i - 1/(q u_i))(q u_j - 1/(q u_j)) / (sh(q^2 u_i u_j) sh(q^2/(u_i u_j)))
/// at q = z, with the parameter list extended to (u, 1/u, 1, iota).
/// psi2 = Pf(Q); psi1 has a leading row of ones in place of the last index.
inline PsiValues psi_values(int n, const std::vector<Cyclo12>& u) {
  if (n < 1 || static_cast<int>(u.size()) != n) throw std::invalid_argument("expected n >= 1 parameters");
  const Cyclo12 q = Cyclo12::zeta();
  std::vector<Cyclo12> v = u;
  for (int i = 0; i < n; ++i) v.push_back(Cyclo12(1) / u[i]);
  v.push_back(Cyclo12(1));
  v.push_back(Cyclo12::imaginary_unit());
  auto sh = [&](const Cyclo12& x) { return sigma_hat(x, q); };
  auto Q = [&](std::size_t i, std::size_t j) {
    const Cyclo12& a = v[i];
    const Cyclo12& b = v[j];
    Cyclo12 num = -sh(a / b) * (q * a - Cyclo12(1) / (q * a)) * (q * b - Cyclo12(1) / (q * b));
    return detail::divide_or_pole(num, sh(q * q * a * b) * sh(q * q / (a * b)), "Q-entry denominator");
  };
  const std::size_t m = static_cast<std::size_t>(2 * n + 2);
  PsiValues out;
  out.psi2 = pfaffian(SkewMatrix<Cyclo12>::from_upper(m, Q));
  out.psi1 = pfaffian(SkewMatrix<Cyclo12>::from_upper(m, [&](std::size_t a, std::size_t b) {
    return a == 0 ? Cyclo12(1) : Q(a - 1, b - 1);
  }));
  return out;
}

}  // namespace asmkit

#endif
