#ifndef ASMKIT_LINALG_HPP
#define ASMKIT_LINALG_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asmkit/errors.hpp"
#include "asmkit/field.hpp"

namespace asmkit {

// Row-major dense square matrix over any ring-like value type.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t order() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw DomainMismatch("matrix orders differ");
    SquareMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k)
        for (std::size_t j = 0; j < a.n_; ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }
inline Cyclo12 exact_divide(const Cyclo12& a, const Cyclo12& b) { return a / b; }

/// Determinant over a field: Gaussian elimination, first nonzero pivot.
template <ExactField F>
F det(SquareMatrix<F> m) {
  const std::size_t n = m.order();
  F result(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(m(piv, k))) ++piv;
    if (piv == n) return F(0);
    if (piv != k) {
      m.swap_rows(piv, k);
      result = -result;
    }
    const F pivot = m(k, k);
    result = result * pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      F factor = m(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = m(i, j) - factor * m(k, j);
    }
  }
  return result;
}

/// Fraction-free (Bareiss) determinant over an integral domain. Needs an
/// ADL-visible exact_divide(T, T).
template <class T>
T det_bareiss(SquareMatrix<T> m) {
  const std::size_t n = m.order();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T(0)) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == T(0)) ++piv;
      if (piv == n) return T(0);
      m.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(0) - d : d;
}

/// Division-free determinant over a commutative ring by dynamic programming
/// over column subsets: O(2^n n) ring operations. Cheap when entries are
/// sparse polynomials.
template <class T>
T det_minor_expansion(const SquareMatrix<T>& m) {
  const std::size_t n = m.order();
  if (n > 24) throw CapExceeded("minor expansion is limited to order 24");
  if (n == 0) return T(1);
  const std::size_t full = (std::size_t{1} << n) - 1;
  // minors[S] = signed sum over bijections rows {0..|S|-1} -> columns S.
  std::vector<T> minors(full + 1, T(0));
  std::vector<bool> live(full + 1, false);
  minors[0] = T(1);
  live[0] = true;
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t s = 0; s <= full; ++s) {
      if (!live[s] || static_cast<std::size_t>(std::popcount(s)) != row) continue;
      for (std::size_t col = 0; col < n; ++col) {
        const std::size_t bit = std::size_t{1} << col;
        if ((s & bit) || m(row, col) == T(0)) continue;
        // Each already-used column to the right is one inversion.
        const bool odd = (std::popcount(s >> (col + 1)) & 1) != 0;
        T term = m(row, col) * minors[s];
        minors[s | bit] = odd ? minors[s | bit] - term : minors[s | bit] + term;
        live[s | bit] = true;
      }
    }
    // Free finished layer.
    for (std::size_t s = 0; s <= full; ++s) {
      if (live[s] && static_cast<std::size_t>(std::popcount(s)) == row) minors[s] = T(0), live[s] = false;
    }
  }
  return minors[full];
}

/// Skew-symmetric matrix of even order stored by its strict upper triangle.
template <ExactField F>
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(std::size_t order) : n_(order), upper_(order * (order == 0 ? 0 : order - 1) / 2, F(0)) {
    if (order % 2 != 0) throw std::invalid_argument("skew matrix order must be even");
  }

  // Builds from a generator of the strict upper triangle entries (i < j).
  static SkewMatrix from_upper(std::size_t order, const std::function<F(std::size_t, std::size_t)>& entry) {
    SkewMatrix m(order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = i + 1; j < order; ++j) m.set(i, j, entry(i, j));
    return m;
  }

  std::size_t order() const { return n_; }

  F at(std::size_t i, std::size_t j) const {
    if (i == j) return F(0);
    return i < j ? upper_[index(i, j)] : -upper_[index(j, i)];
  }

  void set(std::size_t i, std::size_t j, const F& v) {
    if (i >= j) throw std::invalid_argument("SkewMatrix::set expects i < j");
    upper_[index(i, j)] = v;
  }

  SquareMatrix<F> to_full() const {
    SquareMatrix<F> m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = at(i, j);
    return m;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }

  std::size_t n_ = 0;
  std::vector<F> upper_;
};

/// Pfaffian by skew-symmetric elimination, O(n^3) field operations.
/// Each step pivots a nonzero entry into position (k, k+1) (a simultaneous
/// row/column swap flips the sign) and replaces the trailing block by its
/// Schur complement, which keeps it skew.
template <ExactField F>
F pfaffian(const SkewMatrix<F>& skew) {
  const std::size_t n = skew.order();
  SquareMatrix<F> a = skew.to_full();
  F result(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && is_zero(a(k, piv))) ++piv;
    if (piv == n) return F(0);
    if (piv != k + 1) {
      a.swap_rows(piv, k + 1);
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, piv), a(r, k + 1));
      result = -result;
    }
    const F p = a(k, k + 1);
    result = result * p;
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        F update = a(i, k) * a(k + 1, j) - a(i, k + 1) * a(k, j);
        if (is_zero(update)) continue;
        a(i, j) = a(i, j) + update / p;
        a(j, i) = -a(i, j);
      }
    }
  }
  return result;
}

/// Literal Pfaffian: sum over perfect matchings {i1<j1},...,{im<jm} with
/// i1 < ... < im of sgn(sigma) * prod M[ik][jk], where sigma lists
/// i1 j1 i2 j2 ... . Exponential; order capped at 12.
template <ExactField F>
F pfaffian_bruteforce(const SkewMatrix<F>& m) {
  const std::size_t n = m.order();
  if (n > 12) throw CapExceeded("pfaffian_bruteforce supports order <= 12, got " + std::to_string(n));
  std::vector<std::size_t> sigma;
  std::vector<bool> used(n, false);
  F total(0);
  std::function<void()> rec = [&]() {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      std::size_t inversions = 0;
      for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b) inversions += sigma[a] > sigma[b];
      F term(inversions % 2 == 0 ? 1 : -1);
      for (std::size_t k = 0; k < sigma.size(); k += 2) term = term * m.at(sigma[k], sigma[k + 1]);
      total = total + term;
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      sigma.push_back(first);
      sigma.push_back(j);
      rec();
      sigma.resize(sigma.size() - 2);
      used[j] = false;
    }
    used[first] = false;
  };
  rec();
  return total;
}

}  // namespace asmkit

#endif
