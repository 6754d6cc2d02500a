#ifndef ASMKIT_SIX_VERTEX_HPP
#define ASMKIT_SIX_VERTEX_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asmkit/asm.hpp"
#include "asmkit/errors.hpp"
#include "asmkit/field.hpp"

namespace asmkit {

enum class LocalConfig {
  TopUp,
  RightLeft,
  LeftUp,
  LeftDown,
  LeftOut,
  LeftIn,
  BulkPlus,
  BulkMinus,
  BulkZeroHH,
  BulkZeroVV,
  BulkZeroEE,
  BulkZeroFF,
};

inline std::string_view config_name(LocalConfig c) {
  static constexpr std::array<std::string_view, 12> names = {
      "TopUp",   "RightLeft", "LeftUp",     "LeftDown",   "LeftOut",    "LeftIn",
      "BulkPlus", "BulkMinus", "BulkZeroHH", "BulkZeroVV", "BulkZeroEE", "BulkZeroFF"};
  return names[static_cast<std::size_t>(c)];
}

/// Occupancy quadruple (h_left, h_right, v_top, v_bottom) of a bulk kind.
inline std::array<int, 4> bulk_quadruple(LocalConfig c) {
  switch (c) {
    case LocalConfig::BulkPlus: return {0, 1, 0, 1};
    case LocalConfig::BulkMinus: return {1, 0, 1, 0};
    case LocalConfig::BulkZeroHH: return {1, 1, 0, 0};
    case LocalConfig::BulkZeroVV: return {0, 0, 1, 1};
    case LocalConfig::BulkZeroEE: return {0, 0, 0, 0};
    case LocalConfig::BulkZeroFF: return {1, 1, 1, 1};
    default: throw std::invalid_argument("not a bulk configuration");
  }
}

inline LocalConfig bulk_from_quadruple(int hl, int hr, int vt, int vb) {
  for (auto k : {LocalConfig::BulkPlus, LocalConfig::BulkMinus, LocalConfig::BulkZeroHH, LocalConfig::BulkZeroVV,
                 LocalConfig::BulkZeroEE, LocalConfig::BulkZeroFF}) {
    if (bulk_quadruple(k) == std::array<int, 4>{hl, hr, vt, vb}) return k;
  }
  throw std::invalid_argument("edge occupancies violate the six-vertex rule");
}

/// Left boundary kind from the occupancy of the edge entering from above (vt)
/// and the edge leaving to the right (hr).
inline LocalConfig left_from_edges(int vt, int hr) {
  if (vt == 0 && hr == 1) return LocalConfig::LeftUp;
  if (vt == 1 && hr == 0) return LocalConfig::LeftDown;
  if (vt == 0 && hr == 0) return LocalConfig::LeftOut;
  if (vt == 1 && hr == 1) return LocalConfig::LeftIn;
  throw std::invalid_argument("edge occupancies must be 0 or 1");
}

using Vertex = std::pair<int, int>;

/// The triangular grid graph: top vertices (0,j), left boundary (i,i), bulk
/// (i,j) with i<j, right boundary (i,n+1), for 1 <= i, j <= n.
class GridGraphTn {
 public:
  explicit GridGraphTn(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("grid graph order must be positive");
  }

  int order() const { return n_; }

  // Row-major order.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> v;
    for (int j = 1; j <= n_; ++j) v.emplace_back(0, j);
    for (int i = 1; i <= n_; ++i)
      for (int j = i; j <= n_ + 1; ++j) v.emplace_back(i, j);
    return v;
  }

  // Horizontal edges join (i,j)-(i,j+1) for i <= j <= n; vertical edges join
  // (k,j)-(k+1,j) for 0 <= k < j.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= n_; ++i)
      for (int j = i; j <= n_; ++j) e.push_back({{i, j}, {i, j + 1}});
    for (int j = 1; j <= n_; ++j)
      for (int k = 0; k < j; ++k) e.push_back({{k, j}, {k + 1, j}});
    return e;
  }

  std::size_t vertex_count() const { return static_cast<std::size_t>(3 * n_ + n_ * (n_ - 1) / 2); }
  std::size_t edge_count() const { return static_cast<std::size_t>(n_ * (n_ + 1)); }

 private:
  int n_;
};

/// Assignment of a local configuration to every vertex of T_n (1-based
/// coordinates, iterated in row-major order).
class SixVertexConfig {
 public:
  explicit SixVertexConfig(int n = 0) : n_(n) {}

  int order() const { return n_; }
  const std::map<Vertex, LocalConfig>& sites() const& { return sites_; }
  std::map<Vertex, LocalConfig> sites() && { return std::move(sites_); }

  LocalConfig at(int i, int j) const {
    auto it = sites_.find({i, j});
    if (it == sites_.end()) throw std::out_of_range("no vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return it->second;
  }
  void set(int i, int j, LocalConfig c) { sites_[{i, j}] = c; }

  // One line per vertex: "(i,j): kind".
  std::string dump() const {
    std::string out;
    for (const auto& [v, c] : sites_) {
      out += "(" + std::to_string(v.first) + "," + std::to_string(v.second) + "): ";
      out += config_name(c);
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const SixVertexConfig&, const SixVertexConfig&) = default;

 private:
  int n_;
  std::map<Vertex, LocalConfig> sites_;
};

/// Edge occupancies are prefix sums: the horizontal edge right of (i,j)
/// carries sum_{k<=j} A(i,k), the vertical edge below (k,j) carries
/// sum_{m<=k} A(m,j).
inline SixVertexConfig dsasm_to_config(const AsmMatrix& a) {
  const int n = a.order();
  if (!a.is_in(SymmetryClass::DSASM)) throw std::invalid_argument("matrix is not a DSASM");
  SixVertexConfig c(n);
  for (int j = 1; j <= n; ++j) c.set(0, j, LocalConfig::TopUp);
  for (int i = 0; i < n; ++i) {
    int prefix = 0;
    for (int j = 0; j < i; ++j) prefix += a.at(i, j);
    const int d = a.at(i, i);
    c.set(i + 1, i + 1, d == 1 ? LocalConfig::LeftUp : d == -1 ? LocalConfig::LeftDown : left_from_edges(prefix, prefix));
    int hl = prefix + d;
    for (int j = i + 1; j < n; ++j) {
      int vt = 0;
      for (int k = 0; k < i; ++k) vt += a.at(k, j);
      const int v = a.at(i, j);
      c.set(i + 1, j + 1, bulk_from_quadruple(hl, hl + v, vt, vt + v));
      hl += v;
    }
    c.set(i + 1, n + 1, LocalConfig::RightLeft);
  }
  return c;
}

/// Inverse of dsasm_to_config. Throws std::invalid_argument unless the
/// configuration is the image of a DSASM.
inline AsmMatrix config_to_dsasm(const SixVertexConfig& c) {
  const int n = c.order();
  if (n < 1) throw std::invalid_argument("empty configuration");
  IntMatrix rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto entry = [](LocalConfig k) {
    switch (k) {
      case LocalConfig::LeftUp:
      case LocalConfig::BulkPlus: return 1;
      case LocalConfig::LeftDown:
      case LocalConfig::BulkMinus: return -1;
      default: return 0;
    }
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      int v = entry(c.at(i, j));
      rows[i - 1][j - 1] = v;
      rows[j - 1][i - 1] = v;
    }
  }
  auto rep = validate(rows, SymmetryClass::DSASM);
  if (!rep.ok) throw std::invalid_argument("inconsistent configuration: " + rep.message);
  AsmMatrix a = AsmMatrix::from_rows(rows);
  if (dsasm_to_config(a) != c) throw std::invalid_argument("inconsistent configuration: edge occupancies disagree");
  return a;
}

/// Per-site factor phi(u) on the left boundary.
enum class PhiForm {
  one,          // phi(u) = 1
  specialized,  // phi(u) = 1/(q u + 1/(q u))
};

template <ExactField F>
struct WeightParams {
  F alpha{1}, beta{1}, gamma{1}, delta{1};
  F q{2};
  PhiForm phi = PhiForm::one;

  /// alpha = beta = s, gamma = delta = 1/sigma(q), phi(u) = 1/(qu + q'u').
  static WeightParams specialized(const F& s, const F& q) {
    F g = F(1) / sigma(q);
    return {s, s, g, g, q, PhiForm::specialized};
  }
};

template <ExactField F>
F phi_value(const F& u, const WeightParams<F>& p) {
  if (p.phi == PhiForm::one) return F(1);
  F d = p.q * u + F(1) / (p.q * u);
  if (is_zero(d)) throw PoleError("phi has a pole: q*u + 1/(q*u) = 0");
  return F(1) / d;
}

/// Weight of local configuration c at site (i,j) (1-based), with spectral
/// parameters u[0..n-1].
template <ExactField F>
F local_weight(LocalConfig c, int i, int j, const std::vector<F>& u, const WeightParams<F>& p) {
  const F& q = p.q;
  const F qb = F(1) / q;
  auto ui = [&]() -> const F& { return u.at(static_cast<std::size_t>(i - 1)); };
  auto uj = [&]() -> const F& { return u.at(static_cast<std::size_t>(j - 1)); };
  switch (c) {
    case LocalConfig::TopUp:
    case LocalConfig::RightLeft:
    case LocalConfig::BulkPlus:
    case LocalConfig::BulkMinus: return F(1);
    case LocalConfig::BulkZeroHH:
    case LocalConfig::BulkZeroVV: return sigma_hat(q * q / (ui() * uj()), q);
    case LocalConfig::BulkZeroEE:
    case LocalConfig::BulkZeroFF: return sigma_hat(q * q * ui() * uj(), q);
    case LocalConfig::LeftUp: return (p.alpha * q * ui() + p.beta * qb / ui()) * phi_value(ui(), p);
    case LocalConfig::LeftDown: return (p.alpha * qb / ui() + p.beta * q * ui()) * phi_value(ui(), p);
    case LocalConfig::LeftIn: return p.delta * sigma(q * q * ui() * ui()) * phi_value(ui(), p);
    case LocalConfig::LeftOut: return p.gamma * sigma(q * q * ui() * ui()) * phi_value(ui(), p);
  }
  throw std::logic_error("unreachable");
}

template <ExactField F>
F configuration_weight(const SixVertexConfig& c, const std::vector<F>& u, const WeightParams<F>& p) {
  F w(1);
  for (const auto& [v, k] : c.sites()) w = w * local_weight(k, v.first, v.second, u, p);
  return w;
}

namespace detail {

// Site weights tabulated once per evaluation point; the DSASM sum then only
// multiplies table entries. When drop_diagonal_nonzero is set, LeftUp and
// LeftDown contribute 1.
template <ExactField F>
F weighted_dsasm_sum(int n, SymmetryClass cls, const std::vector<F>& u, const WeightParams<F>& p,
                     bool drop_diagonal_nonzero, const EnumerationCaps& caps) {
  if (static_cast<int>(u.size()) != n) throw std::invalid_argument("expected one spectral parameter per row");
  caps.check(n, cls);
  using LC = LocalConfig;
  std::vector<std::array<F, 4>> left(static_cast<std::size_t>(n));
  std::vector<std::vector<std::array<F, 2>>> bulk(static_cast<std::size_t>(n),
                                                 std::vector<std::array<F, 2>>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    auto& l = left[i - 1];
    if (drop_diagonal_nonzero) {
      l[0] = l[1] = F(1);
    } else {
      l[0] = local_weight(LC::LeftUp, i, i, u, p);
      l[1] = local_weight(LC::LeftDown, i, i, u, p);
    }
    l[2] = local_weight(LC::LeftOut, i, i, u, p);
    l[3] = local_weight(LC::LeftIn, i, i, u, p);
    for (int j = i + 1; j <= n; ++j) {
      bulk[i - 1][j - 1] = {local_weight(LC::BulkZeroHH, i, j, u, p), local_weight(LC::BulkZeroEE, i, j, u, p)};
    }
  }
  F total(0);
  std::vector<int> colsum(static_cast<std::size_t>(n));
  for_each_asm(
      n, cls,
      [&](const AsmMatrix& a) {
        F w(1);
        std::fill(colsum.begin(), colsum.end(), 0);
        for (int i = 0; i < n; ++i) {
          int prefix = 0;
          for (int j = 0; j < i; ++j) prefix += a.at(i, j);
          const int d = a.at(i, i);
          w = w * left[i][d == 1 ? 0 : d == -1 ? 1 : prefix == 0 ? 2 : 3];
          int h = prefix + d;
          for (int j = i + 1; j < n; ++j) {
            const int v = a.at(i, j);
            // colsum[j] holds sum_{k<i} A(k,j) here.
            if (v == 0) w = w * bulk[i][j][h == colsum[j] ? 1 : 0];
            h += v;
          }
          for (int j = i + 1; j < n; ++j) colsum[j] += a.at(i, j);
        }
        total = total + w;
      },
      caps);
  return total;
}

}  // namespace detail

/// Z_n(u) = sum over 6V(n) of the product of vertex weights, enumerated via
/// DSASM(n) and the bijection.
template <ExactField F>
F partition_direct(int n, const std::vector<F>& u, const WeightParams<F>& p,
                   const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  return detail::weighted_dsasm_sum(n, SymmetryClass::DSASM, u, p, false, caps);
}

/// The specialized partition function with alpha = beta = s,
/// gamma = delta = 1/sigma(q), phi(u) = 1/(qu + 1/(qu)).
template <ExactField F>
F partition_specialized(int n, const std::vector<F>& u, const F& s, const F& q,
                        const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  return partition_direct(n, u, WeightParams<F>::specialized(s, q), caps);
}

/// OSASM partition function: the s^0 coefficient of the specialized
/// partition function for even n, the s^1 coefficient for odd n. Under the
/// specialization each LeftUp/LeftDown vertex weighs exactly s, so this is
/// the sum over OSASM(n) with those vertices weighted 1.
template <ExactField F>
F osasm_partition(int n, const std::vector<F>& u, const F& q,
                  const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  return detail::weighted_dsasm_sum(n, SymmetryClass::OSASM, u, WeightParams<F>::specialized(F(1), q), true, caps);
}

}  // namespace asmkit

#endif
