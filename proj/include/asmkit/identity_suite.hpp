#ifndef ASMKIT_IDENTITY_SUITE_HPP
#define ASMKIT_IDENTITY_SUITE_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asmkit/asm.hpp"
#include "asmkit/characters.hpp"
#include "asmkit/errors.hpp"
#include "asmkit/field.hpp"
#include "asmkit/linalg.hpp"
#include "asmkit/pfaffian_formulas.hpp"
#include "asmkit/product_formulas.hpp"
#include "asmkit/six_vertex.hpp"
#include "json.hpp"

namespace asmkit {

enum class IdentityId {
  pf_squared_det,
  pf_scaling,
  partfunc_pfaffian,
  lemma_zx,
  eq_zsymp,
  conj17_odd_osasm,
  psi_ratio,
  cor_corr,
  thm_ox,
  product_even,
  product_odd,
  xo_minus_one,
  sp_product,
  sym_even_osasm,
  counts_vs_enumeration,
  bijection_roundtrip,
};

inline constexpr std::array<IdentityId, 16> all_identities = {
    IdentityId::pf_squared_det,   IdentityId::pf_scaling,      IdentityId::partfunc_pfaffian,
    IdentityId::lemma_zx,         IdentityId::eq_zsymp,        IdentityId::conj17_odd_osasm,
    IdentityId::psi_ratio,        IdentityId::cor_corr,        IdentityId::thm_ox,
    IdentityId::product_even,     IdentityId::product_odd,     IdentityId::xo_minus_one,
    IdentityId::sp_product,       IdentityId::sym_even_osasm,  IdentityId::counts_vs_enumeration,
    IdentityId::bijection_roundtrip,
};

inline std::string_view identity_name(IdentityId id) {
  static constexpr std::array<std::string_view, 16> names = {
      "pf-squared-det", "pf-scaling",   "partfunc-pfaffian", "lemma-zx",       "eq-zsymp",
      "conj17-odd-osasm", "psi-ratio",  "cor-corr",          "thm-ox",         "product-even",
      "product-odd",    "xo-minus-one", "sp-product",        "sym-even-osasm", "counts-vs-enumeration",
      "bijection-roundtrip"};
  return names[static_cast<std::size_t>(id)];
}

inline IdentityId parse_identity(std::string_view name) {
  for (auto id : all_identities) {
    if (identity_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown identity id '" + std::string(name) + "'");
}

/// Sizes exercised by the default suite. What "size" means depends on the
/// identity: the matrix order for pf-*, the OSASM order for sym-even-osasm,
/// the largest order for counts-vs-enumeration, the DSASM order for
/// bijection-roundtrip, and the parameter n of the statement otherwise.
struct SizeRange {
  int min;
  int max;
  int step;
};

inline SizeRange default_sizes(IdentityId id) {
  switch (id) {
    case IdentityId::pf_squared_det: return {2, 8, 2};
    case IdentityId::pf_scaling: return {2, 8, 2};
    case IdentityId::partfunc_pfaffian: return {1, 6, 1};
    case IdentityId::lemma_zx: return {2, 6, 1};
    case IdentityId::eq_zsymp: return {0, 2, 1};
    case IdentityId::conj17_odd_osasm: return {1, 2, 1};
    case IdentityId::psi_ratio: return {1, 3, 1};
    case IdentityId::cor_corr: return {1, 2, 1};
    case IdentityId::thm_ox: return {0, 10, 1};
    case IdentityId::product_even: return {1, 4, 1};
    case IdentityId::product_odd: return {0, 3, 1};
    case IdentityId::xo_minus_one: return {1, 4, 1};
    case IdentityId::sp_product: return {0, 3, 1};
    case IdentityId::sym_even_osasm: return {2, 8, 2};
    case IdentityId::counts_vs_enumeration: return {8, 8, 1};
    case IdentityId::bijection_roundtrip: return {1, 6, 1};
  }
  throw std::logic_error("unreachable");
}

inline FieldKind identity_field(IdentityId id) {
  switch (id) {
    case IdentityId::eq_zsymp:
    case IdentityId::conj17_odd_osasm:
    case IdentityId::psi_ratio:
    case IdentityId::cor_corr: return FieldKind::cyclo12;
    default: return FieldKind::rational;
  }
}

inline bool identity_is_sampled(IdentityId id) {
  switch (id) {
    case IdentityId::pf_squared_det:
    case IdentityId::pf_scaling:
    case IdentityId::partfunc_pfaffian:
    case IdentityId::lemma_zx:
    case IdentityId::eq_zsymp:
    case IdentityId::conj17_odd_osasm:
    case IdentityId::psi_ratio:
    case IdentityId::cor_corr: return true;
    default: return false;
  }
}

struct Witness {
  int size = 0;
  int trial = 0;
  std::string point;
  std::string lhs;
  std::string rhs;
  std::string error;
};

struct CheckReport {
  std::string id;
  int size = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string field;
  std::string status;  // pass | fail | error
  std::vector<Witness> witnesses;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == "pass"; }

  nlohmann::ordered_json to_json(bool with_elapsed = true) const {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["size"] = size;
    j["trials"] = trials;
    j["seed"] = seed;
    j["field"] = field;
    j["status"] = status;
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : witnesses) {
      nlohmann::ordered_json o;
      o["size"] = w.size;
      if (!w.error.empty()) {
        o["error"] = w.error;
      } else {
        o["trial"] = w.trial;
        o["point"] = w.point;
        o["lhs"] = w.lhs;
        o["rhs"] = w.rhs;
      }
      j["witnesses"].push_back(std::move(o));
    }
    if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, IdentityId id, int size, int trial) {
  std::uint64_t h = splitmix64(master);
  for (char ch : identity_name(id)) h = splitmix64(h ^ static_cast<unsigned char>(ch));
  h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(size)));
  return splitmix64(h ^ static_cast<std::uint64_t>(trial));
}

}  // namespace detail

/// Draws rationals p/q with 1 <= p, q <= 50 and a random sign.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    long p = draw(50) + 1;
    long q = draw(50) + 1;
    long sign = draw(2) == 0 ? 1 : -1;
    return Rational(BigInt(sign * p), BigInt(q));
  }

  // Excludes 0 and +-1.
  Rational generic() {
    for (;;) {
      Rational r = rational();
      if (r != Rational(1) && r != Rational(-1)) return r;
    }
  }

  // n values with x_i != +-x_j and x_i != +-1/x_j.
  std::vector<Rational> distinct(int n) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
      Rational r = generic();
      bool clash = false;
      for (const auto& x : out) {
        if (r == x || r == -x || r * x == Rational(1) || r * x == Rational(-1)) clash = true;
      }
      if (!clash) out.push_back(r);
    }
    return out;
  }

 private:
  long draw(long bound) { return static_cast<long>(rng_() % static_cast<std::uint64_t>(bound)); }
  std::mt19937_64 rng_;
};

namespace detail {

struct TrialOutcome {
  std::string point;
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

template <ExactField F>
TrialOutcome compare(std::string point, const F& lhs, const F& rhs) {
  return {std::move(point), to_string(lhs), to_string(rhs), lhs == rhs};
}

template <class T>
std::string render_list(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += to_string(v[k]);
  }
  return out + "]";
}

inline std::vector<Cyclo12> embed(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

// One random skew matrix of the given order with entries from the sampler.
inline SkewMatrix<Rational> random_skew(Sampler& s, std::size_t order) {
  return SkewMatrix<Rational>::from_upper(order, [&](std::size_t, std::size_t) { return s.rational(); });
}

inline std::string render_skew(const SkewMatrix<Rational>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i + 1; j < m.order(); ++j) out += (out.empty() ? "" : " ") + to_string(m.at(i, j));
  return "upper=[" + out + "]";
}

// Sampled identities: each call draws a point and evaluates both sides.
// A DivisionByZero (including PoleError) means the point hit a pole; the
// caller resamples.
using SampledTrial = std::function<TrialOutcome(Sampler&, int trial)>;

inline SampledTrial sampled_trial(IdentityId id, int size, const EnumerationCaps& caps) {
  const int n = size;
  switch (id) {
    case IdentityId::pf_squared_det:
      return [=](Sampler& s, int) {
        auto m = random_skew(s, static_cast<std::size_t>(n));
        Rational pf = pfaffian(m);
        TrialOutcome out = compare(render_skew(m), pf * pf, det(m.to_full()));
        if (out.equal && n <= 8) out = compare(render_skew(m), pf, pfaffian_bruteforce(m));
        return out;
      };
    case IdentityId::pf_scaling:
      return [=](Sampler& s, int) {
        auto b = random_skew(s, static_cast<std::size_t>(n));
        std::vector<Rational> k;
        for (int i = 0; i < n; ++i) k.push_back(s.rational());
        auto scaled = SkewMatrix<Rational>::from_upper(static_cast<std::size_t>(n),
                                                       [&](std::size_t i, std::size_t j) { return k[i] * k[j] * b.at(i, j); });
        Rational prod(1);
        for (const auto& x : k) prod *= x;
        return compare(render_skew(b) + " k=" + render_list(k), pfaffian(scaled), prod * pfaffian(b));
      };
    case IdentityId::partfunc_pfaffian:
      return [=](Sampler& s, int trial) {
        auto u = s.distinct(n);
        WeightParams<Rational> p;
        Rational q = s.generic();
        std::string desc;
        if (trial % 2 == 0) {
          p = {s.rational(), s.rational(), s.rational(), s.rational(), q, PhiForm::one};
          desc = " alpha=" + to_string(p.alpha) + " beta=" + to_string(p.beta) + " gamma=" + to_string(p.gamma) +
                 " delta=" + to_string(p.delta) + " phi=1";
        } else {
          Rational sv = s.rational();
          p = WeightParams<Rational>::specialized(sv, q);
          desc = " s=" + to_string(sv) + " phi=specialized";
        }
        std::string point = "u=" + render_list(u) + " q=" + to_string(q) + desc;
        return compare(point, partition_direct(n, u, p, caps), partition_pfaffian(n, u, p));
      };
    case IdentityId::lemma_zx:
      return [=](Sampler& s, int) {
        Rational z = s.generic(), sv = s.rational(), q = s.generic();
        std::vector<Rational> u(static_cast<std::size_t>(n), Rational(1));
        u[0] = z;
        std::string point = "z=" + to_string(z) + " s=" + to_string(sv) + " q=" + to_string(q);
        return compare(point, partition_specialized(n, u, sv, q, caps), zx_rhs(n, z, sv, q, caps));
      };
    case IdentityId::eq_zsymp:
      return [=](Sampler& s, int) {
        auto u = embed(s.distinct(2 * n + 2));
        auto rep = sp_check_zsymp(n, u);
        return compare("u=" + render_list(u), rep.lhs, rep.rhs);
      };
    case IdentityId::conj17_odd_osasm:
    case IdentityId::cor_corr:
      return [=](Sampler& s, int) {
        const Cyclo12 q = Cyclo12::zeta();
        auto ur = s.distinct(n);
        std::vector<Cyclo12> args;
        for (const auto& x : ur) args.emplace_back(x);
        for (const auto& x : ur) args.emplace_back(x.inverse());
        args.emplace_back(1);
        Cyclo12 lhs = osasm_partition(2 * n + 1, args, q, caps);
        Cyclo12 rhs;
        if (id == IdentityId::conj17_odd_osasm) {
          std::vector<Cyclo12> sq;
          Cyclo12 factor = pow(Cyclo12(3), -static_cast<long>(n) * n);
          for (const auto& x : ur) {
            Rational xb = x.inverse();
            factor = factor * Cyclo12((x + xb) * (x + xb) / (x * x + xb * xb - Rational(1)));
            sq.emplace_back(x * x);
          }
          for (const auto& x : ur) sq.emplace_back(x.inverse() * x.inverse());
          sq.emplace_back(1);
          sq.emplace_back(-1);
          rhs = factor * sp_eval(double_staircase(n), default_curve(sq));
        } else {
          Cyclo12 factor = pow(Cyclo12::sqrt3(), 2L * n - 1);
          for (const auto& x : ur) {
            Rational xb = x.inverse();
            Rational d = x * x + xb * xb - Rational(1);
            factor = factor * Cyclo12((x + xb) * (x + xb) / (d * d));
          }
          std::vector<Cyclo12> even_args = args;
          even_args.push_back(Cyclo12::imaginary_unit());
          auto params = WeightParams<Cyclo12>::specialized(Cyclo12(0), q);
          rhs = factor * partition_direct(2 * n + 2, even_args, params, caps.raised_to(2 * n + 2));
        }
        return compare("u=" + render_list(ur), lhs, rhs);
      };
    case IdentityId::psi_ratio:
      return [=](Sampler& s, int) {
        auto u = embed(s.distinct(n));
        auto psi = psi_values(n, u);
        return compare("u=" + render_list(u), psi.psi2, Cyclo12(6) * psi.psi1);
      };
    default: throw std::logic_error("not a sampled identity");
  }
}

struct ExactOutcome {
  std::string what;
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

inline ExactOutcome exact_compare(std::string what, const BigInt& lhs, const BigInt& rhs) {
  return {std::move(what), lhs.get_str(), rhs.get_str(), lhs == rhs};
}

inline BigInt to_big(std::uint64_t v) {
  BigInt b;
  mpz_import(b.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return b;
}

// Deterministic identities: every comparison at this size; the first
// mismatch (if any) is the witness.
inline std::vector<ExactOutcome> exact_checks(IdentityId id, int n, const EnumerationCaps& caps) {
  std::vector<ExactOutcome> out;
  switch (id) {
    case IdentityId::thm_ox: {
      BigInt rhs = BigInt(1) << (2 * n);
      rhs *= xo_special(n + 1);
      out.push_back(exact_compare("count_osasm_odd(" + std::to_string(n) + ") vs 4^n xo_special(n+1)",
                                  count_osasm_odd(n), rhs));
      if (2 * n + 1 <= caps.symmetric_max) {
        out.push_back(exact_compare("count_osasm_odd vs |OSASM(" + std::to_string(2 * n + 1) + ")|", count_osasm_odd(n),
                                    to_big(count(2 * n + 1, SymmetryClass::OSASM, caps))));
      }
      break;
    }
    case IdentityId::product_even:
      out.push_back(exact_compare("count_osasm_even vs |OSASM(" + std::to_string(2 * n) + ")|", count_osasm_even(n),
                                  to_big(count(2 * n, SymmetryClass::OSASM, caps))));
      break;
    case IdentityId::product_odd:
      out.push_back(exact_compare("count_osasm_odd vs |OSASM(" + std::to_string(2 * n + 1) + ")|", count_osasm_odd(n),
                                  to_big(count(2 * n + 1, SymmetryClass::OSASM, caps))));
      break;
    case IdentityId::xo_minus_one: {
      Rational v = genfunc_osasm(2 * n, caps).eval<Rational>({{"r", Rational(1)}, {"t", Rational(-1)}});
      out.push_back({"X^O_" + std::to_string(2 * n) + "(1,-1) vs xo_special", v.to_string(),
                     xo_special(n).get_str(), v == Rational(xo_special(n))});
      break;
    }
    case IdentityId::sp_product: {
      std::vector<Rational> point(static_cast<std::size_t>(2 * n + 1), Rational(1));
      point.emplace_back(-1);
      Rational v = sp_eval(double_staircase(n), default_curve(point));
      out.push_back({"sp at (1,...,1,-1) vs sp_special_value", v.to_string(), sp_special_value(n).get_str(),
                     v == Rational(sp_special_value(n))});
      break;
    }
    case IdentityId::sym_even_osasm: {
      if (n % 2 != 0) throw std::invalid_argument("sym-even-osasm needs an even order");
      auto x = genfunc_osasm(n, caps);
      auto shift = LaurentPoly<Rational>::variable({"r", "t"}, "t", n + 2);
      auto rhs = shift * x.with_inverted_variable("t");
      out.push_back({"X^O_" + std::to_string(n) + "(r,t) vs t^" + std::to_string(n + 2) + " X^O(r,1/t)", x.to_string(),
                     rhs.to_string(), x == rhs});
      break;
    }
    case IdentityId::counts_vs_enumeration: {
      static const std::array<int, 3> dsasm_small = {1, 2, 5};
      static const std::array<int, 3> osasm_small = {1, 1, 4};
      for (int k = 1; k <= n; ++k) {
        const std::string ks = std::to_string(k);
        BigInt d = to_big(count(k, SymmetryClass::DSASM, caps));
        BigInt o = to_big(count(k, SymmetryClass::OSASM, caps));
        if (k <= 3) {
          out.push_back(exact_compare("|DSASM(" + ks + ")| vs displayed set", d, dsasm_small[k - 1]));
          out.push_back(exact_compare("|OSASM(" + ks + ")| vs displayed set", o, osasm_small[k - 1]));
        }
        Rational xs = genfunc_dsasm(k, caps).eval<Rational>({{"r", Rational(1)}, {"s", Rational(1)}, {"t", Rational(1)}});
        out.push_back(exact_compare("X_" + ks + "(1,1,1) vs |DSASM(" + ks + ")|", xs.numerator(), d));
        BigInt formula = k % 2 == 0 ? count_osasm_even(k / 2) : count_osasm_odd(k / 2);
        out.push_back(exact_compare("|OSASM(" + ks + ")| vs product formula", o, formula));
        if (k <= caps.asm_max) {
          out.push_back(exact_compare("|ASM(" + ks + ")| vs product formula", to_big(count(k, SymmetryClass::ASM, caps)),
                                      count_asm(k)));
        }
      }
      break;
    }
    case IdentityId::bijection_roundtrip: {
      std::uint64_t total = 0, good = 0;
      for_each_asm(
          n, SymmetryClass::DSASM,
          [&](const AsmMatrix& a) {
            ++total;
            if (config_to_dsasm(dsasm_to_config(a)) == a) ++good;
          },
          caps);
      out.push_back(exact_compare("round trips on DSASM(" + std::to_string(n) + ")", to_big(good), to_big(total)));
      break;
    }
    default: throw std::logic_error("not an exact identity");
  }
  return out;
}

// Runs one size and records the first failure or error in the report.
inline void run_size(IdentityId id, int size, int trials, std::uint64_t seed, const EnumerationCaps& caps,
                     CheckReport& rep) {
  try {
    if (identity_is_sampled(id)) {
      if (size < 0) throw std::invalid_argument("size must be nonnegative");
      auto trial_fn = sampled_trial(id, size, caps);
      for (int t = 0; t < trials; ++t) {
        Sampler sampler(trial_seed(seed, id, size, t));
        std::optional<TrialOutcome> res;
        for (int rejections = 0; !res; ++rejections) {
          if (rejections > 1000) throw std::runtime_error("more than 1000 pole rejections");
          try {
            res = trial_fn(sampler, t);
          } catch (const DivisionByZero&) {
          }
        }
        if (!res->equal) {
          if (rep.status == "pass") rep.status = "fail";
          rep.witnesses.push_back({size, t, res->point, res->lhs, res->rhs, {}});
          return;
        }
      }
    } else {
      for (const auto& o : exact_checks(id, size, caps)) {
        if (!o.equal) {
          if (rep.status == "pass") rep.status = "fail";
          rep.witnesses.push_back({size, 0, o.what, o.lhs, o.rhs, {}});
          return;
        }
      }
    }
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.witnesses.push_back({size, 0, {}, {}, {}, e.what()});
  }
}

}  // namespace detail

/// Runs one identity at one size. Sampled identities draw `trials` pole-free
/// points (resampling on poles); deterministic ones ignore `trials`.
inline CheckReport run_check(IdentityId id, int size, int trials, std::uint64_t seed,
                             const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  auto start = std::chrono::steady_clock::now();
  CheckReport rep{std::string(identity_name(id)),
                  size,
                  identity_is_sampled(id) ? trials : 1,
                  seed,
                  std::string(field_name(identity_field(id))),
                  "pass",
                  {},
                  0};
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  detail::run_size(id, size, trials, seed, caps, rep);
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Runs one identity over a size range, stopping at the first failing size.
/// The report's size is the range maximum.
inline CheckReport run_range(IdentityId id, SizeRange range, int trials, std::uint64_t seed,
                             const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (range.step < 1) throw std::invalid_argument("size step must be positive");
  auto start = std::chrono::steady_clock::now();
  CheckReport rep{std::string(identity_name(id)),
                  range.max,
                  identity_is_sampled(id) ? trials : 1,
                  seed,
                  std::string(field_name(identity_field(id))),
                  "pass",
                  {},
                  0};
  for (int size = range.min; size <= range.max && rep.status == "pass"; size += range.step) {
    detail::run_size(id, size, trials, seed, caps, rep);
  }
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Runs every identity over its default size range (or up to an overridden
/// maximum), one aggregated report per identity in the fixed id order.
/// Errors become error reports; the batch always completes.
inline std::vector<CheckReport> run_all(const std::map<IdentityId, int>& max_size_per_id, std::uint64_t seed,
                                        int trials = 5, const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  std::vector<CheckReport> out;
  for (auto id : all_identities) {
    auto range = default_sizes(id);
    if (auto it = max_size_per_id.find(id); it != max_size_per_id.end()) range.max = it->second;
    out.push_back(run_range(id, range, trials, seed, caps));
  }
  return out;
}

}  // namespace asmkit

#endif
