#ifndef ASMKIT_LAURENT_POLY_HPP
#define ASMKIT_LAURENT_POLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "asmkit/errors.hpp"
#include "asmkit/field.hpp"

namespace asmkit {

namespace detail {

struct CoefficientText {
  bool negative = false;
  bool unit = false;  // magnitude is exactly 1
  std::string magnitude;
};

inline CoefficientText coefficient_text(const Rational& c) {
  Rational mag = c.abs();
  return {c.sign() < 0, mag == Rational(1), mag.to_string()};
}

inline CoefficientText coefficient_text(const Cyclo12& c) {
  if (c.is_rational()) return coefficient_text(c.coeff(0));
  return {false, false, "(" + c.to_string() + ")"};
}

}  // namespace detail

/// Sparse multivariate Laurent polynomial over an exact coefficient domain.
///
/// Terms are kept in a map keyed by exponent vector, ordered lexicographically
/// descending; zero coefficients are never stored. Two polynomials only
/// combine when their variable lists agree exactly.
template <ExactField C>
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, C, std::greater<Exponents>>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static LaurentPoly constant(std::vector<std::string> variables, const C& c) {
    LaurentPoly p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static LaurentPoly monomial(std::vector<std::string> variables, const C& c, Exponents e) {
    LaurentPoly p(std::move(variables));
    p.add_term(std::move(e), c);
    return p;
  }

  static LaurentPoly variable(std::vector<std::string> variables, const std::string& name, int power = 1) {
    LaurentPoly p(std::move(variables));
    Exponents e(p.vars_.size(), 0);
    e.at(p.index_of(name)) = power;
    p.add_term(std::move(e), C(1));
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw DomainMismatch("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void add_term(Exponents e, const C& c) {
    if (e.size() != vars_.size()) throw DomainMismatch("exponent vector length differs from variable count");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  LaurentPoly operator-() const {
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same(b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same(b);
    LaurentPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  LaurentPoly scaled(const C& s) const {
    LaurentPoly out(vars_);
    if (is_zero_coeff(s)) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
  }

  // Substitutes name -> 1/name.
  LaurentPoly with_inverted_variable(const std::string& name) const {
    std::size_t k = index_of(name);
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      auto f = e;
      f[k] = -f[k];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Evaluates at a point assigning a field value to every variable.
  /// Throws PoleError if a variable carrying a negative exponent is zero.
  template <ExactField F>
  F eval(const std::map<std::string, F>& point) const {
    std::vector<F> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
      auto it = point.find(v);
      if (it == point.end()) throw DomainMismatch("no value supplied for variable '" + v + "'");
      values.push_back(it->second);
    }
    F total(0);
    for (const auto& [e, c] : terms_) {
      F term = to_field<F>(c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (e[k] < 0 && asmkit::is_zero(values[k])) throw PoleError("variable '" + vars_[k] + "' is zero but appears inverted");
        term = term * pow(values[k], e[k]);
      }
      total = total + term;
    }
    return total;
  }

  // Canonical text: terms in descending lexicographic exponent order, each as
  // coef*var1^e1*var2^e2 with unit exponents and unit coefficients dropped.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      auto ct = detail::coefficient_text(c);
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[k];
        if (e[k] != 1) mono += "^" + std::to_string(e[k]);
      }
      std::string term;
      if (mono.empty()) {
        term = ct.magnitude;
      } else if (ct.unit) {
        term = mono;
      } else {
        term = ct.magnitude + "*" + mono;
      }
      if (out.empty()) {
        out = ct.negative ? "-" + term : term;
      } else {
        out += ct.negative ? " - " : " + ";
        out += term;
      }
    }
    return out;
  }

 private:
  static bool is_zero_coeff(const C& c) { return asmkit::is_zero(c); }

  template <ExactField F>
  static F to_field(const C& c) {
    if constexpr (std::is_same_v<F, C>) {
      return c;
    } else {
      return F(c);
    }
  }

  void require_same(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw DomainMismatch("Laurent polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace asmkit

#endif
