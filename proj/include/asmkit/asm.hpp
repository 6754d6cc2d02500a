#ifndef ASMKIT_ASM_HPP
#define ASMKIT_ASM_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asmkit/errors.hpp"
#include "asmkit/laurent_poly.hpp"
#include "asmkit/rational.hpp"

namespace asmkit {

enum class SymmetryClass { ASM, DSASM, OSASM };

inline std::string_view class_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::ASM: return "asm";
    case SymmetryClass::DSASM: return "dsasm";
    case SymmetryClass::OSASM: return "osasm";
  }
  return "?";
}

inline SymmetryClass parse_class(std::string_view s) {
  if (s == "asm") return SymmetryClass::ASM;
  if (s == "dsasm") return SymmetryClass::DSASM;
  if (s == "osasm") return SymmetryClass::OSASM;
  throw std::invalid_argument("unknown symmetry class '" + std::string(s) + "'");
}

using IntMatrix = std::vector<std::vector<int>>;

struct ValidationReport {
  bool ok = true;
  std::string rule;  // empty when ok
  int row = -1;      // 0-based position of the first violation
  int col = -1;
  std::string message;
};

/// Checks M against the class invariants, scanning cells in row-major order
/// and reporting the first rule broken. Rules: "square", "entry-range",
/// "row-prefix", "column-prefix", "row-sum", "column-sum", "symmetry",
/// "diagonal".
inline ValidationReport validate(const IntMatrix& m, SymmetryClass cls) {
  auto fail = [](std::string rule, int r, int c, std::string msg) {
    return ValidationReport{false, std::move(rule), r, c, std::move(msg)};
  };
  const int n = static_cast<int>(m.size());
  if (n == 0) return fail("square", -1, -1, "empty matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) return fail("square", i, -1, "row " + std::to_string(i) + " has wrong length");
  }
  const bool symmetric = cls != SymmetryClass::ASM;
  const int diag_allowed = cls == SymmetryClass::OSASM ? n % 2 : n;
  std::vector<int> col_prefix(static_cast<std::size_t>(n), 0);
  int diag_nonzero = 0;
  for (int i = 0; i < n; ++i) {
    int row_prefix = 0;
    for (int j = 0; j < n; ++j) {
      const int v = m[i][j];
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (v < -1 || v > 1) return fail("entry-range", i, j, "entry " + std::to_string(v) + " at " + at);
      row_prefix += v;
      col_prefix[j] += v;
      if (row_prefix < 0 || row_prefix > 1)
        return fail("row-prefix", i, j, "row partial sum " + std::to_string(row_prefix) + " at " + at);
      if (col_prefix[j] < 0 || col_prefix[j] > 1)
        return fail("column-prefix", i, j, "column partial sum " + std::to_string(col_prefix[j]) + " at " + at);
      if (j == n - 1 && row_prefix != 1)
        return fail("row-sum", i, j, "row " + std::to_string(i) + " sums to " + std::to_string(row_prefix));
      if (i == n - 1 && col_prefix[j] != 1)
        return fail("column-sum", i, j, "column " + std::to_string(j) + " sums to " + std::to_string(col_prefix[j]));
      if (symmetric && m[i][j] != m[j][i]) return fail("symmetry", i, j, "A" + at + " differs from its mirror");
      if (i == j && v != 0 && ++diag_nonzero > diag_allowed)
        return fail("diagonal", i, j,
                    "S(A)=" + std::to_string(diag_nonzero) + " exceeds " + std::to_string(diag_allowed));
    }
  }
  if (cls == SymmetryClass::OSASM && diag_nonzero != diag_allowed)
    return fail("diagonal", n - 1, n - 1,
                "S(A)=" + std::to_string(diag_nonzero) + ", expected " + std::to_string(diag_allowed));
  return {};
}

/// Square matrix over {-1, 0, 1} satisfying the ASM rules.
class AsmMatrix {
 public:
  AsmMatrix() = default;

  // Throws std::invalid_argument with the first violation if rows is not an ASM.
  static AsmMatrix from_rows(const IntMatrix& rows) {
    auto rep = validate(rows, SymmetryClass::ASM);
    if (!rep.ok) throw std::invalid_argument("not an ASM: " + rep.message);
    AsmMatrix a;
    a.n_ = static_cast<int>(rows.size());
    a.e_.reserve(static_cast<std::size_t>(a.n_ * a.n_));
    for (const auto& r : rows)
      for (int v : r) a.e_.push_back(static_cast<std::int8_t>(v));
    return a;
  }

  static AsmMatrix identity(int n) {
    IntMatrix rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    return from_rows(rows);
  }

  int order() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  IntMatrix rows() const {
    IntMatrix out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
  }

  AsmMatrix transpose() const {
    AsmMatrix t = *this;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t.e_[static_cast<std::size_t>(j * n_ + i)] = e_[static_cast<std::size_t>(i * n_ + j)];
    return t;
  }

  bool is_in(SymmetryClass cls) const { return validate(rows(), cls).ok; }

  // Rows as space-separated entries, one row per line.
  std::string to_text() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (j) out += ' ';
        out += std::to_string(at(i, j));
      }
      out += '\n';
    }
    return out;
  }

  static AsmMatrix parse_text(std::string_view text) {
    IntMatrix rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::vector<int> row;
      int v;
      while (ls >> v) row.push_back(v);
      if (!row.empty()) rows.push_back(std::move(row));
    }
    return from_rows(rows);
  }

  friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;
  friend auto operator<=>(const AsmMatrix&, const AsmMatrix&) = default;

 private:
  friend class AsmEnumerator;
  int n_ = 0;
  std::vector<std::int8_t> e_;
};

/// Order limits for exhaustive enumeration.
struct EnumerationCaps {
  int asm_max = 6;
  int symmetric_max = 8;

  // ASMKIT_MAX_ORDER, when set to a positive integer, raises both limits.
  static EnumerationCaps from_env() {
    EnumerationCaps caps;
    if (const char* env = std::getenv("ASMKIT_MAX_ORDER")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) caps = caps.raised_to(static_cast<int>(v));
    }
    return caps;
  }

  EnumerationCaps raised_to(int order) const {
    return {std::max(asm_max, order), std::max(symmetric_max, order)};
  }

  int limit(SymmetryClass cls) const { return cls == SymmetryClass::ASM ? asm_max : symmetric_max; }

  void check(int n, SymmetryClass cls) const {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (n > limit(cls))
      throw CapExceeded("order " + std::to_string(n) + " exceeds the " + std::string(class_name(cls)) +
                        " enumeration cap " + std::to_string(limit(cls)));
  }
};

/// Backtracking enumerator. Emits matrices in lexicographic order of their
/// row-major entry sequence with -1 < 0 < 1. For the symmetric classes only
/// the upper triangle is searched; the mirror cell is set together with it.
class AsmEnumerator {
 public:
  using Visitor = std::function<void(const AsmMatrix&)>;

  AsmEnumerator(int n, SymmetryClass cls) : n_(n), cls_(cls) {
    cur_.n_ = n;
    cur_.e_.assign(static_cast<std::size_t>(n * n), 0);
    row_.assign(static_cast<std::size_t>(n), 0);
    col_.assign(static_cast<std::size_t>(n), 0);
  }

  void run(const Visitor& visit) {
    visit_ = &visit;
    if (cls_ == SymmetryClass::ASM) {
      full(0, 0);
    } else {
      upper(0, 0);
    }
  }

 private:
  void set(int i, int j, int v) { cur_.e_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::int8_t>(v); }

  void full(int i, int j) {
    if (i == n_) {
      (*visit_)(cur_);
      return;
    }
    const int ni = j + 1 == n_ ? i + 1 : i;
    const int nj = j + 1 == n_ ? 0 : j + 1;
    for (int v = -1; v <= 1; ++v) {
      const int r = row_[i] + v;
      const int c = col_[j] + v;
      if (r < 0 || r > 1 || c < 0 || c > 1) continue;
      if (j == n_ - 1 && r != 1) continue;
      if (i == n_ - 1 && c != 1) continue;
      row_[i] = r;
      col_[j] = c;
      set(i, j, v);
      full(ni, nj);
      row_[i] -= v;
      col_[j] -= v;
    }
    set(i, j, 0);
  }

  // row_[k] holds the partial sum of row k (equivalently column k) over the
  // cells fixed so far.
  void upper(int i, int j) {
    if (i == n_) {
      (*visit_)(cur_);
      return;
    }
    const int ni = j + 1 == n_ ? i + 1 : i;
    const int nj = j + 1 == n_ ? i + 1 : j + 1;
    for (int v = -1; v <= 1; ++v) {
      if (i == j) {
        const int r = row_[i] + v;
        if (r < 0 || r > 1) continue;
        if (j == n_ - 1 && r != 1) continue;
        if (cls_ == SymmetryClass::OSASM && v != 0) {
          if (n_ % 2 == 0 || diag_ == 1) continue;
        }
        if (cls_ == SymmetryClass::OSASM && n_ % 2 == 1 && i == n_ - 1 && diag_ + (v != 0) != 1) continue;
        row_[i] = r;
        diag_ += v != 0;
        set(i, i, v);
        upper(ni, nj);
        diag_ -= v != 0;
        row_[i] -= v;
      } else {
        const int r = row_[i] + v;
        const int c = row_[j] + v;
        if (r < 0 || r > 1 || c < 0 || c > 1) continue;
        if (j == n_ - 1 && r != 1) continue;
        row_[i] = r;
        row_[j] = c;
        set(i, j, v);
        set(j, i, v);
        upper(ni, nj);
        row_[i] -= v;
        row_[j] -= v;
      }
    }
    set(i, j, 0);
    set(j, i, 0);
  }

  int n_;
  SymmetryClass cls_;
  AsmMatrix cur_;
  std::vector<int> row_, col_;
  int diag_ = 0;
  const Visitor* visit_ = nullptr;
};

inline void for_each_asm(int n, SymmetryClass cls, const AsmEnumerator::Visitor& visit,
                         const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  caps.check(n, cls);
  AsmEnumerator(n, cls).run(visit);
}

inline std::vector<AsmMatrix> enumerate(int n, SymmetryClass cls, const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  std::vector<AsmMatrix> out;
  for_each_asm(n, cls, [&](const AsmMatrix& a) { out.push_back(a); }, caps);
  return out;
}

inline std::uint64_t count(int n, SymmetryClass cls, const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  std::uint64_t c = 0;
  for_each_asm(n, cls, [&](const AsmMatrix&) { ++c; }, caps);
  return c;
}

struct Statistics {
  int R = 0;  // nonzero entries strictly above the diagonal
  int S = 0;  // nonzero diagonal entries
  int T = 0;  // 1-based column of the 1 in the first row
  friend bool operator==(const Statistics&, const Statistics&) = default;
};

inline Statistics statistics(const AsmMatrix& a) {
  Statistics st;
  const int n = a.order();
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i) != 0) ++st.S;
    for (int j = i + 1; j < n; ++j) st.R += a.at(i, j) != 0;
  }
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j) == 1) {
      st.T = j + 1;
      break;
    }
  }
  return st;
}

/// X_n(r,s,t) = sum over DSASM(n) of r^R s^S t^T.
inline LaurentPoly<Rational> genfunc_dsasm(int n, const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  LaurentPoly<Rational> p({"r", "s", "t"});
  for_each_asm(
      n, SymmetryClass::DSASM,
      [&](const AsmMatrix& a) {
        auto st = statistics(a);
        p.add_term({st.R, st.S, st.T}, Rational(1));
      },
      caps);
  return p;
}

/// X^O_n(r,t) = sum over OSASM(n) of r^R t^T.
inline LaurentPoly<Rational> genfunc_osasm(int n, const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  LaurentPoly<Rational> p({"r", "t"});
  for_each_asm(
      n, SymmetryClass::OSASM,
      [&](const AsmMatrix& a) {
        auto st = statistics(a);
        p.add_term({st.R, st.T}, Rational(1));
      },
      caps);
  return p;
}

}  // namespace asmkit

#endif
