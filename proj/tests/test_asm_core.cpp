#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "asmkit/asm.hpp"

using namespace asmkit;

namespace {

AsmMatrix mat(const IntMatrix& rows) { return AsmMatrix::from_rows(rows); }

}  // namespace

TEST(Validate, AcceptsDisplayedDsasm) {
  IntMatrix m{{0, 1, 0}, {1, -1, 1}, {0, 1, 0}};
  EXPECT_TRUE(validate(m, SymmetryClass::DSASM).ok);
  EXPECT_TRUE(validate(m, SymmetryClass::ASM).ok);
  EXPECT_TRUE(validate(m, SymmetryClass::OSASM).ok);  // one nonzero diagonal entry at odd order
}

TEST(Validate, ReportsFirstViolation) {
  auto rep = validate({{1, 0}, {0, 1}}, SymmetryClass::OSASM);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.rule, "diagonal");
  EXPECT_EQ(rep.row, 0);
  EXPECT_EQ(rep.col, 0);

  rep = validate({{0, 0}, {1, 0}}, SymmetryClass::ASM);
  EXPECT_EQ(rep.rule, "row-sum");
  EXPECT_EQ(rep.row, 0);

  rep = validate({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, SymmetryClass::DSASM);
  EXPECT_TRUE(rep.ok);
  rep = validate({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, SymmetryClass::DSASM);
  EXPECT_EQ(rep.rule, "symmetry");
  EXPECT_EQ(rep.row, 0);
  EXPECT_EQ(rep.col, 1);

  rep = validate({{-1, 1}, {1, 0}}, SymmetryClass::ASM);
  EXPECT_EQ(rep.rule, "row-prefix");
  rep = validate({{2, -1}, {-1, 2}}, SymmetryClass::ASM);
  EXPECT_EQ(rep.rule, "entry-range");
  rep = validate({{1, 0}, {0}}, SymmetryClass::ASM);
  EXPECT_EQ(rep.rule, "square");
}

TEST(Validate, OddOsasmNeedsExactlyOneDiagonalEntry) {
  EXPECT_TRUE(validate({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, SymmetryClass::OSASM).ok);
  auto rep = validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, SymmetryClass::OSASM);
  EXPECT_EQ(rep.rule, "diagonal");
  EXPECT_EQ(rep.row, 1);
}

TEST(Enumerate, DisplayedSets) {
  auto d3 = enumerate(3, SymmetryClass::DSASM);
  ASSERT_EQ(d3.size(), 5u);
  std::set<AsmMatrix> expect{mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
                             mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}),
                             mat({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})};
  EXPECT_EQ(std::set<AsmMatrix>(d3.begin(), d3.end()), expect);

  auto o3 = enumerate(3, SymmetryClass::OSASM);
  ASSERT_EQ(o3.size(), 4u);
  std::set<AsmMatrix> expect_o{mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}), mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                               mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), mat({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})};
  EXPECT_EQ(std::set<AsmMatrix>(o3.begin(), o3.end()), expect_o);

  auto o4 = enumerate(4, SymmetryClass::OSASM);
  ASSERT_EQ(o4.size(), 3u);
  for (const auto& a : o4) {
    for (int i = 0; i < 4; ++i) {
      EXPECT_EQ(a.at(i, i), 0);
      for (int j = 0; j < 4; ++j) EXPECT_GE(a.at(i, j), 0);
    }
  }
}

TEST(Enumerate, CountsByClass) {
  const std::vector<std::uint64_t> asm_counts{1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count(n, SymmetryClass::ASM), asm_counts[n - 1]) << n;
  const std::vector<std::uint64_t> dsasm{1, 2, 5, 16, 67, 368, 2630, 24376};
  const std::vector<std::uint64_t> osasm{1, 1, 4, 3, 32, 26, 640, 646};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(count(n, SymmetryClass::DSASM), dsasm[n - 1]) << n;
    EXPECT_EQ(count(n, SymmetryClass::OSASM), osasm[n - 1]) << n;
  }
}

TEST(Enumerate, CanonicalLexicographicOrder) {
  for (auto cls : {SymmetryClass::ASM, SymmetryClass::DSASM, SymmetryClass::OSASM}) {
    auto all = enumerate(5, cls);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end())) << class_name(cls);
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  }
  auto d2 = enumerate(2, SymmetryClass::DSASM);
  EXPECT_EQ(d2[0], mat({{0, 1}, {1, 0}}));
  EXPECT_EQ(d2[1], mat({{1, 0}, {0, 1}}));
}

TEST(Enumerate, EveryEmissionValidAndSymmetric) {
  for (int n = 1; n <= 7; ++n) {
    for_each_asm(n, SymmetryClass::DSASM, [&](const AsmMatrix& a) {
      EXPECT_TRUE(a.is_in(SymmetryClass::DSASM));
      EXPECT_EQ(a.transpose(), a);
    });
    for_each_asm(n, SymmetryClass::OSASM, [&](const AsmMatrix& a) {
      EXPECT_TRUE(a.is_in(SymmetryClass::OSASM));
      int s = 0;
      for (int i = 0; i < n; ++i) s += a.at(i, i) != 0;
      EXPECT_EQ(s, n % 2);
    });
  }
}

TEST(Enumerate, DsasmIsTransposeFixedSubsetOfAsm) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<AsmMatrix> fixed;
    for_each_asm(n, SymmetryClass::ASM, [&](const AsmMatrix& a) {
      if (a.transpose() == a) fixed.push_back(a);
    });
    EXPECT_EQ(fixed, enumerate(n, SymmetryClass::DSASM)) << n;
  }
}

TEST(Enumerate, Caps) {
  EnumerationCaps caps;
  EXPECT_THROW(enumerate(7, SymmetryClass::ASM, caps), CapExceeded);
  EXPECT_THROW(enumerate(9, SymmetryClass::DSASM, caps), CapExceeded);
  EXPECT_THROW(enumerate(0, SymmetryClass::DSASM, caps), std::invalid_argument);
  EXPECT_EQ(caps.raised_to(9).symmetric_max, 9);
  EXPECT_EQ(caps.raised_to(4).asm_max, 6);
}

TEST(Statistics, Examples) {
  EXPECT_EQ(statistics(mat({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})), (Statistics{2, 1, 2}));
  EXPECT_EQ(statistics(AsmMatrix::identity(3)), (Statistics{0, 3, 1}));
  EXPECT_EQ(statistics(mat({{0, 1}, {1, 0}})), (Statistics{1, 0, 2}));
}

TEST(GenFunc, Dsasm) {
  EXPECT_EQ(genfunc_dsasm(1).to_string(), "s*t");
  EXPECT_EQ(genfunc_dsasm(2).to_string(), "r*t^2 + s^2*t");
  LaurentPoly<Rational> x3({"r", "s", "t"});
  for (auto e : std::vector<std::vector<int>>{{0, 3, 1}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {2, 1, 2}}) x3.add_term(e, 1);
  EXPECT_EQ(genfunc_dsasm(3), x3);
}

TEST(GenFunc, Osasm) {
  EXPECT_EQ(genfunc_osasm(2).to_string(), "r*t^2");
  EXPECT_EQ(genfunc_osasm(3).to_string(), "r^2*t^2 + r*t^3 + r*t^2 + r*t");
  EXPECT_EQ(genfunc_osasm(4).to_string(), "r^2*t^4 + r^2*t^3 + r^2*t^2");
}

TEST(GenFunc, ConsistentWithCountsAndDsasmSlices) {
  for (int n = 1; n <= 7; ++n) {
    auto x = genfunc_dsasm(n);
    EXPECT_EQ(x.eval<Rational>({{"r", 1}, {"s", 1}, {"t", 1}}), Rational(count(n, SymmetryClass::DSASM)));
    auto xo = genfunc_osasm(n);
    EXPECT_EQ(xo.eval<Rational>({{"r", 1}, {"t", 1}}), Rational(count(n, SymmetryClass::OSASM)));
    // X^O_n is the s^(n mod 2) coefficient of X_n.
    LaurentPoly<Rational> slice({"r", "t"});
    for (const auto& [e, c] : x.terms()) {
      if (e[1] == n % 2) slice.add_term({e[0], e[2]}, c);
    }
    EXPECT_EQ(slice, xo) << n;
  }
}

TEST(AsmMatrix, TextFormat) {
  auto a = mat({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
  EXPECT_EQ(a.to_text(), "0 1 0\n1 -1 1\n0 1 0\n");
  EXPECT_EQ(AsmMatrix::parse_text(a.to_text()), a);
  EXPECT_THROW(AsmMatrix::parse_text("1 1\n0 0\n"), std::invalid_argument);
}
