// Enumerated class sizes next to the product formulas, orders 1..8.

#include <cstdio>

#include "asmkit/asmkit.hpp"

using namespace asmkit;

int main() {
  std::printf("%2s %8s %8s %10s %6s %9s\n", "n", "DSASM", "OSASM", "formula", "ASM", "X^O(1,-1)");
  for (int n = 1; n <= 8; ++n) {
    BigInt formula = n % 2 == 0 ? count_osasm_even(n / 2) : count_osasm_odd(n / 2);
    std::string asm_count = n <= 6 ? std::to_string(count(n, SymmetryClass::ASM)) : "-";
    Rational xo = genfunc_osasm(n).eval<Rational>({{"r", Rational(1)}, {"t", Rational(-1)}});
    std::printf("%2d %8llu %8llu %10s %6s %9s\n", n, static_cast<unsigned long long>(count(n, SymmetryClass::DSASM)),
                static_cast<unsigned long long>(count(n, SymmetryClass::OSASM)), formula.get_str().c_str(),
                asm_count.c_str(), xo.to_string().c_str());
  }

  std::printf("\nOSASMs of order 3:\n");
  for (const auto& a : enumerate(3, SymmetryClass::OSASM)) std::printf("%s\n", a.to_text().c_str());
  std::printf("X^O_3(r,t) = %s\n", genfunc_osasm(3).to_string().c_str());
  return 0;
}
