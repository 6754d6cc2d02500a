// Symplectic characters at degenerate points and their link to the
// partition function.

#include <iostream>

#include "asmkit/asmkit.hpp"

using namespace asmkit;

int main() {
  for (int n = 0; n <= 3; ++n) {
    std::vector<Rational> point(static_cast<std::size_t>(2 * n + 1), Rational(1));
    point.emplace_back(-1);
    Rational v = sp_eval(double_staircase(n), default_curve(point));
    std::cout << "sp at (1,...,1,-1), n=" << n << ": " << v << "  (product formula " << sp_special_value(n) << ")\n";
  }

  // The even-order partition function at q = z equals a symplectic character.
  std::vector<Cyclo12> u{Cyclo12(2), Cyclo12(Rational(1, 3)), Cyclo12(-5), Cyclo12(Rational(7, 4))};
  auto rep = sp_check_zsymp(1, u);
  std::cout << "\nZ~_4 at s=0 = " << rep.lhs << "\ncharacter    = " << rep.rhs << "\n" << (rep.equal ? "equal" : "DIFFERENT")
            << "\n";

  // A named check from the identity suite.
  auto check = run_check(IdentityId::conj17_odd_osasm, 1, 3, 42);
  std::cout << "\n" << check.to_json(false).dump() << "\n";
  return 0;
}
