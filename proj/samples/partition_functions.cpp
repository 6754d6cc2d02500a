// Six-vertex partition functions: direct sums against the Pfaffian formula,
// and the specialization at q = z that counts DSASMs and OSASMs.

#include <iostream>

#include "asmkit/asmkit.hpp"

using namespace asmkit;

int main() {
  // General weights over Q.
  std::vector<Rational> u{Rational(2), Rational(-1, 3), Rational(5, 7), Rational(3, 4)};
  WeightParams<Rational> p{Rational(2), Rational(-3, 2), Rational(1, 5), Rational(4), Rational(3), PhiForm::one};
  Rational direct = partition_direct(4, u, p);
  Rational pf = partition_pfaffian(4, u, p);
  std::cout << "Z_4 direct   = " << direct << "\n"
            << "Z_4 pfaffian = " << pf << "\n"
            << (direct == pf ? "agree" : "DISAGREE") << "\n\n";

  // At u = (1,...,1), q = z and s = 1 the specialized function is |DSASM(n)|;
  // the OSASM partition function is |OSASM(n)|.
  const Cyclo12 q = Cyclo12::zeta();
  for (int n = 1; n <= 6; ++n) {
    std::vector<Cyclo12> ones(static_cast<std::size_t>(n), Cyclo12(1));
    std::cout << "n=" << n << "  Z~ = " << partition_specialized(n, ones, Cyclo12(1), q)
              << "  Z^O = " << osasm_partition(n, ones, q) << "\n";
  }

  // The one-parameter family Z~_n(z,1,...,1) in closed form.
  Rational z(3, 2), s(1, 3), qr(2);
  std::vector<Rational> zu{z, Rational(1), Rational(1), Rational(1)};
  std::cout << "\nZ~_4(z,1,1,1) = " << partition_specialized(4, zu, s, qr) << "\nformula        = " << zx_rhs(4, z, s, qr)
            << "\n";
  return 0;
}
