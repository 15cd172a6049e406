// Walks through the states of M2 x M3 into M6 and their factorization
// through the universal state on Delta_(2,3).

#include <iostream>

#include "mvstate/mvstate.hpp"

int main() {
  using namespace mvstate;

  const FiniteMvAlgebra A = parse_algebra("M2*M3");
  const FiniteMvAlgebra N = parse_algebra("M6");
  const UniversalState u = universal_state(A);

  std::cout << "states " << A.to_string() << " -> " << N.to_string() << "\n";
  for (const StateTable& s : enumerate_states(A, N)) {
    const DualHom h = factor_state(u, s);
    std::cout << "  atom values";
    for (const auto& v : s.atom_values()) std::cout << " " << v[0] << "/6";
    std::cout << "  dual point (";
    for (std::size_t i = 0; i < h.points[0].dimension(); ++i)
      std::cout << (i ? ", " : "") << to_string(h.points[0].coords[i]);
    std::cout << ")\n";
  }

  // The diagonal embedding M2 -> M2 x M6 and the affine map dual to it.
  const MvHom diag = extend_atom_images(parse_algebra("M2"), parse_algebra("M2*M6"), {{1, 3}});
  const UpsilonCertificate c = upsilon_of_hom(diag);
  std::cout << "alpha(x1, x2) = " << c.alpha.matrix[0][0] << " x1 + " << c.alpha.matrix[0][1] << " x2"
            << (c.ok() ? "  (certified)" : "  (certificate failed)") << "\n";
  return c.ok() ? 0 : 1;
}
