// Property checks shared by the unit tests and the acceptance driver.

#ifndef GPDX_TESTS_CHECKS_HPP_
#define GPDX_TESTS_CHECKS_HPP_

#include <cstddef>
#include <string>

#include "gpdx/equiv.hpp"

namespace checks {

  struct Tally {
    std::size_t cases    = 0;
    std::size_t failures = 0;
    std::string first;  // description of the first failure
  };

  // For alpha = (m; a, c, b, d) in l and beta = (n; d, g, f, d) in h2, the
  // module part of alpha +2 beta -2 alpha has boundary
  // b f^-1 b^-1 a^-1 c g c^-1 a.  Every such pair is one case.
  Tally conjugation_identity(gpdx::LambdaDGpd const& l, gpdx::Mask const& h2);

  // w -> H in lambda(X) -> back in gamma(lambda(X)) recovers w under
  // m -> (m; 1, mu m, 1, 1), and H is normal.
  Tally transfer_round_trip(gpdx::LambdaDGpd const& l, gpdx::SubXModWitness const& w);

  // h in g -> gamma side -> lambda(gamma(g)) recovers h under the round
  // trip map u -> (fold u; shell u), and both ends are normal.
  Tally converse_round_trip(gpdx::SubDGpdWitness const& h);

}  // namespace checks

#endif  // GPDX_TESTS_CHECKS_HPP_
