// Builtin example structures.

#ifndef GPDX_FIXTURES_HPP_
#define GPDX_FIXTURES_HPP_

#include <string>
#include <vector>

#include "gpdx/dgpd.hpp"
#include "gpdx/groupoid.hpp"
#include "gpdx/xmod.hpp"

namespace gpdx::fixtures {

  // C_n on one object "o" with arrows "0" .. "n-1".
  FiniteGroupoid cyclic(int n);

  // S_n (n <= 5) on one object "o".  Permutations are named in cycle
  // notation, "(12)", "(123)", with identity "e"; a b means a then b.
  FiniteGroupoid symmetric(int n);

  // Objects x, y; arrows 1x, 1y, i : x -> y, i^-1.
  FiniteGroupoid interval();

  // Objects p0 .. p(n-1) with identities only.
  FiniteGroupoid discrete(int n);

  // The indiscrete groupoid on k objects times a one-object groupoid g:
  // objects "0" .. "k-1", arrows "s>t:h".
  FiniteGroupoid indiscrete_product(int k, FiniteGroupoid const& g);

  // Ids are kept unless the two sides collide, in which case every id is
  // prefixed with "L." or "R.".
  FiniteGroupoid disjoint_union(FiniteGroupoid const& a,
                                FiniteGroupoid const& b);

  // The subgroupoid generated by the given arrows, over all objects.
  SubgroupoidWitness generated(FiniteGroupoid const&           g,
                               std::vector<std::string> const& arrows);

  // Named subgroupoids: "identities", "loops", "full", "alternating" (even
  // permutations of a symmetric group), "mult:k" (multiples of k in a cyclic
  // group or a product with one), or a comma list of generators "gen:a,b".
  SubgroupoidWitness named_sub(FiniteGroupoid const& g, std::string const& spec);

  // Groupoid from a spec string: "cyclic:n", "symmetric:n", "interval",
  // "discrete:n", "indiscrete:k:<spec>", "union:<spec>+<spec>", and for the
  // subgroups of S4 "klein", "dihedral4", "alternating:n".
  // Throws Error(unknown_fixture) or Error(bad_params).
  FiniteGroupoid groupoid(std::string const& spec);

  // Inclusion of the named subgroupoid with conjugation action.
  CrossedModule conj_xmod(FiniteGroupoid const& g, std::string const& sub);

  // mu : C_n -> C_m, x -> f x mod m, trivial action.  Requires f n = 0 mod m.
  CrossedModule cyclic_xmod(int n, int m, int f);

  // The identity crossed module id : G -> G with conjugation, G totally
  // intransitive.
  CrossedModule identity_xmod(FiniteGroupoid const& g);

}  // namespace gpdx::fixtures

#endif  // GPDX_FIXTURES_HPP_
