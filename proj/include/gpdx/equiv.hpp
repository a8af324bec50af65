// The equivalence between crossed modules over groupoids and double
// groupoids with thin structure, and the transfer of normal substructures
// and quotients across it.
//
// lambda(X) has the squares (m; a, c, b, d) for a shell (a, c, b, d) of P and
// m in M at the bottom right corner with mu(m) = b^-1 a^-1 c d, with
//
//   (m; a, c, b, d) +2 (n; d, g, f, h) = (m^f + n; a, cg, bf, h)
//   (m; a, c, b, d) +1 (n; f, b, g, h) = (n + m^h; af, c, g, dh)
//
// and thin squares (0; a, c, b, d) on commutative shells.  gamma(G) has base
// the edge groupoid and module the squares whose left, bottom and right
// faces are identities, composed by +2, with boundary the top face and
// action u^a = e1(a^-1) +2 u +2 e1(a).

#ifndef GPDX_EQUIV_HPP_
#define GPDX_EQUIV_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpdx/dgpd.hpp"
#include "gpdx/report.hpp"
#include "gpdx/xmod.hpp"

namespace gpdx {

  struct LambdaDGpd {
    CrossedModule    source;
    DoubleGroupoid   dgpd;
    std::vector<Idx> module_part;  // per square, its m

    // The square (m; s), or kUndef.
    Idx square(Idx m, Shell const& s) const;

    std::map<std::pair<Idx, Shell>, Idx> index;
  };

  // Squares are named "(m;a,c,b,d)".
  LambdaDGpd lambda(CrossedModule const& x);

  // The module arrows keep the names of their squares.
  CrossedModule gamma(DoubleGroupoid const& g);

  // The square of g's module corresponding to u under gamma: a composite of
  // u with thin squares having left, bottom and right faces identities at
  // the bottom right corner of u and top face b^-1 a^-1 c d.  Requires a
  // thin structure.
  Idx fold(DoubleGroupoid const& g, Idx u);

  // lambda on morphisms: (m; s) -> (f2 m; f1 s).
  DGpdMorphism lambda_morphism(XModMorphism const& f,
                               LambdaDGpd const&   source,
                               LambdaDGpd const&   target);

  struct EquivalenceReport {
    std::string direction;  // "gamma-lambda" or "lambda-gamma"
    Report      report;

    bool passed() const {
      return report.ok();
    }
  };

  struct XModRoundTrip : EquivalenceReport {
    XModMorphism map;  // X -> gamma(lambda(X)), m -> (m; 1, mu(m), 1, 1)
  };

  struct DGpdRoundTrip : EquivalenceReport {
    DGpdMorphism map;  // G -> lambda(gamma(G)), u -> (fold(u); shell(u))
  };

  XModRoundTrip roundtrip_xmod(CrossedModule const& x);

  // Throws Error(bad_params) without a thin structure.
  DGpdRoundTrip roundtrip_dgpd(DoubleGroupoid const& g);

  // H2 = squares (n; s) with n in N and the edges of s in Q.  Throws
  // Error(not_normal) unless w.is_normal.
  SubDGpdWitness transfer_normal_sub_to_dgpd(LambdaDGpd const&     l,
                                             SubXModWitness const& w);

  // N = squares of H2 in gamma(G)'s module, Q = H1.  The report also carries
  // NCM3-boundary: mu(-m) b^-1 mu(m) b in Q for m in M(p), b in Q(p).
  // Throws Error(not_normal) unless h.is_normal.
  SubXModWitness transfer_normal_sub_to_xmod(SubDGpdWitness const& h);

  // Overload reusing an already computed gamma(h.parent).
  SubXModWitness transfer_normal_sub_to_xmod(SubDGpdWitness const& h,
                                             CrossedModule const&  gamma_g);

  struct QuotientDGpd {
    QuotientXMod via;       // gamma(G) -> gamma(G)/gamma(H)
    LambdaDGpd   quotient;  // lambda of the quotient crossed module
  };

  // lambda(gamma(G) / gamma(H)).  Throws Error(not_normal),
  // Error(not_totally_intransitive) when (H1, H0) is not, or the errors of
  // quotient_xmod.
  QuotientDGpd quotient_dgpd(SubDGpdWitness const& h);

}  // namespace gpdx

#endif  // GPDX_EQUIV_HPP_
