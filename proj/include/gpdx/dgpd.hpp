// Double groupoids with optional thin structure.
//
// A square u has four edge faces with the orientation
//
//        top
//    TL -----> TR
//    |         |
//  left      right
//    v         v
//    BL -----> BR
//       bottom
//
// so top and left leave the corner TL, and bottom and right arrive at BR.
// In the paper's notation top = d1-(u), bottom = d1+(u), left = d2-(u),
// right = d2+(u).  The shell of u is written (a, c, b, d) = (left, top,
// bottom, right) and is commutative iff a b = c d.
//
// Horizontal composition +2 glues along a vertical edge (right u = left v);
// vertical composition +1 glues along a horizontal edge (bottom u = top w).
// Each is stored as a groupoid whose objects are the edges and whose arrows
// are the squares, so the groupoid axioms are checked by validate_groupoid.

#ifndef GPDX_DGPD_HPP_
#define GPDX_DGPD_HPP_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpdx/checked.hpp"
#include "gpdx/groupoid.hpp"
#include "gpdx/report.hpp"
#include "gpdx/types.hpp"

namespace gpdx {

  struct Shell {
    Idx left   = kUndef;  // a
    Idx top    = kUndef;  // c
    Idx bottom = kUndef;  // b
    Idx right  = kUndef;  // d

    friend auto operator<=>(Shell const&, Shell const&) = default;
  };

  // Corners match the orientation above.
  bool corner_consistent(FiniteGroupoid const& g, Shell const& s);
  // a b == c d
  bool commutative(FiniteGroupoid const& g, Shell const& s);
  // "(a,c,b,d)"
  std::string shell_name(FiniteGroupoid const& g, Shell const& s);

  // The identity shells of the two degeneracies.
  Shell hident_shell(FiniteGroupoid const& g, Idx a);  // (a, 1, 1, a)
  Shell vident_shell(FiniteGroupoid const& g, Idx a);  // (1, a, a, 1)

  // Every commutative shell, in increasing order.
  std::vector<Shell> commutative_shells(FiniteGroupoid const& g);

  struct SquareSpec {
    std::string id;
    std::string top;
    std::string bottom;
    std::string left;
    std::string right;
  };

  // (a, c, b, d, square)
  using ThinSpec = std::array<std::string, 5>;

  struct DGpdData {
    GroupoidData                       edges;
    std::vector<SquareSpec>            squares;
    std::vector<Triple>                hcompose;  // +2
    std::vector<Triple>                vcompose;  // +1
    std::map<std::string, std::string> hident;    // edge -> e2(edge)
    std::map<std::string, std::string> vident;    // edge -> e1(edge)
    std::optional<std::vector<ThinSpec>> thin;
  };

  using ThinList = std::vector<std::pair<Shell, Idx>>;

  struct DGpdTables {
    FiniteGroupoid           edges;
    std::vector<std::string> squares;
    std::vector<Idx>         top, bottom, left, right;
    std::vector<Idx>         hcomp;   // squares x squares
    std::vector<Idx>         vcomp;   // squares x squares
    std::vector<Idx>         hident;  // per edge
    std::vector<Idx>         vident;  // per edge
    std::optional<ThinList>  thin;
    // ("h" | "v", u, v, first, second)
    std::vector<Witness> conflicts;

    void allocate();
    Idx& h(Idx u, Idx v) {
      return hcomp[static_cast<std::size_t>(u) * squares.size()
                   + static_cast<std::size_t>(v)];
    }
    Idx& v(Idx u, Idx w) {
      return vcomp[static_cast<std::size_t>(u) * squares.size()
                   + static_cast<std::size_t>(w)];
    }
  };

  namespace detail {
    struct DGpdImpl;
  }

  class DoubleGroupoid {
   public:
    // The empty double groupoid, with the empty thin structure.
    DoubleGroupoid();

    FiniteGroupoid const& edges() const noexcept;
    // (G2, G1, +2): objects are edges, src = left, dst = right.
    FiniteGroupoid const& horizontal() const noexcept;
    // (G2, G1, +1): objects are edges, src = top, dst = bottom.
    FiniteGroupoid const& vertical() const noexcept;

    std::size_t num_squares() const noexcept;
    std::string const& square_name(Idx u) const;
    std::optional<Idx> find_square(std::string_view id) const;
    // Throws Error(dangling_id) if absent.
    Idx square(std::string_view id) const;

    Idx top(Idx u) const;
    Idx bottom(Idx u) const;
    Idx left(Idx u) const;
    Idx right(Idx u) const;
    Shell shell(Idx u) const;

    // kUndef when not composable.
    Idx hcompose(Idx u, Idx v) const;
    Idx vcompose(Idx u, Idx w) const;
    Idx hinverse(Idx u) const;
    Idx vinverse(Idx u) const;
    Idx hident(Idx a) const;  // e2(a)
    Idx vident(Idx a) const;  // e1(a)

    bool has_thin() const noexcept;
    // The thin square on a commutative shell; kUndef without a thin
    // structure or for a non-commutative shell.
    Idx thin(Shell const& s) const;
    bool is_thin(Idx u) const;
    std::map<Shell, Idx> const& thin_map() const noexcept;

    DGpdData   data() const;
    DGpdTables tables() const;

    friend bool operator==(DoubleGroupoid const& lhs, DoubleGroupoid const& rhs);

   private:
    friend Checked<DoubleGroupoid> validate_dgpd(DGpdTables tables);
    friend Checked<DoubleGroupoid> validate_thin(DoubleGroupoid const& g,
                                                 ThinList const&       thin);
    explicit DoubleGroupoid(std::shared_ptr<detail::DGpdImpl const> impl);
    std::shared_ptr<detail::DGpdImpl const> _impl;
  };

  // Checks, in order: edges.*, corner-consistency, horizontal.* and
  // vertical.* (groupoid suites), face-compatibility, degeneracy-boundaries,
  // degeneracy-functoriality, interchange ((u, v, w, x) grids), and when a
  // thin structure is present the checks of validate_thin.
  Checked<DoubleGroupoid> validate_dgpd(DGpdData const& data);
  Checked<DoubleGroupoid> validate_dgpd(DGpdTables tables);

  // Attaches a thin structure.  Checks: thin-shells (domain is exactly the
  // commutative shells, once each), NotIdentityOnEdges (boundary of the
  // image differs from the shell), NotMorphism (composites and degeneracies
  // not preserved; witness "h"/"v"/"e1"/"e2" with the shells involved).
  Checked<DoubleGroupoid> validate_thin(DoubleGroupoid const& g,
                                        ThinList const&       thin);

  // The shell double groupoid: all corner-consistent shells of g, or only
  // the commutative ones.  Squares are named "(a,c,b,d)"; the thin structure
  // sends each commutative shell to itself.
  DoubleGroupoid shell_dgpd(FiniteGroupoid const& g, bool commutative_only);

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  struct DGpdMorphism {
    DoubleGroupoid   source;
    DoubleGroupoid   target;
    std::vector<Idx> object_map;  // f0
    std::vector<Idx> edge_map;    // f1
    std::vector<Idx> square_map;  // f2

    GroupoidMorphism edge_morphism() const;
  };

  // Checks: edges.* (groupoid morphism), square-map-total, faces, hcompose,
  // vcompose, degeneracies, thin (only when both carry a thin structure).
  Report check_dgpd_morphism(DGpdMorphism const& f);

  struct DGpdMorphismData {
    std::map<std::string, std::string> objects;
    std::map<std::string, std::string> edges;
    std::map<std::string, std::string> squares;
  };

  Checked<DGpdMorphism> validate_dgpd_morphism(DoubleGroupoid          source,
                                               DoubleGroupoid          target,
                                               DGpdMorphismData const& maps);

  ////////////////////////////////////////////////////////////////////////
  // Subdouble groupoids
  ////////////////////////////////////////////////////////////////////////

  // Report checks: SDG1 (edge subgroupoid), SDG2 ((H2, H1, +2) subgroupoid),
  // vertical-closure ((H2, H1, +1) subgroupoid, so that H is itself a double
  // groupoid), SDG3 (thin squares on shells in H1 lie in H2); then NDG1
  // ((H1, H0) wide normal) and NDG2 ((H2, H1, +2) non-wide normal, witness
  // (alpha, beta)).  With mirror_v also NDG2-vertical for +1.
  struct SubDGpdWitness {
    DoubleGroupoid parent;
    Mask           objects;  // H0
    Mask           edges;    // H1
    Mask           squares;  // H2

    bool is_sub_dgpd = false;
    bool is_normal   = false;

    Report report;

    SubgroupoidWitness edge_sub() const;
    SubgroupoidWitness horizontal_sub() const;
    SubgroupoidWitness vertical_sub() const;
  };

  SubDGpdWitness check_sub_dgpd(DoubleGroupoid const& parent,
                                Mask                  objects,
                                Mask                  edges,
                                Mask                  squares,
                                bool                  mirror_v = false);

  // Throws Error(dangling_id) for unknown ids.
  SubDGpdWitness check_sub_dgpd_ids(DoubleGroupoid const&           parent,
                                    std::vector<std::string> const& objects,
                                    std::vector<std::string> const& edges,
                                    std::vector<std::string> const& squares,
                                    bool                            mirror_v = false);

  // H as a standalone double groupoid with the restricted thin structure.
  // Throws Error(not_closed) unless w.is_sub_dgpd.
  DoubleGroupoid to_dgpd(SubDGpdWitness const& w);

  // The shells of h inside the shells of g: squares whose four edges lie
  // in the subgroupoid h of g.
  SubDGpdWitness shell_sub_dgpd(DoubleGroupoid const&     parent,
                                SubgroupoidWitness const& h,
                                bool                      mirror_v = false);

}  // namespace gpdx

#endif  // GPDX_DGPD_HPP_
