// Crossed modules over groupoids.
//
// A crossed module is a boundary morphism mu : M -> P, identity on objects,
// from a totally intransitive groupoid M (written additively) to a groupoid
// P, together with a right action of P on M: m in M(p) and a : p -> q give
// m^a in M(q).  The action is stored as an explicit table and every axiom is
// checked exhaustively.

#ifndef GPDX_XMOD_HPP_
#define GPDX_XMOD_HPP_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gpdx/checked.hpp"
#include "gpdx/groupoid.hpp"
#include "gpdx/report.hpp"
#include "gpdx/types.hpp"

namespace gpdx {

  struct XModData {
    GroupoidData                       base;      // P
    GroupoidData                       module;    // M
    std::map<std::string, std::string> boundary;  // M arrow -> P arrow
    std::vector<Triple>                action;    // (m, a, m^a)
  };

  // Index-level form over already validated component groupoids.
  struct XModTables {
    FiniteGroupoid       base;
    FiniteGroupoid       module;
    std::vector<Idx>     boundary;  // per module arrow, kUndef when absent
    std::vector<Idx>     action;    // module arrows x base arrows
    std::vector<Witness> conflicts;  // (m, a, first, second)

    void allocate();
    Idx& act(Idx m, Idx a) {
      return action[static_cast<std::size_t>(m) * base.num_arrows()
                    + static_cast<std::size_t>(a)];
    }
  };

  namespace detail {
    struct XModImpl;
  }

  class CrossedModule {
   public:
    // The empty crossed module.
    CrossedModule();

    FiniteGroupoid const& base() const noexcept;
    FiniteGroupoid const& module() const noexcept;

    Idx boundary(Idx m) const;
    // m^a; kUndef unless src(a) is the object of m.
    Idx act(Idx m, Idx a) const;

    // Object p with m in M(p).
    Idx object_of(Idx m) const {
      return module().src(m);
    }
    Idx zero(Idx p) const {
      return module().identity(p);
    }
    Idx add(Idx m, Idx n) const {
      return module().compose(m, n);
    }
    Idx neg(Idx m) const {
      return module().inverse(m);
    }

    std::span<Idx const> boundary_map() const noexcept;

    XModData   data() const;
    XModTables tables() const;

    friend bool operator==(CrossedModule const& lhs, CrossedModule const& rhs);

   private:
    friend Checked<CrossedModule> validate_xmod(XModTables tables);
    explicit CrossedModule(std::shared_ptr<detail::XModImpl const> impl);
    std::shared_ptr<detail::XModImpl const> _impl;
  };

  // Component groupoids are validated first; their failures are reported
  // under "base." and "module.".  Remaining checks: objects-match,
  // module-totally-intransitive, boundary-total, boundary-identity-on-objects,
  // boundary-morphism, action-domain, action-single-valued, action-identity,
  // action-composition, action-additive, CM1 (m, a), CM2 (c, x).
  Checked<CrossedModule> validate_xmod(XModData const& data);
  Checked<CrossedModule> validate_xmod(XModTables tables);

  // Inclusion H -> G with the conjugation action h^a = a^-1 h a.  Throws
  // Error(not_normal) or Error(not_totally_intransitive).
  CrossedModule inclusion_xmod(SubgroupoidWitness const& h);

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  // (f2, f1) with a shared object map: f2 on module arrows, f1 on base
  // arrows.
  struct XModMorphism {
    CrossedModule    source;
    CrossedModule    target;
    std::vector<Idx> object_map;
    std::vector<Idx> module_map;  // f2
    std::vector<Idx> base_map;    // f1

    GroupoidMorphism module_morphism() const;
    GroupoidMorphism base_morphism() const;
  };

  struct XModMorphismData {
    std::map<std::string, std::string> objects;
    std::map<std::string, std::string> module;
    std::map<std::string, std::string> base;
  };

  // Checks: module.* and base.* (groupoid morphism checks), BoundaryMismatch
  // (m with f1 mu(m) != nu f2(m)), ActionMismatch ((m, a) with
  // f2(m^a) != f2(m)^f1(a)).
  Report check_xmod_morphism(XModMorphism const& f);

  Checked<XModMorphism> validate_xmod_morphism(CrossedModule           source,
                                               CrossedModule           target,
                                               XModMorphismData const& maps);

  XModMorphism identity_morphism(CrossedModule const& x);

  ////////////////////////////////////////////////////////////////////////
  // Subcrossed modules, kernels, quotients
  ////////////////////////////////////////////////////////////////////////

  // N <= M and Q <= P over a common object subset.  Report checks: SCM1,
  // SCM2, SCM3, then (when all hold) NCM1, NCM2, NCM3.
  struct SubXModWitness {
    CrossedModule parent;
    Mask          objects;
    Mask          module_arrows;  // N
    Mask          base_arrows;    // Q

    bool is_sub_xmod = false;
    bool is_normal   = false;

    Report report;

    SubgroupoidWitness module_sub() const;  // N in M
    SubgroupoidWitness base_sub() const;    // Q in P
  };

  SubXModWitness check_sub_xmod(CrossedModule const& parent,
                                Mask                 objects,
                                Mask                 module_arrows,
                                Mask                 base_arrows);

  // Throws Error(dangling_id) for unknown ids.
  SubXModWitness check_sub_xmod_ids(CrossedModule const&            parent,
                                    std::vector<std::string> const& objects,
                                    std::vector<std::string> const& module_arrows,
                                    std::vector<std::string> const& base_arrows);

  // The sub crossed module nu : N -> Q as a standalone crossed module.
  // Requires w.is_sub_xmod.
  CrossedModule to_xmod(SubXModWitness const& w);

  // (Ker f2, Ker f1) with the restricted boundary.
  SubXModWitness xmod_kernel(XModMorphism const& f);

  SubXModWitness trivial_sub_xmod(CrossedModule const& x);

  struct QuotientXMod {
    CrossedModule quotient;    // rho : M/N -> P/Q
    XModMorphism  projection;  // parent -> quotient
  };

  // Requires w normal and Q totally intransitive.  The induced boundary and
  // action are computed over every pair of class representatives.  Throws
  // Error(not_normal), Error(q_not_totally_intransitive), or
  // Error(ill_defined_action) with the conflicting representatives.
  QuotientXMod quotient_xmod(SubXModWitness const& w);

}  // namespace gpdx

#endif  // GPDX_XMOD_HPP_
