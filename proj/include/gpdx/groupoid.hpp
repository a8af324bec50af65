// Finite groupoids given by explicit composition tables.
//
// Composition is written in diagrammatic order throughout: compose(a, b) is
// defined iff dst(a) == src(b), and is the arrow src(a) -> dst(b).  A
// juxtaposed product such as b^-1 a^-1 c d is therefore evaluated left to
// right with chain().

#ifndef GPDX_GROUPOID_HPP_
#define GPDX_GROUPOID_HPP_

#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpdx/checked.hpp"
#include "gpdx/report.hpp"
#include "gpdx/types.hpp"

namespace gpdx {

  struct ArrowSpec {
    std::string id;
    std::string src;
    std::string dst;
  };

  // (f, g, f∘g)
  using Triple = std::array<std::string, 3>;

  // Raw string-level description of a groupoid, as read from a document.
  struct GroupoidData {
    std::vector<std::string>           objects;
    std::vector<ArrowSpec>             arrows;
    std::map<std::string, std::string> identities;  // object -> arrow
    std::vector<Triple>                compose;
  };

  // Index-level description; ids resolved but no axiom checked yet.
  struct GroupoidTables {
    std::vector<std::string> objects;
    std::vector<std::string> arrows;
    std::vector<Idx>         src;
    std::vector<Idx>         dst;
    std::vector<Idx>         identity;  // per object, kUndef when absent
    std::vector<Idx>         table;     // arrows x arrows, row = first factor
    // Pairs given two different composites: (f, g, first, second).
    std::vector<Witness> conflicts;

    // Sizes src/dst/identity/table for the current names, all undefined.
    void allocate();
    Idx& at(Idx a, Idx b) {
      return table[static_cast<std::size_t>(a) * arrows.size()
                   + static_cast<std::size_t>(b)];
    }
  };

  // Resolves ids.  Throws Error(dangling_id) for an unresolved reference and
  // Error(parse_error) for duplicate ids.
  GroupoidTables resolve(GroupoidData const& data);

  namespace detail {
    struct GroupoidImpl;
  }

  // A validated finite groupoid.  Immutable; copies share storage.
  class FiniteGroupoid {
   public:
    // The empty groupoid.
    FiniteGroupoid();

    std::size_t num_objects() const noexcept;
    std::size_t num_arrows() const noexcept;

    std::string const& object_name(Idx x) const;
    std::string const& arrow_name(Idx a) const;
    std::vector<std::string> const& object_names() const noexcept;
    std::vector<std::string> const& arrow_names() const noexcept;

    std::optional<Idx> find_object(std::string_view id) const;
    std::optional<Idx> find_arrow(std::string_view id) const;
    // Throw Error(dangling_id) if absent.
    Idx object(std::string_view id) const;
    Idx arrow(std::string_view id) const;

    Idx src(Idx a) const;
    Idx dst(Idx a) const;
    Idx identity(Idx x) const;
    Idx inverse(Idx a) const;
    bool is_identity(Idx a) const;
    bool is_loop(Idx a) const {
      return src(a) == dst(a);
    }

    // kUndef unless dst(a) == src(b).
    Idx compose(Idx a, Idx b) const;

    // Left-to-right product; kUndef as soon as one step is undefined.
    Idx chain(std::initializer_list<Idx> arrows) const;

    // Arrows x -> y, in index order.
    std::span<Idx const> hom(Idx x, Idx y) const;
    // Arrows with source x.
    std::span<Idx const> out(Idx x) const;

    // Row-major composition table (kUndef off the composable pairs).
    std::span<Idx const> table() const noexcept;

    GroupoidData   data() const;
    GroupoidTables tables() const;

    friend bool operator==(FiniteGroupoid const& lhs, FiniteGroupoid const& rhs);

   private:
    friend Checked<FiniteGroupoid> validate_groupoid(GroupoidTables tables);
    explicit FiniteGroupoid(std::shared_ptr<detail::GroupoidImpl const> impl);

    std::shared_ptr<detail::GroupoidImpl const> _impl;
  };

  // Checks every groupoid axiom exhaustively.  Failed checks are reported
  // with the offending tuple: identity-endpoints (x, 1x), composition-domain
  // (a, b), composition-single-valued (a, b, r1, r2), composition-endpoints
  // (a, b, ab), identity-law (1, a) / (a, 1), inverse-law (a), associativity
  // (a, b, c).
  Checked<FiniteGroupoid> validate_groupoid(GroupoidTables tables);
  Checked<FiniteGroupoid> validate_groupoid(GroupoidData const& data);

  ////////////////////////////////////////////////////////////////////////
  // Components and transitivity
  ////////////////////////////////////////////////////////////////////////

  struct Partition {
    std::vector<std::vector<Idx>> blocks;    // sorted; blocks ordered by min
    std::vector<Idx>              block_of;  // per object
  };

  // x and y share a block iff hom(x, y) is non-empty.
  Partition components(FiniteGroupoid const& g);

  struct TransitivityFlags {
    bool transitive           = true;
    bool totally_intransitive = true;
  };

  TransitivityFlags transitivity_flags(FiniteGroupoid const& g);

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  struct GroupoidMorphism {
    FiniteGroupoid   source;
    FiniteGroupoid   target;
    std::vector<Idx> object_map;
    std::vector<Idx> arrow_map;

    Idx operator()(Idx a) const {
      return arrow_map[static_cast<std::size_t>(a)];
    }
  };

  // Checks totality and preservation of src, dst, identities and
  // composition.  Check names: map-total, preserves-endpoints,
  // preserves-identities, preserves-composition.
  Report check_groupoid_morphism(GroupoidMorphism const& f);

  Checked<GroupoidMorphism>
  validate_groupoid_morphism(FiniteGroupoid                            source,
                             FiniteGroupoid                            target,
                             std::map<std::string, std::string> const& objects,
                             std::map<std::string, std::string> const& arrows);

  bool injective_on_objects(GroupoidMorphism const& f);
  bool bijective(GroupoidMorphism const& f);

  GroupoidMorphism identity_morphism(FiniteGroupoid const& g);

  ////////////////////////////////////////////////////////////////////////
  // Subgroupoids
  ////////////////////////////////////////////////////////////////////////

  // A parent groupoid with designated subsets and the computed flags.  When
  // is_subgroupoid is false every other flag is false.
  //
  // Report checks: "subgroupoid" (closure failures), "normal" (arrow a with
  // a H(y) != H(x) a, or "not-wide"), "non-wide-normal" ((g, h) with
  // g h g^-1 outside H).
  struct SubgroupoidWitness {
    FiniteGroupoid parent;
    Mask           objects;
    Mask           arrows;

    bool is_subgroupoid          = false;
    bool is_wide                 = false;
    bool is_transitive           = false;
    bool is_totally_intransitive = false;
    bool is_normal               = false;
    bool is_non_wide_normal      = false;

    Report report;

    bool contains(Idx a) const {
      return arrows[static_cast<std::size_t>(a)];
    }
    // Arrows of H at the object x, i.e. H(x).
    std::vector<Idx> object_group(Idx x) const;
  };

  SubgroupoidWitness check_subgroupoid(FiniteGroupoid const& g,
                                       Mask                  objects,
                                       Mask                  arrows);

  // Throws Error(dangling_id) for ids not in g.
  SubgroupoidWitness check_subgroupoid_ids(FiniteGroupoid const&           g,
                                           std::vector<std::string> const& objects,
                                           std::vector<std::string> const& arrows);

  // The subgroupoid as a standalone groupoid with the parent's ids.  Throws
  // Error(not_closed) unless h.is_subgroupoid.
  FiniteGroupoid to_groupoid(SubgroupoidWitness const& h);

  Mask object_mask(FiniteGroupoid const& g, std::vector<std::string> const& ids);
  Mask arrow_mask(FiniteGroupoid const& g, std::vector<std::string> const& ids);

  // The wide subgroupoid of identities, and the whole groupoid.
  SubgroupoidWitness identities_subgroupoid(FiniteGroupoid const& g);
  SubgroupoidWitness full_subgroupoid(FiniteGroupoid const& g);

  ////////////////////////////////////////////////////////////////////////
  // Quotients and kernels
  ////////////////////////////////////////////////////////////////////////

  struct QuotientGroupoid {
    FiniteGroupoid   quotient;
    GroupoidMorphism projection;  // x -> [x], a -> [a]
  };

  // Quotient G/H by a normal subgroupoid.  Objects are the components of H,
  // named after their least member; arrows are the classes of a ~ m b n
  // (m, n in H), named "[r]" after the least representative r.  Class
  // composites are computed over every composable pair of representatives.
  //
  // Throws Error(not_normal) if H is not normal and Error(ill_formed_quotient)
  // if some class composite is multi-valued.
  QuotientGroupoid quotient_groupoid(SubgroupoidWitness const& h);

  // Ker f: all objects, arrows sent to identities.
  SubgroupoidWitness kernel(GroupoidMorphism const& f);

}  // namespace gpdx

#endif  // GPDX_GROUPOID_HPP_
