#include <numeric>
#include <set>

#include "gpdx/groupoid.hpp"

#include "internal.hpp"

namespace gpdx {

  using detail::uz;

  Report check_groupoid_morphism(GroupoidMorphism const& f) {
    Report      r;
    auto const& G = f.source;
    auto const& K = f.target;
    r.check("map-total");
    if (f.object_map.size() != G.num_objects()
        || f.arrow_map.size() != G.num_arrows()) {
      r.fail("map-total", {"<size mismatch>"});
      return r;
    }
    for (std::size_t x = 0; x < G.num_objects(); ++x) {
      Idx y = f.object_map[x];
      if (y < 0 || uz(y) >= K.num_objects()) {
        r.fail("map-total", {G.object_name(static_cast<Idx>(x))});
      }
    }
    for (std::size_t a = 0; a < G.num_arrows(); ++a) {
      Idx b = f.arrow_map[a];
      if (b < 0 || uz(b) >= K.num_arrows()) {
        r.fail("map-total", {G.arrow_name(static_cast<Idx>(a))});
      }
    }
    if (!r.ok()) {
      return r;
    }
    r.check("preserves-endpoints");
    for (std::size_t i = 0; i < G.num_arrows(); ++i) {
      Idx const a  = static_cast<Idx>(i);
      Idx const fa = f.arrow_map[i];
      if (K.src(fa) != f.object_map[uz(G.src(a))]
          || K.dst(fa) != f.object_map[uz(G.dst(a))]) {
        r.fail("preserves-endpoints", {G.arrow_name(a), K.arrow_name(fa)});
      }
    }
    r.check("preserves-identities");
    for (std::size_t x = 0; x < G.num_objects(); ++x) {
      Idx const e = G.identity(static_cast<Idx>(x));
      if (f.arrow_map[uz(e)] != K.identity(f.object_map[x])) {
        r.fail("preserves-identities", {G.arrow_name(e)});
      }
    }
    r.check("preserves-composition");
    for (std::size_t i = 0; i < G.num_arrows(); ++i) {
      Idx const a = static_cast<Idx>(i);
      for (Idx b : G.out(G.dst(a))) {
        Idx const lhs = f.arrow_map[uz(G.compose(a, b))];
        Idx const rhs = K.compose(f.arrow_map[i], f.arrow_map[uz(b)]);
        if (lhs != rhs) {
          r.fail("preserves-composition", {G.arrow_name(a), G.arrow_name(b)});
        }
      }
    }
    return r;
  }

  Checked<GroupoidMorphism>
  validate_groupoid_morphism(FiniteGroupoid                            source,
                             FiniteGroupoid                            target,
                             std::map<std::string, std::string> const& objects,
                             std::map<std::string, std::string> const& arrows) {
    GroupoidMorphism f{std::move(source), std::move(target), {}, {}};
    f.object_map.assign(f.source.num_objects(), kUndef);
    f.arrow_map.assign(f.source.num_arrows(), kUndef);
    for (auto const& [x, y] : objects) {
      f.object_map[uz(f.source.object(x))] = f.target.object(y);
    }
    for (auto const& [a, b] : arrows) {
      f.arrow_map[uz(f.source.arrow(a))] = f.target.arrow(b);
    }
    Report r = check_groupoid_morphism(f);
    if (!r.ok()) {
      return {std::nullopt, std::move(r)};
    }
    return {std::move(f), std::move(r)};
  }

  bool injective_on_objects(GroupoidMorphism const& f) {
    std::set<Idx> seen(f.object_map.begin(), f.object_map.end());
    return seen.size() == f.object_map.size();
  }

  bool bijective(GroupoidMorphism const& f) {
    std::set<Idx> objs(f.object_map.begin(), f.object_map.end());
    std::set<Idx> arrs(f.arrow_map.begin(), f.arrow_map.end());
    return objs.size() == f.object_map.size()
           && objs.size() == f.target.num_objects()
           && arrs.size() == f.arrow_map.size()
           && arrs.size() == f.target.num_arrows();
  }

  GroupoidMorphism identity_morphism(FiniteGroupoid const& g) {
    GroupoidMorphism f{g, g, std::vector<Idx>(g.num_objects()),
                       std::vector<Idx>(g.num_arrows())};
    std::iota(f.object_map.begin(), f.object_map.end(), 0);
    std::iota(f.arrow_map.begin(), f.arrow_map.end(), 0);
    return f;
  }

}  // namespace gpdx
