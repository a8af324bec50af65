#include <algorithm>
#include <numeric>

#include "gpdx/groupoid.hpp"

#include "internal.hpp"

namespace gpdx {

  using detail::uz;

  namespace {

    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      Idx find(Idx x) {
        while (parent[uz(x)] != x) {
          parent[uz(x)] = parent[uz(parent[uz(x)])];
          x             = parent[uz(x)];
        }
        return x;
      }
      // Keeps the smaller index as root, so roots are least representatives.
      void unite(Idx a, Idx b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent[uz(b)] = a;
      }
      std::vector<Idx> parent;
    };

  }  // namespace

  std::vector<Idx> SubgroupoidWitness::object_group(Idx x) const {
    std::vector<Idx> result;
    for (Idx a : parent.hom(x, x)) {
      if (contains(a)) {
        result.push_back(a);
      }
    }
    return result;
  }

  Mask object_mask(FiniteGroupoid const& g, std::vector<std::string> const& ids) {
    Mask m(g.num_objects(), false);
    for (auto const& id : ids) {
      m[uz(g.object(id))] = true;
    }
    return m;
  }

  Mask arrow_mask(FiniteGroupoid const& g, std::vector<std::string> const& ids) {
    Mask m(g.num_arrows(), false);
    for (auto const& id : ids) {
      m[uz(g.arrow(id))] = true;
    }
    return m;
  }

  SubgroupoidWitness check_subgroupoid_ids(FiniteGroupoid const&           g,
                                           std::vector<std::string> const& objects,
                                           std::vector<std::string> const& arrows) {
    return check_subgroupoid(g, object_mask(g, objects), arrow_mask(g, arrows));
  }

  SubgroupoidWitness check_subgroupoid(FiniteGroupoid const& g,
                                       Mask                  objects,
                                       Mask                  arrows) {
    if (objects.size() != g.num_objects() || arrows.size() != g.num_arrows()) {
      throw Error(ErrorKind::bad_params, "subset masks do not match parent");
    }
    SubgroupoidWitness w;
    w.parent  = g;
    w.objects = std::move(objects);
    w.arrows  = std::move(arrows);
    auto& r   = w.report;
    auto  in  = [&](Idx a) { return w.arrows[uz(a)]; };
    auto  obj = [&](Idx x) { return w.objects[uz(x)]; };

    r.check("subgroupoid");
    for (std::size_t i = 0; i < g.num_arrows(); ++i) {
      Idx const a = static_cast<Idx>(i);
      if (!in(a)) {
        continue;
      }
      if (!obj(g.src(a)) || !obj(g.dst(a))) {
        r.fail("subgroupoid", {"endpoint", g.arrow_name(a)});
        continue;
      }
      if (!in(g.inverse(a))) {
        r.fail("subgroupoid", {"inverse", g.arrow_name(a)});
      }
      for (Idx b : g.out(g.dst(a))) {
        if (in(b) && !in(g.compose(a, b))) {
          r.fail("subgroupoid", {"composition", g.arrow_name(a), g.arrow_name(b)});
        }
      }
    }
    for (std::size_t x = 0; x < g.num_objects(); ++x) {
      if (obj(static_cast<Idx>(x)) && !in(g.identity(static_cast<Idx>(x)))) {
        r.fail("subgroupoid", {"identity", g.object_name(static_cast<Idx>(x))});
      }
    }
    if (!r.ok()) {
      return w;
    }
    w.is_subgroupoid = true;
    w.is_wide        = std::all_of(w.objects.begin(), w.objects.end(),
                            [](bool b) { return b; });

    // transitivity of H over H0
    std::size_t const no = g.num_objects();
    std::vector<bool> linked(no * no, false);
    for (std::size_t i = 0; i < g.num_arrows(); ++i) {
      if (in(static_cast<Idx>(i))) {
        linked[uz(g.src(static_cast<Idx>(i))) * no
               + uz(g.dst(static_cast<Idx>(i)))]
            = true;
      }
    }
    w.is_transitive           = true;
    w.is_totally_intransitive = true;
    for (std::size_t x = 0; x < no; ++x) {
      for (std::size_t y = 0; y < no; ++y) {
        if (x == y || !w.objects[x] || !w.objects[y]) {
          continue;
        }
        if (linked[x * no + y]) {
          w.is_totally_intransitive = false;
        } else {
          w.is_transitive = false;
        }
      }
    }

    // wide normality: a H(y) = H(x) a for every a : x -> y
    r.check("normal");
    if (!w.is_wide) {
      r.fail("normal", {"not-wide"});
    } else {
      std::vector<std::vector<Idx>> groups(no);
      for (std::size_t x = 0; x < no; ++x) {
        groups[x] = w.object_group(static_cast<Idx>(x));
      }
      for (std::size_t i = 0; i < g.num_arrows(); ++i) {
        Idx const        a = static_cast<Idx>(i);
        std::vector<Idx> left, right;
        for (Idx h : groups[uz(g.dst(a))]) {
          left.push_back(g.compose(a, h));
        }
        for (Idx h : groups[uz(g.src(a))]) {
          right.push_back(g.compose(h, a));
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        if (left != right) {
          r.fail("normal", {g.arrow_name(a)});
        }
      }
    }
    w.is_normal = w.is_wide && r.failures("normal") == 0;

    // g h g^-1 in H(x) for g : x -> y, h in H(y), x, y in H0
    r.check("non-wide-normal");
    for (std::size_t i = 0; i < g.num_arrows(); ++i) {
      Idx const c = static_cast<Idx>(i);
      if (!obj(g.src(c)) || !obj(g.dst(c))) {
        continue;
      }
      for (Idx h : g.hom(g.dst(c), g.dst(c))) {
        if (in(h) && !in(g.chain({c, h, g.inverse(c)}))) {
          r.fail("non-wide-normal", {g.arrow_name(c), g.arrow_name(h)});
        }
      }
    }
    w.is_non_wide_normal = r.failures("non-wide-normal") == 0;
    return w;
  }

  FiniteGroupoid to_groupoid(SubgroupoidWitness const& h) {
    if (!h.is_subgroupoid) {
      throw Error(ErrorKind::not_closed, "subset is not a subgroupoid",
                  h.report);
    }
    auto const&      G = h.parent;
    std::vector<Idx> obj_new(G.num_objects(), kUndef);
    std::vector<Idx> arr_new(G.num_arrows(), kUndef);
    GroupoidTables   t;
    for (std::size_t x = 0; x < G.num_objects(); ++x) {
      if (h.objects[x]) {
        obj_new[x] = static_cast<Idx>(t.objects.size());
        t.objects.push_back(G.object_name(static_cast<Idx>(x)));
      }
    }
    for (std::size_t a = 0; a < G.num_arrows(); ++a) {
      if (h.arrows[a]) {
        arr_new[a] = static_cast<Idx>(t.arrows.size());
        t.arrows.push_back(G.arrow_name(static_cast<Idx>(a)));
      }
    }
    t.allocate();
    for (std::size_t x = 0; x < G.num_objects(); ++x) {
      if (h.objects[x]) {
        t.identity[uz(obj_new[x])] = arr_new[uz(G.identity(static_cast<Idx>(x)))];
      }
    }
    for (std::size_t i = 0; i < G.num_arrows(); ++i) {
      Idx const a = static_cast<Idx>(i);
      if (!h.contains(a)) {
        continue;
      }
      t.src[uz(arr_new[i])] = obj_new[uz(G.src(a))];
      t.dst[uz(arr_new[i])] = obj_new[uz(G.dst(a))];
      for (Idx b : G.out(G.dst(a))) {
        if (h.contains(b)) {
          t.at(arr_new[i], arr_new[uz(b)]) = arr_new[uz(G.compose(a, b))];
        }
      }
    }
    return validate_groupoid(std::move(t)).value();
  }

  SubgroupoidWitness identities_subgroupoid(FiniteGroupoid const& g) {
    Mask arrows(g.num_arrows(), false);
    for (std::size_t x = 0; x < g.num_objects(); ++x) {
      arrows[uz(g.identity(static_cast<Idx>(x)))] = true;
    }
    return check_subgroupoid(g, Mask(g.num_objects(), true), std::move(arrows));
  }

  SubgroupoidWitness full_subgroupoid(FiniteGroupoid const& g) {
    return check_subgroupoid(g, Mask(g.num_objects(), true),
                             Mask(g.num_arrows(), true));
  }

  QuotientGroupoid quotient_groupoid(SubgroupoidWitness const& h) {
    if (!h.is_subgroupoid || !h.is_normal) {
      throw Error(ErrorKind::not_normal,
                  "quotient requires a normal subgroupoid");
    }
    auto const&       G  = h.parent;
    std::size_t const no = G.num_objects();
    std::size_t const na = G.num_arrows();

    UnionFind objs(no);
    for (std::size_t i = 0; i < na; ++i) {
      if (h.contains(static_cast<Idx>(i))) {
        objs.unite(G.src(static_cast<Idx>(i)), G.dst(static_cast<Idx>(i)));
      }
    }
    // H-arrows ending at x and starting at x
    std::vector<std::vector<Idx>> into(no), from(no);
    for (std::size_t i = 0; i < na; ++i) {
      Idx const a = static_cast<Idx>(i);
      if (h.contains(a)) {
        into[uz(G.dst(a))].push_back(a);
        from[uz(G.src(a))].push_back(a);
      }
    }
    UnionFind arrs(na);
    for (std::size_t i = 0; i < na; ++i) {
      Idx const b = static_cast<Idx>(i);
      for (Idx m : into[uz(G.src(b))]) {
        for (Idx n : from[uz(G.dst(b))]) {
          arrs.unite(b, G.chain({m, b, n}));
        }
      }
    }

    GroupoidTables t;
    std::vector<Idx> obj_class(no), arr_class(na);
    for (std::size_t x = 0; x < no; ++x) {
      Idx const root = objs.find(static_cast<Idx>(x));
      if (root == static_cast<Idx>(x)) {
        t.objects.push_back(G.object_name(root));
      }
    }
    for (std::size_t a = 0; a < na; ++a) {
      Idx const root = arrs.find(static_cast<Idx>(a));
      if (root == static_cast<Idx>(a)) {
        t.arrows.push_back("[" + G.arrow_name(root) + "]");
      }
    }
    {
      std::vector<Idx> rank(no, kUndef);
      Idx              k = 0;
      for (std::size_t x = 0; x < no; ++x) {
        if (objs.find(static_cast<Idx>(x)) == static_cast<Idx>(x)) {
          rank[x] = k++;
        }
      }
      for (std::size_t x = 0; x < no; ++x) {
        obj_class[x] = rank[uz(objs.find(static_cast<Idx>(x)))];
      }
    }
    {
      std::vector<Idx> rank(na, kUndef);
      Idx              k = 0;
      for (std::size_t a = 0; a < na; ++a) {
        if (arrs.find(static_cast<Idx>(a)) == static_cast<Idx>(a)) {
          rank[a] = k++;
        }
      }
      for (std::size_t a = 0; a < na; ++a) {
        arr_class[a] = rank[uz(arrs.find(static_cast<Idx>(a)))];
      }
    }
    t.allocate();
    for (std::size_t a = 0; a < na; ++a) {
      Idx const c = arr_class[a];
      t.src[uz(c)] = obj_class[uz(G.src(static_cast<Idx>(a)))];
      t.dst[uz(c)] = obj_class[uz(G.dst(static_cast<Idx>(a)))];
    }
    for (std::size_t x = 0; x < no; ++x) {
      if (objs.find(static_cast<Idx>(x)) == static_cast<Idx>(x)) {
        t.identity[uz(obj_class[x])]
            = arr_class[uz(G.identity(static_cast<Idx>(x)))];
      }
    }
    Report r;
    r.check("class-composition");
    for (std::size_t i = 0; i < na; ++i) {
      Idx const a = static_cast<Idx>(i);
      for (Idx b : G.out(G.dst(a))) {
        Idx const ab   = arr_class[uz(G.compose(a, b))];
        Idx&      slot = t.at(arr_class[i], arr_class[uz(b)]);
        if (slot == kUndef) {
          slot = ab;
        } else if (slot != ab) {
          r.fail("class-composition",
                 {G.arrow_name(a), G.arrow_name(b), t.arrows[uz(slot)],
                  t.arrows[uz(ab)]});
        }
      }
    }
    if (!r.ok()) {
      throw Error(ErrorKind::ill_formed_quotient,
                  "class composition is multi-valued", std::move(r));
    }
    auto checked = validate_groupoid(std::move(t));
    if (!checked) {
      throw Error(ErrorKind::ill_formed_quotient,
                  "quotient fails the groupoid axioms", checked.report());
    }
    // class names need not sort like their representatives, so map by name
    FiniteGroupoid const& Q = *checked;
    std::vector<Idx>      object_map(no), arrow_map(na);
    for (std::size_t x = 0; x < no; ++x) {
      object_map[x] = Q.object(G.object_name(objs.find(static_cast<Idx>(x))));
    }
    for (std::size_t a = 0; a < na; ++a) {
      arrow_map[a]
          = Q.arrow("[" + G.arrow_name(arrs.find(static_cast<Idx>(a))) + "]");
    }
    return {Q, {G, Q, std::move(object_map), std::move(arrow_map)}};
  }

  SubgroupoidWitness kernel(GroupoidMorphism const& f) {
    Mask arrows(f.source.num_arrows(), false);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      arrows[a] = f.target.is_identity(f.arrow_map[a]);
    }
    return check_subgroupoid(f.source, Mask(f.source.num_objects(), true),
                             std::move(arrows));
  }

}  // namespace gpdx
