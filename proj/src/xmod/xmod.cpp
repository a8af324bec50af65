#include <algorithm>
#include <numeric>

#include "gpdx/xmod.hpp"

#include "internal.hpp"

namespace gpdx {

  using detail::uz;

  namespace detail {

    struct XModImpl {
      FiniteGroupoid   base;
      FiniteGroupoid   module;
      std::vector<Idx> boundary;
      std::vector<Idx> action;  // module arrows x base arrows
    };

  }  // namespace detail

  void XModTables::allocate() {
    boundary.assign(module.num_arrows(), kUndef);
    action.assign(module.num_arrows() * base.num_arrows(), kUndef);
  }

  CrossedModule::CrossedModule()
      : _impl(std::make_shared<detail::XModImpl const>()) {}

  CrossedModule::CrossedModule(std::shared_ptr<detail::XModImpl const> impl)
      : _impl(std::move(impl)) {}

  FiniteGroupoid const& CrossedModule::base() const noexcept {
    return _impl->base;
  }

  FiniteGroupoid const& CrossedModule::module() const noexcept {
    return _impl->module;
  }

  Idx CrossedModule::boundary(Idx m) const {
    return _impl->boundary[uz(m)];
  }

  Idx CrossedModule::act(Idx m, Idx a) const {
    return _impl->action[uz(m) * _impl->base.num_arrows() + uz(a)];
  }

  std::span<Idx const> CrossedModule::boundary_map() const noexcept {
    return _impl->boundary;
  }

  XModData CrossedModule::data() const {
    XModData    d;
    auto const& P = base();
    auto const& M = module();
    d.base        = P.data();
    d.module      = M.data();
    for (std::size_t m = 0; m < M.num_arrows(); ++m) {
      Idx const mi = static_cast<Idx>(m);
      d.boundary[M.arrow_name(mi)] = P.arrow_name(boundary(mi));
      for (Idx a : P.out(M.src(mi))) {
        d.action.push_back(
            {M.arrow_name(mi), P.arrow_name(a), M.arrow_name(act(mi, a))});
      }
    }
    std::sort(d.action.begin(), d.action.end());
    return d;
  }

  XModTables CrossedModule::tables() const {
    return {_impl->base, _impl->module, _impl->boundary, _impl->action, {}};
  }

  bool operator==(CrossedModule const& lhs, CrossedModule const& rhs) {
    return lhs._impl == rhs._impl
           || (lhs.base() == rhs.base() && lhs.module() == rhs.module()
               && lhs._impl->boundary == rhs._impl->boundary
               && lhs._impl->action == rhs._impl->action);
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  Checked<CrossedModule> validate_xmod(XModData const& data) {
    Report r;
    auto   base   = validate_groupoid(data.base);
    auto   module = validate_groupoid(data.module);
    r.merge(base.report(), "base.");
    r.merge(module.report(), "module.");
    if (!base || !module) {
      return {std::nullopt, std::move(r)};
    }
    XModTables t{*base, *module, {}, {}, {}};
    t.allocate();
    auto const& P = t.base;
    auto const& M = t.module;
    for (auto const& [m, a] : data.boundary) {
      t.boundary[uz(M.arrow(m))] = P.arrow(a);
    }
    for (auto const& [m, a, result] : data.action) {
      Idx const  value = M.arrow(result);
      Idx&       slot  = t.act(M.arrow(m), P.arrow(a));
      if (slot == kUndef) {
        slot = value;
      } else if (slot != value) {
        t.conflicts.push_back({m, a, M.arrow_name(slot), result});
      }
    }
    auto checked = validate_xmod(std::move(t));
    r.merge(checked.report());
    if (!checked) {
      return {std::nullopt, std::move(r)};
    }
    return {*checked, std::move(r)};
  }

  Checked<CrossedModule> validate_xmod(XModTables t) {
    Report      r;
    auto const& P  = t.base;
    auto const& M  = t.module;
    auto const  nm = M.num_arrows();
    auto const  np = P.num_arrows();
    auto const  fail = [&]() -> Checked<CrossedModule> {
      return {std::nullopt, std::move(r)};
    };
    auto const name = [&](Idx m) { return M.arrow_name(m); };
    auto const pname = [&](Idx a) { return P.arrow_name(a); };

    r.check("objects-match");
    if (M.object_names() != P.object_names()) {
      for (auto const& x : M.object_names()) {
        if (!P.find_object(x)) {
          r.fail("objects-match", {"module", x});
        }
      }
      for (auto const& x : P.object_names()) {
        if (!M.find_object(x)) {
          r.fail("objects-match", {"base", x});
        }
      }
      return fail();
    }
    if (t.boundary.size() != nm || t.action.size() != nm * np) {
      throw Error(ErrorKind::bad_params, "crossed module tables not allocated");
    }

    r.check("module-totally-intransitive");
    for (std::size_t i = 0; i < nm; ++i) {
      if (!M.is_loop(static_cast<Idx>(i))) {
        r.fail("module-totally-intransitive", {name(static_cast<Idx>(i))});
      }
    }
    r.check("boundary-total");
    for (std::size_t i = 0; i < nm; ++i) {
      if (t.boundary[i] < 0 || uz(t.boundary[i]) >= np) {
        r.fail("boundary-total", {name(static_cast<Idx>(i))});
      }
    }
    r.check("action-single-valued");
    for (auto const& w : t.conflicts) {
      r.fail("action-single-valued", w);
    }
    r.check("action-domain");
    for (std::size_t i = 0; i < nm; ++i) {
      Idx const m = static_cast<Idx>(i);
      for (std::size_t j = 0; j < np; ++j) {
        Idx const a     = static_cast<Idx>(j);
        Idx const value = t.act(m, a);
        if (P.src(a) != M.src(m)) {
          if (value != kUndef) {
            r.fail("action-domain", {name(m), pname(a)});
          }
        } else if (value < 0 || uz(value) >= nm
                   || M.src(value) != P.dst(a) || M.dst(value) != P.dst(a)) {
          r.fail("action-domain", {name(m), pname(a)});
        }
      }
    }
    if (!r.ok()) {
      for (auto const* c : {"boundary-identity-on-objects", "boundary-morphism",
                            "action-identity", "action-composition",
                            "action-additive", "CM1", "CM2"}) {
        r.skip(c, "structural checks failed");
      }
      return fail();
    }

    auto const mu  = [&](Idx m) { return t.boundary[uz(m)]; };
    auto const act = [&](Idx m, Idx a) { return t.act(m, a); };

    r.check("boundary-identity-on-objects");
    for (std::size_t i = 0; i < nm; ++i) {
      Idx const m = static_cast<Idx>(i);
      if (P.src(mu(m)) != M.src(m) || P.dst(mu(m)) != M.dst(m)) {
        r.fail("boundary-identity-on-objects", {name(m), pname(mu(m))});
      }
    }
    if (!r.ok()) {
      for (auto const* c : {"boundary-morphism", "action-identity",
                            "action-composition", "action-additive", "CM1",
                            "CM2"}) {
        r.skip(c, "boundary is not identity on objects");
      }
      return fail();
    }

    r.check("boundary-morphism");
    for (std::size_t x = 0; x < M.num_objects(); ++x) {
      Idx const zero = M.identity(static_cast<Idx>(x));
      if (mu(zero) != P.identity(static_cast<Idx>(x))) {
        r.fail("boundary-morphism", {name(zero)});
      }
    }
    for (std::size_t i = 0; i < nm; ++i) {
      Idx const m = static_cast<Idx>(i);
      for (Idx n : M.out(M.dst(m))) {
        if (mu(M.compose(m, n)) != P.compose(mu(m), mu(n))) {
          r.fail("boundary-morphism", {name(m), name(n)});
        }
      }
    }

    r.check("action-identity");
    r.check("action-composition");
    r.check("action-additive");
    r.check("CM1");
    for (std::size_t i = 0; i < nm; ++i) {
      Idx const m = static_cast<Idx>(i);
      Idx const p = M.src(m);
      if (act(m, P.identity(p)) != m) {
        r.fail("action-identity", {name(m)});
      }
      for (Idx a : P.out(p)) {
        Idx const ma = act(m, a);
        for (Idx b : P.out(P.dst(a))) {
          if (act(ma, b) != act(m, P.compose(a, b))) {
            r.fail("action-composition", {name(m), pname(a), pname(b)});
          }
        }
        for (Idx n : M.out(p)) {
          if (act(M.compose(m, n), a) != M.compose(ma, act(n, a))) {
            r.fail("action-additive", {name(m), name(n), pname(a)});
          }
        }
        if (mu(ma) != P.chain({P.inverse(a), mu(m), a})) {
          r.fail("CM1", {name(m), pname(a)});
        }
      }
    }
    r.check("CM2");
    for (std::size_t i = 0; i < nm; ++i) {
      Idx const c = static_cast<Idx>(i);
      for (Idx x : M.out(M.src(c))) {
        if (act(x, mu(c)) != M.chain({M.inverse(c), x, c})) {
          r.fail("CM2", {name(c), name(x)});
        }
      }
    }
    if (!r.ok()) {
      return fail();
    }
    auto impl = std::make_shared<detail::XModImpl>(detail::XModImpl{
        std::move(t.base), std::move(t.module), std::move(t.boundary),
        std::move(t.action)});
    return {CrossedModule(std::move(impl)), std::move(r)};
  }

  CrossedModule inclusion_xmod(SubgroupoidWitness const& h) {
    if (!h.is_subgroupoid) {
      throw Error(ErrorKind::not_closed, "subset is not a subgroupoid",
                  h.report);
    }
    if (!h.is_normal) {
      throw Error(ErrorKind::not_normal, "subgroupoid is not normal",
                  h.report);
    }
    if (!h.is_totally_intransitive) {
      throw Error(ErrorKind::not_totally_intransitive,
                  "subgroupoid is not totally intransitive");
    }
    auto const& G = h.parent;
    XModTables  t{G, to_groupoid(h), {}, {}, {}};
    t.allocate();
    auto const& H = t.module;
    for (std::size_t i = 0; i < H.num_arrows(); ++i) {
      Idx const m  = static_cast<Idx>(i);
      Idx const gm = G.arrow(H.arrow_name(m));
      t.boundary[i] = gm;
      for (Idx a : G.out(G.src(gm))) {
        t.act(m, a) = H.arrow(G.arrow_name(G.chain({G.inverse(a), gm, a})));
      }
    }
    return validate_xmod(std::move(t)).value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  GroupoidMorphism XModMorphism::module_morphism() const {
    return {source.module(), target.module(), object_map, module_map};
  }

  GroupoidMorphism XModMorphism::base_morphism() const {
    return {source.base(), target.base(), object_map, base_map};
  }

  Report check_xmod_morphism(XModMorphism const& f) {
    Report r;
    r.merge(check_groupoid_morphism(f.module_morphism()), "module.");
    r.merge(check_groupoid_morphism(f.base_morphism()), "base.");
    if (!r.ok()) {
      r.skip("BoundaryMismatch", "component maps are not morphisms");
      r.skip("ActionMismatch", "component maps are not morphisms");
      return r;
    }
    auto const& X  = f.source;
    auto const& Y  = f.target;
    auto const& M  = X.module();
    auto const  f1 = [&](Idx a) { return f.base_map[uz(a)]; };
    auto const  f2 = [&](Idx m) { return f.module_map[uz(m)]; };
    r.check("BoundaryMismatch");
    r.check("ActionMismatch");
    for (std::size_t i = 0; i < M.num_arrows(); ++i) {
      Idx const m = static_cast<Idx>(i);
      if (f1(X.boundary(m)) != Y.boundary(f2(m))) {
        r.fail("BoundaryMismatch", {M.arrow_name(m)});
      }
      for (Idx a : X.base().out(M.src(m))) {
        if (f2(X.act(m, a)) != Y.act(f2(m), f1(a))) {
          r.fail("ActionMismatch", {M.arrow_name(m), X.base().arrow_name(a)});
        }
      }
    }
    return r;
  }

  Checked<XModMorphism> validate_xmod_morphism(CrossedModule           source,
                                               CrossedModule           target,
                                               XModMorphismData const& maps) {
    XModMorphism f{std::move(source), std::move(target), {}, {}, {}};
    f.object_map.assign(f.source.base().num_objects(), kUndef);
    f.module_map.assign(f.source.module().num_arrows(), kUndef);
    f.base_map.assign(f.source.base().num_arrows(), kUndef);
    for (auto const& [x, y] : maps.objects) {
      f.object_map[uz(f.source.base().object(x))] = f.target.base().object(y);
    }
    for (auto const& [m, n] : maps.module) {
      f.module_map[uz(f.source.module().arrow(m))] = f.target.module().arrow(n);
    }
    for (auto const& [a, b] : maps.base) {
      f.base_map[uz(f.source.base().arrow(a))] = f.target.base().arrow(b);
    }
    Report r = check_xmod_morphism(f);
    if (!r.ok()) {
      return {std::nullopt, std::move(r)};
    }
    return {std::move(f), std::move(r)};
  }

  XModMorphism identity_morphism(CrossedModule const& x) {
    XModMorphism f{x, x, std::vector<Idx>(x.base().num_objects()),
                   std::vector<Idx>(x.module().num_arrows()),
                   std::vector<Idx>(x.base().num_arrows())};
    std::iota(f.object_map.begin(), f.object_map.end(), 0);
    std::iota(f.module_map.begin(), f.module_map.end(), 0);
    std::iota(f.base_map.begin(), f.base_map.end(), 0);
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcrossed modules
  ////////////////////////////////////////////////////////////////////////

  SubgroupoidWitness SubXModWitness::module_sub() const {
    return check_subgroupoid(parent.module(), objects, module_arrows);
  }

  SubgroupoidWitness SubXModWitness::base_sub() const {
    return check_subgroupoid(parent.base(), objects, base_arrows);
  }

  SubXModWitness check_sub_xmod_ids(CrossedModule const&            parent,
                                    std::vector<std::string> const& objects,
                                    std::vector<std::string> const& module_arrows,
                                    std::vector<std::string> const& base_arrows) {
    return check_sub_xmod(parent, object_mask(parent.base(), objects),
                          arrow_mask(parent.module(), module_arrows),
                          arrow_mask(parent.base(), base_arrows));
  }

  SubXModWitness check_sub_xmod(CrossedModule const& parent,
                                Mask                 objects,
                                Mask                 module_arrows,
                                Mask                 base_arrows) {
    SubXModWitness w;
    w.parent        = parent;
    w.objects       = std::move(objects);
    w.module_arrows = std::move(module_arrows);
    w.base_arrows   = std::move(base_arrows);
    if (w.objects.size() != parent.base().num_objects()
        || w.module_arrows.size() != parent.module().num_arrows()
        || w.base_arrows.size() != parent.base().num_arrows()) {
      throw Error(ErrorKind::bad_params, "subset masks do not match parent");
    }
    auto const& M  = parent.module();
    auto const& P  = parent.base();
    auto&       r  = w.report;
    auto const  N  = w.module_sub();
    auto const  Q  = w.base_sub();
    auto const  in_n = [&](Idx m) { return w.module_arrows[uz(m)]; };
    auto const  in_q = [&](Idx a) { return w.base_arrows[uz(a)]; };

    r.check("SCM1");
    for (auto const* part : {&N, &Q}) {
      if (auto const* c = part->report.find("subgroupoid")) {
        for (auto const& wit : c->witnesses) {
          Witness tagged{part == &N ? "N" : "Q"};
          tagged.insert(tagged.end(), wit.begin(), wit.end());
          r.fail("SCM1", std::move(tagged));
        }
      }
    }
    if (!r.ok()) {
      r.skip("SCM2", "SCM1 failed");
      r.skip("SCM3", "SCM1 failed");
    } else {
      r.check("SCM2");
      r.check("SCM3");
      for (std::size_t i = 0; i < M.num_arrows(); ++i) {
        Idx const n = static_cast<Idx>(i);
        if (!in_n(n)) {
          continue;
        }
        if (!in_q(parent.boundary(n))) {
          r.fail("SCM2", {M.arrow_name(n)});
        }
        for (Idx a : P.out(M.src(n))) {
          if (in_q(a) && !in_n(parent.act(n, a))) {
            r.fail("SCM3", {M.arrow_name(n), P.arrow_name(a)});
          }
        }
      }
    }
    w.is_sub_xmod = r.ok();
    if (!w.is_sub_xmod) {
      for (auto const* c : {"NCM1", "NCM2", "NCM3"}) {
        r.skip(c, "not a subcrossed module");
      }
      return w;
    }

    r.check("NCM1");
    if (auto const* c = Q.report.find("normal")) {
      for (auto const& wit : c->witnesses) {
        r.fail("NCM1", wit);
      }
    }
    r.check("NCM2");
    r.check("NCM3");
    for (std::size_t i = 0; i < M.num_arrows(); ++i) {
      Idx const m = static_cast<Idx>(i);
      Idx const p = M.src(m);
      if (!w.objects[uz(p)]) {
        continue;
      }
      for (Idx a : P.out(p)) {
        if (in_n(m) && !in_n(parent.act(m, a))) {
          r.fail("NCM2", {M.arrow_name(m), P.arrow_name(a)});
        }
        if (in_q(a) && P.is_loop(a)
            && !in_n(M.compose(M.inverse(m), parent.act(m, a)))) {
          r.fail("NCM3", {M.arrow_name(m), P.arrow_name(a)});
        }
      }
    }
    w.is_normal = r.ok();
    return w;
  }

  CrossedModule to_xmod(SubXModWitness const& w) {
    if (!w.is_sub_xmod) {
      throw Error(ErrorKind::not_closed, "not a subcrossed module", w.report);
    }
    auto const& X = w.parent;
    XModTables  t{to_groupoid(w.base_sub()), to_groupoid(w.module_sub()), {},
                 {}, {}};
    t.allocate();
    auto const& N = t.module;
    auto const& Q = t.base;
    for (std::size_t i = 0; i < N.num_arrows(); ++i) {
      Idx const n  = static_cast<Idx>(i);
      Idx const pn = X.module().arrow(N.arrow_name(n));
      t.boundary[i] = Q.arrow(X.base().arrow_name(X.boundary(pn)));
      for (Idx a : Q.out(N.src(n))) {
        Idx const pa = X.base().arrow(Q.arrow_name(a));
        t.act(n, a)  = N.arrow(X.module().arrow_name(X.act(pn, pa)));
      }
    }
    return validate_xmod(std::move(t)).value();
  }

  SubXModWitness xmod_kernel(XModMorphism const& f) {
    auto const& M = f.source.module();
    auto const& P = f.source.base();
    Mask        n(M.num_arrows()), q(P.num_arrows());
    for (std::size_t m = 0; m < n.size(); ++m) {
      n[m] = f.target.module().is_identity(f.module_map[m]);
    }
    for (std::size_t a = 0; a < q.size(); ++a) {
      q[a] = f.target.base().is_identity(f.base_map[a]);
    }
    return check_sub_xmod(f.source, Mask(P.num_objects(), true), std::move(n),
                          std::move(q));
  }

  SubXModWitness trivial_sub_xmod(CrossedModule const& x) {
    auto const& M = x.module();
    auto const& P = x.base();
    Mask        n(M.num_arrows()), q(P.num_arrows());
    for (std::size_t p = 0; p < P.num_objects(); ++p) {
      n[uz(M.identity(static_cast<Idx>(p)))] = true;
      q[uz(P.identity(static_cast<Idx>(p)))] = true;
    }
    return check_sub_xmod(x, Mask(P.num_objects(), true), std::move(n),
                          std::move(q));
  }

  QuotientXMod quotient_xmod(SubXModWitness const& w) {
    if (!w.is_sub_xmod) {
      throw Error(ErrorKind::not_normal, "not a subcrossed module", w.report);
    }
    auto const qsub = w.base_sub();
    if (!qsub.is_totally_intransitive) {
      throw Error(ErrorKind::q_not_totally_intransitive,
                  "Q is not totally intransitive");
    }
    if (!w.is_normal) {
      throw Error(ErrorKind::not_normal, "subcrossed module is not normal",
                  w.report);
    }
    auto const& X  = w.parent;
    auto const& M  = X.module();
    auto const& P  = X.base();
    auto const  qm = quotient_groupoid(w.module_sub());
    auto const  qp = quotient_groupoid(qsub);

    XModTables t{qp.quotient, qm.quotient, {}, {}, {}};
    t.allocate();
    auto const& MN = t.module;
    auto const& PQ = t.base;
    Report      r;
    r.check("boundary-well-defined");
    r.check("action-well-defined");
    for (std::size_t i = 0; i < M.num_arrows(); ++i) {
      Idx const m    = static_cast<Idx>(i);
      Idx const cm   = qm.projection(m);
      Idx const cmu  = qp.projection(X.boundary(m));
      Idx&      slot = t.boundary[uz(cm)];
      if (slot == kUndef) {
        slot = cmu;
      } else if (slot != cmu) {
        r.fail("boundary-well-defined",
               {M.arrow_name(m), PQ.arrow_name(slot), PQ.arrow_name(cmu)});
      }
      for (Idx a : P.out(M.src(m))) {
        Idx const value = qm.projection(X.act(m, a));
        Idx&      cell  = t.act(cm, qp.projection(a));
        if (cell == kUndef) {
          cell = value;
        } else if (cell != value) {
          r.fail("action-well-defined",
                 {M.arrow_name(m), P.arrow_name(a), MN.arrow_name(cell),
                  MN.arrow_name(value)});
        }
      }
    }
    if (!r.ok()) {
      throw Error(ErrorKind::ill_defined_action,
                  "induced boundary or action is not well defined",
                  std::move(r));
    }
    auto checked = validate_xmod(std::move(t));
    if (!checked) {
      throw Error(ErrorKind::ill_defined_action,
                  "induced structure is not a crossed module", checked.report());
    }
    XModMorphism proj{X, *checked, qp.projection.object_map,
                      qm.projection.arrow_map, qp.projection.arrow_map};
    return {*checked, std::move(proj)};
  }

}  // namespace gpdx
