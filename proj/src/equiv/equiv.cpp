#include <algorithm>
#include <numeric>
#include <set>

#include "gpdx/equiv.hpp"

#include "internal.hpp"

namespace gpdx {

  using detail::uz;

  namespace {

    struct Quintuple {
      Idx         m;
      Shell       s;
      std::string name;
    };

    void check_bijective(Report&                 r,
                         std::vector<Idx> const& map,
                         std::size_t             target_size,
                         std::string const&      what) {
      r.check("bijective");
      std::set<Idx> image(map.begin(), map.end());
      if (image.size() != map.size() || image.size() != target_size
          || image.count(kUndef)) {
        r.fail("bijective", {what, std::to_string(map.size()),
                             std::to_string(image.size()),
                             std::to_string(target_size)});
      } else {
        r.note("bijective on " + std::to_string(map.size()) + " " + what);
      }
    }

  }  // namespace

  Idx LambdaDGpd::square(Idx m, Shell const& s) const {
    auto it = index.find({m, s});
    return it == index.end() ? kUndef : it->second;
  }

  LambdaDGpd lambda(CrossedModule const& x) {
    auto const& P = x.base();
    auto const& M = x.module();
    std::vector<std::vector<Idx>> preimage(P.num_arrows());
    for (std::size_t m = 0; m < M.num_arrows(); ++m) {
      preimage[uz(x.boundary(static_cast<Idx>(m)))].push_back(static_cast<Idx>(m));
    }
    std::vector<Quintuple> qs;
    for (std::size_t i = 0; i < P.num_arrows(); ++i) {
      Idx const a = static_cast<Idx>(i);
      for (Idx c : P.out(P.src(a))) {
        for (Idx b : P.out(P.dst(a))) {
          for (Idx d : P.hom(P.dst(c), P.dst(b))) {
            Idx const t = P.chain({P.inverse(b), P.inverse(a), c, d});
            for (Idx m : preimage[uz(t)]) {
              Shell const s{a, c, b, d};
              qs.push_back(
                  {m, s, "(" + M.arrow_name(m) + ";" + shell_name(P, s).substr(1)});
            }
          }
        }
      }
    }
    std::sort(qs.begin(), qs.end(),
              [](auto const& l, auto const& r) { return l.name < r.name; });

    LambdaDGpd result;
    result.source = x;
    DGpdTables t;
    t.edges = P;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      result.index.emplace(std::pair(qs[i].m, qs[i].s), static_cast<Idx>(i));
      result.module_part.push_back(qs[i].m);
      t.squares.push_back(qs[i].name);
    }
    t.allocate();
    std::vector<std::vector<Idx>> by_left(P.num_arrows()), by_top(P.num_arrows());
    for (std::size_t i = 0; i < qs.size(); ++i) {
      auto const& s = qs[i].s;
      t.top[i]      = s.top;
      t.bottom[i]   = s.bottom;
      t.left[i]     = s.left;
      t.right[i]    = s.right;
      by_left[uz(s.left)].push_back(static_cast<Idx>(i));
      by_top[uz(s.top)].push_back(static_cast<Idx>(i));
    }
    auto const at = [&](Idx m, Shell const& s) { return result.index.at({m, s}); };
    for (std::size_t i = 0; i < qs.size(); ++i) {
      Idx const   u = static_cast<Idx>(i);
      Idx const   m = qs[i].m;
      auto const& s = qs[i].s;
      for (Idx v : by_left[uz(s.right)]) {
        Idx const   n  = qs[uz(v)].m;
        auto const& s2 = qs[uz(v)].s;  // (d, g, f, h)
        t.h(u, v)      = at(x.add(x.act(m, s2.bottom), n),
                            {s.left, P.compose(s.top, s2.top),
                             P.compose(s.bottom, s2.bottom), s2.right});
      }
      for (Idx w : by_top[uz(s.bottom)]) {
        Idx const   n  = qs[uz(w)].m;
        auto const& s2 = qs[uz(w)].s;  // (f, b, g, h)
        t.v(u, w)      = at(x.add(n, x.act(m, s2.right)),
                            {P.compose(s.left, s2.left), s.top, s2.bottom,
                             P.compose(s.right, s2.right)});
      }
    }
    for (std::size_t i = 0; i < P.num_arrows(); ++i) {
      Idx const a  = static_cast<Idx>(i);
      Idx const z  = x.zero(P.dst(a));
      t.hident[i]  = at(z, hident_shell(P, a));
      t.vident[i]  = at(z, vident_shell(P, a));
    }
    t.thin.emplace();
    for (auto const& s : commutative_shells(P)) {
      t.thin->push_back({s, at(x.zero(P.dst(s.bottom)), s)});
    }
    result.dgpd = validate_dgpd(std::move(t)).value();
    return result;
  }

  CrossedModule gamma(DoubleGroupoid const& g) {
    auto const&      E = g.edges();
    std::vector<Idx> local(g.num_squares(), kUndef);
    std::vector<Idx> members;
    for (std::size_t i = 0; i < g.num_squares(); ++i) {
      Idx const u = static_cast<Idx>(i);
      if (E.is_identity(g.left(u)) && E.is_identity(g.bottom(u))
          && E.is_identity(g.right(u))) {
        local[i] = static_cast<Idx>(members.size());
        members.push_back(u);
      }
    }
    GroupoidTables mt;
    mt.objects = E.object_names();
    for (Idx u : members) {
      mt.arrows.push_back(g.square_name(u));
    }
    mt.allocate();
    for (std::size_t k = 0; k < members.size(); ++k) {
      Idx const u = members[k];
      Idx const x = E.src(g.left(u));
      mt.src[k]   = x;
      mt.dst[k]   = x;
      for (Idx v : members) {
        if (Idx uv = g.hcompose(u, v); uv != kUndef) {
          mt.at(static_cast<Idx>(k), local[uz(v)]) = local[uz(uv)];
        }
      }
    }
    for (std::size_t x = 0; x < E.num_objects(); ++x) {
      mt.identity[x] = local[uz(g.hident(E.identity(static_cast<Idx>(x))))];
    }
    XModTables xt{E, validate_groupoid(std::move(mt)).value(), {}, {}, {}};
    xt.allocate();
    for (std::size_t k = 0; k < members.size(); ++k) {
      Idx const u = members[k];
      xt.boundary[k] = g.top(u);
      for (Idx a : E.out(E.src(g.left(u)))) {
        Idx const ua = g.hcompose(
            g.hcompose(g.vident(E.inverse(a)), u), g.vident(a));
        xt.act(static_cast<Idx>(k), a) = ua == kUndef ? kUndef : local[uz(ua)];
      }
    }
    return validate_xmod(std::move(xt)).value();
  }

  Idx fold(DoubleGroupoid const& g, Idx u) {
    if (!g.has_thin()) {
      throw Error(ErrorKind::bad_params, "fold needs a thin structure");
    }
    auto const& E    = g.edges();
    auto const  s    = g.shell(u);
    Idx const   bl   = E.identity(E.dst(s.left));
    Idx const   br   = E.identity(E.dst(s.bottom));
    auto const  thin = [&](Shell const& t) {
      Idx const r = g.thin(t);
      if (r == kUndef) {
        throw Error(ErrorKind::axiom_violation,
                    "no thin square on " + shell_name(E, t));
      }
      return r;
    };
    auto const defined = [&](Idx r) {
      if (r == kUndef) {
        throw Error(ErrorKind::axiom_violation,
                    "fold composite undefined for " + g.square_name(u));
      }
      return r;
    };
    Idx const t1    = thin({bl, E.inverse(s.left), bl, s.left});
    Idx const t2    = thin({s.right, s.right, br, br});
    Idx const t3    = thin({s.bottom, s.bottom, br, br});
    Idx const t4    = thin({br, E.inverse(s.bottom), br, s.bottom});
    Idx const inner = defined(g.hcompose(defined(g.hcompose(t1, u)), t2));
    return defined(g.hcompose(t4, defined(g.vcompose(inner, t3))));
  }

  DGpdMorphism lambda_morphism(XModMorphism const& f,
                               LambdaDGpd const&   source,
                               LambdaDGpd const&   target) {
    DGpdMorphism d{source.dgpd, target.dgpd, f.object_map, f.base_map, {}};
    auto const   f1 = [&](Idx a) { return f.base_map[uz(a)]; };
    for (std::size_t u = 0; u < source.dgpd.num_squares(); ++u) {
      Shell const s = source.dgpd.shell(static_cast<Idx>(u));
      d.square_map.push_back(
          target.square(f.module_map[uz(source.module_part[u])],
                        {f1(s.left), f1(s.top), f1(s.bottom), f1(s.right)}));
    }
    return d;
  }

  XModRoundTrip roundtrip_xmod(CrossedModule const& x) {
    auto const  l = lambda(x);
    auto const  y = gamma(l.dgpd);
    auto const& P = x.base();
    auto const& M = x.module();
    XModRoundTrip rt;
    rt.direction = "gamma-lambda";
    rt.map       = XModMorphism{x, y, std::vector<Idx>(P.num_objects()),
                          std::vector<Idx>(M.num_arrows()),
                          std::vector<Idx>(P.num_arrows())};
    std::iota(rt.map.object_map.begin(), rt.map.object_map.end(), 0);
    std::iota(rt.map.base_map.begin(), rt.map.base_map.end(), 0);
    for (std::size_t i = 0; i < M.num_arrows(); ++i) {
      Idx const m   = static_cast<Idx>(i);
      Idx const one = P.identity(x.object_of(m));
      Idx const sq  = l.square(m, {one, x.boundary(m), one, one});
      rt.map.module_map[i]
          = sq == kUndef ? kUndef
                         : y.module().find_arrow(l.dgpd.square_name(sq)).value_or(kUndef);
    }
    if (!(y.base() == P)) {
      rt.report.fail("base-unchanged", {"gamma(lambda(X)) base differs"});
    }
    rt.report.merge(check_xmod_morphism(rt.map));
    check_bijective(rt.report, rt.map.module_map, y.module().num_arrows(),
                    "module arrows");
    return rt;
  }

  DGpdRoundTrip roundtrip_dgpd(DoubleGroupoid const& g) {
    if (!g.has_thin()) {
      throw Error(ErrorKind::bad_params, "double groupoid has no thin structure");
    }
    auto const  x = gamma(g);
    auto const  l = lambda(x);
    auto const& E = g.edges();
    DGpdRoundTrip rt;
    rt.direction = "lambda-gamma";
    rt.map = DGpdMorphism{g, l.dgpd, std::vector<Idx>(E.num_objects()),
                          std::vector<Idx>(E.num_arrows()), {}};
    std::iota(rt.map.object_map.begin(), rt.map.object_map.end(), 0);
    std::iota(rt.map.edge_map.begin(), rt.map.edge_map.end(), 0);
    rt.report.check("fold-boundary");
    for (std::size_t i = 0; i < g.num_squares(); ++i) {
      Idx const   u = static_cast<Idx>(i);
      Shell const s = g.shell(u);
      Idx const   f = fold(g, u);
      if (g.top(f) != E.chain({E.inverse(s.bottom), E.inverse(s.left), s.top, s.right})) {
        rt.report.fail("fold-boundary", {g.square_name(u)});
      }
      Idx const m = x.module().arrow(g.square_name(f));
      rt.map.square_map.push_back(l.square(m, s));
    }
    rt.report.merge(check_dgpd_morphism(rt.map));
    check_bijective(rt.report, rt.map.square_map, l.dgpd.num_squares(), "squares");
    return rt;
  }

  SubDGpdWitness transfer_normal_sub_to_dgpd(LambdaDGpd const&     l,
                                             SubXModWitness const& w) {
    if (!w.is_normal) {
      throw Error(ErrorKind::not_normal, "subcrossed module is not normal",
                  w.report);
    }
    if (!(w.parent == l.source)) {
      throw Error(ErrorKind::bad_params, "witness is not over the lambda source");
    }
    auto const& G = l.dgpd;
    auto const  q = [&](Idx a) { return bool(w.base_arrows[uz(a)]); };
    Mask        squares(G.num_squares(), false);
    for (std::size_t u = 0; u < squares.size(); ++u) {
      Shell const s = G.shell(static_cast<Idx>(u));
      squares[u]    = w.module_arrows[uz(l.module_part[u])] && q(s.left)
                   && q(s.top) && q(s.bottom) && q(s.right);
    }
    return check_sub_dgpd(G, w.objects, w.base_arrows, std::move(squares));
  }

  SubXModWitness transfer_normal_sub_to_xmod(SubDGpdWitness const& h) {
    return transfer_normal_sub_to_xmod(h, gamma(h.parent));
  }

  SubXModWitness transfer_normal_sub_to_xmod(SubDGpdWitness const& h,
                                             CrossedModule const&  y) {
    if (!h.is_normal) {
      throw Error(ErrorKind::not_normal, "subdouble groupoid is not normal",
                  h.report);
    }
    auto const& G = h.parent;
    auto const& M = y.module();
    auto const& P = y.base();
    Mask        n(M.num_arrows(), false);
    for (std::size_t m = 0; m < n.size(); ++m) {
      n[m] = h.squares[uz(G.square(M.arrow_name(static_cast<Idx>(m))))];
    }
    auto w = check_sub_xmod(y, h.objects, std::move(n), h.edges);
    if (w.is_sub_xmod) {
      w.report.check("NCM3-boundary");
      for (std::size_t i = 0; i < M.num_arrows(); ++i) {
        Idx const m = static_cast<Idx>(i);
        Idx const p = M.src(m);
        for (Idx b : P.hom(p, p)) {
          if (!h.edges[uz(b)]) {
            continue;
          }
          Idx const e = P.chain({y.boundary(M.inverse(m)), P.inverse(b),
                                 y.boundary(m), b});
          if (!h.edges[uz(e)]) {
            w.report.fail("NCM3-boundary", {M.arrow_name(m), P.arrow_name(b)});
          }
        }
      }
      w.is_normal = w.is_normal && w.report.ok();
    }
    return w;
  }

  QuotientDGpd quotient_dgpd(SubDGpdWitness const& h) {
    if (!h.is_normal) {
      throw Error(ErrorKind::not_normal, "subdouble groupoid is not normal",
                  h.report);
    }
    if (!h.edge_sub().is_totally_intransitive) {
      throw Error(ErrorKind::not_totally_intransitive,
                  "edge subgroupoid is not totally intransitive");
    }
    auto w   = transfer_normal_sub_to_xmod(h);
    auto via = quotient_xmod(w);
    auto l   = lambda(via.quotient);
    return {std::move(via), std::move(l)};
  }

}  // namespace gpdx
