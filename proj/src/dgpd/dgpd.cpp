#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gpdx/dgpd.hpp"
#include "gpdx/scan.hpp"

#include "internal.hpp"

namespace gpdx {

  using detail::uz;

  namespace detail {

    struct DGpdImpl {
      FiniteGroupoid       edges;
      FiniteGroupoid       horizontal;
      FiniteGroupoid       vertical;
      std::vector<Idx>     top, bottom, left, right;
      bool                 has_thin = false;
      std::map<Shell, Idx> thin;
      std::vector<bool>    is_thin;
    };

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Shells
  ////////////////////////////////////////////////////////////////////////

  bool corner_consistent(FiniteGroupoid const& g, Shell const& s) {
    return g.src(s.top) == g.src(s.left) && g.dst(s.top) == g.src(s.right)
           && g.dst(s.left) == g.src(s.bottom)
           && g.dst(s.bottom) == g.dst(s.right);
  }

  bool commutative(FiniteGroupoid const& g, Shell const& s) {
    Idx const ab = g.compose(s.left, s.bottom);
    return ab != kUndef && ab == g.compose(s.top, s.right);
  }

  std::string shell_name(FiniteGroupoid const& g, Shell const& s) {
    return "(" + g.arrow_name(s.left) + "," + g.arrow_name(s.top) + ","
           + g.arrow_name(s.bottom) + "," + g.arrow_name(s.right) + ")";
  }

  Shell hident_shell(FiniteGroupoid const& g, Idx a) {
    return {a, g.identity(g.src(a)), g.identity(g.dst(a)), a};
  }

  Shell vident_shell(FiniteGroupoid const& g, Idx a) {
    return {g.identity(g.src(a)), a, a, g.identity(g.dst(a))};
  }

  std::vector<Shell> commutative_shells(FiniteGroupoid const& g) {
    std::vector<Shell> result;
    for (std::size_t i = 0; i < g.num_arrows(); ++i) {
      Idx const a = static_cast<Idx>(i);
      for (Idx c : g.out(g.src(a))) {
        for (Idx b : g.out(g.dst(a))) {
          result.push_back({a, c, b, g.chain({g.inverse(c), a, b})});
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // DoubleGroupoid
  ////////////////////////////////////////////////////////////////////////

  void DGpdTables::allocate() {
    std::size_t const n = squares.size();
    std::size_t const e = edges.num_arrows();
    top.assign(n, kUndef);
    bottom.assign(n, kUndef);
    left.assign(n, kUndef);
    right.assign(n, kUndef);
    hcomp.assign(n * n, kUndef);
    vcomp.assign(n * n, kUndef);
    hident.assign(e, kUndef);
    vident.assign(e, kUndef);
  }

  DoubleGroupoid::DoubleGroupoid()
      : _impl([] {
          auto impl      = std::make_shared<detail::DGpdImpl>();
          impl->has_thin = true;
          return impl;
        }()) {}

  DoubleGroupoid::DoubleGroupoid(std::shared_ptr<detail::DGpdImpl const> impl)
      : _impl(std::move(impl)) {}

  FiniteGroupoid const& DoubleGroupoid::edges() const noexcept {
    return _impl->edges;
  }
  FiniteGroupoid const& DoubleGroupoid::horizontal() const noexcept {
    return _impl->horizontal;
  }
  FiniteGroupoid const& DoubleGroupoid::vertical() const noexcept {
    return _impl->vertical;
  }
  std::size_t DoubleGroupoid::num_squares() const noexcept {
    return _impl->top.size();
  }
  std::string const& DoubleGroupoid::square_name(Idx u) const {
    return _impl->horizontal.arrow_name(u);
  }
  std::optional<Idx> DoubleGroupoid::find_square(std::string_view id) const {
    return _impl->horizontal.find_arrow(id);
  }
  Idx DoubleGroupoid::square(std::string_view id) const {
    if (auto u = find_square(id)) {
      return *u;
    }
    throw Error(ErrorKind::dangling_id, "unknown square \"" + std::string(id) + "\"");
  }
  Idx DoubleGroupoid::top(Idx u) const {
    return _impl->top[uz(u)];
  }
  Idx DoubleGroupoid::bottom(Idx u) const {
    return _impl->bottom[uz(u)];
  }
  Idx DoubleGroupoid::left(Idx u) const {
    return _impl->left[uz(u)];
  }
  Idx DoubleGroupoid::right(Idx u) const {
    return _impl->right[uz(u)];
  }
  Shell DoubleGroupoid::shell(Idx u) const {
    return {left(u), top(u), bottom(u), right(u)};
  }
  Idx DoubleGroupoid::hcompose(Idx u, Idx v) const {
    return _impl->horizontal.compose(u, v);
  }
  Idx DoubleGroupoid::vcompose(Idx u, Idx w) const {
    return _impl->vertical.compose(u, w);
  }
  Idx DoubleGroupoid::hinverse(Idx u) const {
    return _impl->horizontal.inverse(u);
  }
  Idx DoubleGroupoid::vinverse(Idx u) const {
    return _impl->vertical.inverse(u);
  }
  Idx DoubleGroupoid::hident(Idx a) const {
    return _impl->horizontal.identity(a);
  }
  Idx DoubleGroupoid::vident(Idx a) const {
    return _impl->vertical.identity(a);
  }
  bool DoubleGroupoid::has_thin() const noexcept {
    return _impl->has_thin;
  }
  Idx DoubleGroupoid::thin(Shell const& s) const {
    auto it = _impl->thin.find(s);
    return it == _impl->thin.end() ? kUndef : it->second;
  }
  bool DoubleGroupoid::is_thin(Idx u) const {
    return _impl->has_thin && _impl->is_thin[uz(u)];
  }
  std::map<Shell, Idx> const& DoubleGroupoid::thin_map() const noexcept {
    return _impl->thin;
  }

  DGpdData DoubleGroupoid::data() const {
    DGpdData    d;
    auto const& E = edges();
    auto const& H = horizontal();
    auto const& V = vertical();
    d.edges       = E.data();
    for (std::size_t i = 0; i < num_squares(); ++i) {
      Idx const u = static_cast<Idx>(i);
      d.squares.push_back({square_name(u), E.arrow_name(top(u)),
                           E.arrow_name(bottom(u)), E.arrow_name(left(u)),
                           E.arrow_name(right(u))});
      for (Idx v : H.out(right(u))) {
        d.hcompose.push_back(
            {square_name(u), square_name(v), square_name(H.compose(u, v))});
      }
      for (Idx w : V.out(bottom(u))) {
        d.vcompose.push_back(
            {square_name(u), square_name(w), square_name(V.compose(u, w))});
      }
    }
    for (std::size_t a = 0; a < E.num_arrows(); ++a) {
      auto const& name = E.arrow_name(static_cast<Idx>(a));
      d.hident[name]   = square_name(hident(static_cast<Idx>(a)));
      d.vident[name]   = square_name(vident(static_cast<Idx>(a)));
    }
    if (has_thin()) {
      d.thin.emplace();
      for (auto const& [s, u] : thin_map()) {
        d.thin->push_back({E.arrow_name(s.left), E.arrow_name(s.top),
                           E.arrow_name(s.bottom), E.arrow_name(s.right),
                           square_name(u)});
      }
      std::sort(d.thin->begin(), d.thin->end());
    }
    return d;
  }

  DGpdTables DoubleGroupoid::tables() const {
    DGpdTables t;
    t.edges   = edges();
    t.squares = horizontal().arrow_names();
    t.top     = _impl->top;
    t.bottom  = _impl->bottom;
    t.left    = _impl->left;
    t.right   = _impl->right;
    t.hcomp.assign(horizontal().table().begin(), horizontal().table().end());
    t.vcomp.assign(vertical().table().begin(), vertical().table().end());
    for (std::size_t a = 0; a < edges().num_arrows(); ++a) {
      t.hident.push_back(hident(static_cast<Idx>(a)));
      t.vident.push_back(vident(static_cast<Idx>(a)));
    }
    if (has_thin()) {
      t.thin.emplace(thin_map().begin(), thin_map().end());
    }
    return t;
  }

  bool operator==(DoubleGroupoid const& lhs, DoubleGroupoid const& rhs) {
    if (lhs._impl == rhs._impl) {
      return true;
    }
    return lhs.edges() == rhs.edges() && lhs.horizontal() == rhs.horizontal()
           && lhs.vertical() == rhs.vertical()
           && lhs.has_thin() == rhs.has_thin()
           && lhs.thin_map() == rhs.thin_map();
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Puts squares into lexicographic order of their names.
    void canonicalize(DGpdTables& t) {
      auto const order = detail::sorted_order(t.squares);
      if (std::is_sorted(t.squares.begin(), t.squares.end())) {
        return;
      }
      auto const        inv = detail::invert(order);
      std::size_t const n   = t.squares.size();
      auto const remap = [&](Idx u) { return u == kUndef ? kUndef : inv[uz(u)]; };
      auto const permute = [&](std::vector<Idx> const& v) {
        std::vector<Idx> out(n);
        for (std::size_t i = 0; i < n; ++i) {
          out[i] = v[uz(order[i])];
        }
        return out;
      };
      auto const permute_table = [&](std::vector<Idx> const& tab) {
        std::vector<Idx> out(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = remap(tab[uz(order[i]) * n + uz(order[j])]);
          }
        }
        return out;
      };
      std::vector<std::string> names(n);
      for (std::size_t i = 0; i < n; ++i) {
        names[i] = std::move(t.squares[uz(order[i])]);
      }
      t.squares = std::move(names);
      t.top     = permute(t.top);
      t.bottom  = permute(t.bottom);
      t.left    = permute(t.left);
      t.right   = permute(t.right);
      t.hcomp   = permute_table(t.hcomp);
      t.vcomp   = permute_table(t.vcomp);
      for (auto& u : t.hident) {
        u = remap(u);
      }
      for (auto& u : t.vident) {
        u = remap(u);
      }
      if (t.thin) {
        for (auto& [s, u] : *t.thin) {
          u = remap(u);
        }
      }
    }

    GroupoidTables direction(DGpdTables const&       t,
                             std::vector<Idx> const& src,
                             std::vector<Idx> const& dst,
                             std::vector<Idx> const& ident,
                             std::vector<Idx> const& table,
                             char                    tag) {
      GroupoidTables g;
      g.objects  = t.edges.arrow_names();
      g.arrows   = t.squares;
      g.src      = src;
      g.dst      = dst;
      g.identity = ident;
      g.table    = table;
      for (auto const& w : t.conflicts) {
        if (!w.empty() && w[0] == std::string(1, tag)) {
          g.conflicts.emplace_back(w.begin() + 1, w.end());
        }
      }
      return g;
    }

    // Runs the interchange kernel on a copy of the tables with squares
    // renumbered in (left, top) order.
    void interchange(DGpdTables const& t, Report& r) {
      std::size_t const n = t.squares.size();
      std::size_t const E = t.edges.num_arrows();
      std::vector<Idx>  order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](Idx a, Idx b) {
        return std::pair(t.left[uz(a)], t.top[uz(a)])
               < std::pair(t.left[uz(b)], t.top[uz(b)]);
      });
      auto const       inv = detail::invert(order);
      std::vector<Idx> H(n * n), V(n * n), bottom(n), right(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t const oi = uz(order[i]);
        bottom[i]            = t.bottom[oi];
        right[i]             = t.right[oi];
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t const o = oi * n + uz(order[j]);
          H[i * n + j] = t.hcomp[o] == kUndef ? kUndef : inv[uz(t.hcomp[o])];
          V[i * n + j] = t.vcomp[o] == kUndef ? kUndef : inv[uz(t.vcomp[o])];
        }
      }
      std::vector<std::uint32_t> lt_begin(E * E + 1, 0), top_begin(E + 1, 0);
      std::vector<Idx>           top_list(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t const oi = uz(order[i]);
        ++lt_begin[uz(t.left[oi]) * E + uz(t.top[oi]) + 1];
        ++top_begin[uz(t.top[oi]) + 1];
      }
      std::partial_sum(lt_begin.begin(), lt_begin.end(), lt_begin.begin());
      std::partial_sum(top_begin.begin(), top_begin.end(), top_begin.begin());
      {
        auto fill = top_begin;
        for (std::size_t i = 0; i < n; ++i) {
          top_list[fill[uz(t.top[uz(order[i])])]++] = static_cast<Idx>(i);
        }
      }
      scan::InterchangeInput in;
      in.n         = n;
      in.edges     = E;
      in.hcomp     = H.data();
      in.vcomp     = V.data();
      in.bottom    = bottom.data();
      in.right     = right.data();
      in.lt_begin  = lt_begin.data();
      in.top_list  = top_list.data();
      in.top_begin = top_begin.data();
      std::vector<std::array<Idx, 4>> out;
      std::size_t const failures = scan::interchange(
          in, out, Report::kWitnessCap, scan::active_backend());
      auto& c = r.check("interchange");
      for (auto const& q : out) {
        c.witnesses.push_back({t.squares[uz(order[uz(q[0])])],
                               t.squares[uz(order[uz(q[1])])],
                               t.squares[uz(order[uz(q[2])])],
                               t.squares[uz(order[uz(q[3])])]});
      }
      c.failures += failures;
    }

    Checked<DoubleGroupoid> fail(Report r) {
      return {std::nullopt, std::move(r)};
    }

  }  // namespace

  Checked<DoubleGroupoid> validate_dgpd(DGpdData const& data) {
    Report r;
    auto   edges = validate_groupoid(data.edges);
    r.merge(edges.report(), "edges.");
    if (!edges) {
      return fail(std::move(r));
    }
    DGpdTables t;
    t.edges = *edges;
    std::unordered_map<std::string, Idx> index;
    for (auto const& s : data.squares) {
      if (!index.emplace(s.id, static_cast<Idx>(t.squares.size())).second) {
        throw Error(ErrorKind::parse_error, "duplicate square \"" + s.id + "\"");
      }
      t.squares.push_back(s.id);
    }
    auto const square = [&](std::string const& id) {
      auto it = index.find(id);
      if (it == index.end()) {
        throw Error(ErrorKind::dangling_id, "unknown square \"" + id + "\"");
      }
      return it->second;
    };
    auto const& E = t.edges;
    t.allocate();
    for (std::size_t i = 0; i < data.squares.size(); ++i) {
      auto const& s = data.squares[i];
      t.top[i]      = E.arrow(s.top);
      t.bottom[i]   = E.arrow(s.bottom);
      t.left[i]     = E.arrow(s.left);
      t.right[i]    = E.arrow(s.right);
    }
    auto const fill = [&](std::vector<Triple> const& triples, char tag) {
      for (auto const& [u, v, w] : triples) {
        Idx const value = square(w);
        Idx&      slot  = tag == 'h' ? t.h(square(u), square(v))
                                     : t.v(square(u), square(v));
        if (slot == kUndef) {
          slot = value;
        } else if (slot != value) {
          t.conflicts.push_back(
              {std::string(1, tag), u, v, t.squares[uz(slot)], w});
        }
      }
    };
    fill(data.hcompose, 'h');
    fill(data.vcompose, 'v');
    for (auto const& [a, u] : data.hident) {
      t.hident[uz(E.arrow(a))] = square(u);
    }
    for (auto const& [a, u] : data.vident) {
      t.vident[uz(E.arrow(a))] = square(u);
    }
    if (data.thin) {
      t.thin.emplace();
      for (auto const& [a, c, b, d, u] : *data.thin) {
        t.thin->push_back(
            {Shell{E.arrow(a), E.arrow(c), E.arrow(b), E.arrow(d)}, square(u)});
      }
    }
    auto checked = validate_dgpd(std::move(t));
    r.merge(checked.report());
    if (!checked) {
      return fail(std::move(r));
    }
    return {*checked, std::move(r)};
  }

  Checked<DoubleGroupoid> validate_dgpd(DGpdTables t) {
    std::size_t const n = t.squares.size();
    std::size_t const e = t.edges.num_arrows();
    if (t.top.size() != n || t.bottom.size() != n || t.left.size() != n
        || t.right.size() != n || t.hcomp.size() != n * n
        || t.vcomp.size() != n * n || t.hident.size() != e
        || t.vident.size() != e) {
      throw Error(ErrorKind::bad_params, "double groupoid tables not allocated");
    }
    canonicalize(t);
    Report      r;
    auto const& E    = t.edges;
    auto const  name = [&](Idx u) { return t.squares[uz(u)]; };
    auto const  in_range
        = [&](Idx a) { return a >= 0 && uz(a) < e; };

    r.check("corner-consistency");
    for (std::size_t i = 0; i < n; ++i) {
      Shell const s{t.left[i], t.top[i], t.bottom[i], t.right[i]};
      if (!in_range(s.left) || !in_range(s.top) || !in_range(s.bottom)
          || !in_range(s.right) || !corner_consistent(E, s)) {
        r.fail("corner-consistency", {name(static_cast<Idx>(i))});
      }
    }
    auto hcheck = validate_groupoid(
        direction(t, t.left, t.right, t.hident, t.hcomp, 'h'));
    auto vcheck = validate_groupoid(
        direction(t, t.top, t.bottom, t.vident, t.vcomp, 'v'));
    r.merge(hcheck.report(), "horizontal.");
    r.merge(vcheck.report(), "vertical.");
    static constexpr char const* kLater[]
        = {"face-compatibility", "degeneracy-boundaries",
           "degeneracy-functoriality", "interchange"};
    if (!r.ok()) {
      for (auto const* c : kLater) {
        r.skip(c, "square groupoids invalid");
      }
      return fail(std::move(r));
    }
    auto const& H = *hcheck;
    auto const& V = *vcheck;

    r.check("face-compatibility");
    for (std::size_t i = 0; i < n; ++i) {
      Idx const u = static_cast<Idx>(i);
      for (Idx v : H.out(t.right[i])) {
        Idx const uv = H.compose(u, v);
        if (t.top[uz(uv)] != E.compose(t.top[i], t.top[uz(v)])
            || t.bottom[uz(uv)] != E.compose(t.bottom[i], t.bottom[uz(v)])) {
          r.fail("face-compatibility", {"h", name(u), name(v)});
        }
      }
      for (Idx w : V.out(t.bottom[i])) {
        Idx const uw = V.compose(u, w);
        if (t.left[uz(uw)] != E.compose(t.left[i], t.left[uz(w)])
            || t.right[uz(uw)] != E.compose(t.right[i], t.right[uz(w)])) {
          r.fail("face-compatibility", {"v", name(u), name(w)});
        }
      }
    }
    auto const shell_of = [&](Idx u) {
      return Shell{t.left[uz(u)], t.top[uz(u)], t.bottom[uz(u)],
                   t.right[uz(u)]};
    };
    r.check("degeneracy-boundaries");
    r.check("degeneracy-functoriality");
    for (std::size_t i = 0; i < e; ++i) {
      Idx const a = static_cast<Idx>(i);
      if (shell_of(t.hident[i]) != hident_shell(E, a)) {
        r.fail("degeneracy-boundaries", {"e2", E.arrow_name(a)});
      }
      if (shell_of(t.vident[i]) != vident_shell(E, a)) {
        r.fail("degeneracy-boundaries", {"e1", E.arrow_name(a)});
      }
      for (Idx b : E.out(E.dst(a))) {
        Idx const ab = E.compose(a, b);
        if (t.vident[uz(ab)] != H.compose(t.vident[i], t.vident[uz(b)])) {
          r.fail("degeneracy-functoriality",
                 {"e1", E.arrow_name(a), E.arrow_name(b)});
        }
        if (t.hident[uz(ab)] != V.compose(t.hident[i], t.hident[uz(b)])) {
          r.fail("degeneracy-functoriality",
                 {"e2", E.arrow_name(a), E.arrow_name(b)});
        }
      }
    }
    for (std::size_t x = 0; x < E.num_objects(); ++x) {
      Idx const one = E.identity(static_cast<Idx>(x));
      if (t.hident[uz(one)] != t.vident[uz(one)]) {
        r.fail("degeneracy-functoriality",
               {"e1=e2", E.object_name(static_cast<Idx>(x))});
      }
    }
    if (r.passed("face-compatibility")) {
      interchange(t, r);
    } else {
      r.skip("interchange", "faces incompatible with composition");
    }
    if (!r.ok()) {
      return fail(std::move(r));
    }

    auto impl        = std::make_shared<detail::DGpdImpl>();
    impl->edges      = E;
    impl->horizontal = H;
    impl->vertical   = V;
    impl->top        = std::move(t.top);
    impl->bottom     = std::move(t.bottom);
    impl->left       = std::move(t.left);
    impl->right      = std::move(t.right);
    DoubleGroupoid g{std::shared_ptr<detail::DGpdImpl const>(std::move(impl))};
    if (!t.thin) {
      return {std::move(g), std::move(r)};
    }
    auto thin = validate_thin(g, *t.thin);
    r.merge(thin.report());
    if (!thin) {
      return fail(std::move(r));
    }
    return {*thin, std::move(r)};
  }

  Checked<DoubleGroupoid> validate_thin(DoubleGroupoid const& g,
                                        ThinList const&       thin) {
    Report      r;
    auto const& E = g.edges();
    auto const  e = E.num_arrows();
    auto const  n = g.num_squares();
    auto const  sname = [&](Shell const& s) { return shell_name(E, s); };
    std::map<Shell, Idx> map;

    r.check("thin-shells");
    for (auto const& [s, u] : thin) {
      bool const edges_ok = s.left >= 0 && uz(s.left) < e && s.top >= 0
                            && uz(s.top) < e && s.bottom >= 0
                            && uz(s.bottom) < e && s.right >= 0
                            && uz(s.right) < e;
      if (!edges_ok || u < 0 || uz(u) >= n) {
        r.fail("thin-shells", {"out-of-range"});
        continue;
      }
      if (!corner_consistent(E, s) || !commutative(E, s)) {
        r.fail("thin-shells", {"not-commutative", sname(s)});
        continue;
      }
      auto [it, fresh] = map.emplace(s, u);
      if (!fresh && it->second != u) {
        r.fail("thin-shells", {"duplicate", sname(s)});
      }
    }
    for (auto const& s : commutative_shells(E)) {
      if (!map.count(s)) {
        r.fail("thin-shells", {"missing", sname(s)});
      }
    }
    if (!r.ok()) {
      r.skip("NotIdentityOnEdges", "thin domain invalid");
      r.skip("NotMorphism", "thin domain invalid");
      return fail(std::move(r));
    }

    r.check("NotIdentityOnEdges");
    for (auto const& [s, u] : map) {
      if (g.shell(u) != s) {
        r.fail("NotIdentityOnEdges", {sname(s), g.square_name(u)});
      }
    }
    r.check("NotMorphism");
    std::vector<std::vector<std::pair<Shell, Idx>>> by_left(e), by_top(e);
    for (auto const& entry : map) {
      by_left[uz(entry.first.left)].push_back(entry);
      by_top[uz(entry.first.top)].push_back(entry);
    }
    for (auto const& [s, u] : map) {
      for (auto const& [s2, u2] : by_left[uz(s.right)]) {
        Shell const h{s.left, E.compose(s.top, s2.top),
                      E.compose(s.bottom, s2.bottom), s2.right};
        if (map.at(h) != g.hcompose(u, u2)) {
          r.fail("NotMorphism", {"h", sname(s), sname(s2)});
        }
      }
      for (auto const& [s2, u2] : by_top[uz(s.bottom)]) {
        Shell const v{E.compose(s.left, s2.left), s.top, s2.bottom,
                      E.compose(s.right, s2.right)};
        if (map.at(v) != g.vcompose(u, u2)) {
          r.fail("NotMorphism", {"v", sname(s), sname(s2)});
        }
      }
    }
    for (std::size_t i = 0; i < e; ++i) {
      Idx const a = static_cast<Idx>(i);
      if (map.at(hident_shell(E, a)) != g.hident(a)) {
        r.fail("NotMorphism", {"e2", E.arrow_name(a)});
      }
      if (map.at(vident_shell(E, a)) != g.vident(a)) {
        r.fail("NotMorphism", {"e1", E.arrow_name(a)});
      }
    }
    if (!r.ok()) {
      return fail(std::move(r));
    }
    auto impl      = std::make_shared<detail::DGpdImpl>(*g._impl);
    impl->has_thin = true;
    impl->is_thin.assign(n, false);
    for (auto const& [s, u] : map) {
      impl->is_thin[uz(u)] = true;
    }
    impl->thin = std::move(map);
    return {DoubleGroupoid(std::move(impl)), std::move(r)};
  }

  DoubleGroupoid shell_dgpd(FiniteGroupoid const& g, bool commutative_only) {
    std::vector<Shell> shells;
    for (std::size_t i = 0; i < g.num_arrows(); ++i) {
      Idx const a = static_cast<Idx>(i);
      for (Idx c : g.out(g.src(a))) {
        for (Idx b : g.out(g.dst(a))) {
          for (Idx d : g.hom(g.dst(c), g.dst(b))) {
            Shell const s{a, c, b, d};
            if (!commutative_only || commutative(g, s)) {
              shells.push_back(s);
            }
          }
        }
      }
    }
    std::map<Shell, Idx> index;
    DGpdTables           t;
    t.edges = g;
    for (auto const& s : shells) {
      index.emplace(s, static_cast<Idx>(t.squares.size()));
      t.squares.push_back(shell_name(g, s));
    }
    t.allocate();
    std::vector<std::vector<Idx>> by_left(g.num_arrows()), by_top(g.num_arrows());
    for (std::size_t i = 0; i < shells.size(); ++i) {
      auto const& s = shells[i];
      t.top[i]      = s.top;
      t.bottom[i]   = s.bottom;
      t.left[i]     = s.left;
      t.right[i]    = s.right;
      by_left[uz(s.left)].push_back(static_cast<Idx>(i));
      by_top[uz(s.top)].push_back(static_cast<Idx>(i));
    }
    for (std::size_t i = 0; i < shells.size(); ++i) {
      Idx const   u = static_cast<Idx>(i);
      auto const& s = shells[i];
      for (Idx v : by_left[uz(s.right)]) {
        auto const& s2 = shells[uz(v)];
        t.h(u, v) = index.at({s.left, g.compose(s.top, s2.top),
                              g.compose(s.bottom, s2.bottom), s2.right});
      }
      for (Idx w : by_top[uz(s.bottom)]) {
        auto const& s2 = shells[uz(w)];
        t.v(u, w) = index.at({g.compose(s.left, s2.left), s.top, s2.bottom,
                              g.compose(s.right, s2.right)});
      }
    }
    for (std::size_t a = 0; a < g.num_arrows(); ++a) {
      t.hident[a] = index.at(hident_shell(g, static_cast<Idx>(a)));
      t.vident[a] = index.at(vident_shell(g, static_cast<Idx>(a)));
    }
    t.thin.emplace();
    for (auto const& s : commutative_shells(g)) {
      t.thin->push_back({s, index.at(s)});
    }
    return validate_dgpd(std::move(t)).value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  GroupoidMorphism DGpdMorphism::edge_morphism() const {
    return {source.edges(), target.edges(), object_map, edge_map};
  }

  Report check_dgpd_morphism(DGpdMorphism const& f) {
    Report r;
    r.merge(check_groupoid_morphism(f.edge_morphism()), "edges.");
    static constexpr char const* kLater[]
        = {"square-map-total", "faces", "hcompose", "vcompose",
           "degeneracies", "thin"};
    if (!r.ok()) {
      for (auto const* c : kLater) {
        r.skip(c, "edge map is not a morphism");
      }
      return r;
    }
    auto const& G  = f.source;
    auto const& K  = f.target;
    auto const  n  = G.num_squares();
    auto const  f1 = [&](Idx a) { return f.edge_map[uz(a)]; };
    auto const  f2 = [&](Idx u) { return f.square_map[uz(u)]; };
    r.check("square-map-total");
    if (f.square_map.size() != n) {
      r.fail("square-map-total", {"<size mismatch>"});
    } else {
      for (std::size_t u = 0; u < n; ++u) {
        if (f.square_map[u] < 0 || uz(f.square_map[u]) >= K.num_squares()) {
          r.fail("square-map-total", {G.square_name(static_cast<Idx>(u))});
        }
      }
    }
    if (!r.ok()) {
      for (auto const* c : kLater) {
        if (std::string_view(c) != "square-map-total") {
          r.skip(c, "square map is not total");
        }
      }
      return r;
    }
    r.check("faces");
    r.check("hcompose");
    r.check("vcompose");
    for (std::size_t i = 0; i < n; ++i) {
      Idx const   u = static_cast<Idx>(i);
      Shell const s = G.shell(u);
      if (K.shell(f2(u))
          != Shell{f1(s.left), f1(s.top), f1(s.bottom), f1(s.right)}) {
        r.fail("faces", {G.square_name(u)});
      }
      for (Idx v : G.horizontal().out(s.right)) {
        if (f2(G.hcompose(u, v)) != K.hcompose(f2(u), f2(v))) {
          r.fail("hcompose", {G.square_name(u), G.square_name(v)});
        }
      }
      for (Idx w : G.vertical().out(s.bottom)) {
        if (f2(G.vcompose(u, w)) != K.vcompose(f2(u), f2(w))) {
          r.fail("vcompose", {G.square_name(u), G.square_name(w)});
        }
      }
    }
    r.check("degeneracies");
    for (std::size_t i = 0; i < G.edges().num_arrows(); ++i) {
      Idx const a = static_cast<Idx>(i);
      if (f2(G.hident(a)) != K.hident(f1(a))) {
        r.fail("degeneracies", {"e2", G.edges().arrow_name(a)});
      }
      if (f2(G.vident(a)) != K.vident(f1(a))) {
        r.fail("degeneracies", {"e1", G.edges().arrow_name(a)});
      }
    }
    if (G.has_thin() && K.has_thin()) {
      r.check("thin");
      for (auto const& [s, u] : G.thin_map()) {
        Shell const fs{f1(s.left), f1(s.top), f1(s.bottom), f1(s.right)};
        if (f2(u) != K.thin(fs)) {
          r.fail("thin", {G.square_name(u)});
        }
      }
    } else {
      r.skip("thin", "no thin structure on both sides");
    }
    return r;
  }

  Checked<DGpdMorphism> validate_dgpd_morphism(DoubleGroupoid          source,
                                               DoubleGroupoid          target,
                                               DGpdMorphismData const& maps) {
    DGpdMorphism f{std::move(source), std::move(target), {}, {}, {}};
    f.object_map.assign(f.source.edges().num_objects(), kUndef);
    f.edge_map.assign(f.source.edges().num_arrows(), kUndef);
    f.square_map.assign(f.source.num_squares(), kUndef);
    for (auto const& [x, y] : maps.objects) {
      f.object_map[uz(f.source.edges().object(x))] = f.target.edges().object(y);
    }
    for (auto const& [a, b] : maps.edges) {
      f.edge_map[uz(f.source.edges().arrow(a))] = f.target.edges().arrow(b);
    }
    for (auto const& [u, v] : maps.squares) {
      f.square_map[uz(f.source.square(u))] = f.target.square(v);
    }
    Report r = check_dgpd_morphism(f);
    if (!r.ok()) {
      return {std::nullopt, std::move(r)};
    }
    return {std::move(f), std::move(r)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Subdouble groupoids
  ////////////////////////////////////////////////////////////////////////

  SubgroupoidWitness SubDGpdWitness::edge_sub() const {
    return check_subgroupoid(parent.edges(), objects, edges);
  }

  SubgroupoidWitness SubDGpdWitness::horizontal_sub() const {
    return check_subgroupoid(parent.horizontal(), edges, squares);
  }

  SubgroupoidWitness SubDGpdWitness::vertical_sub() const {
    return check_subgroupoid(parent.vertical(), edges, squares);
  }

  namespace {

    void copy_failures(Report&          to,
                       std::string_view to_name,
                       Report const&    from,
                       std::string_view from_name) {
      to.check(to_name);
      if (auto const* c = from.find(from_name)) {
        for (auto const& w : c->witnesses) {
          to.fail(to_name, w);
        }
        // failures beyond the witness cap
        to.check(to_name).failures += c->failures - c->witnesses.size();
      }
    }

  }  // namespace

  SubDGpdWitness check_sub_dgpd_ids(DoubleGroupoid const&           parent,
                                    std::vector<std::string> const& objects,
                                    std::vector<std::string> const& edges,
                                    std::vector<std::string> const& squares,
                                    bool                            mirror_v) {
    Mask sq(parent.num_squares(), false);
    for (auto const& id : squares) {
      sq[uz(parent.square(id))] = true;
    }
    return check_sub_dgpd(parent, object_mask(parent.edges(), objects),
                          arrow_mask(parent.edges(), edges), std::move(sq),
                          mirror_v);
  }

  SubDGpdWitness check_sub_dgpd(DoubleGroupoid const& parent,
                                Mask                  objects,
                                Mask                  edges,
                                Mask                  squares,
                                bool                  mirror_v) {
    if (objects.size() != parent.edges().num_objects()
        || edges.size() != parent.edges().num_arrows()
        || squares.size() != parent.num_squares()) {
      throw Error(ErrorKind::bad_params, "subset masks do not match parent");
    }
    SubDGpdWitness w;
    w.parent   = parent;
    w.objects  = std::move(objects);
    w.edges    = std::move(edges);
    w.squares  = std::move(squares);
    auto&      r    = w.report;
    auto const esub = w.edge_sub();
    auto const hsub = w.horizontal_sub();
    auto const vsub = w.vertical_sub();

    copy_failures(r, "SDG1", esub.report, "subgroupoid");
    copy_failures(r, "SDG2", hsub.report, "subgroupoid");
    copy_failures(r, "vertical-closure", vsub.report, "subgroupoid");
    if (parent.has_thin()) {
      r.check("SDG3");
      auto const& E = parent.edges();
      for (auto const& [s, u] : parent.thin_map()) {
        bool const inside = w.edges[uz(s.left)] && w.edges[uz(s.top)]
                            && w.edges[uz(s.bottom)] && w.edges[uz(s.right)];
        if (inside && !w.squares[uz(u)]) {
          r.fail("SDG3", {shell_name(E, s)});
        }
      }
    } else {
      r.skip("SDG3", "parent has no thin structure");
    }
    w.is_sub_dgpd = r.ok();
    if (!w.is_sub_dgpd) {
      r.skip("NDG1", "not a subdouble groupoid");
      r.skip("NDG2", "not a subdouble groupoid");
      if (mirror_v) {
        r.skip("NDG2-vertical", "not a subdouble groupoid");
      }
      return w;
    }
    copy_failures(r, "NDG1", esub.report, "normal");
    copy_failures(r, "NDG2", hsub.report, "non-wide-normal");
    if (mirror_v) {
      copy_failures(r, "NDG2-vertical", vsub.report, "non-wide-normal");
    }
    w.is_normal = r.ok();
    return w;
  }

  DoubleGroupoid to_dgpd(SubDGpdWitness const& w) {
    if (!w.is_sub_dgpd) {
      throw Error(ErrorKind::not_closed, "not a subdouble groupoid", w.report);
    }
    auto const&      G = w.parent;
    auto const&      E = G.edges();
    DGpdTables       t;
    t.edges = to_groupoid(w.edge_sub());
    std::vector<Idx> edge_new(E.num_arrows(), kUndef);
    std::vector<Idx> sq_new(G.num_squares(), kUndef);
    for (std::size_t a = 0, k = 0; a < E.num_arrows(); ++a) {
      if (w.edges[a]) {
        edge_new[a] = static_cast<Idx>(k++);
      }
    }
    for (std::size_t u = 0; u < G.num_squares(); ++u) {
      if (w.squares[u]) {
        sq_new[u] = static_cast<Idx>(t.squares.size());
        t.squares.push_back(G.square_name(static_cast<Idx>(u)));
      }
    }
    t.allocate();
    for (std::size_t i = 0; i < G.num_squares(); ++i) {
      Idx const u = static_cast<Idx>(i);
      Idx const k = sq_new[i];
      if (k == kUndef) {
        continue;
      }
      t.top[uz(k)]    = edge_new[uz(G.top(u))];
      t.bottom[uz(k)] = edge_new[uz(G.bottom(u))];
      t.left[uz(k)]   = edge_new[uz(G.left(u))];
      t.right[uz(k)]  = edge_new[uz(G.right(u))];
      for (Idx v : G.horizontal().out(G.right(u))) {
        if (w.squares[uz(v)]) {
          t.h(k, sq_new[uz(v)]) = sq_new[uz(G.hcompose(u, v))];
        }
      }
      for (Idx x : G.vertical().out(G.bottom(u))) {
        if (w.squares[uz(x)]) {
          t.v(k, sq_new[uz(x)]) = sq_new[uz(G.vcompose(u, x))];
        }
      }
    }
    for (std::size_t a = 0; a < E.num_arrows(); ++a) {
      if (w.edges[a]) {
        t.hident[uz(edge_new[a])] = sq_new[uz(G.hident(static_cast<Idx>(a)))];
        t.vident[uz(edge_new[a])] = sq_new[uz(G.vident(static_cast<Idx>(a)))];
      }
    }
    if (G.has_thin()) {
      t.thin.emplace();
      for (auto const& [s, u] : G.thin_map()) {
        if (w.edges[uz(s.left)] && w.edges[uz(s.top)] && w.edges[uz(s.bottom)]
            && w.edges[uz(s.right)]) {
          t.thin->push_back({Shell{edge_new[uz(s.left)], edge_new[uz(s.top)],
                                   edge_new[uz(s.bottom)],
                                   edge_new[uz(s.right)]},
                             sq_new[uz(u)]});
        }
      }
    }
    return validate_dgpd(std::move(t)).value();
  }

  SubDGpdWitness shell_sub_dgpd(DoubleGroupoid const&     parent,
                                SubgroupoidWitness const& h,
                                bool                      mirror_v) {
    Mask squares(parent.num_squares(), false);
    for (std::size_t u = 0; u < squares.size(); ++u) {
      Shell const s = parent.shell(static_cast<Idx>(u));
      squares[u]    = h.contains(s.left) && h.contains(s.top)
                   && h.contains(s.bottom) && h.contains(s.right);
    }
    return check_sub_dgpd(parent, h.objects, h.arrows, std::move(squares),
                          mirror_v);
  }

}  // namespace gpdx
