#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gpdx/groupoid.hpp"
#include "gpdx/scan.hpp"

#include "internal.hpp"

namespace gpdx {

  namespace detail {

    struct GroupoidImpl {
      std::vector<std::string> objects;
      std::vector<std::string> arrows;
      std::vector<Idx>         src, dst, identity, inverse, table;
      std::vector<bool>        is_identity;
      std::vector<Idx>           hom_flat;
      std::vector<std::uint32_t> hom_begin;  // objects^2 + 1
      std::vector<Idx>           out_flat;
      std::vector<std::uint32_t> out_begin;  // objects + 1
    };

    std::vector<Idx> sorted_order(std::vector<std::string> const& names) {
      std::vector<Idx> order(names.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Idx a, Idx b) {
        return names[static_cast<std::size_t>(a)]
               < names[static_cast<std::size_t>(b)];
      });
      for (std::size_t i = 1; i < order.size(); ++i) {
        auto const& prev = names[static_cast<std::size_t>(order[i - 1])];
        if (prev == names[static_cast<std::size_t>(order[i])]) {
          throw Error(ErrorKind::parse_error, "duplicate id \"" + prev + "\"");
        }
      }
      return order;
    }

    std::vector<Idx> invert(std::vector<Idx> const& order) {
      std::vector<Idx> inv(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        inv[static_cast<std::size_t>(order[i])] = static_cast<Idx>(i);
      }
      return inv;
    }

    std::optional<Idx> find_sorted(std::vector<std::string> const& names,
                                   std::string_view                id) {
      auto it = std::lower_bound(names.begin(), names.end(), id,
                                 [](std::string const& s, std::string_view v) {
                                   return std::string_view(s) < v;
                                 });
      if (it == names.end() || *it != id) {
        return std::nullopt;
      }
      return static_cast<Idx>(it - names.begin());
    }

  }  // namespace detail

  namespace {

    using detail::GroupoidImpl;

    // Puts objects and arrows into lexicographic order.
    void canonicalize(GroupoidTables& t) {
      auto const obj_order = detail::sorted_order(t.objects);
      auto const arr_order = detail::sorted_order(t.arrows);
      bool const sorted_already
          = std::is_sorted(t.objects.begin(), t.objects.end())
            && std::is_sorted(t.arrows.begin(), t.arrows.end());
      if (sorted_already) {
        return;
      }
      auto const obj_new = detail::invert(obj_order);
      auto const arr_new = detail::invert(arr_order);
      auto const remap_obj = [&](Idx x) {
        return x == kUndef ? kUndef : obj_new[static_cast<std::size_t>(x)];
      };
      auto const remap_arr = [&](Idx a) {
        return a == kUndef ? kUndef : arr_new[static_cast<std::size_t>(a)];
      };
      std::size_t const na = t.arrows.size();
      GroupoidTables    s;
      s.objects.reserve(t.objects.size());
      for (Idx i : obj_order) {
        s.objects.push_back(t.objects[static_cast<std::size_t>(i)]);
        s.identity.push_back(remap_arr(t.identity[static_cast<std::size_t>(i)]));
      }
      for (Idx i : arr_order) {
        s.arrows.push_back(t.arrows[static_cast<std::size_t>(i)]);
        s.src.push_back(remap_obj(t.src[static_cast<std::size_t>(i)]));
        s.dst.push_back(remap_obj(t.dst[static_cast<std::size_t>(i)]));
      }
      s.table.assign(na * na, kUndef);
      for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t b = 0; b < na; ++b) {
          s.table[static_cast<std::size_t>(arr_new[a]) * na
                  + static_cast<std::size_t>(arr_new[b])]
              = remap_arr(t.table[a * na + b]);
        }
      }
      s.conflicts = std::move(t.conflicts);
      t           = std::move(s);
    }

    void check_ranges(GroupoidTables const& t) {
      std::size_t const no = t.objects.size();
      std::size_t const na = t.arrows.size();
      if (t.src.size() != na || t.dst.size() != na || t.identity.size() != no
          || t.table.size() != na * na) {
        throw Error(ErrorKind::parse_error, "inconsistent groupoid table sizes");
      }
      auto bad = [](Idx v, std::size_t n) {
        return v < 0 || static_cast<std::size_t>(v) >= n;
      };
      for (std::size_t a = 0; a < na; ++a) {
        if (bad(t.src[a], no) || bad(t.dst[a], no)) {
          throw Error(ErrorKind::dangling_id,
                      "endpoint of arrow \"" + t.arrows[a] + "\"");
        }
      }
      for (Idx v : t.identity) {
        if (v != kUndef && bad(v, na)) {
          throw Error(ErrorKind::dangling_id, "identity arrow out of range");
        }
      }
      for (Idx v : t.table) {
        if (v != kUndef && bad(v, na)) {
          throw Error(ErrorKind::dangling_id, "composite out of range");
        }
      }
    }

    // Runs the associativity kernel on a copy of the table with arrows
    // grouped by source.
    void check_associativity(GroupoidTables const& t, Report& report) {
      std::size_t const na = t.arrows.size();
      std::size_t const no = t.objects.size();
      std::vector<Idx>  order(na);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](Idx a, Idx b) {
        return t.src[static_cast<std::size_t>(a)]
               < t.src[static_cast<std::size_t>(b)];
      });
      auto const                 pos = detail::invert(order);
      std::vector<std::uint32_t> begin(no + 1, 0);
      for (std::size_t a = 0; a < na; ++a) {
        ++begin[static_cast<std::size_t>(t.src[a]) + 1];
      }
      std::partial_sum(begin.begin(), begin.end(), begin.begin());
      std::vector<Idx> dst(na), table(na * na, 0);
      for (std::size_t i = 0; i < na; ++i) {
        auto const a = static_cast<std::size_t>(order[i]);
        dst[i]       = t.dst[a];
        for (std::size_t j = 0; j < na; ++j) {
          Idx v = t.table[a * na + static_cast<std::size_t>(order[j])];
          table[i * na + j] = v == kUndef ? 0 : pos[static_cast<std::size_t>(v)];
        }
      }
      scan::AssociativityInput in{na, table.data(), dst.data(), begin.data()};
      std::vector<std::array<Idx, 3>> bad;
      std::size_t const               failures = scan::associativity(
          in, bad, Report::kWitnessCap, scan::active_backend());
      auto& c = report.check("associativity");
      c.failures += failures;
      for (auto const& [a, b, cc] : bad) {
        c.witnesses.push_back({t.arrows[static_cast<std::size_t>(order[a])],
                               t.arrows[static_cast<std::size_t>(order[b])],
                               t.arrows[static_cast<std::size_t>(order[cc])]});
      }
    }

    std::shared_ptr<GroupoidImpl const> build(GroupoidTables&& t,
                                              std::vector<Idx> inverse) {
      auto impl         = std::make_shared<GroupoidImpl>();
      std::size_t const no = t.objects.size();
      std::size_t const na = t.arrows.size();
      impl->objects     = std::move(t.objects);
      impl->arrows      = std::move(t.arrows);
      impl->src         = std::move(t.src);
      impl->dst         = std::move(t.dst);
      impl->identity    = std::move(t.identity);
      impl->table       = std::move(t.table);
      impl->inverse     = std::move(inverse);
      impl->is_identity.assign(na, false);
      for (Idx e : impl->identity) {
        impl->is_identity[static_cast<std::size_t>(e)] = true;
      }
      impl->hom_begin.assign(no * no + 1, 0);
      impl->out_begin.assign(no + 1, 0);
      for (std::size_t a = 0; a < na; ++a) {
        auto const s = static_cast<std::size_t>(impl->src[a]);
        auto const d = static_cast<std::size_t>(impl->dst[a]);
        ++impl->hom_begin[s * no + d + 1];
        ++impl->out_begin[s + 1];
      }
      std::partial_sum(impl->hom_begin.begin(), impl->hom_begin.end(),
                       impl->hom_begin.begin());
      std::partial_sum(impl->out_begin.begin(), impl->out_begin.end(),
                       impl->out_begin.begin());
      impl->hom_flat.resize(na);
      impl->out_flat.resize(na);
      auto hom_fill = impl->hom_begin;
      auto out_fill = impl->out_begin;
      for (std::size_t a = 0; a < na; ++a) {
        auto const s = static_cast<std::size_t>(impl->src[a]);
        auto const d = static_cast<std::size_t>(impl->dst[a]);
        impl->hom_flat[hom_fill[s * no + d]++] = static_cast<Idx>(a);
        impl->out_flat[out_fill[s]++]          = static_cast<Idx>(a);
      }
      return impl;
    }

  }  // namespace

  void GroupoidTables::allocate() {
    src.assign(arrows.size(), kUndef);
    dst.assign(arrows.size(), kUndef);
    identity.assign(objects.size(), kUndef);
    table.assign(arrows.size() * arrows.size(), kUndef);
  }

  GroupoidTables resolve(GroupoidData const& data) {
    GroupoidTables t;
    t.objects = data.objects;
    for (auto const& a : data.arrows) {
      t.arrows.push_back(a.id);
    }
    // sorted_order throws on duplicates
    auto const obj_order = detail::sorted_order(t.objects);
    auto const arr_order = detail::sorted_order(t.arrows);
    std::unordered_map<std::string, Idx> obj_ix, arr_ix;
    for (std::size_t i = 0; i < t.objects.size(); ++i) {
      obj_ix.emplace(t.objects[i], static_cast<Idx>(i));
    }
    for (std::size_t i = 0; i < t.arrows.size(); ++i) {
      arr_ix.emplace(t.arrows[i], static_cast<Idx>(i));
    }
    auto obj = [&](std::string const& id, std::string const& where) {
      auto it = obj_ix.find(id);
      if (it == obj_ix.end()) {
        throw Error(ErrorKind::dangling_id,
                    "object \"" + id + "\" referenced by " + where);
      }
      return it->second;
    };
    auto arr = [&](std::string const& id, std::string const& where) {
      auto it = arr_ix.find(id);
      if (it == arr_ix.end()) {
        throw Error(ErrorKind::dangling_id,
                    "arrow \"" + id + "\" referenced by " + where);
      }
      return it->second;
    };
    t.allocate();
    for (std::size_t i = 0; i < data.arrows.size(); ++i) {
      auto const& a = data.arrows[i];
      t.src[i]      = obj(a.src, "arrow " + a.id);
      t.dst[i]      = obj(a.dst, "arrow " + a.id);
    }
    for (auto const& [x, e] : data.identities) {
      t.identity[static_cast<std::size_t>(obj(x, "identities"))]
          = arr(e, "identities");
    }
    for (auto const& [f, g, fg] : data.compose) {
      Idx const a = arr(f, "compose");
      Idx const b = arr(g, "compose");
      Idx const r = arr(fg, "compose");
      Idx&      slot = t.at(a, b);
      if (slot != kUndef && slot != r) {
        t.conflicts.push_back(
            {f, g, t.arrows[static_cast<std::size_t>(slot)], fg});
      } else {
        slot = r;
      }
    }
    return t;
  }

  Checked<FiniteGroupoid> validate_groupoid(GroupoidData const& data) {
    return validate_groupoid(resolve(data));
  }

  Checked<FiniteGroupoid> validate_groupoid(GroupoidTables t) {
    check_ranges(t);
    canonicalize(t);
    std::size_t const no = t.objects.size();
    std::size_t const na = t.arrows.size();
    auto const&       A  = t.arrows;
    auto const        nm = [&](Idx a) -> std::string const& {
      return A[static_cast<std::size_t>(a)];
    };
    auto const T = [&](Idx a, Idx b) {
      return t.table[static_cast<std::size_t>(a) * na
                     + static_cast<std::size_t>(b)];
    };
    Report r;

    r.check("identity-endpoints");
    bool identities_ok = true;
    for (std::size_t x = 0; x < no; ++x) {
      Idx const e = t.identity[x];
      if (e == kUndef) {
        r.fail("identity-endpoints", {t.objects[x], "<missing>"});
        identities_ok = false;
      } else if (t.src[static_cast<std::size_t>(e)] != static_cast<Idx>(x)
                 || t.dst[static_cast<std::size_t>(e)] != static_cast<Idx>(x)) {
        r.fail("identity-endpoints", {t.objects[x], nm(e)});
        identities_ok = false;
      }
    }

    r.check("composition-domain");
    r.check("composition-single-valued");
    r.check("composition-endpoints");
    for (auto const& w : t.conflicts) {
      r.fail("composition-single-valued", w);
    }
    bool domain_ok = true;
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < na; ++b) {
        Idx const  ab         = t.table[a * na + b];
        bool const composable = t.dst[a] == t.src[b];
        if (composable != (ab != kUndef)) {
          domain_ok = false;
          r.fail("composition-domain",
                 {A[a], A[b], composable ? "<undefined>" : "<not composable>"});
        } else if (ab != kUndef
                   && (t.src[static_cast<std::size_t>(ab)] != t.src[a]
                       || t.dst[static_cast<std::size_t>(ab)] != t.dst[b])) {
          domain_ok = false;
          r.fail("composition-endpoints", {A[a], A[b], nm(ab)});
        }
      }
    }

    r.check("identity-law");
    if (identities_ok) {
      for (std::size_t a = 0; a < na; ++a) {
        Idx const ea = t.identity[static_cast<std::size_t>(t.src[a])];
        Idx const eb = t.identity[static_cast<std::size_t>(t.dst[a])];
        if (T(ea, static_cast<Idx>(a)) != static_cast<Idx>(a)) {
          r.fail("identity-law", {nm(ea), A[a]});
        }
        if (T(static_cast<Idx>(a), eb) != static_cast<Idx>(a)) {
          r.fail("identity-law", {A[a], nm(eb)});
        }
      }
    } else {
      r.skip("identity-law", "identities invalid");
    }

    r.check("inverse-law");
    std::vector<Idx> inverse(na, kUndef);
    if (identities_ok) {
      for (std::size_t a = 0; a < na; ++a) {
        Idx const ea = t.identity[static_cast<std::size_t>(t.src[a])];
        Idx const eb = t.identity[static_cast<std::size_t>(t.dst[a])];
        for (std::size_t b = 0; b < na; ++b) {
          if (t.src[b] == t.dst[a] && t.dst[b] == t.src[a]
              && T(static_cast<Idx>(a), static_cast<Idx>(b)) == ea
              && T(static_cast<Idx>(b), static_cast<Idx>(a)) == eb) {
            inverse[a] = static_cast<Idx>(b);
            break;
          }
        }
        if (inverse[a] == kUndef) {
          r.fail("inverse-law", {A[a]});
        }
      }
    } else {
      r.skip("inverse-law", "identities invalid");
    }

    if (domain_ok) {
      check_associativity(t, r);
    } else {
      r.skip("associativity", "composition domain or endpoints invalid");
    }

    if (!r.ok()) {
      return {std::nullopt, std::move(r)};
    }
    return {FiniteGroupoid(build(std::move(t), std::move(inverse))),
            std::move(r)};
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroupoid
  ////////////////////////////////////////////////////////////////////////

  FiniteGroupoid::FiniteGroupoid()
      : _impl(std::make_shared<GroupoidImpl const>(GroupoidImpl{
          {}, {}, {}, {}, {}, {}, {}, {}, {}, {0}, {}, {0}})) {}

  FiniteGroupoid::FiniteGroupoid(std::shared_ptr<GroupoidImpl const> impl)
      : _impl(std::move(impl)) {}

  std::size_t FiniteGroupoid::num_objects() const noexcept {
    return _impl->objects.size();
  }

  std::size_t FiniteGroupoid::num_arrows() const noexcept {
    return _impl->arrows.size();
  }

  std::string const& FiniteGroupoid::object_name(Idx x) const {
    return _impl->objects.at(static_cast<std::size_t>(x));
  }

  std::string const& FiniteGroupoid::arrow_name(Idx a) const {
    return _impl->arrows.at(static_cast<std::size_t>(a));
  }

  std::vector<std::string> const& FiniteGroupoid::object_names() const noexcept {
    return _impl->objects;
  }

  std::vector<std::string> const& FiniteGroupoid::arrow_names() const noexcept {
    return _impl->arrows;
  }

  std::optional<Idx> FiniteGroupoid::find_object(std::string_view id) const {
    return detail::find_sorted(_impl->objects, id);
  }

  std::optional<Idx> FiniteGroupoid::find_arrow(std::string_view id) const {
    return detail::find_sorted(_impl->arrows, id);
  }

  Idx FiniteGroupoid::object(std::string_view id) const {
    auto x = find_object(id);
    if (!x) {
      throw Error(ErrorKind::dangling_id, "object \"" + std::string(id) + "\"");
    }
    return *x;
  }

  Idx FiniteGroupoid::arrow(std::string_view id) const {
    auto a = find_arrow(id);
    if (!a) {
      throw Error(ErrorKind::dangling_id, "arrow \"" + std::string(id) + "\"");
    }
    return *a;
  }

  Idx FiniteGroupoid::src(Idx a) const {
    return _impl->src[static_cast<std::size_t>(a)];
  }

  Idx FiniteGroupoid::dst(Idx a) const {
    return _impl->dst[static_cast<std::size_t>(a)];
  }

  Idx FiniteGroupoid::identity(Idx x) const {
    return _impl->identity[static_cast<std::size_t>(x)];
  }

  Idx FiniteGroupoid::inverse(Idx a) const {
    return _impl->inverse[static_cast<std::size_t>(a)];
  }

  bool FiniteGroupoid::is_identity(Idx a) const {
    return _impl->is_identity[static_cast<std::size_t>(a)];
  }

  Idx FiniteGroupoid::compose(Idx a, Idx b) const {
    if (a == kUndef || b == kUndef) {
      return kUndef;
    }
    return _impl->table[static_cast<std::size_t>(a) * _impl->arrows.size()
                        + static_cast<std::size_t>(b)];
  }

  Idx FiniteGroupoid::chain(std::initializer_list<Idx> arrows) const {
    if (arrows.size() == 0) {
      return kUndef;
    }
    auto it  = arrows.begin();
    Idx  acc = *it++;
    for (; it != arrows.end() && acc != kUndef; ++it) {
      acc = compose(acc, *it);
    }
    return acc;
  }

  std::span<Idx const> FiniteGroupoid::hom(Idx x, Idx y) const {
    std::size_t const k = static_cast<std::size_t>(x) * _impl->objects.size()
                          + static_cast<std::size_t>(y);
    return {_impl->hom_flat.data() + _impl->hom_begin[k],
            _impl->hom_flat.data() + _impl->hom_begin[k + 1]};
  }

  std::span<Idx const> FiniteGroupoid::out(Idx x) const {
    auto const k = static_cast<std::size_t>(x);
    return {_impl->out_flat.data() + _impl->out_begin[k],
            _impl->out_flat.data() + _impl->out_begin[k + 1]};
  }

  std::span<Idx const> FiniteGroupoid::table() const noexcept {
    return _impl->table;
  }

  GroupoidTables FiniteGroupoid::tables() const {
    GroupoidTables t;
    t.objects  = _impl->objects;
    t.arrows   = _impl->arrows;
    t.src      = _impl->src;
    t.dst      = _impl->dst;
    t.identity = _impl->identity;
    t.table    = _impl->table;
    return t;
  }

  GroupoidData FiniteGroupoid::data() const {
    GroupoidData d;
    d.objects = _impl->objects;
    for (std::size_t a = 0; a < num_arrows(); ++a) {
      d.arrows.push_back({_impl->arrows[a],
                          object_name(_impl->src[a]),
                          object_name(_impl->dst[a])});
    }
    for (std::size_t x = 0; x < num_objects(); ++x) {
      d.identities.emplace(_impl->objects[x], arrow_name(_impl->identity[x]));
    }
    std::size_t const na = num_arrows();
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < na; ++b) {
        Idx const ab = _impl->table[a * na + b];
        if (ab != kUndef) {
          d.compose.push_back(
              {_impl->arrows[a], _impl->arrows[b], arrow_name(ab)});
        }
      }
    }
    return d;
  }

  bool operator==(FiniteGroupoid const& lhs, FiniteGroupoid const& rhs) {
    if (lhs._impl == rhs._impl) {
      return true;
    }
    auto const& l = *lhs._impl;
    auto const& r = *rhs._impl;
    return l.objects == r.objects && l.arrows == r.arrows && l.src == r.src
           && l.dst == r.dst && l.identity == r.identity && l.table == r.table;
  }

  ////////////////////////////////////////////////////////////////////////
  // Components
  ////////////////////////////////////////////////////////////////////////

  Partition components(FiniteGroupoid const& g) {
    std::size_t const no = g.num_objects();
    Partition         p;
    p.block_of.assign(no, kUndef);
    for (std::size_t x = 0; x < no; ++x) {
      if (p.block_of[x] != kUndef) {
        continue;
      }
      Idx const        b = static_cast<Idx>(p.blocks.size());
      std::vector<Idx> block;
      for (std::size_t y = 0; y < no; ++y) {
        if (!g.hom(static_cast<Idx>(x), static_cast<Idx>(y)).empty()) {
          p.block_of[y] = b;
          block.push_back(static_cast<Idx>(y));
        }
      }
      p.blocks.push_back(std::move(block));
    }
    return p;
  }

  TransitivityFlags transitivity_flags(FiniteGroupoid const& g) {
    TransitivityFlags f;
    std::size_t const no = g.num_objects();
    for (std::size_t x = 0; x < no; ++x) {
      for (std::size_t y = 0; y < no; ++y) {
        if (x == y) {
          continue;
        }
        if (g.hom(static_cast<Idx>(x), static_cast<Idx>(y)).empty()) {
          f.transitive = false;
        } else {
          f.totally_intransitive = false;
        }
      }
    }
    return f;
  }

}  // namespace gpdx
