#include <algorithm>
#include <numeric>
#include <set>

#include "gpdx/fixtures.hpp"

#include "internal.hpp"

namespace gpdx::fixtures {

  using detail::uz;

  namespace {

    int parse_int(std::string const& s, std::string const& what) {
      std::size_t pos = 0;
      int         n   = 0;
      try {
        n = std::stoi(s, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != s.size()) {
        throw Error(ErrorKind::bad_params, what + ": expected an integer, got \"" + s + "\"");
      }
      return n;
    }

    // A one-object groupoid from a multiplication function on names.
    template <typename Mul>
    FiniteGroupoid group(std::vector<std::string> const& names,
                         std::string const&              unit,
                         Mul                             mul) {
      GroupoidData d;
      d.objects       = {"o"};
      d.identities["o"] = unit;
      for (auto const& a : names) {
        d.arrows.push_back({a, "o", "o"});
        for (auto const& b : names) {
          d.compose.push_back({a, b, mul(a, b)});
        }
      }
      return validate_groupoid(d).value();
    }

    using Perm = std::vector<int>;

    std::string cycle_name(Perm const& p) {
      std::string      name;
      std::vector<int> seen(p.size(), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) {
          continue;
        }
        name += '(';
        for (std::size_t j = i; !seen[j]; j = uz(p[j])) {
          seen[j] = 1;
          name += std::to_string(j + 1);
        }
        name += ')';
      }
      return name.empty() ? "e" : name;
    }

    // Permutation parity from its cycle name.
    bool even(std::string const& name) {
      int transpositions = 0;
      int len            = 0;
      for (char ch : name) {
        if (ch == '(') {
          len = 0;
        } else if (ch == ')') {
          transpositions += len - 1;
        } else if (ch >= '0' && ch <= '9') {
          ++len;
        }
      }
      return transpositions % 2 == 0;
    }

    // The part of an arrow id naming the group element.
    std::string element(std::string const& id) {
      auto pos = id.rfind(':');
      return pos == std::string::npos ? id : id.substr(pos + 1);
    }

    SubgroupoidWitness by_predicate(FiniteGroupoid const& g, auto pred) {
      Mask arrows(g.num_arrows(), false);
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        arrows[a] = pred(static_cast<Idx>(a));
      }
      return check_subgroupoid(g, Mask(g.num_objects(), true), std::move(arrows));
    }

  }  // namespace

  FiniteGroupoid cyclic(int n) {
    if (n < 1) {
      throw Error(ErrorKind::bad_params, "cyclic: order must be positive");
    }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
    }
    return group(names, "0", [n](std::string const& a, std::string const& b) {
      return std::to_string((std::stoi(a) + std::stoi(b)) % n);
    });
  }

  FiniteGroupoid symmetric(int n) {
    if (n < 1 || n > 5) {
      throw Error(ErrorKind::bad_params, "symmetric: degree must be 1..5");
    }
    Perm p(uz(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm>                 perms;
    std::map<std::string, Perm>       by_name;
    std::vector<std::string>          names;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (auto const& q : perms) {
      names.push_back(cycle_name(q));
      by_name[names.back()] = q;
    }
    return group(names, "e", [&](std::string const& a, std::string const& b) {
      auto const& pa = by_name.at(a);
      auto const& pb = by_name.at(b);
      Perm        r(pa.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = pb[uz(pa[i])];
      }
      return cycle_name(r);
    });
  }

  FiniteGroupoid interval() {
    GroupoidData d;
    d.objects    = {"x", "y"};
    d.arrows     = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"i", "x", "y"},
                    {"i^-1", "y", "x"}};
    d.identities = {{"x", "1x"}, {"y", "1y"}};
    d.compose    = {{"1x", "1x", "1x"}, {"1x", "i", "i"},       {"1y", "1y", "1y"},
                    {"1y", "i^-1", "i^-1"}, {"i", "1y", "i"},   {"i", "i^-1", "1x"},
                    {"i^-1", "1x", "i^-1"}, {"i^-1", "i", "1y"}};
    return validate_groupoid(d).value();
  }

  FiniteGroupoid discrete(int n) {
    if (n < 0) {
      throw Error(ErrorKind::bad_params, "discrete: size must be non-negative");
    }
    GroupoidData d;
    for (int i = 0; i < n; ++i) {
      auto const x = "p" + std::to_string(i);
      auto const e = "1" + x;
      d.objects.push_back(x);
      d.arrows.push_back({e, x, x});
      d.identities[x] = e;
      d.compose.push_back({e, e, e});
    }
    return validate_groupoid(d).value();
  }

  FiniteGroupoid indiscrete_product(int k, FiniteGroupoid const& g) {
    if (k < 1 || g.num_objects() != 1) {
      throw Error(ErrorKind::bad_params,
                  "indiscrete product needs k >= 1 and a one-object groupoid");
    }
    GroupoidData d;
    auto const   arrow = [&](int s, int t, Idx h) {
      return std::to_string(s) + ">" + std::to_string(t) + ":" + g.arrow_name(h);
    };
    auto const na = static_cast<Idx>(g.num_arrows());
    for (int s = 0; s < k; ++s) {
      d.objects.push_back(std::to_string(s));
      d.identities[std::to_string(s)] = arrow(s, s, g.identity(0));
      for (int t = 0; t < k; ++t) {
        for (Idx h = 0; h < na; ++h) {
          d.arrows.push_back({arrow(s, t, h), std::to_string(s), std::to_string(t)});
          for (int u = 0; u < k; ++u) {
            for (Idx h2 = 0; h2 < na; ++h2) {
              d.compose.push_back(
                  {arrow(s, t, h), arrow(t, u, h2), arrow(s, u, g.compose(h, h2))});
            }
          }
        }
      }
    }
    return validate_groupoid(d).value();
  }

  FiniteGroupoid disjoint_union(FiniteGroupoid const& a, FiniteGroupoid const& b) {
    auto const collide = [](std::vector<std::string> const& x,
                            std::vector<std::string> const& y) {
      std::vector<std::string> both;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(both));
      return !both.empty();
    };
    bool const prefix = collide(a.object_names(), b.object_names())
                        || collide(a.arrow_names(), b.arrow_names());
    GroupoidData d;
    auto const   add = [&](FiniteGroupoid const& g, std::string const& p) {
      auto const data = g.data();
      for (auto const& x : data.objects) {
        d.objects.push_back(p + x);
      }
      for (auto const& s : data.arrows) {
        d.arrows.push_back({p + s.id, p + s.src, p + s.dst});
      }
      for (auto const& [x, e] : data.identities) {
        d.identities[p + x] = p + e;
      }
      for (auto const& [f, h, fh] : data.compose) {
        d.compose.push_back({p + f, p + h, p + fh});
      }
    };
    add(a, prefix ? "L." : "");
    add(b, prefix ? "R." : "");
    return validate_groupoid(d).value();
  }

  SubgroupoidWitness generated(FiniteGroupoid const&           g,
                               std::vector<std::string> const& arrows) {
    Mask             in(g.num_arrows(), false);
    std::vector<Idx> members;
    auto const       add = [&](Idx a) {
      if (!in[uz(a)]) {
        in[uz(a)] = true;
        members.push_back(a);
      }
    };
    for (std::size_t x = 0; x < g.num_objects(); ++x) {
      add(g.identity(static_cast<Idx>(x)));
    }
    for (auto const& id : arrows) {
      add(g.arrow(id));
      add(g.inverse(g.arrow(id)));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Idx const a = members[i];
        Idx const b = members[j];
        if (Idx ab = g.compose(a, b); ab != kUndef) {
          add(ab);
        }
        if (Idx ba = g.compose(b, a); ba != kUndef) {
          add(ba);
        }
      }
    }
    return check_subgroupoid(g, Mask(g.num_objects(), true), std::move(in));
  }

  SubgroupoidWitness named_sub(FiniteGroupoid const& g, std::string const& spec) {
    if (spec == "identities") {
      return identities_subgroupoid(g);
    }
    if (spec == "full") {
      return full_subgroupoid(g);
    }
    if (spec == "loops") {
      return by_predicate(g, [&](Idx a) { return g.is_loop(a); });
    }
    if (spec == "alternating") {
      return by_predicate(g, [&](Idx a) {
        return g.is_loop(a) && even(element(g.arrow_name(a)));
      });
    }
    if (spec.starts_with("mult:")) {
      int const k = parse_int(spec.substr(5), "mult");
      if (k < 1) {
        throw Error(ErrorKind::bad_params, "mult: k must be positive");
      }
      return by_predicate(g, [&](Idx a) {
        if (!g.is_loop(a)) {
          return false;
        }
        auto const e = element(g.arrow_name(a));
        if (e.empty() || !std::all_of(e.begin(), e.end(), ::isdigit)) {
          throw Error(ErrorKind::bad_params,
                      "mult: arrow \"" + g.arrow_name(a) + "\" is not numeric");
        }
        return std::stoi(e) % k == 0;
      });
    }
    if (spec.starts_with("gen:")) {
      std::vector<std::string> gens;
      std::string              rest = spec.substr(4);
      std::size_t              pos  = 0;
      while (!rest.empty()) {
        pos = rest.find(',');
        gens.push_back(rest.substr(0, pos));
        if (pos == std::string::npos) {
          break;
        }
        rest = rest.substr(pos + 1);
      }
      return generated(g, gens);
    }
    throw Error(ErrorKind::unknown_fixture, "unknown subgroupoid \"" + spec + "\"");
  }

  FiniteGroupoid groupoid(std::string const& spec) {
    auto const colon = spec.find(':');
    auto const head  = spec.substr(0, colon);
    auto const rest  = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    auto const need_rest = [&] {
      if (rest.empty()) {
        throw Error(ErrorKind::bad_params, "\"" + head + "\" needs a parameter");
      }
    };
    if (head == "cyclic") {
      need_rest();
      return cyclic(parse_int(rest, head));
    }
    if (head == "symmetric") {
      need_rest();
      return symmetric(parse_int(rest, head));
    }
    if (head == "alternating") {
      need_rest();
      return to_groupoid(named_sub(symmetric(parse_int(rest, head)), "alternating"));
    }
    if (head == "klein") {
      return to_groupoid(generated(symmetric(4), {"(12)(34)", "(13)(24)"}));
    }
    if (head == "dihedral4") {
      return to_groupoid(generated(symmetric(4), {"(1234)", "(13)"}));
    }
    if (head == "interval") {
      return interval();
    }
    if (head == "discrete") {
      need_rest();
      return discrete(parse_int(rest, head));
    }
    if (head == "indiscrete") {
      need_rest();
      auto const c2 = rest.find(':');
      int const  k  = parse_int(rest.substr(0, c2), head);
      return indiscrete_product(
          k, c2 == std::string::npos ? cyclic(1) : groupoid(rest.substr(c2 + 1)));
    }
    if (head == "union") {
      auto const plus = rest.find('+');
      if (plus == std::string::npos) {
        throw Error(ErrorKind::bad_params, "union needs <spec>+<spec>");
      }
      return disjoint_union(groupoid(rest.substr(0, plus)),
                            groupoid(rest.substr(plus + 1)));
    }
    throw Error(ErrorKind::unknown_fixture, "unknown groupoid \"" + spec + "\"");
  }

  CrossedModule conj_xmod(FiniteGroupoid const& g, std::string const& sub) {
    return inclusion_xmod(named_sub(g, sub));
  }

  CrossedModule cyclic_xmod(int n, int m, int f) {
    if (n < 1 || m < 1 || (static_cast<long>(f) * n) % m != 0) {
      throw Error(ErrorKind::bad_params,
                  "cyclic-xmod: x -> f x mod m must be a homomorphism C_n -> C_m");
    }
    XModTables t{cyclic(m), cyclic(n), {}, {}, {}};
    t.allocate();
    auto const& M = t.module;
    auto const& P = t.base;
    for (int x = 0; x < n; ++x) {
      Idx const mx = M.arrow(std::to_string(x));
      t.boundary[uz(mx)] = P.arrow(std::to_string(((f * x) % m + m) % m));
      for (std::size_t a = 0; a < P.num_arrows(); ++a) {
        t.act(mx, static_cast<Idx>(a)) = mx;
      }
    }
    return validate_xmod(std::move(t)).value();
  }

  CrossedModule identity_xmod(FiniteGroupoid const& g) {
    return inclusion_xmod(full_subgroupoid(g));
  }

}  // namespace gpdx::fixtures
