#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gpdx/document.hpp"

namespace gpdx::io {

  using json = nlohmann::json;

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Reading
    ////////////////////////////////////////////////////////////////////////

    [[noreturn]] void bad_field(std::string const& path, std::string const& msg) {
      throw Error(ErrorKind::parse_error, "field " + path + ": " + msg);
    }

    json const& member(json const& obj, std::string const& path,
                       char const* key) {
      auto it = obj.find(key);
      if (it == obj.end()) {
        bad_field(path.empty() ? key : path + "." + key, "missing");
      }
      return *it;
    }

    std::string join(std::string const& path, char const* key) {
      return path.empty() ? key : path + "." + key;
    }

    void only_keys(json const& obj, std::string const& path,
                   std::set<std::string> const& allowed) {
      if (!obj.is_object()) {
        bad_field(path.empty() ? "<document>" : path, "expected an object");
      }
      for (auto const& [k, v] : obj.items()) {
        if (!allowed.contains(k)) {
          bad_field(path.empty() ? k : path + "." + k, "unknown field");
        }
      }
    }

    std::string str(json const& v, std::string const& path) {
      if (!v.is_string()) {
        bad_field(path, "expected a string");
      }
      return v.get<std::string>();
    }

    std::vector<std::string> str_list(json const& v, std::string const& path) {
      if (!v.is_array()) {
        bad_field(path, "expected an array of strings");
      }
      std::vector<std::string> out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(str(v[i], path + "[" + std::to_string(i) + "]"));
      }
      return out;
    }

    std::map<std::string, std::string> str_map(json const&        v,
                                               std::string const& path) {
      if (!v.is_object()) {
        bad_field(path, "expected an object of strings");
      }
      std::map<std::string, std::string> out;
      for (auto const& [k, x] : v.items()) {
        out[k] = str(x, path + "." + k);
      }
      return out;
    }

    template <std::size_t N>
    std::vector<std::array<std::string, N>> tuples(json const&        v,
                                                   std::string const& path) {
      if (!v.is_array()) {
        bad_field(path, "expected an array");
      }
      std::vector<std::array<std::string, N>> out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::string const p = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != N) {
          bad_field(p, "expected " + std::to_string(N) + " ids");
        }
        std::array<std::string, N> t;
        for (std::size_t k = 0; k < N; ++k) {
          t[k] = str(v[i][k], p + "[" + std::to_string(k) + "]");
        }
        out.push_back(std::move(t));
      }
      return out;
    }

    GroupoidData read_groupoid_body(json const& j, std::string const& path,
                                    std::set<std::string> extra = {}) {
      extra.insert({"objects", "arrows", "identities", "compose"});
      only_keys(j, path, extra);
      GroupoidData d;
      d.objects = str_list(member(j, path, "objects"), join(path, "objects"));
      auto const& arrows = member(j, path, "arrows");
      if (!arrows.is_array()) {
        bad_field(join(path, "arrows"), "expected an array");
      }
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        std::string const p = join(path, "arrows") + "[" + std::to_string(i) + "]";
        only_keys(arrows[i], p, {"id", "src", "dst"});
        d.arrows.push_back({str(member(arrows[i], p, "id"), p + ".id"),
                            str(member(arrows[i], p, "src"), p + ".src"),
                            str(member(arrows[i], p, "dst"), p + ".dst")});
      }
      d.identities = str_map(member(j, path, "identities"), join(path, "identities"));
      d.compose    = tuples<3>(member(j, path, "compose"), join(path, "compose"));
      return d;
    }

    XModData read_xmod_body(json const& j, std::string const& path,
                            std::set<std::string> extra = {}) {
      extra.insert({"base", "total", "boundary", "action"});
      only_keys(j, path, extra);
      XModData d;
      d.base     = read_groupoid_body(member(j, path, "base"), join(path, "base"));
      d.module   = read_groupoid_body(member(j, path, "total"), join(path, "total"));
      d.boundary = str_map(member(j, path, "boundary"), join(path, "boundary"));
      d.action   = tuples<3>(member(j, path, "action"), join(path, "action"));
      return d;
    }

    DGpdData read_dgpd_body(json const& j, std::string const& path,
                            std::set<std::string> extra = {}) {
      extra.insert({"edges", "squares", "hcompose", "vcompose", "hident",
                    "vident", "thin"});
      only_keys(j, path, extra);
      DGpdData d;
      d.edges = read_groupoid_body(member(j, path, "edges"), join(path, "edges"));
      auto const& squares = member(j, path, "squares");
      if (!squares.is_array()) {
        bad_field(join(path, "squares"), "expected an array");
      }
      for (std::size_t i = 0; i < squares.size(); ++i) {
        std::string const p = join(path, "squares") + "[" + std::to_string(i) + "]";
        auto const&       s = squares[i];
        only_keys(s, p, {"id", "top", "bottom", "left", "right"});
        d.squares.push_back({str(member(s, p, "id"), p + ".id"),
                             str(member(s, p, "top"), p + ".top"),
                             str(member(s, p, "bottom"), p + ".bottom"),
                             str(member(s, p, "left"), p + ".left"),
                             str(member(s, p, "right"), p + ".right")});
      }
      d.hcompose = tuples<3>(member(j, path, "hcompose"), join(path, "hcompose"));
      d.vcompose = tuples<3>(member(j, path, "vcompose"), join(path, "vcompose"));
      d.hident   = str_map(member(j, path, "hident"), join(path, "hident"));
      d.vident   = str_map(member(j, path, "vident"), join(path, "vident"));
      if (j.contains("thin")) {
        d.thin = tuples<5>(j.at("thin"), join(path, "thin"));
      }
      return d;
    }

    Level read_level(json const& j) {
      auto const l = str(member(j, "", "level"), "level");
      if (l == "groupoid") {
        return Level::groupoid;
      }
      if (l == "xmod") {
        return Level::xmod;
      }
      if (l == "dgpd") {
        return Level::dgpd;
      }
      bad_field("level", "expected groupoid, xmod or dgpd, got \"" + l + "\"");
    }

    // Key names of the two id lists for each level.
    std::pair<char const*, char const*> level_keys(Level l) {
      switch (l) {
        case Level::groupoid: return {"arrows", nullptr};
        case Level::xmod: return {"base", "total"};
        case Level::dgpd: return {"edges", "squares"};
      }
      return {"arrows", nullptr};
    }

    StructureData read_body(Level l, json const& j, std::string const& path) {
      switch (l) {
        case Level::groupoid: return read_groupoid_body(j, path);
        case Level::xmod: return read_xmod_body(j, path);
        case Level::dgpd: return read_dgpd_body(j, path);
      }
      return GroupoidData{};
    }

    SubDocument read_sub(json const& j) {
      SubDocument d;
      d.level               = read_level(j);
      auto const [ak, ck]   = level_keys(d.level);
      std::set<std::string> keys{"kind", "version", "level", "objects", ak};
      if (ck != nullptr) {
        keys.insert(ck);
      }
      only_keys(j, "", keys);
      d.objects = str_list(member(j, "", "objects"), "objects");
      d.arrows  = str_list(member(j, "", ak), ak);
      if (ck != nullptr) {
        d.cells = str_list(member(j, "", ck), ck);
      }
      return d;
    }

    MorphismDocument read_morphism(json const& j) {
      MorphismDocument d;
      d.level             = read_level(j);
      auto const [ak, ck] = level_keys(d.level);
      std::set<std::string> keys{"kind",    "version", "level", "source",
                                 "target", "objects", ak};
      if (ck != nullptr) {
        keys.insert(ck);
      }
      only_keys(j, "", keys);
      d.source  = read_body(d.level, member(j, "", "source"), "source");
      d.target  = read_body(d.level, member(j, "", "target"), "target");
      d.objects = str_map(member(j, "", "objects"), "objects");
      d.arrows  = str_map(member(j, "", ak), ak);
      if (ck != nullptr) {
        d.cells = str_map(member(j, "", ck), ck);
      }
      return d;
    }

    // Library lookups report unknown ids as dangling_id; at the document
    // level they are parse errors.
    template <typename F>
    auto as_parse_error(F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::dangling_id) {
          std::string what = e.what();
          auto        pos  = what.find(": ");
          throw Error(ErrorKind::parse_error,
                      pos == std::string::npos ? what : what.substr(pos + 2));
        }
        throw;
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Writing
    ////////////////////////////////////////////////////////////////////////

    bool is_scalar(json const& v) {
      return !v.is_object() && !v.is_array();
    }

    bool all_scalar(json const& v) {
      return std::all_of(v.begin(), v.end(),
                         [](json const& e) { return is_scalar(e); });
    }

    void emit(json const& v, std::string& out, int indent) {
      if (is_scalar(v)) {
        out += v.dump();
        return;
      }
      bool const obj = v.is_object();
      if (v.empty()) {
        out += obj ? "{}" : "[]";
        return;
      }
      if (all_scalar(v)) {
        out += obj ? "{" : "[";
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
          out += first ? "" : ", ";
          first = false;
          if (obj) {
            out += json(it.key()).dump() + ": ";
          }
          out += it->dump();
        }
        out += obj ? "}" : "]";
        return;
      }
      out += obj ? "{\n" : "[\n";
      std::string const pad(static_cast<std::size_t>(indent + 2), ' ');
      for (auto it = v.begin(); it != v.end(); ++it) {
        out += pad;
        if (obj) {
          out += json(it.key()).dump() + ": ";
        }
        emit(*it, out, indent + 2);
        out += std::next(it) == v.end() ? "\n" : ",\n";
      }
      out += std::string(static_cast<std::size_t>(indent), ' ');
      out += obj ? "}" : "]";
    }

    std::string canonical(json const& v) {
      std::string out;
      emit(v, out, 0);
      out += "\n";
      return out;
    }

    template <typename T>
    std::vector<T> sorted(std::vector<T> v) {
      std::sort(v.begin(), v.end());
      return v;
    }

    json to_json(GroupoidData const& d) {
      json j;
      j["objects"] = sorted(d.objects);
      auto arrows  = d.arrows;
      std::sort(arrows.begin(), arrows.end(),
                [](auto const& a, auto const& b) { return a.id < b.id; });
      j["arrows"] = json::array();
      for (auto const& a : arrows) {
        j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
      }
      j["identities"] = d.identities;
      j["compose"]    = sorted(d.compose);
      return j;
    }

    json to_json(XModData const& d) {
      json j;
      j["base"]     = to_json(d.base);
      j["total"]    = to_json(d.module);
      j["boundary"] = d.boundary;
      j["action"]   = sorted(d.action);
      return j;
    }

    json to_json(DGpdData const& d) {
      json j;
      j["edges"] = to_json(d.edges);
      auto sq    = d.squares;
      std::sort(sq.begin(), sq.end(),
                [](auto const& a, auto const& b) { return a.id < b.id; });
      j["squares"] = json::array();
      for (auto const& s : sq) {
        j["squares"].push_back({{"id", s.id},
                                {"top", s.top},
                                {"bottom", s.bottom},
                                {"left", s.left},
                                {"right", s.right}});
      }
      j["hcompose"] = sorted(d.hcompose);
      j["vcompose"] = sorted(d.vcompose);
      j["hident"]   = d.hident;
      j["vident"]   = d.vident;
      if (d.thin) {
        j["thin"] = sorted(*d.thin);
      }
      return j;
    }

    json header(Kind k) {
      json j;
      j["kind"]    = std::string(to_string(k));
      j["version"] = kVersion;
      return j;
    }

    json with_header(Kind k, json body) {
      auto j = header(k);
      for (auto const& [key, v] : body.items()) {
        j[key] = v;
      }
      return j;
    }

    template <typename F, typename G>
    std::map<std::string, std::string> name_map(std::vector<Idx> const& m,
                                                F                       src,
                                                G                       dst) {
      std::map<std::string, std::string> out;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != kUndef) {
          out[src(static_cast<Idx>(i))] = dst(m[i]);
        }
      }
      return out;
    }

    json morphism_json(Level l, json source, json target,
                       std::map<std::string, std::string> objects,
                       std::map<std::string, std::string> arrows,
                       std::map<std::string, std::string> cells) {
      auto j              = header(Kind::morphism);
      auto const [ak, ck] = level_keys(l);
      j["level"]          = std::string(to_string(l));
      j["source"]         = std::move(source);
      j["target"]         = std::move(target);
      j["objects"]        = std::move(objects);
      j[ak]               = std::move(arrows);
      if (ck != nullptr) {
        j[ck] = std::move(cells);
      }
      return j;
    }

    ////////////////////////////////////////////////////////////////////////
    // Pretty text
    ////////////////////////////////////////////////////////////////////////

    std::string indent(std::string const& block, std::size_t n) {
      std::string        out;
      std::istringstream in(block);
      std::string        line;
      while (std::getline(in, line)) {
        out += std::string(n, ' ') + line + "\n";
      }
      return out;
    }

    std::string words(std::vector<std::string> const& v) {
      std::string out;
      for (auto const& s : v) {
        out += (out.empty() ? "" : " ") + s;
      }
      return out;
    }

    // Arrows compose in a grid when there are few of them.
    constexpr std::size_t kGridMax = 24;

    std::string pretty(FiniteGroupoid const& g) {
      std::ostringstream os;
      os << "groupoid: " << g.num_objects() << " objects, " << g.num_arrows()
         << " arrows\n";
      os << "objects: " << words(g.object_names()) << "\n";
      os << "arrows:\n";
      for (std::size_t i = 0; i < g.num_arrows(); ++i) {
        Idx const a = static_cast<Idx>(i);
        os << "  " << g.arrow_name(a) << " : " << g.object_name(g.src(a))
           << " -> " << g.object_name(g.dst(a)) << "\n";
      }
      os << "identities:\n";
      for (std::size_t x = 0; x < g.num_objects(); ++x) {
        os << "  " << g.object_name(static_cast<Idx>(x)) << " : "
           << g.arrow_name(g.identity(static_cast<Idx>(x))) << "\n";
      }
      os << "composition:\n";
      std::size_t const n = g.num_arrows();
      if (n > 0 && n <= kGridMax) {
        std::size_t w = 1;
        for (auto const& s : g.arrow_names()) {
          w = std::max(w, s.size());
        }
        auto cell = [&](std::string const& s) {
          return s + std::string(w - s.size() + 1, ' ');
        };
        os << "  " << cell("") << "| ";
        for (auto const& s : g.arrow_names()) {
          os << cell(s);
        }
        os << "\n";
        for (std::size_t a = 0; a < n; ++a) {
          os << "  " << cell(g.arrow_name(static_cast<Idx>(a))) << "| ";
          for (std::size_t b = 0; b < n; ++b) {
            Idx const r = g.compose(static_cast<Idx>(a), static_cast<Idx>(b));
            os << cell(r == kUndef ? "." : g.arrow_name(r));
          }
          os << "\n";
        }
      } else {
        for (auto const& [f, h, r] : g.data().compose) {
          os << "  " << f << " ; " << h << " = " << r << "\n";
        }
      }
      return os.str();
    }

    std::string pretty(CrossedModule const& x) {
      std::ostringstream os;
      os << "crossed module: total " << x.module().num_arrows()
         << " arrows over base " << x.base().num_arrows() << " arrows\n";
      os << "base:\n" << indent(pretty(x.base()), 2);
      os << "total:\n" << indent(pretty(x.module()), 2);
      os << "boundary:\n";
      for (std::size_t m = 0; m < x.module().num_arrows(); ++m) {
        os << "  " << x.module().arrow_name(static_cast<Idx>(m)) << " |-> "
           << x.base().arrow_name(x.boundary(static_cast<Idx>(m))) << "\n";
      }
      os << "action:\n";
      for (auto const& [m, a, r] : x.data().action) {
        os << "  " << m << " ^ " << a << " = " << r << "\n";
      }
      return os.str();
    }

    std::string pretty(DoubleGroupoid const& g) {
      auto const&        E = g.edges();
      std::ostringstream os;
      os << "double groupoid: " << g.num_squares() << " squares, "
         << (g.has_thin() ? "thin structure" : "no thin structure") << "\n";
      os << "edges:\n" << indent(pretty(E), 2);
      os << "squares (left, top, bottom, right):\n";
      for (std::size_t i = 0; i < g.num_squares(); ++i) {
        Idx const u = static_cast<Idx>(i);
        os << "  " << g.square_name(u) << " : " << shell_name(E, g.shell(u))
           << (g.is_thin(u) ? " thin" : "") << "\n";
      }
      auto const d = g.data();
      os << "horizontal composition:\n";
      for (auto const& [u, v, r] : d.hcompose) {
        os << "  " << u << " +2 " << v << " = " << r << "\n";
      }
      os << "vertical composition:\n";
      for (auto const& [u, v, r] : d.vcompose) {
        os << "  " << u << " +1 " << v << " = " << r << "\n";
      }
      os << "degeneracies:\n";
      for (auto const& [a, u] : d.hident) {
        os << "  e2(" << a << ") = " << u << ", e1(" << a
           << ") = " << d.vident.at(a) << "\n";
      }
      return os.str();
    }

    std::string pretty(SubDocument const& s) {
      auto const [ak, ck] = level_keys(s.level);
      std::ostringstream os;
      os << "sub-witness (" << to_string(s.level) << ")\n";
      os << "objects: " << words(s.objects) << "\n";
      os << ak << ": " << words(s.arrows) << "\n";
      if (ck != nullptr) {
        os << ck << ": " << words(s.cells) << "\n";
      }
      return os.str();
    }

    std::string pretty_maps(Level                                     l,
                            std::map<std::string, std::string> const& objects,
                            std::map<std::string, std::string> const& arrows,
                            std::map<std::string, std::string> const& cells) {
      auto const [ak, ck] = level_keys(l);
      std::ostringstream os;
      os << "morphism (" << to_string(l) << ")\n";
      auto section = [&](char const* name, auto const& m) {
        os << name << ":\n";
        for (auto const& [a, b] : m) {
          os << "  " << a << " |-> " << b << "\n";
        }
      };
      section("objects", objects);
      section(ak, arrows);
      if (ck != nullptr) {
        section(ck, cells);
      }
      return os.str();
    }

    Kind expect(Document const& d, Kind k) {
      if (kind_of(d) != k) {
        throw Error(ErrorKind::unknown_kind,
                    "expected a " + std::string(to_string(k)) + " document, got "
                        + std::string(to_string(kind_of(d))));
      }
      return k;
    }

    [[noreturn]] void level_mismatch(Level want, Level got) {
      throw Error(ErrorKind::unknown_kind,
                  "expected a " + std::string(to_string(want))
                      + " sub-witness, got " + std::string(to_string(got)));
    }

  }  // namespace

  std::string_view to_string(Kind k) noexcept {
    switch (k) {
      case Kind::groupoid: return "groupoid";
      case Kind::xmod: return "xmod";
      case Kind::dgpd: return "dgpd";
      case Kind::sub_witness: return "sub-witness";
      case Kind::morphism: return "morphism";
    }
    return "?";
  }

  std::string_view to_string(Level l) noexcept {
    switch (l) {
      case Level::groupoid: return "groupoid";
      case Level::xmod: return "xmod";
      case Level::dgpd: return "dgpd";
    }
    return "?";
  }

  Document parse(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      std::string what = e.what();
      auto        pos  = what.find("] ");
      throw Error(ErrorKind::parse_error,
                  pos == std::string::npos ? what : what.substr(pos + 2));
    }
    if (!j.is_object()) {
      bad_field("<document>", "expected an object");
    }
    auto const kind = str(member(j, "", "kind"), "kind");
    auto const& ver = member(j, "", "version");
    if (!ver.is_number_integer() || ver.get<int>() != kVersion) {
      bad_field("version", "expected " + std::to_string(kVersion));
    }
    std::set<std::string> const head{"kind", "version"};
    if (kind == "groupoid") {
      return read_groupoid_body(j, "", head);
    }
    if (kind == "xmod") {
      return read_xmod_body(j, "", head);
    }
    if (kind == "dgpd") {
      return read_dgpd_body(j, "", head);
    }
    if (kind == "sub-witness") {
      return read_sub(j);
    }
    if (kind == "morphism") {
      return read_morphism(j);
    }
    throw Error(ErrorKind::unknown_kind, "unknown document kind \"" + kind + "\"");
  }

  Kind kind_of(Document const& d) noexcept {
    return static_cast<Kind>(d.index());
  }

  Checked<FiniteGroupoid> build(GroupoidData const& d) {
    return as_parse_error([&] { return validate_groupoid(d); });
  }
  Checked<CrossedModule> build(XModData const& d) {
    return as_parse_error([&] { return validate_xmod(d); });
  }
  Checked<DoubleGroupoid> build(DGpdData const& d) {
    return as_parse_error([&] { return validate_dgpd(d); });
  }

  FiniteGroupoid read_groupoid(std::string_view text) {
    auto d = parse(text);
    expect(d, Kind::groupoid);
    return build(std::get<GroupoidData>(d)).value();
  }

  CrossedModule read_xmod(std::string_view text) {
    auto d = parse(text);
    expect(d, Kind::xmod);
    return build(std::get<XModData>(d)).value();
  }

  DoubleGroupoid read_dgpd(std::string_view text) {
    auto d = parse(text);
    expect(d, Kind::dgpd);
    return build(std::get<DGpdData>(d)).value();
  }

  SubgroupoidWitness resolve_sub(FiniteGroupoid const& parent,
                                 SubDocument const&    d) {
    if (d.level != Level::groupoid) {
      level_mismatch(Level::groupoid, d.level);
    }
    return as_parse_error(
        [&] { return check_subgroupoid_ids(parent, d.objects, d.arrows); });
  }

  SubXModWitness resolve_sub(CrossedModule const& parent, SubDocument const& d) {
    if (d.level != Level::xmod) {
      level_mismatch(Level::xmod, d.level);
    }
    return as_parse_error([&] {
      return check_sub_xmod_ids(parent, d.objects, d.cells, d.arrows);
    });
  }

  SubDGpdWitness resolve_sub(DoubleGroupoid const& parent, SubDocument const& d,
                             bool mirror_v) {
    if (d.level != Level::dgpd) {
      level_mismatch(Level::dgpd, d.level);
    }
    return as_parse_error([&] {
      return check_sub_dgpd_ids(parent, d.objects, d.arrows, d.cells, mirror_v);
    });
  }

  Morphism resolve_morphism(MorphismDocument const& d) {
    return as_parse_error([&]() -> Morphism {
      switch (d.level) {
        case Level::groupoid: {
          auto s = build(std::get<GroupoidData>(d.source)).value();
          auto t = build(std::get<GroupoidData>(d.target)).value();
          return validate_groupoid_morphism(s, t, d.objects, d.arrows).value();
        }
        case Level::xmod: {
          auto s = build(std::get<XModData>(d.source)).value();
          auto t = build(std::get<XModData>(d.target)).value();
          return validate_xmod_morphism(s, t, {d.objects, d.cells, d.arrows})
              .value();
        }
        case Level::dgpd: {
          auto s = build(std::get<DGpdData>(d.source)).value();
          auto t = build(std::get<DGpdData>(d.target)).value();
          return validate_dgpd_morphism(s, t, {d.objects, d.arrows, d.cells})
              .value();
        }
      }
      throw Error(ErrorKind::unknown_kind, "bad morphism level");
    });
  }

  std::string serialize(FiniteGroupoid const& g, Format f) {
    if (f == Format::pretty) {
      return pretty(g);
    }
    return canonical(with_header(Kind::groupoid, to_json(g.data())));
  }

  std::string serialize(CrossedModule const& x, Format f) {
    if (f == Format::pretty) {
      return pretty(x);
    }
    return canonical(with_header(Kind::xmod, to_json(x.data())));
  }

  std::string serialize(DoubleGroupoid const& g, Format f) {
    if (f == Format::pretty) {
      return pretty(g);
    }
    return canonical(with_header(Kind::dgpd, to_json(g.data())));
  }

  std::string serialize(SubDocument const& s, Format f) {
    if (f == Format::pretty) {
      return pretty(s);
    }
    auto j              = header(Kind::sub_witness);
    auto const [ak, ck] = level_keys(s.level);
    j["level"]          = std::string(to_string(s.level));
    j["objects"]        = sorted(s.objects);
    j[ak]               = sorted(s.arrows);
    if (ck != nullptr) {
      j[ck] = sorted(s.cells);
    }
    return canonical(j);
  }

  std::string serialize(GroupoidMorphism const& m, Format f) {
    auto const& S = m.source;
    auto const& T = m.target;
    auto objects  = name_map(
        m.object_map, [&](Idx x) { return S.object_name(x); },
        [&](Idx x) { return T.object_name(x); });
    auto arrows = name_map(
        m.arrow_map, [&](Idx a) { return S.arrow_name(a); },
        [&](Idx a) { return T.arrow_name(a); });
    if (f == Format::pretty) {
      return pretty_maps(Level::groupoid, objects, arrows, {});
    }
    return canonical(morphism_json(Level::groupoid, to_json(S.data()),
                                   to_json(T.data()), objects, arrows, {}));
  }

  std::string serialize(XModMorphism const& m, Format f) {
    auto const& S = m.source;
    auto const& T = m.target;
    auto objects  = name_map(
        m.object_map, [&](Idx x) { return S.base().object_name(x); },
        [&](Idx x) { return T.base().object_name(x); });
    auto base = name_map(
        m.base_map, [&](Idx a) { return S.base().arrow_name(a); },
        [&](Idx a) { return T.base().arrow_name(a); });
    auto total = name_map(
        m.module_map, [&](Idx a) { return S.module().arrow_name(a); },
        [&](Idx a) { return T.module().arrow_name(a); });
    if (f == Format::pretty) {
      return pretty_maps(Level::xmod, objects, base, total);
    }
    return canonical(morphism_json(Level::xmod, to_json(S.data()),
                                   to_json(T.data()), objects, base, total));
  }

  std::string serialize(DGpdMorphism const& m, Format f) {
    auto const& S = m.source;
    auto const& T = m.target;
    auto objects  = name_map(
        m.object_map, [&](Idx x) { return S.edges().object_name(x); },
        [&](Idx x) { return T.edges().object_name(x); });
    auto edges = name_map(
        m.edge_map, [&](Idx a) { return S.edges().arrow_name(a); },
        [&](Idx a) { return T.edges().arrow_name(a); });
    auto squares = name_map(
        m.square_map, [&](Idx u) { return S.square_name(u); },
        [&](Idx u) { return T.square_name(u); });
    if (f == Format::pretty) {
      return pretty_maps(Level::dgpd, objects, edges, squares);
    }
    return canonical(morphism_json(Level::dgpd, to_json(S.data()),
                                   to_json(T.data()), objects, edges, squares));
  }

  namespace {
    template <typename Name>
    std::vector<std::string> names(Mask const& m, Name name) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i]) {
          out.push_back(name(static_cast<Idx>(i)));
        }
      }
      return out;
    }
  }  // namespace

  SubDocument to_document(SubgroupoidWitness const& w) {
    auto const& G = w.parent;
    return {Level::groupoid,
            names(w.objects, [&](Idx x) { return G.object_name(x); }),
            names(w.arrows, [&](Idx a) { return G.arrow_name(a); }),
            {}};
  }

  SubDocument to_document(SubXModWitness const& w) {
    auto const& X = w.parent;
    return {Level::xmod,
            names(w.objects, [&](Idx x) { return X.base().object_name(x); }),
            names(w.base_arrows, [&](Idx a) { return X.base().arrow_name(a); }),
            names(w.module_arrows,
                  [&](Idx m) { return X.module().arrow_name(m); })};
  }

  SubDocument to_document(SubDGpdWitness const& w) {
    auto const& G = w.parent;
    return {Level::dgpd,
            names(w.objects, [&](Idx x) { return G.edges().object_name(x); }),
            names(w.edges, [&](Idx a) { return G.edges().arrow_name(a); }),
            names(w.squares, [&](Idx u) { return G.square_name(u); })};
  }

  std::uint64_t fnv1a(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

}  // namespace gpdx::io
