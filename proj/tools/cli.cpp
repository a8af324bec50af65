#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gpdx/cli.hpp"
#include "gpdx/document.hpp"
#include "gpdx/equiv.hpp"
#include "gpdx/fixtures.hpp"

namespace gpdx::cli {

  namespace {

    struct Options {
      std::string              out_path;
      std::string              format = "canonical";
      bool                     commutative = false;
      bool                     mirror_v    = false;
      std::string              parent;
      std::vector<std::string> files;
      std::vector<std::string> params;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error(ErrorKind::parse_error, "cannot read " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    io::Document load(std::string const& path) {
      try {
        return io::parse(read_file(path));
      } catch (Error const& e) {
        std::string_view what = e.what();
        what.remove_prefix(std::min(what.size(), to_string(e.kind()).size() + 2));
        throw Error(e.kind(), path + ": " + std::string(what));
      }
    }

    template <typename T>
    T const& expect(io::Document const& d, io::Kind k, std::string const& path) {
      if (io::kind_of(d) != k) {
        throw Error(ErrorKind::unknown_kind,
                    path + ": expected a " + std::string(io::to_string(k))
                        + " document, got "
                        + std::string(io::to_string(io::kind_of(d))));
      }
      return std::get<T>(d);
    }

    FiniteGroupoid load_groupoid(std::string const& path) {
      auto d = load(path);
      return io::build(expect<GroupoidData>(d, io::Kind::groupoid, path)).value();
    }
    CrossedModule load_xmod(std::string const& path) {
      auto d = load(path);
      return io::build(expect<XModData>(d, io::Kind::xmod, path)).value();
    }
    DoubleGroupoid load_dgpd(std::string const& path) {
      auto d = load(path);
      return io::build(expect<DGpdData>(d, io::Kind::dgpd, path)).value();
    }
    io::SubDocument load_sub(std::string const& path) {
      auto d = load(path);
      return expect<io::SubDocument>(d, io::Kind::sub_witness, path);
    }

    int to_int(std::string const& s) {
      int  v   = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw Error(ErrorKind::bad_params, "expected an integer, got \"" + s + "\"");
      }
      return v;
    }

    // Keeps the checks whose names are listed, in report order.
    Report only(Report const& r, std::initializer_list<std::string_view> names) {
      Report out;
      for (auto const& c : r.checks()) {
        if (std::find(names.begin(), names.end(), c.name) != names.end()) {
          out.check(c.name) = c;
        }
      }
      return out;
    }

    class Driver {
     public:
      Driver(Options const& o, std::ostream& out) : _o(o), _out(out) {}

      io::Format format() const {
        return _o.format == "pretty" ? io::Format::pretty : io::Format::canonical;
      }

      void emit(std::string const& text) {
        if (_o.out_path.empty()) {
          _out << text;
          return;
        }
        std::ofstream f(_o.out_path, std::ios::binary);
        if (!f || !(f << text)) {
          throw Error(ErrorKind::bad_params, "cannot write " + _o.out_path);
        }
      }

      int report(Report r, bool pass) {
        r.finalize();
        _out << r.render();
        return pass ? kOk : kCheckFailed;
      }

      std::string const& file(std::size_t i) const {
        return _o.files.at(i);
      }

      ////////////////////////////////////////////////////////////////////
      // validate

      int validate() {
        auto const& path = file(0);
        auto        d    = load(path);
        switch (io::kind_of(d)) {
          case io::Kind::groupoid: {
            auto c = io::build(std::get<GroupoidData>(d));
            return report(c.report(), c.ok());
          }
          case io::Kind::xmod: {
            auto c = io::build(std::get<XModData>(d));
            return report(c.report(), c.ok());
          }
          case io::Kind::dgpd: {
            auto c = io::build(std::get<DGpdData>(d));
            return report(c.report(), c.ok());
          }
          case io::Kind::sub_witness: return validate_sub(std::get<io::SubDocument>(d));
          case io::Kind::morphism: {
            auto m = io::resolve_morphism(std::get<io::MorphismDocument>(d));
            Report r = std::visit(
                [](auto const& f) {
                  using F = std::decay_t<decltype(f)>;
                  if constexpr (std::is_same_v<F, GroupoidMorphism>) {
                    return check_groupoid_morphism(f);
                  } else if constexpr (std::is_same_v<F, XModMorphism>) {
                    return check_xmod_morphism(f);
                  } else {
                    return check_dgpd_morphism(f);
                  }
                },
                m);
            return report(r, r.ok());
          }
        }
        return kInputError;
      }

      int validate_sub(io::SubDocument const& s) {
        if (_o.parent.empty()) {
          _out << "sub-witness (" << io::to_string(s.level)
               << "): well-formed, no parent given\n";
          return kOk;
        }
        switch (s.level) {
          case io::Level::groupoid: {
            auto w = io::resolve_sub(load_groupoid(_o.parent), s);
            return report(only(w.report, {"subgroupoid"}), w.is_subgroupoid);
          }
          case io::Level::xmod: {
            auto w = io::resolve_sub(load_xmod(_o.parent), s);
            return report(only(w.report, {"SCM1", "SCM2", "SCM3"}), w.is_sub_xmod);
          }
          case io::Level::dgpd: {
            auto w = io::resolve_sub(load_dgpd(_o.parent), s);
            return report(only(w.report, {"SDG1", "SDG2", "vertical-closure", "SDG3"}),
                          w.is_sub_dgpd);
          }
        }
        return kInputError;
      }

      ////////////////////////////////////////////////////////////////////
      // gen

      FiniteGroupoid spec(std::size_t i) const {
        if (i >= _o.params.size()) {
          throw Error(ErrorKind::bad_params, "missing groupoid parameter");
        }
        return fixtures::groupoid(_o.params[i]);
      }

      std::string const& param(std::size_t i) const {
        if (i >= _o.params.size()) {
          throw Error(ErrorKind::bad_params, "missing parameter");
        }
        return _o.params[i];
      }

      void arity(std::size_t n) const {
        if (_o.params.size() != n + 1) {
          throw Error(ErrorKind::bad_params,
                      _o.params.front() + " takes " + std::to_string(n)
                          + " parameter(s)");
        }
      }

      int gen() {
        auto const& name = param(0);
        auto        f    = format();
        if (name == "cyclic" || name == "symmetric" || name == "discrete") {
          arity(1);
          emit(io::serialize(fixtures::groupoid(name + ":" + param(1)), f));
        } else if (name == "interval") {
          arity(0);
          emit(io::serialize(fixtures::interval(), f));
        } else if (name == "groupoid") {
          arity(1);
          emit(io::serialize(spec(1), f));
        } else if (name == "disjoint-union") {
          arity(2);
          emit(io::serialize(fixtures::disjoint_union(spec(1), spec(2)), f));
        } else if (name == "conj-xmod") {
          arity(2);
          emit(io::serialize(fixtures::conj_xmod(spec(1), param(2)), f));
        } else if (name == "identity-xmod") {
          arity(1);
          emit(io::serialize(fixtures::identity_xmod(spec(1)), f));
        } else if (name == "cyclic-xmod") {
          arity(3);
          emit(io::serialize(fixtures::cyclic_xmod(to_int(param(1)), to_int(param(2)),
                                                   to_int(param(3))),
                             f));
        } else if (name == "shell" || name == "commshell") {
          arity(1);
          emit(io::serialize(shell_dgpd(spec(1), name == "commshell"), f));
        } else if (name == "sub") {
          arity(2);
          emit(io::serialize(io::to_document(fixtures::named_sub(spec(1), param(2))), f));
        } else if (name == "xmod-sub") {
          // N = Q = H inside id : G -> G
          arity(2);
          auto const g = spec(1);
          auto const h = fixtures::named_sub(g, param(2));
          auto const w = check_sub_xmod(fixtures::identity_xmod(g), h.objects, h.arrows, h.arrows);
          emit(io::serialize(io::to_document(w), f));
        } else if (name == "shell-sub" || name == "commshell-sub") {
          arity(2);
          auto const g = spec(1);
          auto const w = shell_sub_dgpd(shell_dgpd(g, name == "commshell-sub"),
                                        fixtures::named_sub(g, param(2)));
          emit(io::serialize(io::to_document(w), f));
        } else {
          throw Error(ErrorKind::unknown_fixture, "unknown fixture \"" + name + "\"");
        }
        return kOk;
      }

      ////////////////////////////////////////////////////////////////////
      // constructions

      int shell() {
        emit(io::serialize(shell_dgpd(load_groupoid(file(0)), _o.commutative), format()));
        return kOk;
      }

      int lambda_cmd() {
        emit(io::serialize(lambda(load_xmod(file(0))).dgpd, format()));
        return kOk;
      }

      int gamma_cmd() {
        emit(io::serialize(gamma(load_dgpd(file(0))), format()));
        return kOk;
      }

      int fold_cmd() {
        auto const         g = load_dgpd(file(0));
        std::vector<Idx>   squares;
        for (std::size_t i = 1; i < _o.files.size(); ++i) {
          auto u = g.find_square(file(i));
          if (!u) {
            throw Error(ErrorKind::parse_error, "unknown square \"" + file(i) + "\"");
          }
          squares.push_back(*u);
        }
        if (squares.empty()) {
          for (std::size_t u = 0; u < g.num_squares(); ++u) {
            squares.push_back(static_cast<Idx>(u));
          }
        }
        std::ostringstream os;
        for (Idx u : squares) {
          os << "fold " << g.square_name(u) << " = " << g.square_name(fold(g, u))
             << "\n";
        }
        emit(os.str());
        return kOk;
      }

      int kernel_cmd() {
        auto d = load(file(0));
        auto m = io::resolve_morphism(
            expect<io::MorphismDocument>(d, io::Kind::morphism, file(0)));
        if (auto const* f = std::get_if<GroupoidMorphism>(&m)) {
          emit(io::serialize(io::to_document(kernel(*f)), format()));
        } else if (auto const* x = std::get_if<XModMorphism>(&m)) {
          emit(io::serialize(io::to_document(xmod_kernel(*x)), format()));
        } else {
          throw Error(ErrorKind::bad_params,
                      "kernel is defined for groupoid and xmod morphisms");
        }
        return kOk;
      }

      int quotient_gpd() {
        auto w = io::resolve_sub(load_groupoid(file(0)), load_sub(file(1)));
        emit(io::serialize(quotient_groupoid(w).quotient, format()));
        return kOk;
      }

      int quotient_xmod_cmd() {
        auto w = io::resolve_sub(load_xmod(file(0)), load_sub(file(1)));
        emit(io::serialize(quotient_xmod(w).quotient, format()));
        return kOk;
      }

      int quotient_dgpd_cmd() {
        auto h = io::resolve_sub(load_dgpd(file(0)), load_sub(file(1)), _o.mirror_v);
        emit(io::serialize(quotient_dgpd(h).quotient.dgpd, format()));
        return kOk;
      }

      ////////////////////////////////////////////////////////////////////
      // check

      int check(std::string const& what) {
        auto const s = load_sub(file(1));
        if (what == "sub-gpd" || what == "normal-sub-gpd") {
          auto w = io::resolve_sub(load_groupoid(file(0)), s);
          if (what == "sub-gpd") {
            return report(only(w.report, {"subgroupoid"}), w.is_subgroupoid);
          }
          return report(only(w.report, {"subgroupoid", "normal"}), w.is_normal);
        }
        if (what == "sub-xmod" || what == "normal-sub-xmod") {
          auto w = io::resolve_sub(load_xmod(file(0)), s);
          if (what == "sub-xmod") {
            return report(only(w.report, {"SCM1", "SCM2", "SCM3"}), w.is_sub_xmod);
          }
          return report(w.report, w.is_normal);
        }
        auto w = io::resolve_sub(load_dgpd(file(0)), s, _o.mirror_v);
        if (what == "sub-dgpd") {
          return report(only(w.report, {"SDG1", "SDG2", "vertical-closure", "SDG3"}),
                        w.is_sub_dgpd);
        }
        return report(w.report, w.is_normal);
      }

      ////////////////////////////////////////////////////////////////////
      // roundtrip

      int roundtrip(std::string const& what) {
        if (what == "xmod") {
          auto rt = roundtrip_xmod(load_xmod(file(0)));
          if (!_o.out_path.empty()) {
            emit(io::serialize(rt.map, format()));
          }
          return report(rt.report, rt.passed());
        }
        auto rt = roundtrip_dgpd(load_dgpd(file(0)));
        if (!_o.out_path.empty()) {
          emit(io::serialize(rt.map, format()));
        }
        return report(rt.report, rt.passed());
      }

     private:
      Options const& _o;
      std::ostream&  _out;
    };

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    Options o;
    CLI::App app{"Finite groupoids, crossed modules and double groupoids", "gpdx"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--out", o.out_path, "Write the output document to a file");
    app.add_option("--format", o.format, "Document format")
        ->check(CLI::IsMember({"canonical", "pretty"}));

    std::function<int(Driver&)> action;
    // lo..hi positional files; hi < 0 for no upper bound.
    auto file_cmd = [&](char const* name, char const* help, int lo, int hi,
                        std::function<int(Driver&)> fn) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("files", o.files, "Input documents")
          ->required()
          ->expected(lo, hi < 0 ? CLI::detail::expected_max_vector_size : hi);
      sub->callback([&action, fn] { action = fn; });
      return sub;
    };

    file_cmd("validate", "Validate a document", 1, 1, [](Driver& d) { return d.validate(); })
        ->add_option("--parent", o.parent, "Parent structure for a sub-witness");

    auto* gen = app.add_subcommand("gen", "Generate a builtin fixture");
    gen->add_option("fixture", o.params, "Fixture name and parameters")->required();
    gen->callback([&] { action = [](Driver& d) { return d.gen(); }; });

    file_cmd("shell", "Shell double groupoid of a groupoid", 1, 1,
             [](Driver& d) { return d.shell(); })
        ->add_flag("--commutative", o.commutative, "Commutative shells only");
    file_cmd("lambda", "Double groupoid of a crossed module", 1, 1,
             [](Driver& d) { return d.lambda_cmd(); });
    file_cmd("gamma", "Crossed module of a double groupoid", 1, 1,
             [](Driver& d) { return d.gamma_cmd(); });
    file_cmd("fold", "Fold squares into the crossed module part", 1, -1,
             [](Driver& d) { return d.fold_cmd(); });
    file_cmd("kernel", "Kernel of a morphism", 1, 1,
             [](Driver& d) { return d.kernel_cmd(); });
    file_cmd("quotient-gpd", "Quotient groupoid", 2, 2,
             [](Driver& d) { return d.quotient_gpd(); });
    file_cmd("quotient-xmod", "Quotient crossed module", 2, 2,
             [](Driver& d) { return d.quotient_xmod_cmd(); });
    file_cmd("quotient-dgpd", "Quotient double groupoid", 2, 2,
             [](Driver& d) { return d.quotient_dgpd_cmd(); })
        ->add_flag("--mirror-v", o.mirror_v, "Also check normality for +1");

    auto* check = app.add_subcommand("check", "Check a substructure");
    check->require_subcommand(1);
    for (char const* what : {"sub-gpd", "normal-sub-gpd", "sub-xmod",
                             "normal-sub-xmod", "sub-dgpd", "normal-sub-dgpd"}) {
      auto* sub = check->add_subcommand(what, "");
      sub->add_option("files", o.files, "Parent and sub-witness")->required()->expected(2);
      if (std::string_view(what).ends_with("dgpd")) {
        sub->add_flag("--mirror-v", o.mirror_v, "Also check normality for +1");
      }
      std::string w = what;
      sub->callback([&action, w] { action = [w](Driver& d) { return d.check(w); }; });
    }

    auto* rt = app.add_subcommand("roundtrip", "Equivalence round trips");
    rt->require_subcommand(1);
    for (char const* what : {"xmod", "dgpd"}) {
      auto* sub = rt->add_subcommand(what, "");
      sub->add_option("files", o.files, "Input document")->required()->expected(1);
      std::string w = what;
      sub->callback([&action, w] { action = [w](Driver& d) { return d.roundtrip(w); }; });
    }

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kInputError;
    }

    Driver d(o, out);
    try {
      return action(d);
    } catch (Error const& e) {
      err << e.what() << "\n";
      if (e.report()) {
        auto r = *e.report();
        r.finalize();
        out << r.render();
      }
      return is_input_error(e.kind()) ? kInputError : kCheckFailed;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }

}  // namespace gpdx::cli
