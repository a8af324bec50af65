#include <catch_amalgamated.hpp>

#include <set>

#include "gpdx/error.hpp"
#include "gpdx/fixtures.hpp"
#include "gpdx/xmod.hpp"
#include "helpers.hpp"
#include "oracle/oracle.hpp"

using namespace gpdx;
using testing::selected;
using testing::witnesses;

namespace {

  CrossedModule x2() {
    return fixtures::identity_xmod(fixtures::cyclic(2));
  }

  CrossedModule id_c4() {
    return fixtures::identity_xmod(fixtures::cyclic(4));
  }

  XModMorphism mod2() {
    std::map<std::string, std::string> m{{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}};
    return validate_xmod_morphism(id_c4(), x2(), {{{"o", "o"}}, m, m}).value();
  }

  // The unique morphism onto the trivial crossed module.
  XModMorphism collapse(CrossedModule const& x) {
    XModMorphismData d;
    d.objects["o"] = "o";
    for (auto const& a : x.module().arrow_names()) {
      d.module[a] = "0";
    }
    for (auto const& a : x.base().arrow_names()) {
      d.base[a] = "0";
    }
    return validate_xmod_morphism(x, fixtures::identity_xmod(fixtures::cyclic(1)), d).value();
  }

  // An explicit isomorphism onto id : C2 -> C2 for a quotient of id : C4 -> C4.
  Checked<XModMorphism> onto_x2(CrossedModule const& q) {
    std::map<std::string, std::string> m{{"[0]", "0"}, {"[1]", "1"}};
    return validate_xmod_morphism(q, x2(), {{{"o", "o"}}, m, m});
  }

  bool bijective(XModMorphism const& f) {
    return gpdx::bijective(f.module_morphism()) && gpdx::bijective(f.base_morphism());
  }

}  // namespace

TEST_CASE("X2 and id:S3 validate", "[xmod]") {
  auto const x = x2();
  CHECK(x.module().num_arrows() == 2);
  CHECK(oracle::xmod_violations(x.data()) == 0);
  auto again = validate_xmod(x.data());
  REQUIRE(again.ok());
  CHECK(*again == x);

  auto const s3 = fixtures::identity_xmod(fixtures::symmetric(3));
  CHECK(oracle::xmod_violations(s3.data()) == 0);
  CHECK(validate_xmod(s3.data()).ok());
}

TEST_CASE("X2 with a broken action fails CM2 at (t, t)", "[xmod]") {
  auto d = x2().data();
  for (auto& t : d.action) {
    if (t[0] == "1" && t[1] == "1") {
      t[2] = "0";
    }
  }
  auto x = validate_xmod(d);
  REQUIRE_FALSE(x.ok());
  CHECK(witnesses(x.report(), "CM2").contains({"1", "1"}));
  CHECK(oracle::xmod_violations(d) > 0);
}

TEST_CASE("a module that is not totally intransitive is rejected", "[xmod]") {
  XModData d;
  d.base   = fixtures::interval().data();
  d.module = fixtures::interval().data();
  for (auto const& a : d.module.arrows) {
    d.boundary[a.id] = a.id;
    for (auto const& b : d.base.arrows) {
      if (a.src == a.dst && a.src == b.src && b.src == b.dst) {
        d.action.push_back({a.id, b.id, a.id});
      }
    }
  }
  auto x = validate_xmod(d);
  REQUIRE_FALSE(x.ok());
  CHECK_FALSE(x.report().passed("module-totally-intransitive"));
}

TEST_CASE("inclusion crossed modules", "[xmod]") {
  auto const c4 = fixtures::cyclic(4);
  auto const a  = inclusion_xmod(check_subgroupoid_ids(c4, {"o"}, {"0", "2"}));
  CHECK(a.module().arrow_names() == std::vector<std::string>{"0", "2"});
  CHECK(oracle::xmod_violations(a.data()) == 0);

  auto const s3 = fixtures::symmetric(3);
  auto const b  = inclusion_xmod(fixtures::named_sub(s3, "alternating"));
  CHECK(b.module().num_arrows() == 3);
  CHECK(oracle::xmod_violations(b.data()) == 0);
  CHECK(validate_xmod(b.data()).ok());

  auto const i = fixtures::interval();
  auto const c = inclusion_xmod(identities_subgroupoid(i));
  CHECK(c.module().num_arrows() == 2);
  CHECK(validate_xmod(c.data()).ok());
}

TEST_CASE("inclusion of a non-normal subgroup throws", "[xmod]") {
  auto const s3 = fixtures::symmetric(3);
  try {
    (void)inclusion_xmod(check_subgroupoid_ids(s3, {"o"}, {"e", "(12)"}));
    FAIL("expected not_normal");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_normal);
  }
  try {
    (void)inclusion_xmod(full_subgroupoid(fixtures::interval()));
    FAIL("expected not_totally_intransitive");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_totally_intransitive);
  }
}

TEST_CASE("crossed module morphisms", "[xmod]") {
  CHECK(check_xmod_morphism(identity_morphism(x2())).ok());
  CHECK(check_xmod_morphism(mod2()).ok());

  // f2 = mod 2 and f1 = identity, into mu : C2 -> C4, x -> 2x
  std::map<std::string, std::string> f2{{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}};
  std::map<std::string, std::string> f1{{"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "3"}};
  auto bad = validate_xmod_morphism(id_c4(), fixtures::cyclic_xmod(2, 4, 2), {{{"o", "o"}}, f2, f1});
  REQUIRE_FALSE(bad.ok());
  CHECK_FALSE(bad.report().passed("BoundaryMismatch"));
  CHECK(witnesses(bad.report(), "BoundaryMismatch").contains({"1"}));
}

TEST_CASE("kernels of crossed module morphisms", "[xmod]") {
  auto const k = xmod_kernel(mod2());
  CHECK(k.is_sub_xmod);
  CHECK(k.is_normal);
  CHECK(selected(k.parent.module().arrow_names(), k.module_arrows)
        == std::vector<std::string>{"0", "2"});
  CHECK(selected(k.parent.base().arrow_names(), k.base_arrows)
        == std::vector<std::string>{"0", "2"});

  auto const t = xmod_kernel(identity_morphism(id_c4()));
  CHECK(t.is_normal);
  CHECK(count(t.module_arrows) == 1);
  CHECK(count(t.base_arrows) == 1);

  auto const w = xmod_kernel(collapse(fixtures::identity_xmod(fixtures::symmetric(3))));
  CHECK(w.is_normal);
  CHECK(count(w.module_arrows) == 6);
  CHECK(count(w.base_arrows) == 6);
}

TEST_CASE("subcrossed module predicates", "[xmod]") {
  auto const a = check_sub_xmod_ids(id_c4(), {"o"}, {"0", "2"}, {"0", "2"});
  CHECK(a.is_sub_xmod);
  CHECK(a.is_normal);

  auto const s3 = fixtures::identity_xmod(fixtures::symmetric(3));
  auto const b  = check_sub_xmod_ids(s3, {"o"}, {"e", "(12)"}, {"e", "(12)"});
  CHECK(b.is_sub_xmod);
  CHECK_FALSE(b.is_normal);
  CHECK(witnesses(b.report, "NCM1").contains({"(13)"}));

  auto const c = trivial_sub_xmod(s3);
  CHECK(c.is_normal);

  // N not inside Q's preimage
  auto const d = check_sub_xmod_ids(id_c4(), {"o"}, {"0", "1", "2", "3"}, {"0", "2"});
  CHECK_FALSE(d.is_sub_xmod);
  CHECK_FALSE(d.report.passed("SCM2"));
}

TEST_CASE("quotient of id:C4 by {0,2} is id:C2", "[xmod]") {
  auto const q = quotient_xmod(check_sub_xmod_ids(id_c4(), {"o"}, {"0", "2"}, {"0", "2"}));
  CHECK(validate_xmod(q.quotient.data()).ok());
  CHECK(check_xmod_morphism(q.projection).ok());
  auto iso = onto_x2(q.quotient);
  REQUIRE(iso.ok());
  CHECK(bijective(*iso));
}

TEST_CASE("quotient by the trivial sub is a copy", "[xmod]") {
  auto const x = fixtures::identity_xmod(fixtures::symmetric(3));
  auto const q = quotient_xmod(trivial_sub_xmod(x));
  CHECK(q.quotient.module().num_arrows() == 6);
  CHECK(q.quotient.base().num_arrows() == 6);
  CHECK(bijective(q.projection));
  CHECK(check_xmod_morphism(q.projection).ok());
}

TEST_CASE("quotient by the kernel of (mod 2, mod 2) is id:C2", "[xmod]") {
  auto const q = quotient_xmod(xmod_kernel(mod2()));
  auto       iso = onto_x2(q.quotient);
  REQUIRE(iso.ok());
  CHECK(bijective(*iso));
}

TEST_CASE("quotient rejects non-normal input and transitive Q", "[xmod]") {
  auto const s3 = fixtures::identity_xmod(fixtures::symmetric(3));
  try {
    (void)quotient_xmod(check_sub_xmod_ids(s3, {"o"}, {"e", "(12)"}, {"e", "(12)"}));
    FAIL("expected not_normal");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_normal);
  }

  auto const i = fixtures::interval();
  auto const x = inclusion_xmod(identities_subgroupoid(i));
  auto const w = check_sub_xmod_ids(x, {"x", "y"}, {"1x", "1y"}, {"1x", "1y", "i", "i^-1"});
  REQUIRE(w.is_normal);
  try {
    (void)quotient_xmod(w);
    FAIL("expected q_not_totally_intransitive");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::q_not_totally_intransitive);
  }
}

TEST_CASE("normal N is closed under conjugation in M", "[xmod][properties]") {
  for (auto const& spec : {"symmetric:3", "dihedral4", "alternating:4", "klein"}) {
    auto const x = fixtures::identity_xmod(fixtures::groupoid(spec));
    auto const& m = x.module();
    for (auto const& a : m.arrow_names()) {
      auto const w = check_sub_xmod(x, {true}, fixtures::generated(m, {a}).arrows,
                                    fixtures::generated(m, {a}).arrows);
      if (!w.is_normal) {
        continue;
      }
      for (std::size_t n = 0; n < m.num_arrows(); ++n) {
        if (!w.module_arrows[n]) {
          continue;
        }
        for (std::size_t c = 0; c < m.num_arrows(); ++c) {
          Idx const r = m.chain({m.inverse(static_cast<Idx>(c)), static_cast<Idx>(n),
                                 static_cast<Idx>(c)});
          CHECK(w.module_arrows[static_cast<std::size_t>(r)]);
        }
      }
    }
  }
}
