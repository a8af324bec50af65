#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "gpdx/equiv.hpp"
#include "gpdx/fixtures.hpp"
#include "oracle/oracle.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

using namespace gpdx;

namespace {

  constexpr std::size_t kBudget = 512;

}  // namespace

TEST_CASE("kernels of random morphisms are normal with valid quotients", "[properties]") {
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    gen::Rng   rng(seed);
    auto const c = gen::kernel_case(rng, kBudget);
    INFO("seed " << seed << ": " << c.label);
    auto const k = xmod_kernel(c.f);
    REQUIRE(k.is_normal);

    auto const q = quotient_xmod(k);
    auto       v = validate_xmod(q.quotient.data());
    CHECK(v.ok());
    CHECK(oracle::xmod_violations(q.quotient.data()) == 0);
    CHECK(check_xmod_morphism(q.projection).ok());

    // The induced map M/N -> M', P/Q -> P' is an injective morphism.
    XModMorphismData d;
    auto const&      X = c.f.source;
    for (std::size_t i = 0; i < X.base().num_objects(); ++i) {
      d.objects[X.base().object_name(static_cast<Idx>(i))]
          = c.f.target.base().object_name(c.f.object_map[i]);
    }
    for (std::size_t i = 0; i < X.module().num_arrows(); ++i) {
      auto const cls = q.quotient.module().arrow_name(q.projection.module_map[i]);
      d.module[cls]  = c.f.target.module().arrow_name(c.f.module_map[i]);
    }
    for (std::size_t i = 0; i < X.base().num_arrows(); ++i) {
      auto const cls = q.quotient.base().arrow_name(q.projection.base_map[i]);
      d.base[cls]    = c.f.target.base().arrow_name(c.f.base_map[i]);
    }
    auto induced = validate_xmod_morphism(q.quotient, c.f.target, d);
    REQUIRE(induced.ok());
    std::set<Idx> image(induced->module_map.begin(), induced->module_map.end());
    CHECK(image.size() == q.quotient.module().num_arrows());
    std::set<Idx> base_image(induced->base_map.begin(), induced->base_map.end());
    CHECK(base_image.size() == q.quotient.base().num_arrows());
  }
}

TEST_CASE("normality transfers to lambda and back", "[properties]") {
  for (std::uint64_t seed = 101; seed <= 120; ++seed) {
    gen::Rng   rng(seed);
    auto const c = gen::kernel_case(rng, kBudget);
    INFO("seed " << seed << ": " << c.label);
    auto const l = lambda(c.f.source);
    auto const t = checks::transfer_round_trip(l, xmod_kernel(c.f));
    CHECK(t.failures == 0);
    INFO(t.first);
  }
}

TEST_CASE("normality transfers from shells and back", "[properties]") {
  for (auto const& spec : {"cyclic:2", "cyclic:4", "cyclic:6", "klein"}) {
    auto const g = fixtures::groupoid(spec);
    auto const d = shell_dgpd(g, true);
    for (auto const& sub : gen::normal_subgroups(g)) {
      INFO(spec << " sub of size " << sub.size());
      auto const h = shell_sub_dgpd(d, check_subgroupoid_ids(g, {"o"}, sub));
      REQUIRE(h.is_normal);
      auto const t = checks::converse_round_trip(h);
      INFO(t.first);
      CHECK(t.failures == 0);
    }
  }
}

TEST_CASE("conjugates in transferred subs have the predicted boundary", "[properties]") {
  for (std::uint64_t seed = 201; seed <= 210; ++seed) {
    gen::Rng   rng(seed);
    auto const c = gen::kernel_case(rng, kBudget);
    INFO("seed " << seed << ": " << c.label);
    auto const l = lambda(c.f.source);
    auto const h = transfer_normal_sub_to_dgpd(l, xmod_kernel(c.f));
    auto const t = checks::conjugation_identity(l, h.squares);
    INFO(t.first);
    CHECK(t.cases > 0);
    CHECK(t.failures == 0);
  }
  auto const x = fixtures::identity_xmod(fixtures::symmetric(3));
  auto const l = lambda(x);
  auto const h = transfer_normal_sub_to_dgpd(
      l, check_sub_xmod(x, {true}, fixtures::named_sub(x.base(), "alternating").arrows,
                        fixtures::named_sub(x.base(), "alternating").arrows));
  auto const t = checks::conjugation_identity(l, h.squares);
  CHECK(t.cases > 0);
  CHECK(t.failures == 0);
}

TEST_CASE("validation agrees with the oracle on randomly mutated tables", "[properties]") {
  gen::Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = fixtures::groupoid(gen::pick(rng, gen::group_pool())).data();
    if (d.arrows.size() < 2) {
      continue;
    }
    auto& t = d.compose[std::uniform_int_distribution<std::size_t>(0, d.compose.size() - 1)(rng)];
    t[2]    = gen::pick(rng, d.arrows).id;
    CHECK(validate_groupoid(d).ok() == (oracle::axiom_violations(d) == 0));
  }
}

TEST_CASE("random crossed module data agrees with the oracle", "[properties]") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto const g = fixtures::groupoid(gen::pick(rng, gen::group_pool()));
    auto       d = fixtures::identity_xmod(g).data();
    if (trial % 2 == 1) {
      auto& t = d.action[std::uniform_int_distribution<std::size_t>(0, d.action.size() - 1)(rng)];
      t[2]    = gen::pick(rng, d.module.arrows).id;
    }
    CHECK(validate_xmod(d).ok() == (oracle::xmod_violations(d) == 0));
  }
}

TEST_CASE("lambda square counts on random kernels", "[properties]") {
  for (std::uint64_t seed = 301; seed <= 310; ++seed) {
    gen::Rng   rng(seed);
    auto const c = gen::kernel_case(rng, kBudget);
    CHECK(lambda(c.f.source).dgpd.num_squares() == oracle::lambda_count(c.f.source.data()));
  }
}
