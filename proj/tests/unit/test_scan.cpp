#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>

#include "gpdx/dgpd.hpp"
#include "gpdx/equiv.hpp"
#include "gpdx/fixtures.hpp"
#include "gpdx/scan.hpp"

using namespace gpdx;

namespace {

  struct BackendGuard {
    explicit BackendGuard(scan::Backend b) {
      scan::force_backend(b);
    }
    ~BackendGuard() {
      scan::force_backend(std::nullopt);
    }
  };

  template <typename F>
  std::string with_backend(scan::Backend b, F&& f) {
    BackendGuard guard(b);
    return f();
  }

  // Associativity input for a one-object table.
  struct OneObject {
    std::vector<Idx>           table;
    std::vector<Idx>           dst;
    std::vector<std::uint32_t> begin;

    explicit OneObject(FiniteGroupoid const& g)
        : table(g.table().begin(), g.table().end()),
          dst(g.num_arrows(), 0),
          begin{0, static_cast<std::uint32_t>(g.num_arrows())} {}

    scan::AssociativityInput input() const {
      return {dst.size(), table.data(), dst.data(), begin.data()};
    }
  };

  std::vector<std::array<Idx, 3>> assoc(OneObject const& t, scan::Backend b, std::size_t& n) {
    std::vector<std::array<Idx, 3>> out;
    n = scan::associativity(t.input(), out, 1 << 20, b);
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_CASE("the scalar backend is always available", "[scan]") {
  CHECK(scan::available(scan::Backend::scalar));
  CHECK(scan::to_string(scan::Backend::scalar) == "scalar");
  CHECK(scan::to_string(scan::Backend::avx2) == "avx2");
}

TEST_CASE("forcing a backend is observed and undone", "[scan]") {
  {
    BackendGuard guard(scan::Backend::scalar);
    CHECK(scan::active_backend() == scan::Backend::scalar);
  }
  if (scan::available(scan::Backend::avx2) && std::getenv("GPDX_SCAN") == nullptr) {
    CHECK(scan::active_backend() == scan::Backend::avx2);
  }
}

TEST_CASE("associativity kernels agree on clean and mutated tables", "[scan]") {
  if (!scan::available(scan::Backend::avx2)) {
    SKIP("no AVX2 on this machine");
  }
  for (auto const& spec : {"cyclic:5", "symmetric:3", "dihedral4", "alternating:4"}) {
    INFO(spec);
    OneObject   t(fixtures::groupoid(spec));
    std::size_t ns = 0, nv = 0;
    CHECK(assoc(t, scan::Backend::scalar, ns).empty());
    CHECK(assoc(t, scan::Backend::avx2, nv).empty());
    CHECK(ns == 0);
    CHECK(nv == 0);

    // Each mutation keeps the entries in range.
    for (std::size_t k = 1; k < t.table.size(); k += t.table.size() / 7 + 1) {
      OneObject m = t;
      m.table[k]  = (m.table[k] + 1) % static_cast<Idx>(m.dst.size());
      auto const a = assoc(m, scan::Backend::scalar, ns);
      auto const b = assoc(m, scan::Backend::avx2, nv);
      CHECK(ns > 0);
      CHECK(ns == nv);
      CHECK(a == b);
    }
  }
}

TEST_CASE("validation reports agree across backends", "[scan]") {
  if (!scan::available(scan::Backend::avx2)) {
    SKIP("no AVX2 on this machine");
  }
  std::vector<DGpdData> cases{shell_dgpd(fixtures::cyclic(3), false).data(),
                              shell_dgpd(fixtures::groupoid("union:cyclic:2+interval"), false).data(),
                              lambda(fixtures::cyclic_xmod(2, 2, 0)).dgpd.data()};
  // A +2 result swapped for the other square on its shell.
  auto broken = cases.back();
  broken.thin.reset();
  for (auto& t : broken.hcompose) {
    if (t[0] == "(1;0,0,0,0)" && t[1] == "(0;0,1,1,0)") {
      t[2] = t[2] == "(1;0,1,1,0)" ? "(0;0,1,1,0)" : "(1;0,1,1,0)";
    }
  }
  cases.push_back(broken);

  for (auto const& d : cases) {
    auto const run = [&] { return validate_dgpd(d).report().render(64); };
    CHECK(with_backend(scan::Backend::scalar, run) == with_backend(scan::Backend::avx2, run));
  }

  auto g = fixtures::symmetric(3).data();
  for (auto& t : g.compose) {
    if (t[0] == "(123)" && t[1] == "(12)") {
      t[2] = "(13)";
    }
  }
  auto const run = [&] { return validate_groupoid(g).report().render(64); };
  auto const s   = with_backend(scan::Backend::scalar, run);
  CHECK(s == with_backend(scan::Backend::avx2, run));
  CHECK(s.find("verdict: fail") != std::string::npos);
}
