// Brute-force reference computations over string-level data.
//
// Nothing here uses the library's tables, scans or enumerations; inputs are
// the plain data records and every quantity is recomputed from maps.

#ifndef GPDX_TESTS_ORACLE_HPP_
#define GPDX_TESTS_ORACLE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gpdx/dgpd.hpp"
#include "gpdx/groupoid.hpp"
#include "gpdx/xmod.hpp"

namespace oracle {

  using Id = std::string;

  struct Gpd {
    std::set<Id>                       objects;
    std::map<Id, std::pair<Id, Id>>    ends;  // arrow -> (src, dst)
    std::map<Id, Id>                   ident;
    std::map<std::pair<Id, Id>, Id>    mul;

    explicit Gpd(gpdx::GroupoidData const& d);

    Id const& src(Id const& a) const { return ends.at(a).first; }
    Id const& dst(Id const& a) const { return ends.at(a).second; }
    std::optional<Id> compose(Id const& a, Id const& b) const;
    // Product of a composable word; throws std::out_of_range otherwise.
    Id word(std::vector<Id> const& w) const;
    Id inv(Id const& a) const;
  };

  // Every groupoid axiom by direct search; returns the number of violations.
  std::size_t axiom_violations(gpdx::GroupoidData const& d);

  // S_n as one-object groupoid data, permutations in cycle notation with
  // identity "e" and "a b" meaning a then b.
  gpdx::GroupoidData symmetric(int n);

  // Z_n with arrows "0" .. "n-1".
  gpdx::GroupoidData cyclic(int n);

  // Number of (a, c, b, d) with matching corners, or only a b = c d.
  std::size_t shell_count(gpdx::GroupoidData const& d, bool commutative);

  // sum over shells (a, c, b, d) of #{m at dst b : mu(m) = b^-1 a^-1 c d}
  std::size_t lambda_count(gpdx::XModData const& x);

  // Failing grids of the interchange law, by direct search over the data.
  std::size_t interchange_violations(gpdx::DGpdData const& d);

  // CM1 / CM2 violations of crossed module data.
  std::size_t xmod_violations(gpdx::XModData const& x);

  // Arrows g of a one-object group with g^-1 H g != H.
  std::set<Id> non_normalizing(gpdx::GroupoidData const& g,
                               std::set<Id> const&       h);

  // Left cosets g H of a subgroup of a one-object group.
  std::set<std::set<Id>> cosets(gpdx::GroupoidData const& g,
                                std::set<Id> const&       h);

}  // namespace oracle

#endif  // GPDX_TESTS_ORACLE_HPP_
