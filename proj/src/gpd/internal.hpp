// Helpers shared by the library sources.  Not installed.

#ifndef GPDX_SRC_INTERNAL_HPP_
#define GPDX_SRC_INTERNAL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpdx/types.hpp"

namespace gpdx::detail {

  // Permutation listing indices in lexicographic order of names.  Throws
  // Error(parse_error) on a duplicate name.
  std::vector<Idx> sorted_order(std::vector<std::string> const& names);

  std::vector<Idx> invert(std::vector<Idx> const& order);

  std::optional<Idx> find_sorted(std::vector<std::string> const& names,
                                 std::string_view                id);

  inline std::size_t uz(Idx i) {
    return static_cast<std::size_t>(i);
  }

}  // namespace gpdx::detail

#endif  // GPDX_SRC_INTERNAL_HPP_
