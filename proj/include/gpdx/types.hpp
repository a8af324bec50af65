// Shared index and witness types.

#ifndef GPDX_TYPES_HPP_
#define GPDX_TYPES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace gpdx {

  // Dense index of an object, arrow or square inside one structure.  Indices
  // always follow the lexicographic order of the string ids.
  using Idx = std::int32_t;

  // Marks an undefined entry of a partial table.
  inline constexpr Idx kUndef = -1;

  // A tuple of ids cited by a failed check.
  using Witness = std::vector<std::string>;

  // Membership mask over the indices of a parent structure.
  using Mask = std::vector<bool>;

  inline std::size_t count(Mask const& mask) {
    std::size_t n = 0;
    for (bool b : mask) {
      n += b ? 1 : 0;
    }
    return n;
  }

}  // namespace gpdx

#endif  // GPDX_TYPES_HPP_
