// Exhaustive scans over partial composition tables.
//
// The associativity and interchange checks dominate validation cost: the
// shell double groupoid of S3 has 1296 squares and about 2.2e9 composable
// 2x2 grids.  Both scans are written once as a scalar reference kernel and
// once with AVX2 gathers; the backend is picked at runtime and the two are
// tested for identical output.
//
// Tables are row-major n x n arrays of Idx.  The kernels only read entries
// that the caller guarantees to be defined, so callers must first establish
// that the table's domain is exactly the composable pairs and that composites
// have the right endpoints.

#ifndef GPDX_SCAN_HPP_
#define GPDX_SCAN_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gpdx/types.hpp"

namespace gpdx::scan {

  enum class Backend { scalar, avx2 };

  std::string_view to_string(Backend b) noexcept;

  bool available(Backend b) noexcept;

  // The backend used when none is requested explicitly: AVX2 when the CPU
  // supports it, unless overridden by force_backend or the environment
  // variable GPDX_SCAN=scalar.
  Backend active_backend() noexcept;

  // Overrides active_backend; std::nullopt restores automatic selection.
  void force_backend(std::optional<Backend> b) noexcept;

  // Arrows are grouped by source object: the arrows with source k are the
  // indices in [begin[k], begin[k + 1]).
  struct AssociativityInput {
    std::size_t          n = 0;  // number of arrows
    Idx const*           table = nullptr;
    Idx const*           dst   = nullptr;  // target object of each arrow
    std::uint32_t const* begin = nullptr;  // objects + 1 offsets
  };

  // Checks (a b) c == a (b c) for every composable triple.  Returns the
  // number of failing triples and stores at most `cap` of them in `out`.
  std::size_t associativity(AssociativityInput const&        in,
                            std::vector<std::array<Idx, 3>>& out,
                            std::size_t                      cap,
                            Backend                          backend);

  // Squares sorted by (left, top).  Squares with left edge l and top edge t
  // are [lt_begin[l * edges + t], lt_begin[l * edges + t + 1]); squares with
  // top edge t are top_list[top_begin[t] .. top_begin[t + 1]).
  struct InterchangeInput {
    std::size_t          n     = 0;  // squares
    std::size_t          edges = 0;
    Idx const*           hcomp = nullptr;  // +2, src = left, dst = right
    Idx const*           vcomp = nullptr;  // +1, src = top, dst = bottom
    Idx const*           bottom = nullptr;
    Idx const*           right  = nullptr;
    std::uint32_t const* lt_begin  = nullptr;  // edges * edges + 1
    Idx const*           top_list  = nullptr;
    std::uint32_t const* top_begin = nullptr;  // edges + 1
  };

  // Checks (u +2 v) +1 (w +2 x) == (u +1 w) +2 (v +1 x) on every grid with
  // right u = left v, right w = left x, bottom u = top w, bottom v = top x.
  // Stores failing grids as (u, v, w, x).
  std::size_t interchange(InterchangeInput const&          in,
                          std::vector<std::array<Idx, 4>>& out,
                          std::size_t                      cap,
                          Backend                          backend);

  namespace detail {
    std::size_t associativity_scalar(AssociativityInput const&,
                                     std::vector<std::array<Idx, 3>>&,
                                     std::size_t);
    std::size_t interchange_scalar(InterchangeInput const&,
                                   std::vector<std::array<Idx, 4>>&,
                                   std::size_t);
    std::size_t associativity_avx2(AssociativityInput const&,
                                   std::vector<std::array<Idx, 3>>&,
                                   std::size_t);
    std::size_t interchange_avx2(InterchangeInput const&,
                                 std::vector<std::array<Idx, 4>>&,
                                 std::size_t);
  }  // namespace detail

}  // namespace gpdx::scan

#endif  // GPDX_SCAN_HPP_
