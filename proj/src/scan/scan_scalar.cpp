// Scalar reference kernels.

#include "gpdx/scan.hpp"

namespace gpdx::scan::detail {

  std::size_t associativity_scalar(AssociativityInput const&        in,
                                   std::vector<std::array<Idx, 3>>& out,
                                   std::size_t                      cap) {
    std::size_t const n        = in.n;
    Idx const*        T        = in.table;
    std::size_t       failures = 0;
    for (std::size_t a = 0; a < n; ++a) {
      Idx const* row_a = T + a * n;
      for (std::uint32_t b = in.begin[in.dst[a]]; b < in.begin[in.dst[a] + 1];
           ++b) {
        Idx const  ab     = row_a[b];
        Idx const* row_b  = T + static_cast<std::size_t>(b) * n;
        Idx const* row_ab = T + static_cast<std::size_t>(ab) * n;
        for (std::uint32_t c = in.begin[in.dst[b]]; c < in.begin[in.dst[b] + 1];
             ++c) {
          if (row_ab[c] != row_a[row_b[c]]) {
            if (failures++ < cap) {
              out.push_back({static_cast<Idx>(a), static_cast<Idx>(b),
                             static_cast<Idx>(c)});
            }
          }
        }
      }
    }
    return failures;
  }

  std::size_t interchange_scalar(InterchangeInput const&          in,
                                 std::vector<std::array<Idx, 4>>& out,
                                 std::size_t                      cap) {
    std::size_t const n = in.n;
    std::size_t const E = in.edges;
    Idx const*        H = in.hcomp;
    Idx const*        V = in.vcomp;
    std::size_t       failures = 0;
    for (std::size_t u = 0; u < n; ++u) {
      // v ranges over squares whose left edge is right(u)
      std::size_t const ru = in.right[u];
      std::uint32_t const v_lo = in.lt_begin[ru * E];
      std::uint32_t const v_hi = in.lt_begin[ru * E + E];
      std::size_t const   bu   = in.bottom[u];
      for (std::uint32_t v = v_lo; v < v_hi; ++v) {
        Idx const         uv = H[u * n + v];
        Idx const*        row_uv = V + static_cast<std::size_t>(uv) * n;
        Idx const*        row_v  = V + static_cast<std::size_t>(v) * n;
        std::size_t const bv     = in.bottom[v];
        for (std::uint32_t k = in.top_begin[bu]; k < in.top_begin[bu + 1]; ++k) {
          Idx const   w      = in.top_list[k];
          Idx const   uw     = V[u * n + w];
          Idx const*  row_uw = H + static_cast<std::size_t>(uw) * n;
          Idx const*  row_w  = H + static_cast<std::size_t>(w) * n;
          std::size_t cell   = in.right[w] * E + bv;
          for (std::uint32_t x = in.lt_begin[cell]; x < in.lt_begin[cell + 1];
               ++x) {
            if (row_uv[row_w[x]] != row_uw[row_v[x]]) {
              if (failures++ < cap) {
                out.push_back({static_cast<Idx>(u), static_cast<Idx>(v), w,
                               static_cast<Idx>(x)});
              }
            }
          }
        }
      }
    }
    return failures;
  }

}  // namespace gpdx::scan::detail
