// AVX2 kernels.  Compiled with -mavx2 when the compiler supports it; only
// called after a runtime CPU check.

#include "gpdx/scan.hpp"

#if defined(GPDX_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace gpdx::scan::detail {

#if defined(GPDX_HAVE_AVX2)

  namespace {
    // Bitmask of lanes where a != b.
    inline unsigned mismatch(__m256i a, __m256i b) {
      auto eq = _mm256_cmpeq_epi32(a, b);
      return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)))
             & 0xFFu;
    }
  }  // namespace

  std::size_t associativity_avx2(AssociativityInput const&        in,
                                 std::vector<std::array<Idx, 3>>& out,
                                 std::size_t                      cap) {
    std::size_t const n        = in.n;
    Idx const*        T        = in.table;
    std::size_t       failures = 0;
    for (std::size_t a = 0; a < n; ++a) {
      Idx const* row_a = T + a * n;
      for (std::uint32_t b = in.begin[in.dst[a]]; b < in.begin[in.dst[a] + 1];
           ++b) {
        Idx const     ab     = row_a[b];
        Idx const*    row_b  = T + static_cast<std::size_t>(b) * n;
        Idx const*    row_ab = T + static_cast<std::size_t>(ab) * n;
        std::uint32_t c      = in.begin[in.dst[b]];
        std::uint32_t hi     = in.begin[in.dst[b] + 1];
        for (; c + 8 <= hi; c += 8) {
          auto bc  = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(row_b + c));
          auto lhs = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(row_ab + c));
          auto rhs = _mm256_i32gather_epi32(row_a, bc, 4);
          unsigned bad = mismatch(lhs, rhs);
          while (bad != 0) {
            unsigned lane = static_cast<unsigned>(__builtin_ctz(bad));
            bad &= bad - 1;
            if (failures++ < cap) {
              out.push_back({static_cast<Idx>(a), static_cast<Idx>(b),
                             static_cast<Idx>(c + lane)});
            }
          }
        }
        for (; c < hi; ++c) {
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

  std::size_t interchange_avx2(InterchangeInput const&          in,
                               std::vector<std::array<Idx, 4>>& out,
                               std::size_t                      cap) {
    std::size_t const n = in.n;
    std::size_t const E = in.edges;
    Idx const*        H = in.hcomp;
    Idx const*        V = in.vcomp;
    std::size_t       failures = 0;
    for (std::size_t u = 0; u < n; ++u) {
      std::size_t const   ru   = in.right[u];
      std::uint32_t const v_lo = in.lt_begin[ru * E];
      std::uint32_t const v_hi = in.lt_begin[ru * E + E];
      std::size_t const   bu   = in.bottom[u];
      for (std::uint32_t v = v_lo; v < v_hi; ++v) {
        Idx const         uv     = H[u * n + v];
        Idx const*        row_uv = V + static_cast<std::size_t>(uv) * n;
        Idx const*        row_v  = V + static_cast<std::size_t>(v) * n;
        std::size_t const bv     = in.bottom[v];
        for (std::uint32_t k = in.top_begin[bu]; k < in.top_begin[bu + 1]; ++k) {
          Idx const     w      = in.top_list[k];
          Idx const     uw     = V[u * n + w];
          Idx const*    row_uw = H + static_cast<std::size_t>(uw) * n;
          Idx const*    row_w  = H + static_cast<std::size_t>(w) * n;
          std::size_t   cell   = in.right[w] * E + bv;
          std::uint32_t x      = in.lt_begin[cell];
          std::uint32_t hi     = in.lt_begin[cell + 1];
          for (; x + 8 <= hi; x += 8) {
            auto wx  = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(row_w + x));
            auto vx  = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(row_v + x));
            auto lhs = _mm256_i32gather_epi32(row_uv, wx, 4);
            auto rhs = _mm256_i32gather_epi32(row_uw, vx, 4);
            unsigned bad = mismatch(lhs, rhs);
            while (bad != 0) {
              unsigned lane = static_cast<unsigned>(__builtin_ctz(bad));
              bad &= bad - 1;
              if (failures++ < cap) {
                out.push_back({static_cast<Idx>(u), static_cast<Idx>(v), w,
                               static_cast<Idx>(x + lane)});
              }
            }
          }
          for (; x < hi; ++x) {
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

#else

  std::size_t associativity_avx2(AssociativityInput const&        in,
                                 std::vector<std::array<Idx, 3>>& out,
                                 std::size_t                      cap) {
    return associativity_scalar(in, out, cap);
  }

  std::size_t interchange_avx2(InterchangeInput const&          in,
                               std::vector<std::array<Idx, 4>>& out,
                               std::size_t                      cap) {
    return interchange_scalar(in, out, cap);
  }

#endif

}  // namespace gpdx::scan::detail
