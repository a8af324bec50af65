#include <atomic>
#include <cstdlib>
#include <cstring>

#include "gpdx/scan.hpp"

namespace gpdx::scan {

  namespace {
    // -1 = automatic
    std::atomic<int> forced{-1};

    bool cpu_has_avx2() noexcept {
#if defined(GPDX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    }
  }  // namespace

  std::string_view to_string(Backend b) noexcept {
    return b == Backend::avx2 ? "avx2" : "scalar";
  }

  bool available(Backend b) noexcept {
    return b == Backend::scalar || cpu_has_avx2();
  }

  void force_backend(std::optional<Backend> b) noexcept {
    forced = b ? static_cast<int>(*b) : -1;
  }

  Backend active_backend() noexcept {
    int f = forced.load();
    if (f >= 0) {
      return static_cast<Backend>(f);
    }
    if (char const* env = std::getenv("GPDX_SCAN");
        env != nullptr && std::strcmp(env, "scalar") == 0) {
      return Backend::scalar;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
  }

  std::size_t associativity(AssociativityInput const&        in,
                            std::vector<std::array<Idx, 3>>& out,
                            std::size_t                      cap,
                            Backend                          backend) {
    if (backend == Backend::avx2 && available(Backend::avx2)) {
      return detail::associativity_avx2(in, out, cap);
    }
    return detail::associativity_scalar(in, out, cap);
  }

  std::size_t interchange(InterchangeInput const&          in,
                          std::vector<std::array<Idx, 4>>& out,
                          std::size_t                      cap,
                          Backend                          backend) {
    if (backend == Backend::avx2 && available(Backend::avx2)) {
      return detail::interchange_avx2(in, out, cap);
    }
    return detail::interchange_scalar(in, out, cap);
  }

}  // namespace gpdx::scan
