#ifndef SCHEMEFORGE_UTIL_HPP
#define SCHEMEFORGE_UTIL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace schemeforge {

inline constexpr const char* kVersion = "0.1.0";

// Identifier of the point-ordering convention baked into Omega.  Canonical
// encodings, certificates and manifests are only comparable across runs that
// agree on this id.
inline constexpr const char* kOmegaOrderingId = "omega-order/v1";

std::uint64_t fnv1a64(const void* data, std::size_t len) noexcept;

inline std::uint64_t fnv1a64(std::string_view s) noexcept {
  return fnv1a64(s.data(), s.size());
}

std::string to_hex(std::uint64_t value);
std::string to_hex(const void* data, std::size_t len);

// Number of worker threads: SCHEME_FORGE_THREADS if set (>=1), otherwise the
// hardware concurrency capped at 8.
unsigned thread_budget() noexcept;

// Runs fn(i) for i in [0, count).  Work is split into contiguous chunks; the
// caller is responsible for writing results into disjoint slots so that the
// outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace schemeforge

#endif
