#include "schemeforge/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "schemeforge/errors.hpp"

namespace schemeforge {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::degree_zero: return "DegreeZero";
    case Errc::degree_too_small: return "DegreeTooSmall";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_divisor: return "NotDivisor";
    case Errc::parity_condition: return "ParityCondition";
    case Errc::zero_element: return "ZeroElement";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::bad_congruence: return "BadCongruence";
    case Errc::c_not_a_subgroup: return "CNotASubgroup";
    case Errc::not_a_scheme: return "NotAScheme";
    case Errc::mismatched_n: return "MismatchedN";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::disconnected: return "Disconnected";
    case Errc::too_large: return "TooLarge";
    case Errc::asymmetric_for_graph6: return "AsymmetricForGraph6";
    case Errc::bad_format: return "BadFormat";
    case Errc::convention_mismatch: return "ConventionMismatch";
  }
  return "Unknown";
}

std::uint64_t fnv1a64(const void* data, std::size_t len) noexcept {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string to_hex(const void* data, std::size_t len) {
  static const char digits[] = "0123456789abcdef";
  const auto* p = static_cast<const unsigned char*>(data);
  std::string out;
  out.reserve(2 * len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(digits[p[i] >> 4]);
    out.push_back(digits[p[i] & 0xf]);
  }
  return out;
}

unsigned thread_budget() noexcept {
  if (const char* env = std::getenv("SCHEME_FORGE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::min(hw, 8u);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned workers = thread_budget();
  if (workers <= 1 || count < 2 * workers) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace schemeforge
