#ifndef SCHEMEFORGE_PARAM_SEARCH_HPP
#define SCHEMEFORGE_PARAM_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

namespace schemeforge {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t u);

// (r, d) with u = r^d and r prime; nullopt when u is not a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t u);

struct DsrgPair {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint32_t d = 0;
  bool both_prime = false;

  nlohmann::json to_json() const;
};

enum class SearchMode { prime_power_q, prime_q };

// All pairs with p prime = 3 mod 4 and q = 1 + p(p-3)/4 <= max_q a prime
// power (or prime, depending on mode), sorted by q.
std::vector<DsrgPair> search_pairs(std::uint64_t max_q, SearchMode mode);

// t with 4t+3 and (4t+3)t+1 both prime; bijective with the prime-q pairs via
// p = 4t+3, q = (4t+3)t+1.
std::vector<std::uint64_t> bateman_horn_t(std::uint64_t max_t);

}  // namespace schemeforge

#endif
