#include "schemeforge/param_search.hpp"

#include <algorithm>
#include <cmath>

#include "schemeforge/errors.hpp"

namespace schemeforge {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (e) {
    if (e & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    e >>= 1;
  }
  return result;
}

// Integer floor of u^(1/d), corrected for floating-point error.
std::uint64_t iroot(std::uint64_t u, std::uint32_t d) {
  if (d == 1) return u;
  auto raised = [d](std::uint64_t base) -> std::uint64_t {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
      out *= base;
    }
    return out;
  };
  std::uint64_t guess = static_cast<std::uint64_t>(std::pow(static_cast<double>(u), 1.0 / d));
  while (guess > 1 && raised(guess) > u) --guess;
  while (raised(guess + 1) <= u) ++guess;
  return guess;
}

}  // namespace

bool is_prime(std::uint64_t u) {
  if (u < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (u % p == 0) return u == p;
  }
  std::uint64_t d = u - 1;
  std::uint32_t s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, u);
    if (x == 1 || x == u - 1) continue;
    bool witness = true;
    for (std::uint32_t i = 1; i < s; ++i) {
      x = mulmod(x, x, u);
      if (x == u - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t u) {
  if (u < 2) return std::nullopt;
  for (std::uint32_t d = 63; d >= 1; --d) {
    std::uint64_t r = iroot(u, d);
    if (r < 2) continue;
    std::uint64_t check = 1;
    bool exact = true;
    for (std::uint32_t i = 0; i < d; ++i) {
      if (check > u / r) {
        exact = false;
        break;
      }
      check *= r;
    }
    if (exact && check == u && is_prime(r)) return std::make_pair(r, d);
  }
  return std::nullopt;
}

nlohmann::json DsrgPair::to_json() const {
  return nlohmann::json{{"p", p}, {"q", q}, {"r", r}, {"d", d}, {"both_prime", both_prime}};
}

std::vector<DsrgPair> search_pairs(std::uint64_t max_q, SearchMode mode) {
  if (max_q > (1ull << 40)) fail(Errc::too_large, "search cap is 2^40");
  std::vector<DsrgPair> out;
  // q = 1 + p(p-3)/4 grows quadratically in p; loop over p.
  for (std::uint64_t p = 3; ; p += 4) {
    std::uint64_t q = 1 + p * (p - 3) / 4;
    if (q > max_q) break;
    if (!is_prime(p)) continue;
    auto power = prime_power(q);
    if (!power) continue;
    if (mode == SearchMode::prime_q && power->second != 1) continue;
    if (power->second % 2 == 0) {
      fail(Errc::bad_parameters, "even extension degree contradicts the pair condition");
    }
    out.push_back(DsrgPair{p, q, power->first, power->second, power->second == 1});
  }
  std::sort(out.begin(), out.end(), [](const DsrgPair& a, const DsrgPair& b) { return a.q < b.q; });
  return out;
}

std::vector<std::uint64_t> bateman_horn_t(std::uint64_t max_t) {
  if (max_t > (1ull << 30)) fail(Errc::too_large, "search cap is 2^30");
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 1; t <= max_t; ++t) {
    std::uint64_t p = 4 * t + 3;
    if (!is_prime(p)) continue;
    if (!is_prime(p * t + 1)) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace schemeforge
