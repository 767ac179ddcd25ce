#include "schemeforge/difference_set.hpp"

#include <algorithm>
#include <numeric>

#include "schemeforge/errors.hpp"
#include "schemeforge/finite_field.hpp"

namespace schemeforge {

nlohmann::json DifferenceSet::to_json() const {
  return nlohmann::json{{"n", n},
                        {"k", params.k},
                        {"lambda", params.lambda},
                        {"elements", elements}};
}

std::string DifferenceSet::catalog_line() const {
  std::string out = std::to_string(n) + " " + std::to_string(params.k) + " " +
                    std::to_string(params.lambda) + " :";
  for (std::uint32_t e : elements) out += " " + std::to_string(e);
  return out;
}

std::optional<DsParams> verify_ds(std::uint32_t n, const std::vector<std::uint32_t>& elements) {
  if (n == 0 || elements.empty()) return std::nullopt;
  std::vector<std::uint32_t> counts(n, 0);
  for (std::uint32_t a : elements) {
    if (a >= n) return std::nullopt;
    for (std::uint32_t b : elements) {
      counts[(a + n - b) % n]++;
    }
  }
  std::uint32_t lambda = n > 1 ? counts[1 % n] : 0;
  for (std::uint32_t g = 1; g < n; ++g) {
    if (counts[g] != lambda) return std::nullopt;
  }
  return DsParams{n, static_cast<std::uint32_t>(elements.size()), lambda};
}

namespace {

DifferenceSet certified(std::uint32_t n, std::vector<std::uint32_t> elements) {
  std::sort(elements.begin(), elements.end());
  auto params = verify_ds(n, elements);
  if (!params) fail(Errc::bad_parameters, "constructed set is not a difference set");
  return DifferenceSet{n, std::move(elements), *params};
}

}  // namespace

DifferenceSet trivial_ds(std::uint32_t n, TrivialDs kind) {
  if (n == 0) fail(Errc::bad_parameters, "group order must be positive");
  std::vector<std::uint32_t> elements;
  switch (kind) {
    case TrivialDs::singleton:
      elements = {0};
      break;
    case TrivialDs::complement_singleton:
      for (std::uint32_t x = 1; x < n; ++x) elements.push_back(x);
      break;
    case TrivialDs::full:
      for (std::uint32_t x = 0; x < n; ++x) elements.push_back(x);
      break;
  }
  if (elements.empty()) fail(Errc::bad_parameters, "empty difference set");
  return certified(n, std::move(elements));
}

DifferenceSet complement_ds(const DifferenceSet& d) {
  std::vector<std::uint32_t> elements;
  std::size_t at = 0;
  for (std::uint32_t x = 0; x < d.n; ++x) {
    if (at < d.elements.size() && d.elements[at] == x) {
      ++at;
    } else {
      elements.push_back(x);
    }
  }
  if (elements.empty()) fail(Errc::bad_parameters, "complement of the full set is empty");
  return certified(d.n, std::move(elements));
}

DifferenceSet paley_ds(std::uint32_t p) {
  if (!is_small_prime(p) || p % 4 != 3) {
    fail(Errc::bad_congruence, std::to_string(p) + " is not a prime = 3 mod 4");
  }
  std::vector<bool> residue(p, false);
  for (std::uint64_t x = 1; x < p; ++x) residue[x * x % p] = true;
  std::vector<std::uint32_t> elements;
  for (std::uint32_t x = 1; x < p; ++x) {
    if (residue[x]) elements.push_back(x);
  }
  return certified(p, std::move(elements));
}

DifferenceSet singer_ds(std::uint32_t r, std::uint32_t d) {
  if (!is_small_prime(r)) fail(Errc::not_prime, "base must be prime");
  if (d < 2) fail(Errc::degree_too_small, "Singer construction needs degree >= 2");
  FiniteField field(r, d);
  const std::uint32_t q = field.order();
  const std::uint32_t n = (q - 1) / (r - 1);

  // Trace into the prime field; the trace-zero set is a hyperplane and is
  // invariant under scaling by GF(r)*, so membership descends to Z_n.
  auto trace = [&](Elem x) {
    Elem t = 0, y = x;
    for (std::uint32_t i = 0; i < d; ++i) {
      t = field.add(t, y);
      y = field.frobenius(y, 1);
    }
    return t;
  };

  std::vector<std::uint32_t> elements;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (trace(field.exp(i)) == 0) elements.push_back(i);
  }
  return certified(n, std::move(elements));
}

std::optional<DsEquivalence> ds_equivalent(const DifferenceSet& d1, const DifferenceSet& d2) {
  if (d1.n != d2.n) fail(Errc::mismatched_n, "difference sets live in different groups");
  if (d1.elements.size() != d2.elements.size()) return std::nullopt;
  const std::uint32_t n = d1.n;

  std::vector<std::uint32_t> image(d1.elements.size());
  for (std::uint32_t u = 1; u < std::max(n, 2u); ++u) {
    if (n > 1 && std::gcd(u, n) != 1) continue;
    for (std::uint32_t shift = 0; shift < n; ++shift) {
      for (std::size_t i = 0; i < d1.elements.size(); ++i) {
        image[i] = (static_cast<std::uint64_t>(u) * d1.elements[i] + shift) % n;
      }
      std::sort(image.begin(), image.end());
      if (image == d2.elements) {
        // Re-check the witness from scratch before reporting it.
        bool good = true;
        for (std::uint32_t x : d1.elements) {
          std::uint32_t y = (static_cast<std::uint64_t>(u) * x + shift) % n;
          if (!std::binary_search(d2.elements.begin(), d2.elements.end(), y)) good = false;
        }
        if (good) return DsEquivalence{u, shift};
      }
    }
  }
  return std::nullopt;
}

PaleyClasses paley_classes(std::uint32_t p) {
  if (!is_small_prime(p) || p % 4 != 3) {
    fail(Errc::bad_congruence, std::to_string(p) + " is not a prime = 3 mod 4");
  }
  PaleyClasses out;
  out.p = p;
  std::vector<bool> residue(p, false);
  for (std::uint64_t x = 1; x < p; ++x) residue[x * x % p] = true;
  for (std::uint32_t x = 1; x < p; ++x) {
    (residue[x] ? out.c1 : out.c2).push_back(x);
  }
  return out;
}

}  // namespace schemeforge
