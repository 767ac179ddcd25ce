#ifndef SCHEMEFORGE_DIFFERENCE_SET_HPP
#define SCHEMEFORGE_DIFFERENCE_SET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace schemeforge {

struct DsParams {
  std::uint32_t n = 0, k = 0, lambda = 0;

  friend bool operator==(const DsParams&, const DsParams&) = default;
};

// A certified difference set in Z_n: construction functions only ever return
// sets that passed verify_ds.
struct DifferenceSet {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> elements;  // sorted
  DsParams params;

  nlohmann::json to_json() const;
  std::string catalog_line() const;  // "n k lambda : e1 e2 ..."
};

// Exhaustive difference count; nullopt when the counts are not constant.
std::optional<DsParams> verify_ds(std::uint32_t n, const std::vector<std::uint32_t>& elements);

enum class TrivialDs { singleton, complement_singleton, full };

DifferenceSet trivial_ds(std::uint32_t n, TrivialDs kind);

DifferenceSet complement_ds(const DifferenceSet& d);

// Quadratic residues mod a prime p = 3 mod 4; params (p, (p-1)/2, (p-3)/4).
DifferenceSet paley_ds(std::uint32_t p);

// Hyperplane difference set in Z_{(r^d-1)/(r-1)} from the trace-zero set of
// GF(r^d); params ((r^d-1)/(r-1), (r^{d-1}-1)/(r-1), (r^{d-2}-1)/(r-1)).
DifferenceSet singer_ds(std::uint32_t r, std::uint32_t d);

struct DsEquivalence {
  std::uint32_t multiplier = 1;
  std::uint32_t shift = 0;
};

// Exhaustive search for u coprime to n and shift with u*D1 + shift = D2.
std::optional<DsEquivalence> ds_equivalent(const DifferenceSet& d1, const DifferenceSet& d2);

struct PaleyClasses {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> c1;  // nonzero quadratic residues
  std::vector<std::uint32_t> c2;  // non-residues
};

PaleyClasses paley_classes(std::uint32_t p);

}  // namespace schemeforge

#endif
