#ifndef SCHEMEFORGE_SCHEME_HPP
#define SCHEMEFORGE_SCHEME_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schemeforge/color_matrix.hpp"
#include "schemeforge/omega.hpp"

namespace schemeforge {

// A candidate association scheme: a total coloring of Omega^2 by relation
// labels.  Whether it actually satisfies the scheme axioms is decided by
// verify_scheme; nothing here is trusted until certified.
class Scheme {
 public:
  explicit Scheme(ColorMatrix colors) : colors_(std::move(colors)) {}

  std::size_t size() const { return colors_.size(); }
  std::uint16_t rank() const { return colors_.color_count(); }
  std::uint16_t color(std::size_t i, std::size_t j) const { return colors_.at(i, j); }

  const ColorMatrix& colors() const { return colors_; }
  ColorMatrix& mutable_colors() { return colors_; }

 private:
  ColorMatrix colors_;
};

struct SchemeViolation {
  std::string kind;  // "partition", "identity", "inverse", "regularity", "intersection"
  std::uint16_t r = 0, s = 0, t = 0;
  std::array<std::uint32_t, 2> pair1{0, 0};
  std::array<std::uint32_t, 2> pair2{0, 0};
  std::int64_t count1 = 0, count2 = 0;
  std::string detail;

  nlohmann::json to_json() const;
};

// Flat rank^3 tensor of intersection numbers c_{rs}^t, index (r*rank+s)*rank+t.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(std::uint16_t rank)
      : rank_(rank), c_(static_cast<std::size_t>(rank) * rank * rank, 0) {}

  std::uint16_t rank() const { return rank_; }
  std::int64_t c(std::uint16_t r, std::uint16_t s, std::uint16_t t) const {
    return c_[(static_cast<std::size_t>(r) * rank_ + s) * rank_ + t];
  }
  std::int64_t& c(std::uint16_t r, std::uint16_t s, std::uint16_t t) {
    return c_[(static_cast<std::size_t>(r) * rank_ + s) * rank_ + t];
  }
  const std::vector<std::int64_t>& flat() const { return c_; }

  std::uint64_t hash() const;

 private:
  std::uint16_t rank_ = 0;
  std::vector<std::int64_t> c_;
};

struct SchemeCertificate {
  bool ok = false;
  std::size_t points = 0;
  std::uint16_t rank = 0;
  std::uint16_t identity = 0;
  std::vector<std::uint16_t> inverse;   // label -> label of the transpose
  std::vector<std::uint64_t> valencies; // label -> n_r
  bool commutative = false;
  std::string mode;                     // "full" or "sampled"
  std::uint64_t tensor_hash = 0;
  std::optional<IntersectionTensor> tensor;
  std::optional<SchemeViolation> violation;

  nlohmann::json to_json() const;
};

struct VerifyOptions {
  bool force_full = false;
  std::size_t sample_threshold = 2000;   // full tensor verification up to here
  int samples_per_relation = 64;
  std::uint64_t seed = 0x5eed0f5eed0ull; // only used in sampled mode
  bool keep_tensor = true;
};

SchemeCertificate verify_scheme(const Scheme& x, const VerifyOptions& options = {});

// Full tensor of a verified scheme; throws NotAScheme if verification fails.
IntersectionTensor intersection_numbers(const Scheme& x);

bool is_commutative(const IntersectionTensor& tensor);

struct ThinRadicalReport {
  std::vector<std::uint16_t> labels;      // valency-1 relations
  std::vector<std::uint16_t> table;       // composition, size labels^2
  bool closed = false;                    // composition lands in the set
  bool is_group = false;
  bool is_cyclic = false;
};

ThinRadicalReport thin_radical(const Scheme& x, const SchemeCertificate& cert);

// The star product: r*s is the plain composition when one factor is thin,
// and the unique thin constituent of the matrix product otherwise.  For a
// Tatra scheme this turns the 2n basic relations into a dihedral group.
struct StarGroupReport {
  bool defined = false;
  bool is_group = false;
  bool is_dihedral = false;
  std::uint32_t order = 0;
  std::vector<std::uint16_t> table;  // rank^2 when defined
};

StarGroupReport star_group(const SchemeCertificate& cert);

// Exact matrix-level checks of the five product identities of the Tatra
// scheme (permutation composition for r-relations, bitset products for the
// s-relations, row/column sums, transposes).  Returns the first failed
// identity name, or empty when everything holds.
struct IdentityCheck {
  bool ok = true;
  std::string failed;
};

IdentityCheck tatra_identity_check(const Omega& omega);

// Integer-matrix checks of the linearized product identities for a given
// pair of group-ring coefficient vectors over C = Z_n.
bool tatra_linearized_identities(const Omega& omega,
                                 const std::vector<std::int64_t>& xi,
                                 const std::vector<std::int64_t>& eta);

}  // namespace schemeforge

#endif
