#ifndef SCHEMEFORGE_SRING_HPP
#define SCHEMEFORGE_SRING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schemeforge/difference_set.hpp"
#include "schemeforge/scheme.hpp"

namespace schemeforge {

// Dihedral group of order 2n.  Element (eps, x) = b^eps g^x is encoded as
// eps*n + x, so [0, n) is the rotation subgroup C and [n, 2n) is the
// reflection coset bC.  Multiplication: (eps,x)(delta,y) =
// (eps xor delta, (-1)^delta x + y).
class DihedralGroup {
 public:
  explicit DihedralGroup(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  std::uint32_t size() const { return 2 * n_; }
  std::uint32_t identity() const { return 0; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[a * 2 * n_ + b];
    return mul_formula(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a < n_) return (n_ - a) % n_;
    return a;  // reflections are involutions
  }

 private:
  std::uint32_t mul_formula(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t n_;
  std::vector<std::uint32_t> table_;  // filled for n <= 64
};

// Partition of the dihedral group D_{2n}; candidate for an S-ring.
struct SRing {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> class_of;  // size 2n
};

SRing sring_from_classes(std::uint32_t n, std::vector<std::vector<std::uint32_t>> classes);

// Finest partition: every element its own class (fusion = the scheme itself).
SRing singleton_sring(std::uint32_t n);

// Orbits of the multiplier group <mults> <= Aut(C_n) acting on rotations and
// reflections alike.
SRing cyclotomic_sring(std::uint32_t n, const std::vector<std::uint32_t>& multipliers);

// {e}, C1, C2, {b}, bC1, bC2 with C1/C2 the quadratic residue classes of a
// prime p = 3 mod 4; rank 6.
SRing paley_rank6_sring(std::uint32_t p);

// {e}, C\{e}, bD, b(C\D) for a difference set D; rank 4.
SRing ds_rank4_sring(const DifferenceSet& d);

struct SRingViolation {
  std::string kind;  // "identity", "inverse", "product"
  std::uint32_t class_a = 0, class_b = 0;
  std::string detail;

  nlohmann::json to_json() const;
};

struct SRingCertificate {
  bool ok = false;
  std::uint32_t rank = 0;
  std::optional<SRingViolation> violation;

  nlohmann::json to_json() const;
};

SRingCertificate verify_sring(const SRing& a);

// Group-ring arithmetic.
std::vector<std::int64_t> cyclic_product(std::uint32_t n,
                                         const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b);
std::vector<std::int64_t> dihedral_product(const DihedralGroup& g,
                                           const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b);
std::vector<std::int64_t> cyclic_reversal(std::uint32_t n, const std::vector<std::int64_t>& a);
std::int64_t augmentation(const std::vector<std::int64_t>& a);

// The fusion of the Tatra scheme along an S-ring over D_{2n} whose rotation
// subgroup is a union of classes.  Relation labels are the class ids of the
// S-ring; the result is re-verified from scratch.
struct FusionResult {
  Scheme scheme;
  SchemeCertificate certificate;
  // members[label] = the basic labels of the underlying rank-2n scheme that
  // were merged into this relation (r_g as g, s_g as n+g).
  std::vector<std::vector<std::uint16_t>> members;
};

FusionResult fuse_scheme(const Omega& omega, const SRing& a);

}  // namespace schemeforge

#endif
