#ifndef SCHEMEFORGE_FINITE_FIELD_HPP
#define SCHEMEFORGE_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "schemeforge/errors.hpp"

namespace schemeforge {

// Field elements are encoded as integers in [0, q): the element with
// polynomial coefficients (c_0, ..., c_{d-1}) over Z_r is sum c_i * r^i.
using Elem = std::uint32_t;

// GF(r^d) with a dense discrete-log table.  Everything is fixed at
// construction time: the modulus polynomial is the numerically smallest monic
// irreducible of degree d (coefficient c_i weighted by r^i, so higher-degree
// terms dominate the comparison) and the generator is the smallest element of
// multiplicative order q-1 in the same encoding.  This makes every downstream
// labeling reproducible without external polynomial tables.
class FiniteField {
 public:
  static constexpr std::uint32_t kDefaultCap = 1u << 20;

  FiniteField(std::uint32_t r, std::uint32_t d, std::uint32_t cap = kDefaultCap);

  std::uint32_t characteristic() const { return r_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t order() const { return q_; }

  // Coefficients c_0..c_d of the modulus polynomial, c_d == 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  std::uint32_t dlog(Elem x) const {
    if (x == 0) fail(Errc::zero_element, "dlog of 0 is undefined");
    return dlog_[x];
  }
  // g^k (k reduced mod q-1).
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(dlog_[a]) + dlog_[b]) % (q_ - 1)];
  }
  Elem inv(Elem a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of 0");
    return exp_[(q_ - 1 - dlog_[a]) % (q_ - 1)];
  }
  Elem pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(static_cast<std::uint64_t>(dlog_[a]) % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1)];
  }
  // x^(r^j), the j-th power of the Frobenius map.
  Elem frobenius(Elem a, std::uint32_t j) const;

  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  std::uint32_t mult_order(Elem a) const;

 private:
  void choose_modulus();
  void choose_generator_and_tables();
  Elem raw_mul(Elem a, Elem b) const;  // schoolbook, used only during setup
  Elem raw_pow(Elem a, std::uint64_t e) const;

  std::uint32_t r_ = 0, d_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 0;
  std::vector<std::uint32_t> dlog_;  // size q; dlog_[0] is a sentinel
  std::vector<Elem> exp_;            // size q-1; exp_[k] = g^k
  std::vector<std::uint32_t> prime_factors_;  // distinct prime factors of q-1
};

// The index-n subgroup K of F* (membership: dlog(x) = 0 mod n) together with
// its order m = (q-1)/n.
struct SubgroupK {
  std::uint32_t index = 1;  // n
  std::uint32_t order = 1;  // m
};

// Requires n | q-1 and q(q-1)/n even; the parity guarantees -1 in K for odd q.
SubgroupK subgroup_of_index(const FiniteField& F, std::uint32_t n);

bool in_subgroup(const FiniteField& F, const SubgroupK& K, Elem x);

// The label of Kx in C = F*/K identified with Z_n, i.e. dlog(x) mod n.
std::uint32_t coset_of(const FiniteField& F, const SubgroupK& K, Elem x);

// { j in [0, d) : r^j = 1 mod n }: exponents of Frobenius powers acting
// trivially on C.
std::vector<std::uint32_t> sigma_zero(const FiniteField& F, std::uint32_t n);

bool is_small_prime(std::uint32_t u);

}  // namespace schemeforge

#endif
