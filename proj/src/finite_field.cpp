#include "schemeforge/finite_field.hpp"

#include <algorithm>
#include <string>

namespace schemeforge {

namespace {

// Polynomials over Z_r as coefficient vectors, low degree first, no trailing
// zeros (except the zero polynomial = empty vector).
using Poly = std::vector<std::uint32_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a mod b (b monic-izable: leading coefficient inverted mod r).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t r) {
  auto inv_mod = [r](std::uint32_t x) {
    // r is prime and small; Fermat.
    std::uint64_t result = 1, base = x % r;
    std::uint32_t e = r - 2;
    while (e) {
      if (e & 1) result = result * base % r;
      base = base * base % r;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  };
  std::uint32_t lead_inv = inv_mod(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % r;
    if (factor != 0) {
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = factor * b[i] % r;
        std::uint64_t cur = a[shift + i];
        a[shift + i] = static_cast<std::uint32_t>((cur + r - sub) % r);
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly decode_poly(std::uint64_t code, std::uint32_t r) {
  Poly p;
  while (code) {
    p.push_back(static_cast<std::uint32_t>(code % r));
    code /= r;
  }
  return p;
}

bool divides(const Poly& divisor, const Poly& candidate, std::uint32_t r) {
  return poly_mod(candidate, divisor, r).empty();
}

// Trial division by every monic polynomial of degree 1..d/2.
bool is_irreducible(const Poly& f, std::uint32_t r) {
  std::uint32_t d = static_cast<std::uint32_t>(f.size()) - 1;
  if (d == 1) return true;
  for (std::uint32_t e = 1; 2 * e <= d; ++e) {
    // Monic degree-e divisors: x^e + (lower part encoded by `low`).
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= r;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = decode_poly(low, r);
      g.resize(e + 1, 0);
      g[e] = 1;
      if (divides(g, f, r)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t r, std::uint32_t d, std::uint32_t cap) {
  if (!is_small_prime(r)) fail(Errc::not_prime, "field characteristic " + std::to_string(r) + " is not prime");
  if (d == 0) fail(Errc::degree_zero, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    q *= r;
    if (q > cap) fail(Errc::field_too_large, "field order exceeds cap " + std::to_string(cap));
  }
  r_ = r;
  d_ = d;
  q_ = static_cast<std::uint32_t>(q);

  std::uint32_t rest = q_ - 1;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= rest; ++p) {
    if (rest % p == 0) {
      prime_factors_.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) prime_factors_.push_back(rest);

  choose_modulus();
  choose_generator_and_tables();
}

void FiniteField::choose_modulus() {
  if (d_ == 1) {
    modulus_ = {0, 1};  // x
    return;
  }
  // Candidates are monic of degree d, scanned in increasing numeric encoding
  // of the lower coefficients; the constant term must be nonzero.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d_; ++i) count *= r_;
  for (std::uint64_t low = 1; low < count; ++low) {
    Poly f = decode_poly(low, r_);
    if (f[0] == 0) continue;
    f.resize(d_ + 1, 0);
    f[d_] = 1;
    if (is_irreducible(f, r_)) {
      modulus_ = f;
      return;
    }
  }
  fail(Errc::bad_parameters, "no irreducible polynomial found");  // unreachable
}

Elem FiniteField::raw_mul(Elem a, Elem b) const {
  // Schoolbook product of coefficient vectors, reduced mod modulus_.
  std::vector<std::uint32_t> av = coeffs(a), bv = coeffs(b);
  std::vector<std::uint32_t> prod(2 * d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (av[i] == 0) continue;
    for (std::uint32_t j = 0; j < d_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(av[i]) * bv[j]) % r_);
    }
  }
  Poly p = prod;
  trim(p);
  if (!p.empty()) p = poly_mod(std::move(p), modulus_, r_);
  Elem out = 0;
  for (std::size_t i = p.size(); i-- > 0;) out = out * r_ + p[i];
  return out;
}

Elem FiniteField::raw_pow(Elem a, std::uint64_t e) const {
  Elem result = 1, base = a;
  while (e) {
    if (e & 1) result = raw_mul(result, base);
    base = raw_mul(base, base);
    e >>= 1;
  }
  return result;
}

void FiniteField::choose_generator_and_tables() {
  std::uint32_t group = q_ - 1;
  for (Elem x = 1; x < q_; ++x) {
    bool full_order = true;
    for (std::uint32_t p : prime_factors_) {
      if (raw_pow(x, group / p) == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      generator_ = x;
      break;
    }
  }

  exp_.assign(group, 1);
  dlog_.assign(q_, 0);
  for (std::uint32_t k = 1; k < group; ++k) exp_[k] = raw_mul(exp_[k - 1], generator_);
  for (std::uint32_t k = 0; k < group; ++k) dlog_[exp_[k]] = k;
}

Elem FiniteField::add(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t da = a % r_, db = b % r_;
    a /= r_;
    b /= r_;
    out += (da + db) % r_ * scale;
    scale *= r_;
  }
  return out;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::neg(Elem a) const {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t da = a % r_;
    a /= r_;
    out += (r_ - da) % r_ * scale;
    scale *= r_;
  }
  return out;
}

Elem FiniteField::frobenius(Elem a, std::uint32_t j) const {
  if (a == 0) return 0;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < j; ++i) e = e * r_ % (q_ - 1);
  return exp_[static_cast<std::uint64_t>(dlog_[a]) * e % (q_ - 1)];
}

Elem FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  Elem out = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= r_) fail(Errc::bad_parameters, "coefficient out of range");
    out = out * r_ + c[i];
  }
  return out;
}

std::vector<std::uint32_t> FiniteField::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = a % r_;
    a /= r_;
  }
  return c;
}

std::uint32_t FiniteField::mult_order(Elem a) const {
  if (a == 0) fail(Errc::zero_element, "order of 0 is undefined");
  std::uint32_t ord = q_ - 1;
  for (std::uint32_t p : prime_factors_) {
    while (ord % p == 0 && exp_[static_cast<std::uint64_t>(dlog_[a]) * (ord / p) % (q_ - 1)] == 1) {
      ord /= p;
    }
  }
  return ord;
}

SubgroupK subgroup_of_index(const FiniteField& F, std::uint32_t n) {
  std::uint32_t group = F.order() - 1;
  if (n == 0 || group % n != 0) {
    fail(Errc::not_divisor, std::to_string(n) + " does not divide q-1 = " + std::to_string(group));
  }
  std::uint64_t product = static_cast<std::uint64_t>(F.order()) * group / n;
  if (product % 2 != 0) {
    fail(Errc::parity_condition,
         "q(q-1)/n = " + std::to_string(product) + " is odd");
  }
  return SubgroupK{n, group / n};
}

bool in_subgroup(const FiniteField& F, const SubgroupK& K, Elem x) {
  if (x == 0) return false;
  return F.dlog(x) % K.index == 0;
}

std::uint32_t coset_of(const FiniteField& F, const SubgroupK& K, Elem x) {
  if (x == 0) fail(Errc::zero_element, "0 has no coset in F*/K");
  return F.dlog(x) % K.index;
}

std::vector<std::uint32_t> sigma_zero(const FiniteField& F, std::uint32_t n) {
  std::uint32_t group = F.order() - 1;
  if (n == 0 || group % n != 0) fail(Errc::not_divisor, "n must divide q-1");
  std::vector<std::uint32_t> out;
  std::uint64_t power = 1;  // r^j mod n
  for (std::uint32_t j = 0; j < F.degree(); ++j) {
    if (power % n == 1 % n) out.push_back(j);
    power = power * F.characteristic() % n;
  }
  return out;
}

bool is_small_prime(std::uint32_t u) {
  if (u < 2) return false;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= u; ++p) {
    if (u % p == 0) return false;
  }
  return true;
}

}  // namespace schemeforge
