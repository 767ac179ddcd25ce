#include "schemeforge/sring.hpp"

#include <algorithm>
#include <numeric>

#include "schemeforge/errors.hpp"

namespace schemeforge {

DihedralGroup::DihedralGroup(std::uint32_t n) : n_(n) {
  if (n == 0) fail(Errc::bad_parameters, "dihedral group needs n >= 1");
  if (n <= 64) {
    table_.resize(4 * n * n);
    for (std::uint32_t a = 0; a < 2 * n; ++a)
      for (std::uint32_t b = 0; b < 2 * n; ++b) table_[a * 2 * n + b] = mul_formula(a, b);
  }
}

std::uint32_t DihedralGroup::mul_formula(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t ea = a / n_, xa = a % n_;
  std::uint32_t eb = b / n_, xb = b % n_;
  // (b^ea g^xa)(b^eb g^xb) = b^(ea+eb) g^((-1)^eb xa + xb)
  std::uint32_t x = eb ? (n_ - xa) % n_ : xa;
  return ((ea + eb) % 2) * n_ + (x + xb) % n_;
}

SRing sring_from_classes(std::uint32_t n, std::vector<std::vector<std::uint32_t>> classes) {
  SRing out;
  out.n = n;
  out.class_of.assign(2 * n, 0xffffffffu);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::sort(classes[c].begin(), classes[c].end());
    for (std::uint32_t x : classes[c]) {
      if (x >= 2 * n || out.class_of[x] != 0xffffffffu) {
        fail(Errc::bad_parameters, "classes do not partition the group");
      }
      out.class_of[x] = static_cast<std::uint32_t>(c);
    }
  }
  for (std::uint32_t x = 0; x < 2 * n; ++x) {
    if (out.class_of[x] == 0xffffffffu) {
      fail(Errc::bad_parameters, "classes do not cover the group");
    }
  }
  out.classes = std::move(classes);
  return out;
}

SRing singleton_sring(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> classes(2 * n);
  for (std::uint32_t x = 0; x < 2 * n; ++x) classes[x] = {x};
  return sring_from_classes(n, std::move(classes));
}

SRing cyclotomic_sring(std::uint32_t n, const std::vector<std::uint32_t>& multipliers) {
  for (std::uint32_t u : multipliers) {
    if (u == 0 || u >= n || std::gcd(u, n) != 1) {
      fail(Errc::bad_parameters, "multipliers must be units mod n");
    }
  }
  // Orbits of <multipliers> on Z_n, applied to rotations and reflections.
  std::vector<std::int64_t> orbit_of(n, -1);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (orbit_of[x] >= 0) continue;
    std::vector<std::uint32_t> orbit{x};
    orbit_of[x] = static_cast<std::int64_t>(orbits.size());
    for (std::size_t at = 0; at < orbit.size(); ++at) {
      for (std::uint32_t u : multipliers) {
        std::uint32_t y = static_cast<std::uint32_t>(static_cast<std::uint64_t>(u) * orbit[at] % n);
        if (orbit_of[y] < 0) {
          orbit_of[y] = static_cast<std::int64_t>(orbits.size());
          orbit.push_back(y);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::vector<std::vector<std::uint32_t>> classes;
  for (const auto& orbit : orbits) classes.push_back(orbit);
  for (const auto& orbit : orbits) {
    std::vector<std::uint32_t> refl;
    for (std::uint32_t x : orbit) refl.push_back(n + x);
    classes.push_back(std::move(refl));
  }
  return sring_from_classes(n, std::move(classes));
}

SRing paley_rank6_sring(std::uint32_t p) {
  PaleyClasses classes = paley_classes(p);
  std::vector<std::vector<std::uint32_t>> parts;
  parts.push_back({0});
  parts.push_back(classes.c1);
  parts.push_back(classes.c2);
  parts.push_back({p});  // b
  std::vector<std::uint32_t> b1, b2;
  for (std::uint32_t x : classes.c1) b1.push_back(p + x);
  for (std::uint32_t x : classes.c2) b2.push_back(p + x);
  parts.push_back(std::move(b1));
  parts.push_back(std::move(b2));
  return sring_from_classes(p, std::move(parts));
}

SRing ds_rank4_sring(const DifferenceSet& d) {
  const std::uint32_t n = d.n;
  if (n < 2) fail(Errc::bad_parameters, "rank-4 construction needs n >= 2");
  std::vector<std::vector<std::uint32_t>> parts;
  parts.push_back({0});
  std::vector<std::uint32_t> rest;
  for (std::uint32_t x = 1; x < n; ++x) rest.push_back(x);
  parts.push_back(std::move(rest));
  std::vector<std::uint32_t> bd, bcomp;
  for (std::uint32_t x = 0; x < n; ++x) {
    bool in_d = std::binary_search(d.elements.begin(), d.elements.end(), x);
    (in_d ? bd : bcomp).push_back(n + x);
  }
  if (bd.empty() || bcomp.empty()) {
    fail(Errc::bad_parameters, "difference set must be a proper nonempty subset");
  }
  parts.push_back(std::move(bd));
  parts.push_back(std::move(bcomp));
  return sring_from_classes(n, std::move(parts));
}

nlohmann::json SRingViolation::to_json() const {
  return nlohmann::json{{"kind", kind},
                        {"class_a", class_a},
                        {"class_b", class_b},
                        {"detail", detail}};
}

nlohmann::json SRingCertificate::to_json() const {
  nlohmann::json j{{"object", "sring"}, {"ok", ok}, {"rank", rank}};
  if (violation) j["violation"] = violation->to_json();
  return j;
}

SRingCertificate verify_sring(const SRing& a) {
  SRingCertificate cert;
  cert.rank = static_cast<std::uint32_t>(a.classes.size());
  DihedralGroup g(a.n);

  if (a.class_of.size() != g.size()) {
    cert.violation = SRingViolation{.kind = "identity", .detail = "partition size mismatch"};
    return cert;
  }
  if (a.classes[a.class_of[g.identity()]].size() != 1) {
    cert.violation =
        SRingViolation{.kind = "identity", .detail = "the identity class is not a singleton"};
    return cert;
  }
  // Inverse closure.
  for (std::size_t c = 0; c < a.classes.size(); ++c) {
    std::vector<std::uint32_t> inv;
    for (std::uint32_t x : a.classes[c]) inv.push_back(g.inv(x));
    std::sort(inv.begin(), inv.end());
    std::uint32_t target = a.class_of[inv[0]];
    if (inv != a.classes[target]) {
      cert.violation = SRingViolation{.kind = "inverse",
                                      .class_a = static_cast<std::uint32_t>(c),
                                      .detail = "class inverse is not a class"};
      return cert;
    }
  }
  // Product closure: the convolution of two class sums must be constant on
  // every class.
  std::vector<std::int64_t> prod(g.size());
  for (std::size_t ca = 0; ca < a.classes.size(); ++ca) {
    for (std::size_t cb = 0; cb < a.classes.size(); ++cb) {
      std::fill(prod.begin(), prod.end(), 0);
      for (std::uint32_t x : a.classes[ca])
        for (std::uint32_t y : a.classes[cb]) prod[g.mul(x, y)]++;
      for (const auto& cls : a.classes) {
        std::int64_t value = prod[cls[0]];
        for (std::uint32_t x : cls) {
          if (prod[x] != value) {
            cert.violation = SRingViolation{.kind = "product",
                                            .class_a = static_cast<std::uint32_t>(ca),
                                            .class_b = static_cast<std::uint32_t>(cb),
                                            .detail = "product is not constant on a class"};
            return cert;
          }
        }
      }
    }
  }
  cert.ok = true;
  return cert;
}

std::vector<std::int64_t> cyclic_product(std::uint32_t n,
                                         const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(n, 0);
  for (std::uint32_t g = 0; g < n; ++g) {
    if (a[g] == 0) continue;
    for (std::uint32_t h = 0; h < n; ++h) out[(g + h) % n] += a[g] * b[h];
  }
  return out;
}

std::vector<std::int64_t> dihedral_product(const DihedralGroup& g,
                                           const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(g.size(), 0);
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    if (a[x] == 0) continue;
    for (std::uint32_t y = 0; y < g.size(); ++y) out[g.mul(x, y)] += a[x] * b[y];
  }
  return out;
}

std::vector<std::int64_t> cyclic_reversal(std::uint32_t n, const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> out(n);
  for (std::uint32_t g = 0; g < n; ++g) out[(n - g) % n] = a[g];
  return out;
}

std::int64_t augmentation(const std::vector<std::int64_t>& a) {
  std::int64_t s = 0;
  for (std::int64_t x : a) s += x;
  return s;
}

FusionResult fuse_scheme(const Omega& omega, const SRing& a) {
  const std::uint32_t n = omega.n();
  if (a.n != n) fail(Errc::mismatched_n, "S-ring group order does not match the scheme");

  // Every class must stay inside C or inside bC: C must be an A-subgroup.
  for (std::size_t c = 0; c < a.classes.size(); ++c) {
    bool has_rot = false, has_refl = false;
    for (std::uint32_t x : a.classes[c]) {
      (x < n ? has_rot : has_refl) = true;
    }
    if (has_rot && has_refl) {
      fail(Errc::c_not_a_subgroup, "a basic set straddles C and bC");
    }
  }

  // Old labels: r_g = g (maps to rotation g), s_g = n+g (maps to reflection
  // b g^g).  Fused label = S-ring class id; re-indexed so that the identity
  // class becomes label 0 and ids stay in class order otherwise.
  std::vector<std::uint16_t> relabel(2 * n, 0);
  const std::uint32_t rank = static_cast<std::uint32_t>(a.classes.size());
  std::uint32_t identity_class = a.class_of[0];
  std::vector<std::uint16_t> class_label(rank, 0);
  std::uint16_t next = 1;
  for (std::uint32_t c = 0; c < rank; ++c) {
    class_label[c] = (c == identity_class) ? 0 : next++;
  }
  for (std::uint32_t x = 0; x < 2 * n; ++x) relabel[x] = class_label[a.class_of[x]];

  ColorMatrix base = omega.scheme_colors();
  ColorMatrix fused(base.size(), static_cast<std::uint16_t>(rank));
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) fused.at(i, j) = relabel[base.at(i, j)];

  FusionResult out{Scheme(std::move(fused)), {}, {}};
  out.members.resize(rank);
  for (std::uint32_t x = 0; x < 2 * n; ++x) {
    out.members[relabel[x]].push_back(static_cast<std::uint16_t>(x));
  }
  out.certificate = verify_scheme(out.scheme);
  return out;
}

}  // namespace schemeforge
