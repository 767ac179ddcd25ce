#include "schemeforge/omega.hpp"

#include <string>

namespace schemeforge {

Omega::Omega(FiniteField field, std::uint32_t n)
    : field_(std::move(field)), k_(subgroup_of_index(field_, n)) {
  const std::uint32_t q = field_.order();
  points_.reserve(static_cast<std::size_t>(q + 1) * n);

  // Line of (0, *), then line of (*, 0), then one line per nonzero slope u,
  // u scanned in dlog order.  Within a line the offset j is the dlog of the
  // first nonzero coordinate of the canonical representative.
  for (std::uint32_t j = 0; j < n; ++j) points_.push_back({0, field_.exp(j)});
  for (std::uint32_t j = 0; j < n; ++j) points_.push_back({field_.exp(j), 0});
  for (std::uint32_t s = 0; s + 1 < q; ++s) {
    Elem u = field_.exp(s);
    for (std::uint32_t j = 0; j < n; ++j) {
      Elem first = field_.exp(j);
      points_.push_back({first, field_.mul(first, u)});
    }
  }

  index_.reserve(points_.size() * 2);
  for (std::uint32_t i = 0; i < points_.size(); ++i) {
    index_.emplace(key(points_[i].v1, points_[i].v2), i);
  }
}

OmegaPoint Omega::canonical(Elem v1, Elem v2) const {
  if (v1 == 0 && v2 == 0) fail(Errc::zero_element, "the zero vector has no K-orbit point");
  const std::uint32_t group = field_.order() - 1;
  if (v1 != 0) {
    std::uint32_t e = field_.dlog(v1);
    std::uint32_t j = e % k_.index;
    // Scale by g^(j - e) to land the first coordinate on g^j.
    Elem scale = field_.exp((group + j - e) % group);
    return OmegaPoint{field_.exp(j), field_.mul(scale, v2)};
  }
  std::uint32_t e = field_.dlog(v2);
  return OmegaPoint{0, field_.exp(e % k_.index)};
}

std::size_t Omega::index_of(Elem v1, Elem v2) const {
  OmegaPoint p = canonical(v1, v2);
  return index_.at(key(p.v1, p.v2));
}

int Omega::form(std::size_t a, std::size_t b) const {
  const OmegaPoint& u = points_[a];
  const OmegaPoint& v = points_[b];
  Elem d = field_.sub(field_.mul(u.v1, v.v2), field_.mul(u.v2, v.v1));
  if (d == 0) return kZeroForm;
  return static_cast<int>(field_.dlog(d) % k_.index);
}

std::uint32_t Omega::thin_label(std::size_t a, std::size_t b) const {
  const std::uint32_t n = k_.index;
  if (a / n != b / n) fail(Errc::bad_parameters, "points are not on one line");
  return static_cast<std::uint32_t>((b % n + n - a % n) % n);
}

std::size_t Omega::apply_thin(std::uint32_t g, std::size_t a) const {
  const std::uint32_t n = k_.index;
  return a - a % n + (a % n + g) % n;
}

std::vector<std::uint32_t> Omega::thin_permutation(std::uint32_t g) const {
  std::vector<std::uint32_t> perm(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    perm[i] = static_cast<std::uint32_t>(apply_thin(g, i));
  }
  return perm;
}

BitMatrix Omega::relation_r(std::uint32_t g) const {
  BitMatrix out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) out.set(i, apply_thin(g, i));
  return out;
}

BitMatrix Omega::relation_s(std::uint32_t g) const {
  BitMatrix out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = 0; j < points_.size(); ++j) {
      if (form(i, j) == static_cast<int>(g)) out.set(i, j);
    }
  }
  return out;
}

Elem Omega::det(const Mat2& T) const {
  return field_.sub(field_.mul(T.a, T.d), field_.mul(T.b, T.c));
}

std::vector<std::uint32_t> Omega::semilinear_permutation(const Mat2& T, std::uint32_t j) const {
  if (det(T) == 0) fail(Errc::singular_matrix, "semilinear map needs an invertible matrix");
  std::vector<std::uint32_t> perm(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    Elem x = field_.frobenius(points_[i].v1, j);
    Elem y = field_.frobenius(points_[i].v2, j);
    Elem w1 = field_.add(field_.mul(T.a, x), field_.mul(T.b, y));
    Elem w2 = field_.add(field_.mul(T.c, x), field_.mul(T.d, y));
    perm[i] = static_cast<std::uint32_t>(index_of(w1, w2));
  }
  return perm;
}

ColorMatrix Omega::scheme_colors() const {
  const std::size_t v = points_.size();
  const std::uint32_t n = k_.index;
  ColorMatrix colors(v, static_cast<std::uint16_t>(2 * n));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      int f = form(i, j);
      std::uint16_t label;
      if (f == kZeroForm) {
        label = static_cast<std::uint16_t>(thin_label(i, j));
      } else {
        label = static_cast<std::uint16_t>(n + static_cast<std::uint32_t>(f));
      }
      colors.at(i, j) = label;
    }
  }
  return colors;
}

}  // namespace schemeforge
