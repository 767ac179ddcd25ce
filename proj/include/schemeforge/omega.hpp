#ifndef SCHEMEFORGE_OMEGA_HPP
#define SCHEMEFORGE_OMEGA_HPP

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "schemeforge/bitmatrix.hpp"
#include "schemeforge/color_matrix.hpp"
#include "schemeforge/finite_field.hpp"

namespace schemeforge {

// K-orbit representative of a nonzero vector (v1, v2) over GF(q).  The
// canonical representative is the orbit member whose first nonzero
// coordinate has discrete log < n; equivalently the lexicographically least
// member when elements are ordered zero-first-then-by-dlog.
struct OmegaPoint {
  Elem v1 = 0;
  Elem v2 = 0;

  friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
};

struct Mat2 {
  Elem a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
};

// Lines are the C-orbits on points, i.e. the fibers of the projective map.
// With this module's point ordering every line is a contiguous index block,
// so line membership checks are pure index arithmetic.
struct LineSystem {
  std::uint32_t line_count = 0;  // q+1
  std::uint32_t line_size = 0;   // n

  std::uint32_t line_of(std::size_t point_index) const {
    return static_cast<std::uint32_t>(point_index / line_size);
  }
};

// The point set of the Tatra scheme: K-cosets of nonzero vectors of a
// 2-dimensional space over GF(q), with the determinant form into C u {0}.
//
// Point ordering: lines contiguous; the points of a line sorted by the dlog
// of the first nonzero coordinate of their canonical representative; lines
// sorted by their least point.  Index = line * n + offset.
class Omega {
 public:
  Omega(FiniteField field, std::uint32_t n);

  const FiniteField& field() const { return field_; }
  const SubgroupK& subgroup() const { return k_; }
  std::uint32_t n() const { return k_.index; }
  std::uint32_t m() const { return k_.order; }
  std::uint32_t q() const { return field_.order(); }
  std::size_t size() const { return points_.size(); }

  const OmegaPoint& point(std::size_t i) const { return points_[i]; }

  OmegaPoint canonical(Elem v1, Elem v2) const;
  std::size_t index_of(Elem v1, Elem v2) const;

  // Form value: kZeroForm when the points lie on a common line, otherwise
  // the Z_n label of the coset K*det.
  static constexpr int kZeroForm = -1;
  int form(std::size_t a, std::size_t b) const;

  // g with b = g*a; both points must lie on one line.
  std::uint32_t thin_label(std::size_t a, std::size_t b) const;
  std::size_t apply_thin(std::uint32_t g, std::size_t a) const;

  std::vector<std::uint32_t> thin_permutation(std::uint32_t g) const;
  BitMatrix relation_r(std::uint32_t g) const;
  BitMatrix relation_s(std::uint32_t g) const;

  LineSystem line_system() const {
    return LineSystem{field_.order() + 1, k_.index};
  }

  // Vertex permutation of the semilinear map v -> T v^(Frobenius^j).
  // Throws SingularMatrix when det T = 0.
  std::vector<std::uint32_t> semilinear_permutation(const Mat2& T, std::uint32_t j) const;

  // Scheme color matrix with labels r_g = g, s_g = n + g (rank 2n).
  ColorMatrix scheme_colors() const;

  Elem det(const Mat2& T) const;

 private:
  FiniteField field_;
  SubgroupK k_;
  std::vector<OmegaPoint> points_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;

  std::uint64_t key(Elem v1, Elem v2) const {
    return static_cast<std::uint64_t>(v1) * field_.order() + v2;
  }
};

}  // namespace schemeforge

#endif
