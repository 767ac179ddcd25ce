#ifndef SCHEMEFORGE_COLOR_MATRIX_HPP
#define SCHEMEFORGE_COLOR_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace schemeforge {

// Edge coloring of the complete digraph on n vertices (diagonal included),
// row-major.  Shared representation for scheme color matrices and the
// isomorphism engine's input.
class ColorMatrix {
 public:
  ColorMatrix() = default;
  ColorMatrix(std::size_t n, std::uint16_t color_count)
      : n_(n), color_count_(color_count), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::uint16_t color_count() const { return color_count_; }

  std::uint16_t& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  std::uint16_t at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  const std::uint16_t* data() const { return cells_.data(); }

  friend bool operator==(const ColorMatrix&, const ColorMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::uint16_t color_count_ = 0;
  std::vector<std::uint16_t> cells_;
};

// Non-owning view used by the canonical-labeling engine.  vertex_colors may
// be null (all vertices alike).
struct ColorView {
  std::size_t n = 0;
  std::uint16_t color_count = 0;
  const std::uint16_t* colors = nullptr;
  const std::uint16_t* vertex_colors = nullptr;

  std::uint16_t color(std::size_t i, std::size_t j) const { return colors[i * n + j]; }
};

inline ColorView view_of(const ColorMatrix& m) {
  return ColorView{m.size(), m.color_count(), m.data(), nullptr};
}

}  // namespace schemeforge

#endif
