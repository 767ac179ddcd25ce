#ifndef SCHEMEFORGE_DIGRAPH_HPP
#define SCHEMEFORGE_DIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "schemeforge/bitmatrix.hpp"
#include "schemeforge/color_matrix.hpp"

namespace schemeforge {

// Digraph (or graph, when the adjacency is symmetric) with an optional
// vertex-class partition used by the divisible-design checks.
struct ColoredDigraph {
  BitMatrix adj;
  std::vector<std::uint32_t> vertex_class;  // empty means no partition

  ColoredDigraph() = default;
  explicit ColoredDigraph(std::size_t n) : adj(n) {}

  std::size_t size() const { return adj.size(); }

  bool loop_free() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (adj.test(i, i)) return false;
    return true;
  }

  bool is_symmetric() const { return adj.is_symmetric(); }

  std::size_t out_degree(std::size_t i) const { return adj.row_popcount(i); }

  std::size_t arc_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < size(); ++i) total += out_degree(i);
    return total;
  }

  // 0/1 edge-color matrix for the isomorphism engine.
  ColorMatrix color_matrix() const {
    ColorMatrix out(size(), 2);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (adj.test(i, j)) out.at(i, j) = 1;
    return out;
  }
};

}  // namespace schemeforge

#endif
