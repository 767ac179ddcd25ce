#ifndef SCHEMEFORGE_BITMATRIX_HPP
#define SCHEMEFORGE_BITMATRIX_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace schemeforge {

// Square 0/1 matrix stored as 64-bit row words; the workhorse for relation
// storage and common-neighbor counting.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), data_(n_ * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  void set(std::size_t i, std::size_t j) {
    data_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void reset(std::size_t i, std::size_t j) {
    data_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }
  bool test(std::size_t i, std::size_t j) const {
    return (data_[i * words_ + j / 64] >> (j % 64)) & 1;
  }

  const std::uint64_t* row(std::size_t i) const { return data_.data() + i * words_; }

  std::size_t row_popcount(std::size_t i) const {
    const std::uint64_t* r = row(i);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(r[w]);
    return total;
  }

  // |row_i(*this) & row_j(other)|
  std::size_t and_popcount(std::size_t i, const BitMatrix& other, std::size_t j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = other.row(j);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(a[w] & b[w]);
    return total;
  }

  BitMatrix transposed() const {
    BitMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint64_t* r = row(i);
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
          std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          out.set(j, i);
          bits &= bits - 1;
        }
      }
    }
    return out;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (test(i, j) != test(j, i)) return false;
    return true;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace schemeforge

#endif
