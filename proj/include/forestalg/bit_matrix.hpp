#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace forestalg {

/// Dense boolean matrix, one 64-bit word per 64 columns of a row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
        words_(static_cast<std::size_t>(rows) * static_cast<std::size_t>((cols + 63) / 64), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool test(int r, int c) const { return (word(r, c) >> (c & 63)) & 1U; }

  /// Returns true when the bit was previously clear.
  bool set(int r, int c) {
    std::uint64_t& w = words_[index(r, c)];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (w & mask) return false;
    w |= mask;
    return true;
  }

  void reset(int r, int c) { words_[index(r, c)] &= ~(std::uint64_t{1} << (c & 63)); }

  /// row(r) |= other.row(s); both matrices must have the same column count.
  void or_row(int r, const BitMatrix& other, int s) {
    for (int k = 0; k < stride_; ++k) words_[row_base(r) + k] |= other.words_[other.row_base(s) + k];
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t row_base(int r) const { return static_cast<std::size_t>(r) * stride_; }
  std::size_t index(int r, int c) const { return row_base(r) + static_cast<std::size_t>(c >> 6); }
  std::uint64_t word(int r, int c) const { return words_[index(r, c)]; }

  int rows_ = 0;
  int cols_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace forestalg
