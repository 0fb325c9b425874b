#pragma once

// Bit-packed GF(2) matrices: 64 entries per word, rows padded to a multiple
// of four words so the AVX2 kernels never need a ragged tail.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modsym/exactla.hpp"

namespace modsym::la {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix from_mat(const Mat& m);
  Mat to_mat() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v) {
    auto& w = data_[r * stride_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::uint64_t* row(std::size_t r) { return data_.data() + r * stride_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * stride_; }
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_inplace();

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& a);

}  // namespace modsym::la
