#include "modsym/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "modsym/simd/kernels.hpp"

namespace modsym::la {

namespace {
std::size_t padded_words(std::size_t cols) {
  const std::size_t words = (cols + 63) / 64;
  return (words + 3) / 4 * 4;
}
}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(padded_words(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::from_mat(const Mat& m) {
  if (!m.field().is_gf2()) throw std::invalid_argument("bit-packed matrices require GF(2)");
  BitMatrix b(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    std::uint64_t* dst = b.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (src[c]) dst[c / 64] |= std::uint64_t{1} << (c % 64);
  }
  return b;
}

Mat BitMatrix::to_mat() const {
  Mat m(gf::Field::make(2), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::uint64_t* src = row(r);
    auto dst = m.row(r);
    for (std::size_t w = 0; w * 64 < cols_; ++w) {
      std::uint64_t word = src[w];
      while (word) {
        const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        dst[c] = 1;
        word &= word - 1;
      }
    }
  }
  return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + stride_, row(b));
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const std::uint64_t* p = row(r);
  return std::all_of(p, p + stride_, [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> BitMatrix::rref_inplace() {
  const auto& k = simd::active();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t piv = rank;
    while (piv < rows_ && !(row(piv)[w] & bit)) ++piv;
    if (piv == rows_) continue;
    swap_rows(piv, rank);
    // Words left of w are zero in the pivot row.
    const std::size_t start = w / 4 * 4;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != rank && (row(i)[w] & bit)) k.xor_words(row(i) + start, row(rank) + start, stride_ - start);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimension mismatch");
  const auto& k = simd::active();
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::uint64_t* ar = a.row(i);
    std::uint64_t* cr = c.row(i);
    for (std::size_t w = 0; w * 64 < a.cols(); ++w) {
      std::uint64_t word = ar[w];
      while (word) {
        const std::size_t kk = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        k.xor_words(cr, b.row(kk), c.stride());
        word &= word - 1;
      }
    }
  }
  return c;
}

BitMatrix transpose(const BitMatrix& a) {
  BitMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::uint64_t* src = a.row(r);
    for (std::size_t w = 0; w * 64 < a.cols(); ++w) {
      std::uint64_t word = src[w];
      while (word) {
        const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        t.set(c, r, true);
        word &= word - 1;
      }
    }
  }
  return t;
}

}  // namespace modsym::la
