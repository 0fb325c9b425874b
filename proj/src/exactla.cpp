#include "modsym/exactla.hpp"

#include <algorithm>

#include "modsym/bitmat.hpp"
#include "modsym/simd/kernels.hpp"

namespace modsym::la {

namespace {

// dst += c * src over n entries.
void row_axpy(const Field& F, std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n) {
  if (c == 0) return;
  if (F.is_gf2()) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
  } else if (F.is_prime()) {
    simd::active().axpy_mod(dst, src, c, n, F.p());
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (src[i]) dst[i] = F.add(dst[i], F.mul(c, src[i]));
  }
}

void row_scale(const Field& F, std::uint32_t* v, std::uint32_t c, std::size_t n) {
  if (c == 1) return;
  if (F.is_prime()) {
    simd::active().scale_mod(v, c, n, F.p());
  } else {
    for (std::size_t i = 0; i < n; ++i) v[i] = F.mul(c, v[i]);
  }
}

void require_same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw gf::FieldMismatch("matrices over different fields");
}

// Generic Gauss-Jordan elimination in place; returns pivots.
std::vector<std::size_t> rref_generic_inplace(Mat& a) {
  const Field& F = a.field();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const std::size_t cols = a.cols();
  for (std::size_t col = 0; col < cols && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != rank) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(rank).begin());
    std::uint32_t* prow = a.row(rank).data();
    row_scale(F, prow + col, F.inv(prow[col]), cols - col);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == rank) continue;
      const std::uint32_t c = a(i, col);
      if (c) row_axpy(F, a.row(i).data() + col, prow + col, F.neg(c), cols - col);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

bool use_packed(const Field& F, Path path) {
  if (path == Path::packed) {
    if (!F.is_gf2()) throw std::invalid_argument("packed path requires GF(2)");
    return true;
  }
  return path == Path::automatic && F.is_gf2();
}

}  // namespace

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Mat Mat::identity(const Field& field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(const Field& field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Mat m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      const std::int64_t v = rows[i][j];
      // Prime fields reduce integers; extension fields take encodings.
      if (field.is_prime() || v < 0) {
        m.set(i, j, field.from_int(v));
      } else {
        if (static_cast<std::uint64_t>(v) >= field.q()) throw std::invalid_argument("entry out of range");
        m.set(i, j, static_cast<std::uint32_t>(v));
      }
    }
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Mat mul(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimension mismatch");
  const Field& F = a.field();
  if (F.is_gf2() && a.cols() >= 16 && a.rows() * b.cols() >= 256) {
    return mul(BitMatrix::from_mat(a), BitMatrix::from_mat(b)).to_mat();
  }
  Mat c(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint32_t* cr = c.row(i).data();
    for (std::size_t k = 0; k < a.cols(); ++k) row_axpy(F, cr, b.row(k).data(), a(i, k), b.cols());
  }
  return c;
}

Vec mul(const Mat& a, std::span<const std::uint32_t> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector dimension mismatch");
  const Field& F = a.field();
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint32_t acc = 0;
    auto r = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (r[k] && v[k]) acc = F.add(acc, F.mul(r[k], v[k]));
    out[i] = acc;
  }
  return out;
}

Mat add(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum dimension mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) row_axpy(a.field(), c.row(i).data(), b.row(i).data(), 1, a.cols());
  return c;
}

Mat sub(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference dimension mismatch");
  Mat c = a;
  const std::uint32_t minus_one = a.field().neg(1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    row_axpy(a.field(), c.row(i).data(), b.row(i).data(), minus_one, a.cols());
  return c;
}

Mat scale(const Mat& a, std::uint32_t s) {
  Mat c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) row_axpy(a.field(), c.row(i).data(), a.row(i).data(), s, a.cols());
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t.set(c, r, a(r, c));
  return t;
}

Mat kron(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  const Field& F = a.field();
  Mat k(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint32_t x = a(i, j);
      if (!x) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k.set(i * b.rows() + r, j * b.cols() + c, F.mul(x, b(r, c)));
    }
  return k;
}

Mat power(const Mat& a, std::uint64_t e) {
  if (!a.square()) throw DimensionMismatch("power of a non-square matrix");
  Mat result = Mat::identity(a.field(), a.rows());
  Mat base = a;
  for (; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    if (e > 1) base = mul(base, base);
  }
  return result;
}

Mat block_diag(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  Mat m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m.set(a.rows() + r, a.cols() + c, b(r, c));
  return m;
}

Mat submatrix(const Mat& a, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
  if (r0 + nr > a.rows() || c0 + nc > a.cols()) throw DimensionMismatch("submatrix out of range");
  Mat s(a.field(), nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) s.set(r, c, a(r0 + r, c0 + c));
  return s;
}

Mat select_columns(const Mat& a, std::span<const std::size_t> cols) {
  Mat s(a.field(), a.rows(), cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) s.set(r, j, a(r, cols[j]));
  return s;
}

Mat select_rows(const Mat& a, std::span<const std::size_t> rows) {
  Mat s(a.field(), rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(a.row(rows[i]).begin(), a.row(rows[i]).end(), s.row(i).begin());
  return s;
}

Mat vstack(std::span<const Mat> blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of nothing");
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks[0], b);
    if (b.cols() != blocks[0].cols()) throw DimensionMismatch("vstack column mismatch");
    rows += b.rows();
  }
  Mat m(blocks[0].field(), rows, blocks[0].cols());
  std::size_t at = 0;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r, ++at) std::copy(b.row(r).begin(), b.row(r).end(), m.row(at).begin());
  return m;
}

Rref rref(const Mat& m, Path path) {
  Rref out;
  if (use_packed(m.field(), path)) {
    BitMatrix b = BitMatrix::from_mat(m);
    out.pivots = b.rref_inplace();
    out.rank = out.pivots.size();
    Mat full = b.to_mat();
    out.form = submatrix(full, 0, out.rank, 0, m.cols());
  } else {
    Mat a = m;
    out.pivots = rref_generic_inplace(a);
    out.rank = out.pivots.size();
    out.form = submatrix(a, 0, out.rank, 0, m.cols());
  }
  return out;
}

std::size_t rank(const Mat& m, Path path) { return rref(m, path).rank; }

Mat inverse(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug.set(r, n + r, 1);
  }
  Rref red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) throw std::domain_error("matrix is singular");
  return submatrix(red.form, 0, n, n, n);
}

std::uint32_t det(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const Field& F = m.field();
  Mat a = m;
  const std::size_t n = a.rows();
  std::uint32_t d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(col).begin());
      d = F.neg(d);
    }
    const std::uint32_t pv = a(col, col);
    d = F.mul(d, pv);
    const std::uint32_t pinv = F.inv(pv);
    for (std::size_t i = col + 1; i < n; ++i) {
      const std::uint32_t c = a(i, col);
      if (c) row_axpy(F, a.row(i).data() + col, a.row(col).data() + col, F.neg(F.mul(c, pinv)), n - col);
    }
  }
  return d;
}

Subspace Subspace::zero(const Field& field, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(field, 0, ambient);
  return s;
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(field, ambient);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::span(const Mat& rows, Path path) {
  Rref red = rref(rows, path);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = std::move(red.form);
  s.pivots_ = std::move(red.pivots);
  return s;
}

std::vector<std::size_t> Subspace::complement() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vec Subspace::reduce(std::span<const std::uint32_t> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  const Field& F = basis_.field();
  Vec out(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::uint32_t c = out[pivots_[k]];
    if (c) row_axpy(F, out.data(), basis_.row(k).data(), F.neg(c), ambient_);
  }
  return out;
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
  if (dim() == 0) return other;
  if (other.dim() == 0) return *this;
  const Mat parts[] = {basis_, other.basis_};
  return span(vstack(parts));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
  // U n W = ann(ann(U) + ann(W)) for the standard dot product.
  const Field& F = field();
  const Subspace au = dim() ? kernel(basis_) : full(F, ambient_);
  const Subspace aw = other.dim() ? kernel(other.basis_) : full(F, ambient_);
  const Subspace both = au.sum(aw);
  if (both.dim() == 0) return full(F, ambient_);
  return kernel(both.basis_);
}

Subspace kernel(const Mat& m, Path path) {
  const Field& F = m.field();
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(F, n);
  Rref red = rref(m, path);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  if (free_cols.empty()) return Subspace::zero(F, n);
  Mat basis(F, free_cols.size(), n);
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t f = free_cols[j];
    basis.set(j, f, 1);
    for (std::size_t i = 0; i < red.rank; ++i) basis.set(j, red.pivots[i], F.neg(red.form(i, f)));
  }
  return Subspace::span(basis, path);
}

std::optional<Vec> solve(const Mat& m, std::span<const std::uint32_t> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const std::size_t n = m.cols();
  Mat aug(m.field(), m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug.set(r, n, b[r]);
  }
  Rref red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  Vec x(n, 0);
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.form(i, n);
  return x;
}

Subspace joint_fixed_space(std::span<const Mat> gens, const Field& field, std::size_t n) {
  if (gens.empty()) return Subspace::full(field, n);
  std::vector<Mat> blocks;
  blocks.reserve(gens.size());
  const Mat id = Mat::identity(field, n);
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator size differs from module dimension");
    if (g.field() != field) throw gf::FieldMismatch("generator over a different field");
    blocks.push_back(sub(g, id));
  }
  return kernel(vstack(blocks));
}

std::vector<Mat> quotient_action(std::span<const Mat> gens, const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  const Field& F = s.field();
  const std::vector<std::size_t> comp = s.complement();
  const std::vector<std::size_t>& piv = s.pivots();
  const Mat bt = transpose(s.basis());  // n x k
  std::vector<Mat> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator size differs from ambient dimension");
    if (g.field() != F) throw gf::FieldMismatch("generator over a different field");
    if (s.dim() > 0) {
      const Mat y = mul(g, bt);
      const Mat resid = sub(y, mul(bt, select_rows(y, piv)));
      if (!resid.is_zero()) throw std::invalid_argument("subspace is not invariant under the generators");
    }
    Mat x = select_columns(g, comp);
    if (s.dim() > 0) x = sub(x, mul(bt, select_rows(x, piv)));
    out.push_back(select_rows(x, comp));
  }
  return out;
}

Subspace radical_of_form(const Mat& gram) {
  if (!gram.square()) throw DimensionMismatch("Gram matrix must be square");
  return kernel(gram);
}

Mat restrict_action(const Mat& g, const Subspace& s) {
  const Mat y = mul(g, transpose(s.basis()));
  Mat out(s.field(), s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const Vec col = y.column(j);
    if (!s.contains(col)) throw std::invalid_argument("subspace is not invariant");
    for (std::size_t k = 0; k < s.dim(); ++k) out.set(k, j, col[s.pivots()[k]]);
  }
  return out;
}

}  // namespace modsym::la
