#pragma once

// Dense exact linear algebra over a finite field.
//
// Matrices act on column vectors. Subspaces are stored by their canonical
// reduced row-echelon basis, so two subspaces are equal iff their bases are
// byte-identical. Over GF(2) the heavy operations run on a bit-packed
// representation; the generic path stays available for equivalence checks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "modsym/gf.hpp"

namespace modsym::la {

using gf::Field;
using Vec = std::vector<std::uint32_t>;

class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat zero(const Field& field, std::size_t rows, std::size_t cols) { return Mat(field, rows, cols); }
  static Mat identity(const Field& field, std::size_t n);
  // Entries are reduced into the field's prime subfield for integers, or
  // taken as raw encodings when already < q.
  static Mat from_rows(const Field& field, const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { a_[r * cols_ + c] = v; }

  std::span<const std::uint32_t> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::span<std::uint32_t> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  const std::vector<std::uint32_t>& data() const { return a_; }

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> a_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Mat mul(const Mat& a, const Mat& b);
Vec mul(const Mat& a, std::span<const std::uint32_t> v);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(const Mat& a, std::uint32_t s);
Mat transpose(const Mat& a);
Mat kron(const Mat& a, const Mat& b);
Mat power(const Mat& a, std::uint64_t e);
Mat block_diag(const Mat& a, const Mat& b);
// Rows [r0, r0+nr) x cols [c0, c0+nc).
Mat submatrix(const Mat& a, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc);
Mat select_columns(const Mat& a, std::span<const std::size_t> cols);
Mat select_rows(const Mat& a, std::span<const std::size_t> rows);
Mat vstack(std::span<const Mat> blocks);

enum class Path { automatic, generic, packed };

struct Rref {
  Mat form;  // nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Rref rref(const Mat& m, Path path = Path::automatic);
std::size_t rank(const Mat& m, Path path = Path::automatic);
// Throws std::domain_error when singular.
Mat inverse(const Mat& m);
std::uint32_t det(const Mat& m);

class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace full(const Field& field, std::size_t ambient);
  // Row span of the given matrix.
  static Subspace span(const Mat& rows, Path path = Path::automatic);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Complement coordinates (non-pivot columns), increasing.
  std::vector<std::size_t> complement() const;

  // v minus its projection along the canonical basis; zero iff v lies in
  // the subspace.
  Vec reduce(std::span<const std::uint32_t> v) const;
  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Mat& m, Path path = Path::automatic);

// Particular solution of M x = b with free variables zero, or nullopt if the
// system is inconsistent.
std::optional<Vec> solve(const Mat& m, std::span<const std::uint32_t> b);

// {v : g v = v for every g}; full space for an empty list.
Subspace joint_fixed_space(std::span<const Mat> gens, const Field& field, std::size_t n);

// Induced action on V/S in the basis of S's complement coordinates.
// Throws std::invalid_argument when S is not invariant under some generator.
std::vector<Mat> quotient_action(std::span<const Mat> gens, const Subspace& s);

// Kernel of a Gram matrix.
Subspace radical_of_form(const Mat& gram);

// Restricted action on an invariant subspace, in its canonical basis: column
// j of the result holds the coordinates of g(b_j).
Mat restrict_action(const Mat& g, const Subspace& s);

}  // namespace modsym::la
