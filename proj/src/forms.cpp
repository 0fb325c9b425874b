#include "modsym/forms.hpp"

#include <stdexcept>

namespace modsym::forms {

using la::Mat;

const char* kind_name(FormKind kind) {
  switch (kind) {
    case FormKind::symplectic:
      return "symplectic";
    case FormKind::symmetric_bilinear:
      return "symmetric_bilinear";
    case FormKind::quadratic_char2:
      return "quadratic_char2";
  }
  return "unknown";
}

namespace {

void require_square_nondegenerate(const Mat& g) {
  if (!g.square()) throw std::domain_error("Gram matrix must be square");
  if (la::rank(g) != g.rows()) throw std::domain_error("Gram matrix is degenerate");
}

bool is_symmetric(const Mat& g) { return la::transpose(g) == g; }

}  // namespace

FormSpec make_symplectic(Mat gram) {
  require_square_nondegenerate(gram);
  const auto& F = gram.field();
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (gram(i, i) != 0) throw std::domain_error("symplectic Gram needs a zero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (gram(i, j) != F.neg(gram(j, i))) throw std::domain_error("symplectic Gram must be antisymmetric");
  }
  return FormSpec{FormKind::symplectic, std::move(gram), {}};
}

FormSpec make_symmetric(Mat gram) {
  require_square_nondegenerate(gram);
  if (!is_symmetric(gram)) throw std::domain_error("Gram matrix is not symmetric");
  return FormSpec{FormKind::symmetric_bilinear, std::move(gram), {}};
}

FormSpec make_quadratic(Mat polar, std::vector<std::uint32_t> quad_diag) {
  if (polar.field().p() != 2) throw std::domain_error("quadratic forms are only modelled in characteristic 2");
  require_square_nondegenerate(polar);
  if (!is_symmetric(polar)) throw std::domain_error("polar form is not symmetric");
  for (std::size_t i = 0; i < polar.rows(); ++i)
    if (polar(i, i) != 0) throw std::domain_error("polar form of a quadratic form is alternating");
  if (quad_diag.size() != polar.rows()) throw la::DimensionMismatch("quadratic diagonal length");
  return FormSpec{FormKind::quadratic_char2, std::move(polar), std::move(quad_diag)};
}

std::uint32_t bilinear(const FormSpec& f, std::span<const std::uint32_t> u, std::span<const std::uint32_t> v) {
  const auto& F = f.gram.field();
  const la::Vec gv = la::mul(f.gram, v);
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc = F.add(acc, F.mul(u[i], gv[i]));
  return acc;
}

std::uint32_t quadratic_value(const FormSpec& f, std::span<const std::uint32_t> v) {
  if (f.kind != FormKind::quadratic_char2) throw std::invalid_argument("not a quadratic form");
  const auto& F = f.gram.field();
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    acc = F.add(acc, F.mul(f.quad_diag[i], F.mul(v[i], v[i])));
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] && f.gram(i, j)) acc = F.add(acc, F.mul(f.gram(i, j), F.mul(v[i], v[j])));
  }
  return acc;
}

bool preserves(const Mat& g, const FormSpec& f) {
  if (g.rows() != f.dim() || g.cols() != f.dim()) throw la::DimensionMismatch("form and matrix sizes differ");
  if (la::mul(la::transpose(g), la::mul(f.gram, g)) != f.gram) return false;
  if (f.kind == FormKind::quadratic_char2) {
    // Q o g - Q is additive once the polar form is preserved, so basis
    // vectors suffice.
    for (std::size_t i = 0; i < f.dim(); ++i)
      if (quadratic_value(f, g.column(i)) != f.quad_diag[i]) return false;
  }
  return true;
}

bool is_totally_isotropic(const FormSpec& f, const la::Subspace& w) {
  const Mat& b = w.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (f.kind == FormKind::quadratic_char2 && quadratic_value(f, b.row(i)) != 0) return false;
    for (std::size_t j = 0; j < b.rows(); ++j)
      if (bilinear(f, b.row(i), b.row(j)) != 0) return false;
  }
  return true;
}

std::vector<Mat> hom_quotient_basis(const la::Subspace& w) {
  const std::size_t n = w.ambient_dim();
  const auto& F = w.field();
  const auto comp = w.complement();
  const Mat& basis = w.basis();
  std::vector<Mat> out;
  for (std::size_t a = 0; a < w.dim(); ++a)
    for (std::size_t b = 0; b < comp.size(); ++b) {
      // l_b = e_{c_b}^T - sum_k basis(k, c_b) e_{pivot_k}^T
      la::Vec l(n, 0);
      l[comp[b]] = 1;
      for (std::size_t k = 0; k < w.dim(); ++k) l[w.pivots()[k]] = F.sub(l[w.pivots()[k]], basis(k, comp[b]));
      Mat e(F, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) e.set(r, c, F.mul(basis(a, r), l[c]));
      out.push_back(std::move(e));
    }
  return out;
}

std::size_t unipotent_isometry_dim(const FormSpec& f, const la::Subspace& w) {
  if (w.ambient_dim() != f.dim()) throw la::DimensionMismatch("subspace and form dimensions differ");
  if (!is_totally_isotropic(f, w)) throw std::invalid_argument("W must be totally isotropic");
  const auto& F = f.gram.field();
  const std::size_t n = f.dim();
  const auto basis = hom_quotient_basis(w);
  if (basis.empty()) return 0;
  // B(phi u, phi v) and Q(phi v) vanish on isotropic W, so preservation is
  // linear in phi: phi^T G + G phi = 0, plus diag(G phi) = 0 for Q.
  const bool quad = f.kind == FormKind::quadratic_char2;
  const std::size_t rows = n * n + (quad ? n : 0);
  Mat c(F, rows, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Mat ge = la::mul(f.gram, basis[k]);
    const Mat sym = la::add(la::mul(la::transpose(basis[k]), f.gram), ge);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.set(i * n + j, k, sym(i, j));
    if (quad)
      for (std::size_t i = 0; i < n; ++i) c.set(n * n + i, k, ge(i, i));
  }
  return basis.size() - la::rank(c);
}

}  // namespace modsym::forms
