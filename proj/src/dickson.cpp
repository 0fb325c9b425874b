#include "modsym/dickson.hpp"

#include <algorithm>
#include <stdexcept>

namespace modsym::dickson {

using la::Mat;
using la::Subspace;

std::size_t half_dim(std::size_t n) { return (n + 1) / 2 - 1; }

rep::Representation perm_irrep(std::size_t n, std::uint32_t p) {
  return perm_irrep(grp::standard_gens(grp::StandardKind::sym, n), p);
}

rep::Representation perm_irrep(const grp::GroupPresentation& g, std::uint32_t p) {
  const std::size_t n = g.degree;
  if (n < 2) throw std::invalid_argument("permutation irrep needs n >= 2");
  const gf::Field F = gf::Field::make(p);
  // Ambient F^N with the last coordinate as base point; coordinate N-1
  // (1-based) is the sum of the others when p | N.
  const std::size_t ambient = (p == 2) ? 2 * ((n + 1) / 2) : n;
  const bool quotient = ambient % p == 0;
  const std::size_t dim = quotient ? ambient - 2 : ambient - 1;
  rep::Representation r;
  r.group = g;
  r.field = F;
  r.dim = dim;
  r.label = "perm_irrep(" + std::to_string(n) + "," + std::to_string(p) + ")";
  r.image_of = [F, n, ambient, dim, quotient](const grp::Perm& s) {
    if (s.degree() != n) throw std::invalid_argument("permutation degree mismatch");
    // Column of f(x) = class of d_x - d_N, x 0-based.
    auto add_f = [&](Mat& m, std::size_t col, std::size_t x, std::uint32_t sign) {
      if (x == ambient - 1) return;
      if (x < dim) {
        m.set(x, col, F.add(m(x, col), sign));
        return;
      }
      // x == ambient - 2 in the quotient case: -(e_1 + ... + e_dim).
      if (!quotient) throw std::logic_error("unexpected point");
      for (std::size_t i = 0; i < dim; ++i) m.set(i, col, F.sub(m(i, col), sign));
    };
    auto act = [&](std::size_t x) { return x < n ? s(x) : x; };
    Mat m(F, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      add_f(m, j, act(j), 1);
      add_f(m, j, act(ambient - 1), F.neg(1));
    }
    return m;
  };
  for (const auto& x : g.gens) r.images.push_back(r.image_of(x));
  std::uint64_t order = 1;
  for (std::size_t i = 2; i <= n && order <= rep::kAutoFaithfulLimit; ++i) order *= i;
  if (order <= rep::kAutoFaithfulLimit) r.faithful = rep::compute_faithfulness(r, rep::kAutoFaithfulLimit);
  return r;
}

forms::FormSpec dickson_form(std::size_t d) {
  if (d < 1) throw std::invalid_argument("Dickson form needs d >= 1");
  const gf::Field F2 = gf::Field::make(2);
  Mat j(F2, 2 * d, 2 * d);
  for (std::size_t a = 0; a < 2 * d; ++a)
    for (std::size_t b = 0; b < 2 * d; ++b) j.set(a, b, a != b);
  return forms::make_symplectic(std::move(j));
}

LagrangianPair lagrangian_pair(std::size_t d) {
  const forms::FormSpec f = dickson_form(d);
  const gf::Field F2 = gf::Field::make(2);
  Mat omega(F2, d, 2 * d), dual(F2, d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    omega.set(i, 2 * i, 1);
    omega.set(i, 2 * i + 1, 1);
    for (std::size_t j = 0; j <= 2 * i; ++j) dual.set(i, j, 1);
  }
  LagrangianPair out;
  out.duality = la::mul(omega, la::mul(f.gram, la::transpose(dual)));
  if (!out.duality.is_identity()) throw std::logic_error("Lagrangian bases are not dual");
  out.w = Subspace::span(omega);
  out.w_dual = Subspace::span(dual);
  if (out.w.dim() != d || out.w_dual.dim() != d) throw std::logic_error("Lagrangian basis is dependent");
  if (!forms::is_totally_isotropic(f, out.w) || !forms::is_totally_isotropic(f, out.w_dual))
    throw std::logic_error("Lagrangian subspace is not isotropic");
  return out;
}

bool acts_unipotently(const Mat& g, const Subspace& w) {
  const std::size_t n = w.ambient_dim();
  if (!g.square() || g.rows() != n) throw la::DimensionMismatch("matrix and subspace sizes differ");
  const auto& F = g.field();
  for (std::size_t k = 0; k < w.dim(); ++k) {
    const auto b = w.basis().row(k);
    const la::Vec gb = la::mul(g, b);
    if (!std::equal(gb.begin(), gb.end(), b.begin())) return false;
  }
  la::Vec col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = i == j ? F.sub(g(i, j), 1) : g(i, j);
    if (!w.contains(col)) return false;
  }
  return true;
}

namespace {

// Greedy basis of an elementary abelian group given as a full element list.
std::vector<grp::Perm> greedy_basis(const std::vector<grp::Perm>& elems, std::uint32_t p, std::size_t degree) {
  std::vector<grp::Perm> basis;
  std::vector<grp::Perm> span{grp::Perm(degree)};
  for (const auto& x : elems) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    basis.push_back(x);
    std::vector<grp::Perm> grown;
    grp::Perm xj(degree);
    for (std::uint32_t j = 0; j < p; ++j, xj = xj * x)
      for (const auto& s : span) grown.push_back(s * xj);
    span = std::move(grown);
  }
  return basis;
}

}  // namespace

ParabolicResult parabolic_trivial_subgroup(const rep::Representation& r, const Subspace& w, ParabolicMode mode,
                                           std::uint64_t cap, const std::vector<grp::Perm>& candidates) {
  const std::uint32_t p = r.field.p();
  ParabolicResult out;
  if (mode == ParabolicMode::certified_bound) {
    for (const auto& c : candidates)
      if (!acts_unipotently(r.image(c), w)) throw std::invalid_argument("candidate " + c.to_cycles() + " is not in G n U");
    grp::GroupPresentation h{r.group.degree, candidates, "candidates"};
    const auto chk = grp::is_elementary_abelian(h, p, cap);
    if (!chk.is_elementary_abelian) throw std::invalid_argument("candidates do not generate an elementary abelian group");
    out.rank = chk.rank;
    out.order = chk.order;
    out.witness = candidates;
    out.exact = false;
    return out;
  }
  std::vector<grp::Perm> kept;
  const bool done = grp::enumerate(r.group, cap, [&](const grp::Perm& g) {
    if (acts_unipotently(r.image(g), w)) kept.push_back(g);
  });
  if (!done) throw grp::CapExceeded("group exceeds enumeration cap");
  std::sort(kept.begin(), kept.end());
  for (const auto& a : kept) {
    if (!grp::power(a, p).is_identity()) throw std::logic_error("G n U has an element of order other than p");
    for (const auto& b : kept)
      if (a * b != b * a) throw std::logic_error("G n U is not abelian");
  }
  out.witness = greedy_basis(kept, p, r.group.degree);
  out.rank = out.witness.size();
  out.order = kept.size();
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < out.rank; ++i) expect *= p;
  if (expect != out.order) throw std::logic_error("G n U is not closed");
  out.exact = true;
  return out;
}

std::vector<grp::Perm> siegel_witnesses(std::size_t n, bool alternating) {
  const auto g = grp::special_subgroup(alternating ? grp::SpecialKind::tilde_H : grp::SpecialKind::H, n);
  return g.gens;
}

std::pair<rep::Representation, forms::FormSpec> diagonal_rep(const rep::Representation& r) {
  const gf::Field F = r.field;
  const std::size_t n = r.dim;
  auto lift = [](const Mat& g) { return la::block_diag(g, la::transpose(la::inverse(g))); };
  std::vector<Mat> images;
  for (const auto& g : r.images) images.push_back(lift(g));
  std::function<Mat(const grp::Perm&)> image_of;
  if (r.image_of) image_of = [base = r.image_of, lift](const grp::Perm& x) { return lift(base(x)); };
  rep::Representation d = rep::with_images(r, 2 * n, std::move(images), image_of, "diag(" + r.label + ")");
  d.faithful = r.faithful;
  Mat j(F, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j.set(i, n + i, 1);
    j.set(n + i, i, F.neg(1));
  }
  forms::FormSpec f = forms::make_symplectic(std::move(j));
  if (!rep::check_invariance(d, f)) throw std::logic_error("diagonal representation does not preserve its form");
  return {std::move(d), std::move(f)};
}

bool gl_parabolic_check(const rep::Representation& r, const Subspace& w, const grp::GroupPresentation& h) {
  if (h.degree != r.group.degree) throw std::invalid_argument("subgroup degree differs from the group");
  for (const auto& x : h.gens)
    if (!acts_unipotently(r.image(x), w)) return false;
  return true;
}

}  // namespace modsym::dickson
