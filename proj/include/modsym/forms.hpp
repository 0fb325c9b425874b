#pragma once

// Invariant bilinear and quadratic forms, and the linear system describing
// unipotent isometries I + phi with phi : V -> W killing W.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "modsym/exactla.hpp"

namespace modsym::forms {

enum class FormKind { symplectic, symmetric_bilinear, quadratic_char2 };

const char* kind_name(FormKind kind);

struct FormSpec {
  FormKind kind = FormKind::symplectic;
  la::Mat gram;
  // Quadratic kind only: Q(x) = sum_i quad_diag[i] x_i^2 + sum_{i<j} gram(i,j) x_i x_j.
  std::vector<std::uint32_t> quad_diag;

  std::size_t dim() const { return gram.rows(); }
};

// Each constructor validates its invariants and throws std::domain_error on a
// degenerate or ill-shaped Gram matrix.
FormSpec make_symplectic(la::Mat gram);
FormSpec make_symmetric(la::Mat gram);
FormSpec make_quadratic(la::Mat polar, std::vector<std::uint32_t> quad_diag);

std::uint32_t bilinear(const FormSpec& f, std::span<const std::uint32_t> u, std::span<const std::uint32_t> v);
std::uint32_t quadratic_value(const FormSpec& f, std::span<const std::uint32_t> v);

// g^T gram g == gram, and Q(g e_i) == Q(e_i) for the quadratic kind.
bool preserves(const la::Mat& g, const FormSpec& f);

// Totally isotropic (and totally singular for the quadratic kind).
bool is_totally_isotropic(const FormSpec& f, const la::Subspace& w);

// Dimension over the base field of {phi in Hom(V/W, W) : I + phi preserves
// the form}. Throws std::invalid_argument unless W is totally isotropic.
std::size_t unipotent_isometry_dim(const FormSpec& f, const la::Subspace& w);

// The elementary maps spanning Hom(V/W, W): E_ab = w_a (x) l_b, where l_b reads
// the b-th complement coordinate of v modulo W.
std::vector<la::Mat> hom_quotient_basis(const la::Subspace& w);

}  // namespace modsym::forms
