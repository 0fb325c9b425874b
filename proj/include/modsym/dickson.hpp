#pragma once

// The mod-p permutation irreducible of S_n, Dickson's invariant symplectic
// form over F_2, the diagonal symplectic representation V + V^*, and groups
// meeting the unipotent radical of a parabolic.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "modsym/forms.hpp"
#include "modsym/grp.hpp"
#include "modsym/rep.hpp"

namespace modsym::dickson {

// ceil(n/2) - 1; the permutation irrep over F_2 has dimension 2 d_n.
std::size_t half_dim(std::size_t n);

// For p = 2 the module is a subquotient of F_2^N, N = 2 ceil(n/2), with basis
// e_i = d_i + d_N (i = 1..N-2). For odd p: e_i = d_i - d_n, taken modulo the
// diagonal when p | n. The group defaults to S_n.
rep::Representation perm_irrep(std::size_t n, std::uint32_t p);
rep::Representation perm_irrep(const grp::GroupPresentation& g, std::uint32_t p);

// Gram matrix all-ones minus identity on F_2^{2d}.
forms::FormSpec dickson_form(std::size_t d);

struct LagrangianPair {
  la::Subspace w;       // span of w_i = e_{2i-1} + e_{2i}
  la::Subspace w_dual;  // span of w_i^* = e_1 + ... + e_{2i-1}
  la::Mat duality;      // B(w_i, w_j^*)
};
// Throws std::logic_error if the duality matrix is not the identity or
// either subspace fails to be isotropic.
LagrangianPair lagrangian_pair(std::size_t d);

enum class ParabolicMode { exact_enum, certified_bound };

struct ParabolicResult {
  std::size_t rank = 0;
  std::uint64_t order = 1;
  std::vector<grp::Perm> witness;
  bool exact = false;
};

// {g : (g - I) W = 0 and (g - I) V in W}. exact_enum enumerates the group
// (CapExceeded past cap) and verifies the result is elementary abelian;
// certified_bound checks the supplied candidates (std::invalid_argument if one
// fails) and reports their rank.
ParabolicResult parabolic_trivial_subgroup(const rep::Representation& r, const la::Subspace& w, ParabolicMode mode,
                                           std::uint64_t cap = grp::kDefaultEnumCap,
                                           const std::vector<grp::Perm>& candidates = {});

// Acts trivially on W and on V/W.
bool acts_unipotently(const la::Mat& g, const la::Subspace& w);

// (12), (34), ... for S_n; (12)(34), (12)(56), ... for A_n.
std::vector<grp::Perm> siegel_witnesses(std::size_t n, bool alternating);

// g -> diag(g, g^{-T}) with Gram [[0, I], [-I, 0]].
std::pair<rep::Representation, forms::FormSpec> diagonal_rep(const rep::Representation& r);

// Every generator of h, taken in r's group, acts trivially on W and V/W.
bool gl_parabolic_check(const rep::Representation& r, const la::Subspace& w, const grp::GroupPresentation& h);

}  // namespace modsym::dickson
