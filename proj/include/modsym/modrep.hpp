#pragma once

// Modular representations of S_n: Specht modules S^lambda built inside the
// tabloid module, the irreducibles D^lambda = S^lambda / rad, restriction to
// p-subgroups, Loewy series, free summands, Jordan profiles and tensors.
//
// A module stores the action of the Coxeter generators s_i = (i, i+1),
// i = 1..n-1; matrices act on column vectors.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modsym/exactla.hpp"
#include "modsym/grp.hpp"

namespace modsym::modrep {

struct Partition {
  std::vector<std::size_t> parts;

  Partition() = default;
  explicit Partition(std::vector<std::size_t> p);  // validates

  // "5,3", "(5,3)" or "5 3".
  static Partition parse(const std::string& text);

  std::size_t n() const;
  std::size_t length() const { return parts.size(); }
  bool is_p_regular(std::uint32_t p) const;
  std::string str() const;  // "(5,3)"

  auto operator<=>(const Partition&) const = default;
};

// All partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions(std::size_t n);
std::vector<Partition> p_regular_partitions(std::size_t n, std::uint32_t p);

std::size_t hook_length_dim(const Partition& lambda);

using Tableau = std::vector<std::vector<std::size_t>>;  // rows of 0-based entries
std::vector<Tableau> standard_tableaux(const Partition& lambda);

struct GModule {
  std::size_t n = 0;
  gf::Field field;
  std::size_t dim = 0;
  std::vector<la::Mat> gens;  // s_1 .. s_{n-1}
  std::string label;
};

// Validates sizes and the Coxeter relations; throws std::invalid_argument.
GModule make_module(std::size_t n, const gf::Field& field, std::size_t dim, std::vector<la::Mat> gens, std::string label);
bool coxeter_relations_hold(const GModule& m);

constexpr std::size_t kMaxSpechtDegree = 12;

// Throws std::invalid_argument for n above kMaxSpechtDegree.
GModule specht_module(const Partition& lambda, std::uint32_t p);
// Throws std::invalid_argument unless lambda is p-regular.
GModule irreducible_D(const Partition& lambda, std::uint32_t p);

GModule trivial_module(std::size_t n, const gf::Field& field);
GModule tensor_module(const GModule& a, const GModule& b);
// The first k-1 generators: restriction to S_k.
GModule restrict_to_prefix(const GModule& m, std::size_t k);

// Product of generator matrices along a bubble-sort factorization of g.
la::Mat act_by_perm(const GModule& m, const grp::Perm& g);

struct LoewySeries {
  std::vector<std::size_t> layer_dims;  // bottom (invariants) first
  std::size_t length() const { return layer_dims.size(); }
};

// Invariants-quotient filtration for a p-group given by generator matrices.
LoewySeries loewy_series(const std::vector<la::Mat>& gens, const gf::Field& field, std::size_t dim);
// Throws std::invalid_argument when some generator of h is not of p-power order.
LoewySeries loewy_length(const GModule& m, const grp::GroupPresentation& h);

// Rank of N = sum over the group of its matrices. gens must generate an
// elementary abelian p-group of order p^gens.size() (a basis).
std::size_t norm_rank(const std::vector<la::Mat>& basis_gens, const gf::Field& field, std::size_t dim);
// Throws std::invalid_argument unless h is elementary abelian.
std::size_t free_summand_count(const GModule& m, const grp::GroupPresentation& h);

// Jordan block sizes (ascending) of a matrix with (g - I)^p = 0.
std::vector<std::size_t> jordan_profile(const la::Mat& g, std::uint32_t p);
// Throws std::invalid_argument unless g has order exactly p.
std::vector<std::size_t> cyclic_profile(const GModule& m, const grp::Perm& g);

struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> layers;
  std::size_t free_count = 0;
  std::vector<std::size_t> fixed_dims;  // per generator

  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};

// basis_gens as for norm_rank.
Fingerprint fingerprint_of_action(const std::vector<la::Mat>& basis_gens, const gf::Field& field, std::size_t dim);
Fingerprint fingerprint(const GModule& m, const grp::GroupPresentation& h);

// Images of the generators of h, reduced to an independent generating set
// when h is elementary abelian.
std::vector<la::Mat> subgroup_images(const GModule& m, const grp::GroupPresentation& h);

}  // namespace modsym::modrep
