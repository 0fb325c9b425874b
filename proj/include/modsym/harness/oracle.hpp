#pragma once

// Brute-force reference computations, kept independent of the main code
// paths they are compared against.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modsym/exactla.hpp"
#include "modsym/grp.hpp"
#include "modsym/modrep.hpp"

namespace modsym::harness::oracle {

constexpr std::uint64_t kGroupCap = 10'000'000;
constexpr std::size_t kMaxModuleDim = 8;
constexpr std::size_t kMaxTableauDegree = 12;
constexpr std::size_t kSubmoduleCap = 50'000;

struct EnumParabolic {
  std::uint64_t order = 0;
  std::size_t rank = 0;
  bool elementary_abelian = false;
  std::vector<grp::Perm> elements;
};

// Elements of S_n (or A_n) acting trivially on the pair subspace W and on
// V/W, where V is the even-weight vectors of F_2^N modulo the all-ones
// vector, N = 2 ceil(n/2), and W is spanned by the pair vectors. Runs over
// all n! permutations. Throws grp::CapExceeded past kGroupCap.
EnumParabolic enum_parabolic(std::size_t n, bool alternating);

struct Decomposition {
  std::vector<std::size_t> summand_dims;  // ascending
  std::size_t free_count = 0;
  std::size_t submodules = 0;
};

// Krull-Schmidt splitting of a GF(2) module for a group of the given order,
// by exhaustive search over pairs of complementary submodules. A summand is
// free when its dimension equals the group order and one vector generates
// it. Throws std::invalid_argument past kMaxModuleDim and grp::CapExceeded
// past kSubmoduleCap submodules.
Decomposition decompose_small_module(const std::vector<la::Mat>& gens, std::size_t group_order);

// Standard tableaux counted by backtracking over cell fillings.
std::uint64_t tableau_count(const modrep::Partition& lambda);

struct TestModule {
  std::string kind;
  std::size_t group_order = 0;
  std::vector<la::Mat> gens;
};

// Random GF(2) modules of dimension <= 6 for C_2 and C_2 x C_2: square-zero
// extensions, three-layer extensions, sums with the regular module, all
// conjugated by random invertible matrices.
std::vector<TestModule> random_test_modules(std::uint64_t seed, std::size_t per_kind);

struct NormValidation {
  std::size_t cases = 0;
  std::size_t agreed = 0;
  std::vector<std::string> mismatches;
};

// Compares modrep::norm_rank with decompose_small_module on random modules.
NormValidation validate_norm_rank(std::uint64_t seed, std::size_t per_kind);

}  // namespace modsym::harness::oracle
