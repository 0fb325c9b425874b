#include "doctest.h"
#include "modsym/dickson.hpp"

using namespace modsym;
using dickson::ParabolicMode;
using la::Mat;

TEST_CASE("perm_irrep dimensions and faithfulness") {
  const auto r5 = dickson::perm_irrep(5, 2);
  CHECK(r5.dim == 4);
  CHECK(r5.faithful == true);
  const auto r6 = dickson::perm_irrep(6, 2);
  CHECK(r6.dim == 4);
  CHECK(rep::image_order(r6, 1000) == 720);
  const auto r4 = dickson::perm_irrep(4, 2);
  CHECK(r4.dim == 2);
  CHECK(r4.faithful == false);
  // Kernel computed over all 24 elements is exactly K.
  std::vector<grp::Perm> kernel;
  grp::enumerate(r4.group, 100, [&](const grp::Perm& g) {
    if (r4.image(g).is_identity()) kernel.push_back(g);
  });
  std::sort(kernel.begin(), kernel.end());
  const auto k = grp::closure(grp::special_subgroup(grp::SpecialKind::K_power_H, 4, 1));
  CHECK(kernel == k.elements);
  CHECK(dickson::perm_irrep(5, 3).dim == 4);
  CHECK(dickson::perm_irrep(6, 3).dim == 4);
  CHECK(dickson::perm_irrep(7, 7).dim == 5);
  CHECK_THROWS(dickson::perm_irrep(1, 2));
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      CAPTURE(n);
      CAPTURE(p);
      const auto r = dickson::perm_irrep(n, p);
      CHECK(r.dim == (p == 2 ? 2 * dickson::half_dim(n) : (n % p ? n - 1 : n - 2)));
      CHECK(rep::relations_hold(r, 0));
    }
}

TEST_CASE("perm_irrep agrees with the hyperplane quotient of the permutation module") {
  // Oracle: for p odd and p not dividing n, the sum-zero hyperplane of F_p^n
  // in basis d_i - d_n. Image of g computed from the permutation matrix.
  const gf::Field F = gf::Field::make(5);
  const auto r = dickson::perm_irrep(7, 5);
  const auto perm = rep::permutation_rep(r.group, F);
  Mat b(F, 7, 6);  // columns d_i - d_7
  for (std::size_t i = 0; i < 6; ++i) {
    b.set(i, i, 1);
    b.set(6, i, F.neg(1));
  }
  for (std::size_t k = 0; k < r.images.size(); ++k) {
    // P b = b M
    CHECK(la::mul(perm.images[k], b) == la::mul(b, r.images[k]));
  }
}

TEST_CASE("dickson form") {
  const auto f2 = dickson::dickson_form(2);
  CHECK(la::rank(f2.gram) == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(f2.gram(i, i) == 0);
  CHECK(dickson::dickson_form(1).gram == Mat::from_rows(gf::Field::make(2), {{0, 1}, {1, 0}}));
  for (std::size_t n = 5; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(rep::check_invariance(dickson::perm_irrep(n, 2), dickson::dickson_form(dickson::half_dim(n))));
  }
  // Standard symplectic Gram in the e-basis is not invariant for n = 6.
  const gf::Field F2 = gf::Field::make(2);
  Mat std_gram(F2, 4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    std_gram.set(i, 2 + i, 1);
    std_gram.set(2 + i, i, 1);
  }
  CHECK_FALSE(rep::check_invariance(dickson::perm_irrep(6, 2), forms::make_symplectic(std_gram)));
  // Identity images preserve anything.
  auto triv = rep::with_images(dickson::perm_irrep(6, 2), 4, {Mat::identity(F2, 4), Mat::identity(F2, 4)}, {}, "id");
  CHECK(rep::check_invariance(triv, f2));
}

TEST_CASE("lagrangian pair") {
  const gf::Field F2 = gf::Field::make(2);
  for (std::size_t d = 1; d <= 8; ++d) {
    const auto lp = dickson::lagrangian_pair(d);
    CHECK(lp.duality.is_identity());
    CHECK(lp.w.dim() == d);
    CHECK(lp.w_dual.dim() == d);
  }
  const auto f = dickson::dickson_form(2);
  const la::Vec w1{1, 1, 0, 0}, w2{0, 0, 1, 1}, w1d{1, 0, 0, 0};
  CHECK(forms::bilinear(f, w1, w1d) == 1);
  CHECK(forms::bilinear(f, w1, w2) == 0);
}

TEST_CASE("parabolic intersections for small n") {
  for (std::size_t n = 5; n <= 8; ++n) {
    CAPTURE(n);
    const auto lp = dickson::lagrangian_pair(dickson::half_dim(n));
    const auto s = dickson::parabolic_trivial_subgroup(dickson::perm_irrep(n, 2), lp.w, ParabolicMode::exact_enum);
    CHECK(s.exact);
    CHECK(s.rank == n / 2);
    const auto a = dickson::parabolic_trivial_subgroup(
        dickson::perm_irrep(grp::standard_gens(grp::StandardKind::alt, n), 2), lp.w, ParabolicMode::exact_enum);
    CHECK(a.rank == n / 2 - 1);
    const auto c = dickson::parabolic_trivial_subgroup(dickson::perm_irrep(n, 2), lp.w, ParabolicMode::certified_bound,
                                                       grp::kDefaultEnumCap, dickson::siegel_witnesses(n, false));
    CHECK(c.rank == n / 2);
    CHECK_FALSE(c.exact);
  }
  const auto lp = dickson::lagrangian_pair(3);
  grp::GroupPresentation trivial{8, {}, "1"};
  CHECK(dickson::parabolic_trivial_subgroup(dickson::perm_irrep(trivial, 2), lp.w, ParabolicMode::exact_enum).rank == 0);
  CHECK_THROWS_AS(dickson::parabolic_trivial_subgroup(dickson::perm_irrep(8, 2), lp.w, ParabolicMode::exact_enum, 100),
                  grp::CapExceeded);
  CHECK_THROWS_AS(dickson::parabolic_trivial_subgroup(dickson::perm_irrep(8, 2), lp.w, ParabolicMode::certified_bound,
                                                      100, {grp::Perm::from_cycles("(1 2 3)", 8)}),
                  std::invalid_argument);
}

TEST_CASE("diagonal representation") {
  const gf::Field F2 = gf::Field::make(2);
  const auto s3 = rep::permutation_rep(grp::standard_gens(grp::StandardKind::sym, 3), F2);
  auto [d, f] = dickson::diagonal_rep(s3);
  CHECK(d.dim == 6);
  CHECK(rep::check_invariance(d, f));
  CHECK(rep::relations_hold(d, 1));
  auto [d5, f5] = dickson::diagonal_rep(dickson::perm_irrep(5, 3));
  CHECK(d5.dim == 8);
  for (const auto& g : d5.images) CHECK(la::mul(la::transpose(g), la::mul(f5.gram, g)) == f5.gram);
}

TEST_CASE("GL parabolic check") {
  const gf::Field F2 = gf::Field::make(2);
  const auto perm6 = rep::permutation_rep(grp::standard_gens(grp::StandardKind::sym, 6), F2);
  const auto w = la::Subspace::span(Mat::from_rows(F2, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}}));
  CHECK(dickson::gl_parabolic_check(perm6, w, grp::special_subgroup(grp::SpecialKind::H, 6)));
  CHECK(dickson::gl_parabolic_check(perm6, w, grp::GroupPresentation{6, {}, "1"}));
  CHECK_FALSE(dickson::gl_parabolic_check(perm6, w, grp::GroupPresentation{6, {grp::Perm::from_cycles("(1 2 3)", 6)}, "C3"}));
}
