#include "doctest.h"
#include "modsym/dickson.hpp"
#include "modsym/lietype.hpp"

using namespace modsym;
using namespace modsym::lietype;
using la::Mat;

TEST_CASE("make_classical shapes") {
  const auto sp = make_classical(Family::Sp, 2, 3);
  CHECK(sp.dim_v == 4);
  CHECK(sp.form->kind == forms::FormKind::symplectic);
  const auto sl = make_classical(Family::SL, 4, 2);
  CHECK(sl.dim_v == 4);
  CHECK_FALSE(sl.form.has_value());
  const auto so = make_classical(Family::SOodd, 2, 3);
  CHECK(so.dim_v == 5);
  CHECK(la::rank(so.form->gram) == 5);
  CHECK(make_classical(Family::SOeven, 4, 2).form->kind == forms::FormKind::quadratic_char2);
  CHECK(make_classical(Family::SOeven, 4, 3).form->kind == forms::FormKind::symmetric_bilinear);
  CHECK_THROWS(make_classical(Family::SOodd, 2, 4));
  CHECK_THROWS(make_classical(Family::SOeven, 3, 3));
  CHECK(make_classical(Family::SOeven, 3, 3, true).nonstandard);
  CHECK_THROWS(make_classical(Family::SL, 2, 6));
}

TEST_CASE("group membership examples") {
  for (auto [f, m, q] : {std::tuple{Family::SL, 3u, 4u}, {Family::Sp, 2u, 3u}, {Family::SOeven, 4u, 2u}, {Family::SOodd, 2u, 5u}}) {
    const auto s = make_classical(f, m, q);
    CHECK(group_membership(Mat::identity(s.field, s.dim_v), s));
  }
  const auto sl2 = make_classical(Family::SL, 2, 5);
  CHECK(group_membership(Mat::from_rows(sl2.field, {{2, 0}, {0, 3}}), sl2));
  CHECK_FALSE(group_membership(Mat::from_rows(sl2.field, {{2, 0}, {0, 2}}), sl2));
  // Swap of v_1 and v_-1 in Sp_4(F_3): B(v_-1, v_1) = -1 but B(v_1, v_-1) = 1.
  const auto sp = make_classical(Family::Sp, 2, 3);
  Mat swap = Mat::identity(sp.field, 4);
  swap.set(0, 0, 0);
  swap.set(3, 3, 0);
  swap.set(0, 3, 1);
  swap.set(3, 0, 1);
  CHECK_FALSE(group_membership(swap, sp));
  CHECK_THROWS_AS(group_membership(Mat::identity(sp.field, 3), sp), la::DimensionMismatch);
}

TEST_CASE("root generators") {
  const auto sp = ug_generators(make_classical(Family::Sp, 2, 2));
  CHECK(sp.size() == 3);
  CHECK(ug_generators(make_classical(Family::SOeven, 4, 2)).size() == 6);
  const auto sl = ug_generators(make_classical(Family::SL, 2, 3));
  REQUIRE(sl.size() == 1);
  CHECK(sl[0].matrix == Mat::from_rows(gf::Field::make(3), {{1, 1}, {0, 1}}));
  // F_4 doubles the F_p generator count.
  CHECK(ug_generators(make_classical(Family::Sp, 2, 4)).size() == 6);
}

TEST_CASE("intersection dimensions on the grid") {
  struct Row {
    Family f;
    std::size_t m_lo, m_hi;
    bool odd_only;
  };
  for (const Row& row : {Row{Family::SL, 2, 5, false}, Row{Family::Sp, 2, 4, false}, Row{Family::SOeven, 4, 4, false},
                         Row{Family::SOodd, 2, 3, true}})
    for (std::size_t m = row.m_lo; m <= row.m_hi; ++m)
      for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        if (row.odd_only && q % 2 == 0) continue;
        CAPTURE(family_name(row.f));
        CAPTURE(m);
        CAPTURE(q);
        const auto r = intersection_dim(make_classical(row.f, m, q));
        CHECK(r.match);
        CHECK(r.root_span == r.computed);
        CHECK(r.fp_dim == r.computed * gf::Field::of_order(q).r());
      }
  CHECK(intersection_dim(make_classical(Family::SL, 4, 2)).computed == 4);
  CHECK(intersection_dim(make_classical(Family::Sp, 3, 2)).computed == 6);
  CHECK(intersection_dim(make_classical(Family::SOodd, 3, 3)).computed == 3);
}

TEST_CASE("reference ranks") {
  CHECK(rp_reference(Family::Sp, 3, 2) == 6);
  CHECK(rp_reference(Family::SOodd, 3, 3) == 5);
  CHECK(rp_reference(Family::SOodd, 2, 3) == 3);
  CHECK(rp_reference(Family::SOodd, 5, 3) == 11);
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::uint64_t q : {2u, 4u})
      CHECK(intersection_dim(make_classical(Family::Sp, m, q)).computed == rp_reference(Family::SOodd, m, q));
}

TEST_CASE("Siegel unipotent dimension") {
  for (std::size_t g = 1; g <= 5; ++g) {
    CAPTURE(g);
    const std::size_t expected = g * (g + 1) / 2;
    for (std::uint64_t p : {2u, 3u, 5u}) {
      const auto s = make_classical(Family::Sp, g, p, true);
      CHECK(forms::unipotent_isometry_dim(*s.form, standard_w(s)) == expected);
    }
    const auto lp = dickson::lagrangian_pair(g);
    CHECK(forms::unipotent_isometry_dim(dickson::dickson_form(g), lp.w) == expected);
  }
  const auto s = make_classical(Family::Sp, 2, 3);
  const auto bad = la::Subspace::span(Mat::from_rows(s.field, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS_AS(forms::unipotent_isometry_dim(*s.form, bad), std::invalid_argument);
}
