#include "modsym/lietype.hpp"

#include <stdexcept>

#include "modsym/dickson.hpp"

namespace modsym::lietype {

using la::Mat;

const char* family_name(Family f) {
  switch (f) {
    case Family::SL:
      return "SL";
    case Family::Sp:
      return "Sp";
    case Family::SOeven:
      return "SOeven";
    case Family::SOodd:
      return "SOodd";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::SL, Family::Sp, Family::SOeven, Family::SOodd})
    if (s == family_name(f)) return f;
  throw std::invalid_argument("unknown classical family: " + s);
}

bool in_standard_range(Family family, std::size_t m) { return m >= (family == Family::SOeven ? 4u : 2u); }

namespace {

std::size_t pos(std::size_t m, long i) {
  return i > 0 ? static_cast<std::size_t>(i - 1) : 2 * m - static_cast<std::size_t>(-i);
}

}  // namespace

ClassicalSpec make_classical(Family family, std::size_t m, std::uint64_t q, bool allow_nonstandard) {
  if (m < 1) throw std::invalid_argument("rank parameter must be >= 1");
  const gf::Field F = gf::Field::of_order(q);
  if (family == Family::SOodd && F.p() == 2) throw std::invalid_argument("SO_2m+1 is only modelled for odd q");
  ClassicalSpec s;
  s.family = family;
  s.m = m;
  s.field = F;
  s.nonstandard = !in_standard_range(family, m);
  if (s.nonstandard && !allow_nonstandard) throw std::invalid_argument("m below the standard range for this family");
  if (family == Family::SL) {
    s.dim_v = m;
    return s;
  }
  s.dim_v = family == Family::SOodd ? 2 * m + 1 : 2 * m;
  Mat g(F, s.dim_v, s.dim_v);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t a = pos(m, static_cast<long>(i)), b = pos(m, -static_cast<long>(i));
    g.set(a, b, 1);
    g.set(b, a, family == Family::Sp ? F.neg(1) : 1);
  }
  if (family == Family::Sp) {
    s.form = forms::make_symplectic(std::move(g));
  } else if (family == Family::SOeven && F.p() == 2) {
    s.form = forms::make_quadratic(std::move(g), std::vector<std::uint32_t>(s.dim_v, 0));
  } else {
    if (family == Family::SOodd) g.set(2 * m, 2 * m, 1);
    s.form = forms::make_symmetric(std::move(g));
  }
  return s;
}

bool group_membership(const Mat& g, const ClassicalSpec& spec) {
  if (!g.square() || g.rows() != spec.dim_v) throw la::DimensionMismatch("matrix size differs from dim V");
  if (spec.family == Family::SL) return la::det(g) == 1;
  if (!forms::preserves(g, *spec.form)) return false;
  if (spec.family == Family::SOeven || spec.family == Family::SOodd) return la::det(g) == 1;
  return true;
}

la::Subspace standard_w(const ClassicalSpec& spec) {
  const std::size_t k = spec.family == Family::SL ? spec.m / 2 : spec.m;
  Mat b(spec.field, k, spec.dim_v);
  for (std::size_t i = 0; i < k; ++i) b.set(i, i, 1);
  return la::Subspace::span(b);
}

std::vector<RootElement> ug_generators(const ClassicalSpec& spec) {
  const auto& F = spec.field;
  const std::size_t m = spec.m;
  std::vector<std::uint32_t> scalars;
  for (std::uint32_t k = 0, t = 1; k < F.r(); ++k, t *= F.p()) scalars.push_back(t);
  std::vector<RootElement> out;
  auto emit = [&](const std::string& label, std::uint32_t t, const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>& entries) {
    Mat g = Mat::identity(F, spec.dim_v);
    for (auto [r, c, v] : entries) g.set(r, c, F.add(g(r, c), v));
    out.push_back(RootElement{label, t, std::move(g)});
  };
  auto e = [](std::size_t i) { return "e" + std::to_string(i); };
  for (std::uint32_t t : scalars) {
    if (spec.family == Family::SL) {
      for (std::size_t i = 1; i <= m / 2; ++i)
        for (std::size_t j = m / 2 + 1; j <= m; ++j) emit(e(i) + "-" + e(j), t, {{i - 1, j - 1, t}});
      continue;
    }
    const std::uint32_t s = spec.family == Family::Sp ? t : F.neg(t);
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = i + 1; j <= m; ++j) {
        const long li = static_cast<long>(i), lj = static_cast<long>(j);
        // v_-j -> t v_i, v_-i -> s t v_j
        emit(e(i) + "+" + e(j), t, {{pos(m, li), pos(m, -lj), t}, {pos(m, lj), pos(m, -li), s}});
      }
    if (spec.family == Family::Sp)
      for (std::size_t i = 1; i <= m; ++i) {
        const long li = static_cast<long>(i);
        emit("2" + e(i), t, {{pos(m, li), pos(m, -li), t}});
      }
  }
  const la::Subspace w = standard_w(spec);
  for (const auto& r : out) {
    if (!group_membership(r.matrix, spec)) throw std::logic_error("root element " + r.label + " is not in the group");
    if (!dickson::acts_unipotently(r.matrix, w)) throw std::logic_error("root element " + r.label + " is not in U");
    const Mat x = la::sub(r.matrix, Mat::identity(F, spec.dim_v));
    if (!la::mul(x, x).is_zero()) throw std::logic_error("root element " + r.label + " is not square-zero");
  }
  return out;
}

std::size_t closed_form(Family family, std::size_t m) {
  switch (family) {
    case Family::SL:
      return m * m / 4;
    case Family::Sp:
      return m * (m + 1) / 2;
    case Family::SOeven:
    case Family::SOodd:
      return m * (m - 1) / 2;
  }
  return 0;
}

std::size_t rp_reference(Family family, std::size_t m, std::uint64_t q) {
  if (family != Family::SOodd) return closed_form(family, m);
  if (q % 2 == 0) return m * (m + 1) / 2;
  if (m >= 4) return m * (m - 1) / 2 + 1;
  return m == 3 ? 5 : 3;
}

namespace {

// Rank of a set of matrices flattened to vectors, over F_q or, with
// over_prime, over F_p after expanding each entry into base-p digits.
std::size_t span_dim(const std::vector<Mat>& mats, bool over_prime) {
  if (mats.empty()) return 0;
  const auto& F = mats[0].field();
  const std::size_t len = mats[0].rows() * mats[0].cols();
  const gf::Field P = gf::Field::make(F.p());
  const std::size_t width = over_prime ? len * F.r() : len;
  Mat rows(over_prime ? P : F, mats.size(), width);
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint32_t v = mats[k].data()[i];
      if (!over_prime) {
        rows.set(k, i, v);
        continue;
      }
      const auto d = F.digits(v);
      for (std::size_t j = 0; j < d.size(); ++j) rows.set(k, i * F.r() + j, d[j]);
    }
  return la::rank(rows);
}

}  // namespace

IntersectionResult intersection_dim(const ClassicalSpec& spec) {
  IntersectionResult out;
  const la::Subspace w = standard_w(spec);
  if (spec.family == Family::SL) {
    // Unipotent, so each I + phi has determinant 1; checked anyway.
    const auto basis = forms::hom_quotient_basis(w);
    for (const auto& e : basis)
      if (!group_membership(la::add(Mat::identity(spec.field, spec.dim_v), e), spec))
        throw std::logic_error("unipotent element outside SL");
    out.computed = basis.size();
  } else {
    out.computed = forms::unipotent_isometry_dim(*spec.form, w);
  }
  out.closed_form = closed_form(spec.family, spec.m);
  out.match = out.computed == out.closed_form;
  std::vector<Mat> xs;
  for (const auto& r : ug_generators(spec)) xs.push_back(la::sub(r.matrix, Mat::identity(spec.field, spec.dim_v)));
  out.root_span = span_dim(xs, false);
  out.fp_dim = span_dim(xs, true);
  out.rp_reference = rp_reference(spec.family, spec.m, spec.field.q());
  return out;
}

}  // namespace modsym::lietype
