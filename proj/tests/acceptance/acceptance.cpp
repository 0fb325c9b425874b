// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "modsym/bitmat.hpp"
#include "modsym/dickson.hpp"
#include "modsym/forms.hpp"
#include "modsym/harness/oracle.hpp"
#include "modsym/harness/suites.hpp"
#include "modsym/lietype.hpp"
#include "modsym/modrep.hpp"

using namespace modsym;
using la::Mat;
using modrep::Partition;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int num, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.why = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs > limit_s) {
    o.ok = false;
    o.why = "runtime " + std::to_string(secs) + " s over limit " + std::to_string(limit_s) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", num, title, secs, o.ok ? "" : " - ",
              o.why.c_str());
  std::fflush(stdout);
}

grp::GroupPresentation cyclic(std::size_t n, std::uint32_t p) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i < p ? (i + 1) % p : i;
  return {n, {grp::Perm::from_images(img)}, "C_p"};
}

modrep::GModule m2k(std::size_t k) {
  return modrep::restrict_to_prefix(modrep::irreducible_D(Partition({k + 1, k}), 2), 2 * k);
}

Mat random_mat(const gf::Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Mat m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::uint32_t>(rng() % F.q()));
  return m;
}

}  // namespace

int main() {
  criterion(1, "Dickson form invariant under S_n, 5 <= n <= 12", 1.0, [](Outcome& o) {
    for (std::size_t n = 5; n <= 12; ++n)
      o.require(rep::check_invariance(dickson::perm_irrep(n, 2), dickson::dickson_form(dickson::half_dim(n))),
                "not invariant at n = " + std::to_string(n));
  });

  criterion(2, "parabolic ranks floor(n/2) and floor(n/2)-1, exact to n = 10, certified n = 11, 12", 120.0,
            [](Outcome& o) {
              for (std::size_t n = 5; n <= 12; ++n) {
                const auto lp = dickson::lagrangian_pair(dickson::half_dim(n));
                for (bool alt : {false, true}) {
                  const auto r = alt ? dickson::perm_irrep(grp::standard_gens(grp::StandardKind::alt, n), 2)
                                     : dickson::perm_irrep(n, 2);
                  const auto res =
                      n <= 10 ? dickson::parabolic_trivial_subgroup(r, lp.w, dickson::ParabolicMode::exact_enum)
                              : dickson::parabolic_trivial_subgroup(r, lp.w, dickson::ParabolicMode::certified_bound,
                                                                   grp::kDefaultEnumCap,
                                                                   dickson::siegel_witnesses(n, alt));
                  const std::string tag = (alt ? "A" : "S") + std::to_string(n);
                  o.require(res.rank == (alt ? n / 2 - 1 : n / 2), "rank mismatch at " + tag);
                  o.require(res.exact == (n <= 10), "mode mismatch at " + tag);
                  if (n <= 8) {
                    const auto orc = harness::oracle::enum_parabolic(n, alt);
                    o.require(orc.rank == res.rank && orc.order == res.order, "oracle disagrees at " + tag);
                  }
                }
              }
            });

  criterion(3, "unipotent intersection closed forms and root spans over q in {2,3,4,5}", 30.0, [](Outcome& o) {
    for (const auto& row : harness::lietype_grid({})) {
      const std::string tag = std::string(lietype::family_name(row.family)) + " m=" + std::to_string(row.m) +
                              " q=" + std::to_string(row.q);
      o.require(row.result.computed == lietype::closed_form(row.family, row.m), "closed form mismatch at " + tag);
      o.require(row.result.root_span == row.result.computed, "root span mismatch at " + tag);
    }
    o.require(harness::lietype_grid({}).size() == 4 * 4 + 3 * 4 + 4 + 2 * 2, "unexpected grid size");
  });

  criterion(4, "Siegel unipotent dimension C(g+1,2) for g <= 5", 1.0, [](Outcome& o) {
    for (std::size_t g = 1; g <= 5; ++g) {
      const auto s = lietype::make_classical(lietype::Family::Sp, g, 2, true);
      o.require(forms::unipotent_isometry_dim(*s.form, lietype::standard_w(s)) == g * (g + 1) / 2,
                "mismatch at g = " + std::to_string(g));
    }
  });

  criterion(5, "non-character D^lambda have Loewy length >= 3 on a p-cycle, p in {3,5}, n <= 7", 30.0,
            [](Outcome& o) {
              for (std::uint32_t p : {3u, 5u})
                for (std::size_t n = p; n <= 7; ++n)
                  for (const auto& l : modrep::p_regular_partitions(n, p)) {
                    const auto d = modrep::irreducible_D(l, p);
                    if (d.dim == 1) continue;
                    o.require(modrep::loewy_length(d, cyclic(n, p)).length() >= 3,
                              "short Loewy series for " + l.str() + " p=" + std::to_string(p));
                  }
              const std::vector<std::size_t> three{3};
              o.require(modrep::cyclic_profile(modrep::irreducible_D(Partition({4, 1}), 5),
                                               cyclic(5, 5).gens.front()) == three,
                        "profile of D^(4,1) over F_5");
              for (const char* l : {"3,1", "2,1,1"})
                o.require(modrep::cyclic_profile(modrep::irreducible_D(Partition::parse(l), 3),
                                                 cyclic(4, 3).gens.front()) == three,
                          std::string("profile of D^") + l + " over F_3");
            });

  criterion(6, "quadratic pairs at n = 9, 10 are exactly ((n-1,1), H_n); n = 8 adds ((5,3), K x K)", 300.0,
            [](Outcome& o) {
              for (std::size_t n = 8; n <= 10; ++n) {
                std::vector<std::pair<std::string, std::string>> quad;
                for (const auto& l : modrep::p_regular_partitions(n, 2)) {
                  if (l.length() == 1) continue;
                  const auto d = modrep::irreducible_D(l, 2);
                  for (std::size_t m = 0; 4 * m <= n; ++m) {
                    const auto h = grp::special_subgroup(grp::SpecialKind::K_power_H, n, m);
                    if (modrep::loewy_length(d, h).length() <= 2) quad.emplace_back(l.str(), h.label);
                  }
                }
                std::vector<std::pair<std::string, std::string>> expected{
                    {Partition({n - 1, 1}).str(), "H_" + std::to_string(n)}};
                if (n == 8) expected.emplace_back("(5,3)", "K^2");
                o.require(quad == expected, "quadratic set differs at n = " + std::to_string(n));
              }
            });

  criterion(7, "free summands on H_2k, dim M(2k) = 2^k, M(4) ~ M(2) (x) M(2), after norm-rank validation", 60.0,
            [](Outcome& o) {
              const auto v = harness::oracle::validate_norm_rank(0, 40);
              o.require(v.cases > 0 && v.mismatches.empty(), "norm rank validation failed");
              if (!o.ok) return;
              const std::pair<std::size_t, std::size_t> list[] = {{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}, {9, 4}};
              for (auto [n, k] : list) {
                const auto d = modrep::irreducible_D(Partition({n - k, k}), 2);
                grp::GroupPresentation h{n, {}, "H_2k"};
                for (std::size_t i = 0; i < k; ++i)
                  h.gens.push_back(grp::Perm::transposition(n, 2 * i, 2 * i + 1));
                o.require(modrep::free_summand_count(d, h) >= 1, "no free summand for " + Partition({n - k, k}).str());
              }
              for (std::size_t k = 1; k <= 4; ++k)
                o.require(m2k(k).dim == (std::size_t{1} << k), "dim M(" + std::to_string(2 * k) + ")");
              const auto m2 = m2k(1);
              const Mat a = m2.gens[0];
              const Mat i2 = Mat::identity(m2.field, 2);
              const auto rhs = modrep::fingerprint_of_action({la::kron(a, i2), la::kron(i2, a)}, m2.field, 4);
              const auto lhs = modrep::fingerprint(m2k(2), grp::special_subgroup(grp::SpecialKind::H, 4));
              o.require(lhs == rhs, "fingerprints differ: " + lhs.str() + " vs " + rhs.str());
            });

  criterion(8, "D^(n-1,1) and the Dickson module agree in dimension and H_n fingerprint, 5 <= n <= 10", 60.0,
            [](Outcome& o) {
              for (std::size_t n = 5; n <= 10; ++n) {
                const auto d = modrep::irreducible_D(Partition({n - 1, 1}), 2);
                const auto r = dickson::perm_irrep(n, 2);
                const auto h = grp::special_subgroup(grp::SpecialKind::H, n);
                std::vector<Mat> imgs;
                for (const auto& g : h.gens) imgs.push_back(r.image(g));
                o.require(d.dim == r.dim, "dimension differs at n = " + std::to_string(n));
                o.require(modrep::fingerprint(d, h) == modrep::fingerprint_of_action(imgs, r.field, r.dim),
                          "fingerprint differs at n = " + std::to_string(n));
              }
            });

  criterion(9, "D^(4,1) (x) D^(4,1) over F_5 has only odd Jordan blocks at (1 2 3 4 5)", 1.0, [](Outcome& o) {
    const auto d = modrep::irreducible_D(Partition({4, 1}), 5);
    const auto prof = modrep::cyclic_profile(modrep::tensor_module(d, d), cyclic(5, 5).gens.front());
    std::size_t total = 0;
    for (auto b : prof) {
      o.require(b % 2 == 1, "even block size " + std::to_string(b));
      total += b;
    }
    o.require(total == 9, "block sizes do not sum to 9");
  });

  criterion(10, "field axioms q <= 81, rank/kernel duality, packed = generic, byte-identical reports", 30.0,
            [](Outcome& o) {
              for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49,
                                      53, 59, 61, 81}) {
                const auto F = gf::Field::of_order(q);
                const std::uint32_t n = F.q();
                bool ok = true;
                for (std::uint32_t a = 0; a < n && ok; ++a) {
                  if (a != 0) ok &= F.pow(a, n - 1) == 1 && F.mul(a, F.inv(a)) == 1;
                  ok &= F.add(a, F.neg(a)) == 0;
                  for (std::uint32_t b = 0; b < n && ok; ++b) {
                    ok &= F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
                    for (std::uint32_t c = 0; c < n && ok; ++c) {
                      ok &= F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
                      ok &= F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
                      ok &= F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
                    }
                  }
                }
                o.require(ok, "field axioms fail for q = " + std::to_string(q));
              }

              std::mt19937_64 rng(0);
              const gf::Field fields[] = {gf::Field::make(2), gf::Field::make(3), gf::Field::make(2, 2),
                                          gf::Field::make(5), gf::Field::make(3, 2)};
              for (int t = 0; t < 1000; ++t) {
                const auto& F = fields[t % 5];
                const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
                const Mat m = random_mat(F, r, c, rng);
                const std::size_t rk = la::rank(m);
                const auto ker = la::kernel(m);
                o.require(rk + ker.dim() == c, "rank-nullity fails");
                o.require(rk == la::rank(la::transpose(m)), "row rank differs from column rank");
                for (std::size_t i = 0; i < ker.dim(); ++i)
                  o.require(std::ranges::all_of(la::mul(m, ker.basis().row(i)), [](auto x) { return x == 0; }),
                            "kernel vector not annihilated");
              }

              const gf::Field F2 = gf::Field::make(2);
              for (int t = 0; t < 1000; ++t) {
                const std::size_t r = 1 + rng() % 150, c = 1 + rng() % 150;
                const Mat m = random_mat(F2, r, c, rng);
                const auto a = la::rref(m, la::Path::generic), b = la::rref(m, la::Path::packed);
                o.require(a.form == b.form && a.pivots == b.pivots, "packed and generic RREF differ");
                const Mat x = random_mat(F2, c, 1 + rng() % 150, rng);
                const Mat pa = la::mul(m, x);
                o.require(la::BitMatrix::from_mat(m).rows() == r, "packing shape");
                o.require(pa == la::mul(la::BitMatrix::from_mat(m), la::BitMatrix::from_mat(x)).to_mat(),
                          "packed and generic products differ");
              }

              harness::SuiteConfig cfg;
              cfg.max_n = 9;
              const auto first = harness::render("dickson", cfg, harness::run_suite("dickson", cfg).claims);
              cfg.jobs = 2;
              const auto second = harness::render("dickson", cfg, harness::run_suite("dickson", cfg).claims);
              o.require(first == second, "dickson reports differ between runs");
              cfg.jobs = 1;
              const auto a1 = harness::render("appendix", cfg, harness::verify_appendix("H2kproj", cfg));
              const auto a2 = harness::render("appendix", cfg, harness::verify_appendix("H2kproj", cfg));
              o.require(a1 == a2, "appendix reports differ between runs");
            });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
