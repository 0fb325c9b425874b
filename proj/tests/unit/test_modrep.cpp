#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "modsym/modrep.hpp"

using namespace modsym;
using modrep::Partition;
using la::Mat;

namespace {

// Number of standard tableaux by removing corners.
std::uint64_t tableau_count(std::vector<std::size_t> parts, std::map<std::vector<std::size_t>, std::uint64_t>& memo) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) return 1;
  if (auto it = memo.find(parts); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
    auto next = parts;
    --next[i];
    total += tableau_count(next, memo);
  }
  return memo[parts] = total;
}

// Character value by rim-hook removal on beta numbers.
std::int64_t mn_character(std::vector<std::size_t> beta, std::vector<std::size_t> cycle_type) {
  if (cycle_type.empty()) return 1;
  const std::size_t k = cycle_type.back();
  cycle_type.pop_back();
  std::int64_t total = 0;
  const std::set<std::size_t> beads(beta.begin(), beta.end());
  for (std::size_t b : beta) {
    if (b < k || beads.count(b - k)) continue;
    int between = 0;
    for (std::size_t c : beta) between += c > b - k && c < b;
    auto next = beta;
    std::replace(next.begin(), next.end(), b, b - k);
    total += (between % 2 ? -1 : 1) * mn_character(next, cycle_type);
  }
  return total;
}

std::int64_t character(const Partition& l, const grp::Perm& g) {
  std::vector<std::size_t> beta;
  for (std::size_t i = 0; i < l.length(); ++i) beta.push_back(l.parts[i] + l.length() - 1 - i);
  std::vector<std::size_t> type;
  std::vector<bool> seen(g.degree());
  for (std::size_t x = 0; x < g.degree(); ++x) {
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = g(y)) seen[y] = true, ++len;
    if (len) type.push_back(len);
  }
  return mn_character(beta, type);
}

grp::Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  std::shuffle(img.begin(), img.end(), rng);
  return grp::Perm::from_images(img);
}

std::uint32_t trace(const Mat& m) {
  std::uint32_t t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t = m.field().add(t, m(i, i));
  return t;
}

grp::GroupPresentation pres(std::size_t n, std::initializer_list<const char*> cycles, std::string label) {
  grp::GroupPresentation g{n, {}, std::move(label)};
  for (const char* c : cycles) g.gens.push_back(grp::Perm::from_cycles(c, n));
  return g;
}

}  // namespace

TEST_CASE("partitions and parsing") {
  CHECK(modrep::partitions(4).size() == 5);
  CHECK(modrep::partitions(10).size() == 42);
  CHECK(modrep::partitions(5).front().str() == "(5)");
  CHECK(modrep::partitions(5)[1].str() == "(4,1)");
  CHECK(Partition::parse("(5,3)") == Partition({5, 3}));
  CHECK(Partition::parse("4 2 1") == Partition({4, 2, 1}));
  CHECK_THROWS(Partition::parse("3,4"));
  CHECK_THROWS(Partition::parse("a"));
  CHECK_THROWS(Partition(std::vector<std::size_t>{}));
  CHECK(Partition({3, 3}).is_p_regular(3));
  CHECK_FALSE(Partition({3, 3}).is_p_regular(2));
  CHECK_FALSE(Partition({2, 1, 1, 1}).is_p_regular(3));
  // 2-regular partitions are counted by partitions into distinct parts.
  const std::vector<std::size_t> distinct{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(modrep::p_regular_partitions(n, 2).size() == distinct[n]);
}

TEST_CASE("hook length formula against corner removal") {
  std::map<std::vector<std::size_t>, std::uint64_t> memo;
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& l : modrep::partitions(n)) {
      CAPTURE(l.str());
      CHECK(modrep::hook_length_dim(l) == tableau_count(l.parts, memo));
      if (n <= 9) CHECK(modrep::standard_tableaux(l).size() == modrep::hook_length_dim(l));
    }
  CHECK(modrep::hook_length_dim(Partition({5, 2})) == 14);
}

TEST_CASE("Specht module traces match ordinary characters") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& l : modrep::partitions(n)) {
      CAPTURE(l.str());
      const auto s = modrep::specht_module(l, 7);
      CHECK(s.dim == modrep::hook_length_dim(l));
      for (int trial = 0; trial < 6; ++trial) {
        const auto g = random_perm(n, rng);
        CHECK(trace(modrep::act_by_perm(s, g)) == s.field.from_int(character(l, g)));
      }
    }
}

TEST_CASE("act_by_perm is a homomorphism") {
  const auto s = modrep::specht_module(Partition({3, 2}), 2);
  CHECK(modrep::act_by_perm(s, grp::Perm::from_cycles("(1 2 3)", 5)) == la::mul(s.gens[0], s.gens[1]));
  CHECK(la::mul(s.gens[0], s.gens[1]) != la::mul(s.gens[1], s.gens[0]));
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u}) {
    const auto m = modrep::specht_module(Partition({3, 2, 1}), p);
    for (int trial = 0; trial < 10; ++trial) {
      const auto g = random_perm(6, rng);
      const auto h = random_perm(6, rng);
      CHECK(modrep::act_by_perm(m, g * h) == la::mul(modrep::act_by_perm(m, g), modrep::act_by_perm(m, h)));
    }
  }
}

TEST_CASE("irreducible dimensions match known modular character degrees") {
  // Degrees of the p-modular irreducibles of S_n, as multisets.
  const std::map<std::pair<std::uint32_t, std::size_t>, std::multiset<std::size_t>> known{
      {{2, 2}, {1}},          {{2, 3}, {1, 2}},          {{2, 4}, {1, 2}},
      {{2, 5}, {1, 4, 4}},    {{2, 6}, {1, 4, 4, 16}},   {{2, 7}, {1, 6, 8, 14, 20}},
      {{3, 3}, {1, 1}},       {{3, 4}, {1, 1, 3, 3}},    {{3, 5}, {1, 1, 4, 4, 6}},
      {{3, 6}, {1, 1, 4, 4, 6, 9, 9}},                   {{5, 5}, {1, 1, 3, 3, 5, 5}}};
  for (const auto& [key, dims] : known) {
    const auto [p, n] = key;
    CAPTURE(p);
    CAPTURE(n);
    std::multiset<std::size_t> got;
    for (const auto& l : modrep::p_regular_partitions(n, p)) got.insert(modrep::irreducible_D(l, p).dim);
    CHECK(got == dims);
  }
  CHECK(modrep::irreducible_D(Partition({5, 3}), 2).dim == 8);
  CHECK(modrep::irreducible_D(Partition({4, 1}), 5).dim == 3);
  CHECK_THROWS_AS(modrep::irreducible_D(Partition({2, 2}), 2), std::invalid_argument);
  CHECK_THROWS_AS(modrep::specht_module(Partition({13}), 2), std::invalid_argument);
}

TEST_CASE("cyclic profiles") {
  const auto d41 = modrep::irreducible_D(Partition({4, 1}), 5);
  CHECK(modrep::cyclic_profile(d41, grp::Perm::from_cycles("(1 2 3 4 5)", 5)) == std::vector<std::size_t>{3});
  CHECK_THROWS(modrep::cyclic_profile(d41, grp::Perm::from_cycles("(1 2)", 5)));
  for (const char* l : {"3,1", "2,1,1"}) {
    const auto d = modrep::irreducible_D(Partition::parse(l), 3);
    CHECK(modrep::cyclic_profile(d, grp::Perm::from_cycles("(1 2 3)", 4)) == std::vector<std::size_t>{3});
  }
}

TEST_CASE("Loewy series and free summands") {
  const auto F = gf::Field::make(2);
  const Mat j = Mat::from_rows(F, {{1, 1}, {0, 1}});
  const Mat i2 = Mat::identity(F, 2);
  const std::vector<Mat> regular{la::kron(j, i2), la::kron(i2, j)};
  CHECK(modrep::loewy_series(regular, F, 4).layer_dims == std::vector<std::size_t>{1, 2, 1});
  CHECK(modrep::norm_rank(regular, F, 4) == 1);
  const auto fp = modrep::fingerprint_of_action(regular, F, 4);
  CHECK(fp.fixed_dims == std::vector<std::size_t>{2, 2});
  CHECK(fp.str() == "dim=4 layers=(1,2,1) free=1 fixed=(2,2)");

  const auto d53 = modrep::irreducible_D(Partition({5, 3}), 2);
  const auto kk = grp::special_subgroup(grp::SpecialKind::K_power_H, 8, 2);
  CHECK(modrep::loewy_length(d53, kk).length() == 2);
  const auto d41 = modrep::irreducible_D(Partition({4, 1}), 2);
  const auto k = grp::special_subgroup(grp::SpecialKind::K_power_H, 5, 1);
  CHECK(modrep::free_summand_count(d41, k) == 1);
  CHECK(modrep::loewy_length(d41, k).layer_dims == std::vector<std::size_t>{1, 2, 1});
  CHECK_THROWS(modrep::loewy_length(d41, pres(5, {"(1 2 3)"}, "C3")));
  CHECK_THROWS(modrep::free_summand_count(d41, pres(5, {"(1 2 3 4)"}, "C4")));
  // (n-1,1) is quadratic on H_n.
  for (std::size_t n : {6u, 8u, 9u}) {
    const auto d = modrep::irreducible_D(Partition({n - 1, 1}), 2);
    CHECK(modrep::loewy_length(d, grp::special_subgroup(grp::SpecialKind::H, n)).length() == 2);
  }
}

TEST_CASE("tensor products and restriction") {
  const auto d21 = modrep::irreducible_D(Partition({2, 1}), 2);
  const auto t = modrep::tensor_module(d21, d21);
  CHECK(t.dim == 4);
  CHECK(modrep::coxeter_relations_hold(t));
  const auto d = modrep::irreducible_D(Partition({3, 2}), 2);
  const auto r = modrep::restrict_to_prefix(d, 4);
  CHECK(r.n == 4);
  CHECK(r.gens.size() == 3);
  CHECK(modrep::coxeter_relations_hold(r));
  CHECK_THROWS(modrep::tensor_module(d21, d));
  CHECK_THROWS(modrep::make_module(3, gf::Field::make(2), 2, {Mat::identity(gf::Field::make(2), 2)}, "bad"));
  const auto F = gf::Field::make(2);
  const Mat swap = Mat::from_rows(F, {{0, 1}, {1, 0}});
  CHECK_THROWS(modrep::make_module(3, F, 2, {swap, Mat::identity(F, 2)}, "bad"));
}
