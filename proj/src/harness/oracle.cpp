#include "modsym/harness/oracle.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace modsym::harness::oracle {

using la::Mat;

EnumParabolic enum_parabolic(std::size_t n, bool alternating) {
  if (n < 2 || n > 10) throw std::invalid_argument("enum_parabolic supports 2 <= n <= 10");
  std::uint64_t fact = 1;
  for (std::uint64_t k = 2; k <= n; ++k) fact *= k;
  if (fact > kGroupCap) throw grp::CapExceeded("group exceeds oracle cap");

  const std::size_t N = 2 * ((n + 1) / 2);
  const std::uint32_t ones = (1u << N) - 1;
  std::vector<std::uint32_t> pairs, even;
  for (std::size_t i = 0; i + 1 < N; i += 2) pairs.push_back(3u << i);
  for (std::size_t i = 0; i + 1 < N; ++i) even.push_back((1u << i) | (1u << (N - 1)));
  auto constant_on_pairs = [&](std::uint32_t x) {
    for (std::uint32_t pr : pairs)
      if ((x & pr) != 0 && (x & pr) != pr) return false;
    return true;
  };

  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  EnumParabolic out;
  do {
    if (alternating) {
      int inv = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) inv += img[i] > img[j];
      if (inv % 2) continue;
    }
    auto act = [&](std::uint32_t x) {
      std::uint32_t y = x & ~((1u << n) - 1);
      for (std::size_t i = 0; i < n; ++i)
        if (x >> i & 1) y |= 1u << img[i];
      return y;
    };
    bool ok = true;
    for (std::uint32_t w : pairs) {
      const std::uint32_t d = act(w) ^ w;
      if (d != 0 && d != ones) {
        ok = false;
        break;
      }
    }
    for (std::size_t k = 0; ok && k < even.size(); ++k) ok = constant_on_pairs(act(even[k]) ^ even[k]);
    if (ok) out.elements.push_back(grp::Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));

  out.order = out.elements.size();
  bool ea = std::has_single_bit(out.order);
  for (std::size_t i = 0; ea && i < out.elements.size(); ++i) {
    const auto& a = out.elements[i];
    if (!(a * a).is_identity()) ea = false;
    for (std::size_t j = i + 1; ea && j < out.elements.size(); ++j)
      if (a * out.elements[j] != out.elements[j] * a) ea = false;
  }
  out.elementary_abelian = ea;
  out.rank = ea ? static_cast<std::size_t>(std::countr_zero(out.order)) : 0;
  return out;
}

namespace {

using Members = std::bitset<256>;

struct BitAction {
  std::vector<std::vector<std::uint32_t>> cols;  // per generator

  std::uint32_t apply(std::size_t g, std::uint32_t v) const {
    std::uint32_t y = 0;
    for (std::size_t j = 0; v; ++j, v >>= 1)
      if (v & 1) y ^= cols[g][j];
    return y;
  }
};

struct Sub {
  Members members;
  std::vector<std::uint32_t> basis;
};

// Smallest invariant subspace containing the seeds.
Sub closure(const BitAction& act, const std::vector<std::uint32_t>& seeds) {
  std::vector<std::uint32_t> basis;
  std::vector<std::uint32_t> queue;
  auto insert = [&](std::uint32_t x) {
    for (std::uint32_t b : basis)
      if ((x ^ b) < x) x ^= b;
    if (x == 0) return;
    basis.push_back(x);
    std::sort(basis.begin(), basis.end(), std::greater<>());
    queue.push_back(x);
  };
  for (std::uint32_t s : seeds) insert(s);
  while (!queue.empty()) {
    const std::uint32_t x = queue.back();
    queue.pop_back();
    for (std::size_t g = 0; g < act.cols.size(); ++g) insert(act.apply(g, x));
  }
  Sub s;
  for (std::uint32_t mask = 0; mask < (1u << basis.size()); ++mask) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (mask >> i & 1) v ^= basis[i];
    s.members.set(v);
  }
  s.basis = std::move(basis);
  return s;
}

struct MembersHash {
  std::size_t operator()(const Members& m) const { return std::hash<Members>{}(m); }
};

void split(const BitAction& act, const std::vector<Sub>& subs, const Sub& u, std::size_t group_order,
           Decomposition& out) {
  const std::size_t du = u.basis.size();
  for (const auto& a : subs) {
    const std::size_t da = a.basis.size();
    if (da == 0 || da >= du || (a.members & ~u.members).any()) continue;
    for (const auto& b : subs) {
      if (b.basis.size() != du - da || (b.members & ~u.members).any()) continue;
      if ((a.members & b.members).count() != 1) continue;
      split(act, subs, a, group_order, out);
      split(act, subs, b, group_order, out);
      return;
    }
  }
  out.summand_dims.push_back(du);
  if (du != group_order) return;
  for (std::size_t v = 0; v < 256; ++v)
    if (u.members.test(v) && closure(act, {static_cast<std::uint32_t>(v)}).basis.size() == du) {
      ++out.free_count;
      return;
    }
}

}  // namespace

Decomposition decompose_small_module(const std::vector<Mat>& gens, std::size_t group_order) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  const std::size_t d = gens.front().rows();
  if (d > kMaxModuleDim) throw std::invalid_argument("module dimension exceeds oracle cap");
  BitAction act;
  for (const auto& g : gens) {
    if (!g.field().is_gf2() || g.rows() != d || g.cols() != d) throw std::invalid_argument("expected square GF(2) matrices");
    std::vector<std::uint32_t> cols(d, 0);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        if (g(i, j)) cols[j] |= 1u << i;
    act.cols.push_back(std::move(cols));
  }

  std::vector<Sub> subs{closure(act, {})};
  std::unordered_set<Members, MembersHash> seen{subs.front().members};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::uint32_t v = 1; v < (1u << d); ++v) {
      if (subs[i].members.test(v)) continue;
      std::vector<std::uint32_t> seeds = subs[i].basis;
      seeds.push_back(v);
      Sub s = closure(act, seeds);
      if (seen.insert(s.members).second) {
        subs.push_back(std::move(s));
        if (subs.size() > kSubmoduleCap) throw grp::CapExceeded("too many submodules");
      }
    }
  }
  std::stable_sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) { return a.basis.size() < b.basis.size(); });

  Decomposition out;
  out.submodules = subs.size();
  split(act, subs, subs.back(), group_order, out);
  std::sort(out.summand_dims.begin(), out.summand_dims.end());
  return out;
}

std::uint64_t tableau_count(const modrep::Partition& lambda) {
  if (lambda.n() > kMaxTableauDegree) throw std::invalid_argument("tableau count limited to n <= 12");
  std::vector<std::size_t> filled(lambda.length(), 0);
  std::function<std::uint64_t(std::size_t)> place = [&](std::size_t left) -> std::uint64_t {
    if (left == 0) return 1;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < filled.size(); ++r) {
      if (filled[r] == lambda.parts[r] || (r > 0 && filled[r] == filled[r - 1])) continue;
      ++filled[r];
      total += place(left - 1);
      --filled[r];
    }
    return total;
  };
  return place(lambda.n());
}

namespace {

Mat random_mat(const gf::Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Mat m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::uint32_t>(rng() & 1));
  return m;
}

Mat random_invertible(const gf::Field& F, std::size_t d, std::mt19937_64& rng) {
  while (true) {
    Mat m = random_mat(F, d, d, rng);
    if (la::rank(m) == d) return m;
  }
}

Mat place(const gf::Field& F, std::size_t d, const std::vector<std::tuple<std::size_t, std::size_t, const Mat*>>& blocks) {
  Mat m = Mat::identity(F, d);
  for (const auto& [r0, c0, b] : blocks)
    for (std::size_t i = 0; i < b->rows(); ++i)
      for (std::size_t j = 0; j < b->cols(); ++j) m.set(r0 + i, c0 + j, (*b)(i, j));
  return m;
}

std::vector<Mat> conjugate(std::vector<Mat> gens, std::mt19937_64& rng) {
  const gf::Field& F = gens.front().field();
  const Mat p = random_invertible(F, gens.front().rows(), rng);
  const Mat pinv = la::inverse(p);
  for (auto& g : gens) g = la::mul(la::mul(p, g), pinv);
  return gens;
}

std::vector<Mat> square_zero(std::size_t ngens, std::size_t d, std::mt19937_64& rng) {
  const gf::Field F = gf::Field::make(2);
  if (d == 1) return std::vector<Mat>(ngens, Mat::identity(F, 1));
  const std::size_t k = 1 + rng() % (d - 1);
  std::vector<Mat> gens;
  for (std::size_t g = 0; g < ngens; ++g) {
    const Mat b = random_mat(F, k, d - k, rng);
    gens.push_back(place(F, d, {{0, k, &b}}));
  }
  return gens;
}

// Unipotent gens with blocks A (a x b), B (b x c), C (a x c) above the diagonal.
std::vector<Mat> three_layer(std::size_t ngens, std::mt19937_64& rng) {
  const gf::Field F = gf::Field::make(2);
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const std::size_t a = 1 + rng() % 2, b = 1 + rng() % 2, c = 1 + rng() % 2;
    const std::size_t d = a + b + c;
    std::vector<Mat> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
      const Mat A = random_mat(F, a, b, rng), B = random_mat(F, b, c, rng), C = random_mat(F, a, c, rng);
      gens.push_back(place(F, d, {{0, a, &A}, {a, a + b, &B}, {0, a + b, &C}}));
    }
    bool ok = true;
    const Mat id = Mat::identity(F, d);
    for (std::size_t i = 0; ok && i < ngens; ++i) {
      ok = la::mul(gens[i], gens[i]) == id;
      for (std::size_t j = i + 1; ok && j < ngens; ++j) ok = la::mul(gens[i], gens[j]) == la::mul(gens[j], gens[i]);
    }
    if (ok) return gens;
  }
  throw std::logic_error("no three-layer module found");
}

std::vector<Mat> regular(std::size_t ngens) {
  const gf::Field F = gf::Field::make(2);
  const Mat j = Mat::from_rows(F, {{1, 1}, {0, 1}});
  const Mat i2 = Mat::identity(F, 2);
  if (ngens == 1) return {j};
  return {la::kron(j, i2), la::kron(i2, j)};
}

}  // namespace

std::vector<TestModule> random_test_modules(std::uint64_t seed, std::size_t per_kind) {
  std::mt19937_64 rng(seed);
  std::vector<TestModule> out;
  for (std::size_t ngens : {1u, 2u}) {
    const std::size_t order = std::size_t{1} << ngens;
    const std::string group = ngens == 1 ? "C2" : "C2xC2";
    for (std::size_t i = 0; i < per_kind; ++i) {
      out.push_back({group + "/square-zero", order, conjugate(square_zero(ngens, 1 + rng() % 6, rng), rng)});
      out.push_back({group + "/three-layer", order, conjugate(three_layer(ngens, rng), rng)});
      const std::size_t rest = 6 - order;
      std::vector<Mat> reg = regular(ngens);
      if (rest > 0) {
        const auto extra = square_zero(ngens, 1 + rng() % rest, rng);
        for (std::size_t g = 0; g < ngens; ++g) reg[g] = la::block_diag(reg[g], extra[g]);
      }
      out.push_back({group + "/regular-sum", order, conjugate(reg, rng)});
    }
  }
  return out;
}

NormValidation validate_norm_rank(std::uint64_t seed, std::size_t per_kind) {
  NormValidation v;
  for (const auto& m : random_test_modules(seed, per_kind)) {
    ++v.cases;
    const auto d = decompose_small_module(m.gens, m.group_order);
    const std::size_t nr = modrep::norm_rank(m.gens, m.gens.front().field(), m.gens.front().rows());
    if (nr == d.free_count)
      ++v.agreed;
    else
      v.mismatches.push_back(m.kind + " dim " + std::to_string(m.gens.front().rows()) + ": norm rank " +
                             std::to_string(nr) + ", free summands " + std::to_string(d.free_count));
  }
  return v;
}

}  // namespace modsym::harness::oracle
