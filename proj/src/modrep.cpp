#include "modsym/modrep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace modsym::modrep {

using la::Mat;

Partition::Partition(std::vector<std::size_t> p) : parts(std::move(p)) {
  if (parts.empty()) throw std::invalid_argument("partition must be nonempty");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text) s.push_back(c == ',' || c == '(' || c == ')' ? ' ' : c);
  std::istringstream in(s);
  std::vector<std::size_t> parts;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed partition: " + text);
    parts.push_back(std::stoul(tok));
  }
  return Partition(std::move(parts));
}

std::size_t Partition::n() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

bool Partition::is_p_regular(std::uint32_t p) const {
  std::size_t run = 1;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    run = parts[i] == parts[i - 1] ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {
void partitions_rec(std::size_t left, std::size_t maxpart, std::vector<std::size_t>& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t k = std::min(left, maxpart); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(left - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions(std::size_t n) {
  if (n == 0) throw std::invalid_argument("partitions of 0 are not supported");
  std::vector<Partition> out;
  std::vector<std::size_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> p_regular_partitions(std::size_t n, std::uint32_t p) {
  std::vector<Partition> out;
  for (auto& l : partitions(n))
    if (l.is_p_regular(p)) out.push_back(std::move(l));
  return out;
}

namespace {
std::vector<std::size_t> conjugate(const Partition& l) {
  std::vector<std::size_t> c(l.parts.front(), 0);
  for (std::size_t part : l.parts)
    for (std::size_t j = 0; j < part; ++j) ++c[j];
  return c;
}
}  // namespace

std::size_t hook_length_dim(const Partition& lambda) {
  const std::size_t n = lambda.n();
  if (n > 20) throw std::invalid_argument("hook length formula limited to n <= 20");
  const auto conj = conjugate(lambda);
  std::uint64_t num = 1;
  for (std::uint64_t k = 2; k <= n; ++k) num *= k;
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (std::size_t j = 0; j < lambda.parts[i]; ++j) den *= (lambda.parts[i] - j - 1) + (conj[j] - i - 1) + 1;
  return static_cast<std::size_t>(num / den);
}

namespace {
void tableaux_rec(const Partition& l, std::size_t next, Tableau& t, std::vector<Tableau>& out) {
  if (next == l.n()) {
    out.push_back(t);
    return;
  }
  for (std::size_t r = 0; r < l.length(); ++r) {
    if (t[r].size() == l.parts[r]) continue;
    if (r > 0 && t[r].size() >= t[r - 1].size()) continue;
    t[r].push_back(next);
    tableaux_rec(l, next + 1, t, out);
    t[r].pop_back();
  }
}
}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::vector<Tableau> out;
  Tableau t(lambda.length());
  tableaux_rec(lambda, 0, t, out);
  return out;
}

bool coxeter_relations_hold(const GModule& m) {
  const Mat id = Mat::identity(m.field, m.dim);
  const std::size_t k = m.gens.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (la::mul(m.gens[i], m.gens[i]) != id) return false;
    if (i + 1 < k) {
      const Mat st = la::mul(m.gens[i], m.gens[i + 1]);
      if (la::mul(st, la::mul(st, st)) != id) return false;
    }
    for (std::size_t j = i + 2; j < k; ++j)
      if (la::mul(m.gens[i], m.gens[j]) != la::mul(m.gens[j], m.gens[i])) return false;
  }
  return true;
}

GModule make_module(std::size_t n, const gf::Field& field, std::size_t dim, std::vector<Mat> gens, std::string label) {
  if (n == 0 || n > grp::kMaxDegree) throw std::invalid_argument("module degree out of range");
  if (gens.size() != n - 1) throw std::invalid_argument("expected n-1 Coxeter generator matrices");
  for (const auto& g : gens) {
    if (g.rows() != dim || g.cols() != dim) throw la::DimensionMismatch("generator size differs from module dimension");
    if (g.field() != field) throw gf::FieldMismatch("generator over a different field");
  }
  GModule m{n, field, dim, std::move(gens), std::move(label)};
  if (!coxeter_relations_hold(m)) throw std::invalid_argument("Coxeter relations fail for " + m.label);
  return m;
}

namespace {

// Row assignment of each point, 4 bits per point.
using TabloidKey = std::uint64_t;

struct TabloidIndex {
  std::vector<TabloidKey> keys;
  std::unordered_map<TabloidKey, std::uint32_t> index;

  std::uint32_t at(TabloidKey k) const { return index.at(k); }
};

void tabloids_rec(const Partition& l, std::size_t point, std::vector<std::size_t>& room, TabloidKey key,
                  std::vector<TabloidKey>& out) {
  if (point == l.n()) {
    out.push_back(key);
    return;
  }
  for (std::size_t r = 0; r < l.length(); ++r) {
    if (room[r] == 0) continue;
    --room[r];
    tabloids_rec(l, point + 1, room, key | (TabloidKey{r} << (4 * point)), out);
    ++room[r];
  }
}

TabloidIndex all_tabloids(const Partition& l) {
  TabloidIndex t;
  std::vector<std::size_t> room = l.parts;
  tabloids_rec(l, 0, room, 0, t.keys);
  std::sort(t.keys.begin(), t.keys.end());
  t.index.reserve(t.keys.size() * 2);
  for (std::uint32_t i = 0; i < t.keys.size(); ++i) t.index.emplace(t.keys[i], i);
  return t;
}

TabloidKey key_of(const std::vector<std::size_t>& row_of) {
  TabloidKey k = 0;
  for (std::size_t x = 0; x < row_of.size(); ++x) k |= TabloidKey{row_of[x]} << (4 * x);
  return k;
}

// Image of a tabloid under the transposition (a a+1).
TabloidKey swap_points(TabloidKey k, std::size_t a) {
  const TabloidKey ra = (k >> (4 * a)) & 0xF;
  const TabloidKey rb = (k >> (4 * (a + 1))) & 0xF;
  k &= ~((TabloidKey{0xFF}) << (4 * a));
  return k | (rb << (4 * a)) | (ra << (4 * (a + 1)));
}

struct SignedPerm {
  std::vector<std::size_t> img;
  int sign;
};

std::vector<SignedPerm> signed_perms(std::size_t len) {
  std::vector<SignedPerm> out;
  std::vector<std::size_t> p(len);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    int inv = 0;
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 1; j < len; ++j) inv += p[i] > p[j];
    out.push_back({p, inv % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Coefficient row of the polytabloid e_t over the tabloid basis.
void polytabloid(const Tableau& t, const Partition& l, const TabloidIndex& idx, const gf::Field& F,
                 std::span<std::uint32_t> out) {
  const auto conj = conjugate(l);
  std::vector<std::vector<SignedPerm>> col_perms;
  for (std::size_t len : conj) col_perms.push_back(signed_perms(len));
  std::vector<std::size_t> row_of(l.n());
  std::vector<std::size_t> odo(conj.size(), 0);
  while (true) {
    int sign = 1;
    for (std::size_t c = 0; c < conj.size(); ++c) {
      const SignedPerm& sp = col_perms[c][odo[c]];
      sign *= sp.sign;
      for (std::size_t r = 0; r < conj[c]; ++r) row_of[t[r][c]] = sp.img[r];
    }
    const std::uint32_t j = idx.at(key_of(row_of));
    out[j] = F.add(out[j], F.from_int(sign));
    std::size_t c = 0;
    while (c < conj.size() && ++odo[c] == col_perms[c].size()) odo[c++] = 0;
    if (c == conj.size()) break;
  }
}

}  // namespace

GModule specht_module(const Partition& lambda, std::uint32_t p) {
  const std::size_t n = lambda.n();
  if (n > kMaxSpechtDegree) throw std::invalid_argument("Specht modules limited to n <= 12");
  const gf::Field F = gf::Field::make(p);
  const TabloidIndex idx = all_tabloids(lambda);
  const std::vector<Tableau> tabs = standard_tableaux(lambda);
  const std::size_t dim = tabs.size();
  const std::size_t T = idx.keys.size();

  Mat P(F, dim, T);
  std::vector<std::size_t> std_cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    polytabloid(tabs[j], lambda, idx, F, P.row(j));
    std::vector<std::size_t> row_of(n);
    for (std::size_t r = 0; r < tabs[j].size(); ++r)
      for (std::size_t x : tabs[j][r]) row_of[x] = r;
    std_cols[j] = idx.at(key_of(row_of));
  }
  const Mat A_inv = la::inverse(la::select_columns(P, std_cols));

  std::vector<Mat> gens;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    // S = rows s_a(e_t); column j of P moves to the index of s_a{t_j}.
    Mat S(F, dim, T);
    for (std::size_t j = 0; j < T; ++j) {
      const std::uint32_t dest = idx.at(swap_points(idx.keys[j], a));
      for (std::size_t r = 0; r < dim; ++r) S.set(r, dest, P(r, j));
    }
    const Mat Mt = la::mul(la::select_columns(S, std_cols), A_inv);
    if (la::mul(Mt, P) != S) throw std::logic_error("Specht action does not close on standard polytabloids");
    gens.push_back(la::transpose(Mt));
  }
  return make_module(n, F, dim, std::move(gens), "S^" + lambda.str() + " over " + F.name());
}

GModule irreducible_D(const Partition& lambda, std::uint32_t p) {
  if (!lambda.is_p_regular(p)) throw std::invalid_argument(lambda.str() + " is not " + std::to_string(p) + "-regular");
  const std::size_t n = lambda.n();
  if (n > kMaxSpechtDegree) throw std::invalid_argument("Specht modules limited to n <= 12");
  const gf::Field F = gf::Field::make(p);
  const TabloidIndex idx = all_tabloids(lambda);
  const std::vector<Tableau> tabs = standard_tableaux(lambda);
  Mat P(F, tabs.size(), idx.keys.size());
  for (std::size_t j = 0; j < tabs.size(); ++j) polytabloid(tabs[j], lambda, idx, F, P.row(j));
  const Mat gram = la::mul(P, la::transpose(P));
  const la::Subspace rad = la::radical_of_form(gram);

  GModule s = specht_module(lambda, p);
  std::vector<Mat> gens = la::quotient_action(s.gens, rad);
  const std::size_t dim = s.dim - rad.dim();
  return make_module(n, F, dim, std::move(gens), "D^" + lambda.str() + " over " + F.name());
}

GModule trivial_module(std::size_t n, const gf::Field& field) {
  std::vector<Mat> gens(n - 1, Mat::identity(field, 1));
  return make_module(n, field, 1, std::move(gens), "trivial");
}

GModule tensor_module(const GModule& a, const GModule& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor factors for different symmetric groups");
  if (a.field != b.field) throw gf::FieldMismatch("tensor factors over different fields");
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < a.gens.size(); ++i) gens.push_back(la::kron(a.gens[i], b.gens[i]));
  return make_module(a.n, a.field, a.dim * b.dim, std::move(gens), a.label + " (x) " + b.label);
}

GModule restrict_to_prefix(const GModule& m, std::size_t k) {
  if (k == 0 || k > m.n) throw std::invalid_argument("restriction degree out of range");
  std::vector<Mat> gens(m.gens.begin(), m.gens.begin() + static_cast<std::ptrdiff_t>(k - 1));
  return GModule{k, m.field, m.dim, std::move(gens), m.label + " | S_" + std::to_string(k)};
}

la::Mat act_by_perm(const GModule& m, const grp::Perm& g) {
  if (g.degree() != m.n) throw std::invalid_argument("permutation degree differs from module degree");
  std::vector<std::size_t> w(m.n);
  for (std::size_t i = 0; i < m.n; ++i) w[i] = g(i);
  // w * s_a1 * ... * s_ak = id, so g = s_ak ... s_a1.
  std::vector<std::size_t> seq;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < m.n; ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        seq.push_back(i);
        swapped = true;
      }
    }
  }
  Mat r = Mat::identity(m.field, m.dim);
  for (std::size_t a : seq) r = la::mul(m.gens[a], r);
  return r;
}

LoewySeries loewy_series(const std::vector<Mat>& gens, const gf::Field& field, std::size_t dim) {
  LoewySeries out;
  std::vector<Mat> cur = gens;
  while (dim > 0) {
    const la::Subspace fixed = la::joint_fixed_space(cur, field, dim);
    if (fixed.dim() == 0) throw std::invalid_argument("no invariants: not a p-group action in characteristic p");
    out.layer_dims.push_back(fixed.dim());
    cur = la::quotient_action(cur, fixed);
    dim -= fixed.dim();
  }
  return out;
}

namespace {
bool is_p_power(std::uint64_t x, std::uint32_t p) {
  while (x > 1 && x % p == 0) x /= p;
  return x == 1;
}
}  // namespace

std::vector<Mat> subgroup_images(const GModule& m, const grp::GroupPresentation& h) {
  h.validate();
  if (h.degree != m.n) throw std::invalid_argument("subgroup degree differs from module degree");
  const std::uint32_t p = m.field.p();
  std::vector<grp::Perm> basis;
  if (grp::is_elementary_abelian(h, p).is_elementary_abelian) {
    for (const auto& g : h.gens) {
      if (g.is_identity()) continue;
      grp::GroupPresentation sub{h.degree, basis, ""};
      const auto els = grp::closure(sub).elements;
      if (!std::binary_search(els.begin(), els.end(), g)) basis.push_back(g);
    }
  } else {
    basis = h.gens;
  }
  std::vector<Mat> out;
  for (const auto& g : basis) out.push_back(act_by_perm(m, g));
  return out;
}

LoewySeries loewy_length(const GModule& m, const grp::GroupPresentation& h) {
  for (const auto& g : h.gens)
    if (!is_p_power(g.order(), m.field.p()))
      throw std::invalid_argument("generator " + g.to_cycles() + " is not of p-power order");
  return loewy_series(subgroup_images(m, h), m.field, m.dim);
}

std::size_t norm_rank(const std::vector<Mat>& basis_gens, const gf::Field& field, std::size_t dim) {
  const std::uint32_t p = field.p();
  Mat n = Mat::identity(field, dim);
  for (const auto& g : basis_gens) {
    Mat sum = Mat::identity(field, dim);
    Mat pw = Mat::identity(field, dim);
    for (std::uint32_t j = 1; j < p; ++j) {
      pw = la::mul(pw, g);
      sum = la::add(sum, pw);
    }
    n = la::mul(n, sum);
  }
  return la::rank(n);
}

std::size_t free_summand_count(const GModule& m, const grp::GroupPresentation& h) {
  if (!grp::is_elementary_abelian(h, m.field.p()).is_elementary_abelian)
    throw std::invalid_argument(h.label + " is not elementary abelian");
  return norm_rank(subgroup_images(m, h), m.field, m.dim);
}

std::vector<std::size_t> jordan_profile(const Mat& g, std::uint32_t p) {
  const std::size_t d = g.rows();
  const Mat u = la::sub(g, Mat::identity(g.field(), d));
  std::vector<std::size_t> r{d};
  Mat pw = Mat::identity(g.field(), d);
  for (std::uint32_t k = 1; k <= p; ++k) {
    pw = la::mul(pw, u);
    r.push_back(la::rank(pw));
  }
  if (r[p] != 0) throw std::invalid_argument("matrix is not unipotent of exponent p");
  r.push_back(0);
  std::vector<std::size_t> blocks;
  for (std::size_t k = 1; k <= p; ++k) {
    const std::size_t count = (r[k - 1] - r[k]) - (r[k] - r[k + 1]);
    blocks.insert(blocks.end(), count, k);
  }
  return blocks;
}

std::vector<std::size_t> cyclic_profile(const GModule& m, const grp::Perm& g) {
  const std::uint32_t p = m.field.p();
  if (g.order() != p) throw std::invalid_argument(g.to_cycles() + " does not have order p");
  return jordan_profile(act_by_perm(m, g), p);
}

std::string Fingerprint::str() const {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  return "dim=" + std::to_string(dim) + " layers=" + list(layers) + " free=" + std::to_string(free_count) +
         " fixed=" + list(fixed_dims);
}

Fingerprint fingerprint_of_action(const std::vector<Mat>& basis_gens, const gf::Field& field, std::size_t dim) {
  Fingerprint f;
  f.dim = dim;
  f.layers = loewy_series(basis_gens, field, dim).layer_dims;
  f.free_count = norm_rank(basis_gens, field, dim);
  const Mat id = Mat::identity(field, dim);
  for (const auto& g : basis_gens) f.fixed_dims.push_back(la::kernel(la::sub(g, id)).dim());
  return f;
}

Fingerprint fingerprint(const GModule& m, const grp::GroupPresentation& h) {
  if (!grp::is_elementary_abelian(h, m.field.p()).is_elementary_abelian)
    throw std::invalid_argument(h.label + " is not elementary abelian");
  return fingerprint_of_action(subgroup_images(m, h), m.field, m.dim);
}

}  // namespace modsym::modrep
