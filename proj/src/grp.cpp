#include "modsym/grp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace modsym::grp {

namespace {

void check_degree(std::size_t n) {
  if (n > kMaxDegree) throw std::invalid_argument("permutation degree exceeds " + std::to_string(kMaxDegree));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Perm::Perm(std::size_t degree) {
  check_degree(degree);
  n_ = static_cast<std::uint8_t>(degree);
  for (std::size_t i = 0; i < degree; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(std::span<const std::size_t> images) {
  Perm p(images.size());
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || (seen >> images[i]) & 1u) throw std::invalid_argument("images are not a bijection");
    seen |= 1u << images[i];
    p.img_[i] = static_cast<std::uint8_t>(images[i]);
  }
  return p;
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  Perm p(degree);
  std::uint32_t used = 0;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  if (i == text.size()) throw MalformedCycles("empty cycle string");
  while (i < text.size()) {
    if (text[i] != '(') throw MalformedCycles("expected '(' in cycle string");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
      if (i >= text.size()) throw MalformedCycles("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw MalformedCycles("unexpected character in cycle string");
      std::size_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 1000) throw MalformedCycles("point out of range");
        ++i;
      }
      if (v < 1 || v > degree) throw MalformedCycles("point out of range");
      if ((used >> (v - 1)) & 1u) throw MalformedCycles("point repeated in cycles");
      used |= 1u << (v - 1);
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.img_[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    skip_space();
  }
  return p;
}

Perm Perm::transposition(std::size_t degree, std::size_t a, std::size_t b) {
  Perm p(degree);
  if (a >= degree || b >= degree || a == b) throw std::invalid_argument("bad transposition");
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Perm Perm::inverse() const {
  Perm p(n_);
  for (std::size_t i = 0; i < n_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

int Perm::sign() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Perm::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if ((seen >> i) & 1u || img_[i] == i) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !((seen >> j) & 1u); j = img_[j]) {
      seen |= 1u << j;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_cycles() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

std::uint64_t Perm::key() const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) k |= std::uint64_t{img_[i]} << (4 * i);
  return k;
}

std::uint64_t Perm::lex_rank() const {
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint32_t below = used & ((1u << img_[i]) - 1);
    const std::uint64_t smaller = img_[i] - static_cast<std::uint64_t>(std::popcount(below));
    r = r * (n_ - i) + smaller;
    used |= 1u << img_[i];
  }
  return r;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  Perm c;
  c.n_ = a.n_;
  for (std::size_t i = 0; i < a.n_; ++i) c.img_[i] = a.img_[b.img_[i]];
  return c;
}

Perm power(const Perm& a, std::uint64_t e) {
  Perm r(a.degree());
  Perm base = a;
  for (; e; e >>= 1) {
    if (e & 1) r = r * base;
    base = base * base;
  }
  return r;
}

void GroupPresentation::validate() const {
  check_degree(degree);
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree differs from group degree");
}

GroupPresentation standard_gens(StandardKind kind, std::size_t n) {
  GroupPresentation g;
  g.degree = n;
  auto cycle_of = [&](std::size_t from) {
    std::string s = "(";
    for (std::size_t i = from; i <= n; ++i) s += std::to_string(i) + (i < n ? " " : "");
    return Perm::from_cycles(s + ")", n);
  };
  if (kind == StandardKind::sym) {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("S_n requires 1 <= n <= 16");
    g.label = "S_" + std::to_string(n);
    if (n >= 2) g.gens.push_back(Perm::transposition(n, 0, 1));
    if (n >= 3) g.gens.push_back(cycle_of(1));
  } else {
    if (n < 3 || n > kMaxDegree) throw std::invalid_argument("A_n requires 3 <= n <= 16");
    g.label = "A_" + std::to_string(n);
    g.gens.push_back(Perm::from_cycles("(1 2 3)", n));
    if (n >= 4) g.gens.push_back(cycle_of(n % 2 ? 1 : 2));
  }
  return g;
}

bool enumerate(const GroupPresentation& g, std::uint64_t cap, const std::function<void(const Perm&)>& visit) {
  g.validate();
  if (cap == 0) return false;
  const std::size_t n = g.degree;
  const bool dense = n <= 10;
  std::vector<std::uint64_t> bits;
  std::unordered_set<std::uint64_t> seen;
  if (dense) bits.assign((factorial(n) + 63) / 64, 0);
  auto mark = [&](const Perm& x) {
    if (dense) {
      const std::uint64_t r = x.lex_rank();
      std::uint64_t& w = bits[r / 64];
      const std::uint64_t bit = std::uint64_t{1} << (r % 64);
      if (w & bit) return false;
      w |= bit;
      return true;
    }
    return seen.insert(x.key()).second;
  };
  std::vector<Perm> frontier{Perm(n)};
  mark(frontier[0]);
  visit(frontier[0]);
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : g.gens) {
        const Perm y = s * x;
        if (!mark(y)) continue;
        if (count == cap) return false;
        ++count;
        visit(y);
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  return true;
}

ElementSet closure(const GroupPresentation& g, std::uint64_t cap) {
  ElementSet out;
  out.complete = enumerate(g, cap, [&](const Perm& x) { out.elements.push_back(x); });
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

ElemAbelianCheck is_elementary_abelian(const GroupPresentation& g, std::uint32_t p, std::uint64_t cap) {
  ElemAbelianCheck out;
  const ElementSet all = closure(g, cap);
  if (!all.complete) throw CapExceeded("group closure exceeds enumeration cap");
  out.order = all.elements.size();
  for (std::size_t i = 0; i < g.gens.size(); ++i) {
    if (!power(g.gens[i], p).is_identity()) return out;
    for (std::size_t j = 0; j < i; ++j)
      if (g.gens[i] * g.gens[j] != g.gens[j] * g.gens[i]) return out;
  }
  std::uint64_t size = 1;
  std::size_t rank = 0;
  while (size < out.order) {
    size *= p;
    ++rank;
  }
  if (size != out.order) return out;
  out.is_elementary_abelian = true;
  out.rank = rank;
  return out;
}

namespace {

class RankSearch {
 public:
  RankSearch(const ElementSet& group, std::uint32_t p, std::uint64_t budget) : p_(p), budget_(budget) {
    for (const auto& x : group.elements)
      if (!x.is_identity() && power(x, p).is_identity()) cand_.push_back(x);
    const std::size_t c = cand_.size();
    words_ = (c + 63) / 64;
    for (std::size_t i = 0; i < c; ++i) index_.emplace(cand_[i].key(), i);
    commute_.assign(c * words_, 0);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = i; j < c; ++j)
        if (cand_[i] * cand_[j] == cand_[j] * cand_[i]) {
          commute_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
          commute_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
        }
  }

  RankSearchResult run() {
    std::vector<std::uint64_t> avail(words_, ~std::uint64_t{0});
    if (cand_.size() % 64) avail.back() = (std::uint64_t{1} << (cand_.size() % 64)) - 1;
    if (cand_.empty()) avail.clear();
    std::vector<std::size_t> members;
    exhausted_ = true;
    dfs(avail, members, 0, 1);
    RankSearchResult out;
    out.rank = best_.size();
    for (std::size_t i : best_) out.witness.push_back(cand_[i]);
    out.exact = exhausted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  // avail: candidates that commute with all chosen generators, lie outside
  // the current subgroup and have index above the last chosen generator.
  void dfs(const std::vector<std::uint64_t>& avail, const std::vector<std::size_t>& members, std::size_t depth,
           std::uint64_t order) {
    if (++nodes_ > budget_) {
      exhausted_ = false;
      return;
    }
    if (depth > best_.size()) best_ = chosen_;
    std::uint64_t count = 0;
    for (auto w : avail) count += static_cast<std::uint64_t>(std::popcount(w));
    // Any extension to rank R puts p^R - p^depth new elements in avail.
    std::uint64_t extra = 0, size = order;
    while (size * p_ - order <= count) {
      size *= p_;
      ++extra;
    }
    if (depth + extra <= best_.size()) return;
    for (std::size_t w = 0; w < avail.size(); ++w) {
      std::uint64_t word = avail[w];
      while (word) {
        const std::size_t g = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        if (!exhausted_) return;
        // New subgroup elements h * g^j.
        std::vector<std::size_t> grown = members;
        std::vector<Perm> layer{Perm(cand_[g].degree())};
        for (std::size_t idx : members) layer.push_back(cand_[idx]);
        Perm gj = cand_[g];
        for (std::uint32_t j = 1; j < p_; ++j, gj = gj * cand_[g])
          for (std::size_t k = 0; k < members.size() + 1; ++k) grown.push_back(index_.at((layer[k] * gj).key()));
        std::vector<std::uint64_t> next(avail.size());
        const std::uint64_t* row = commute_.data() + g * words_;
        for (std::size_t k = 0; k < avail.size(); ++k) next[k] = avail[k] & row[k];
        // Indices <= g are skipped: generators are chosen in increasing order.
        for (std::size_t k = 0; k < g / 64; ++k) next[k] = 0;
        next[g / 64] &= ~((std::uint64_t{2} << (g % 64)) - 1);
        for (std::size_t idx : grown) next[idx / 64] &= ~(std::uint64_t{1} << (idx % 64));
        chosen_.push_back(g);
        dfs(next, grown, depth + 1, order * p_);
        chosen_.pop_back();
      }
    }
  }

  std::uint32_t p_;
  std::uint64_t budget_;
  std::vector<Perm> cand_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> commute_;
  std::vector<std::size_t> chosen_, best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = true;
};

}  // namespace

RankSearchResult elem_abelian_rank_search(const ElementSet& group, std::uint32_t p, std::uint64_t budget) {
  if (!group.complete) throw std::invalid_argument("rank search needs a complete element set");
  return RankSearch(group, p, budget).run();
}

GroupPresentation special_subgroup(SpecialKind kind, std::size_t n, std::size_t m) {
  check_degree(n);
  GroupPresentation g;
  g.degree = n;
  const bool k_power = kind == SpecialKind::K_power_H || kind == SpecialKind::K_power_tilde_H;
  if (!k_power && m != 0) throw std::invalid_argument("m applies only to K-power subgroups");
  if (4 * m > n) throw std::invalid_argument("K^m needs 4m <= n");
  auto cyc = [&](const std::string& s) { return Perm::from_cycles(s, n); };
  auto pt = [](std::size_t i) { return std::to_string(i); };
  for (std::size_t b = 0; b < m; ++b) {
    const std::size_t a = 4 * b + 1;
    g.gens.push_back(cyc("(" + pt(a) + " " + pt(a + 1) + ")(" + pt(a + 2) + " " + pt(a + 3) + ")"));
    g.gens.push_back(cyc("(" + pt(a) + " " + pt(a + 2) + ")(" + pt(a + 1) + " " + pt(a + 3) + ")"));
  }
  const std::size_t start = 4 * m + 1;
  const std::size_t pairs = (n - 4 * m) / 2;
  const bool tilde = kind == SpecialKind::tilde_H || kind == SpecialKind::K_power_tilde_H;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t a = start + 2 * i;
    if (!tilde) {
      g.gens.push_back(cyc("(" + pt(a) + " " + pt(a + 1) + ")"));
    } else if (i > 0) {
      g.gens.push_back(cyc("(" + pt(start) + " " + pt(start + 1) + ")(" + pt(a) + " " + pt(a + 1) + ")"));
    }
  }
  const std::string rest = std::to_string(n - 4 * m);
  const std::string h = tilde ? "Htilde_" : "H_";
  switch (kind) {
    case SpecialKind::H:
      g.label = "H_" + std::to_string(n);
      break;
    case SpecialKind::tilde_H:
      g.label = "Htilde_" + std::to_string(n);
      break;
    default:
      g.label = m == 0 ? h + rest : (m == 1 ? "K" : "K^" + std::to_string(m)) + (4 * m == n ? "" : "x" + h + rest);
  }
  return g;
}

}  // namespace modsym::grp
