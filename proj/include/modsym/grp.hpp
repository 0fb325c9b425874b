#pragma once

// Permutation groups of small degree: cycle I/O, bounded enumeration,
// elementary abelian p-subgroups and the standard subgroups of S_n.
//
// Points are 0-based internally. Cycle notation is 1-based.
// Composition follows function composition: (a * b)(x) = a(b(x)).

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modsym::grp {

constexpr std::size_t kMaxDegree = 16;

class MalformedCycles : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);  // identity

  static Perm from_images(std::span<const std::size_t> images);
  // "(1 2 3)(4 5)", commas also accepted; "()" is the identity.
  static Perm from_cycles(std::string_view text, std::size_t degree);
  static Perm transposition(std::size_t degree, std::size_t a, std::size_t b);  // 0-based points

  std::size_t degree() const { return n_; }
  std::size_t operator()(std::size_t i) const { return img_[i]; }

  Perm inverse() const;
  int sign() const;
  std::uint64_t order() const;
  bool is_identity() const;
  // Nontrivial cycles, each starting at its smallest point, sorted.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::string to_cycles() const;

  // 4 bits per point; unique per permutation of a fixed degree.
  std::uint64_t key() const;
  // Position in the lexicographic order of S_n (n <= 20).
  std::uint64_t lex_rank() const;

  bool operator==(const Perm& o) const { return n_ == o.n_ && img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return n_ != o.n_ ? n_ < o.n_ : img_ < o.img_; }

 private:
  friend Perm compose(const Perm& a, const Perm& b);
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

Perm compose(const Perm& a, const Perm& b);
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }
Perm power(const Perm& a, std::uint64_t e);

struct GroupPresentation {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::string label;

  // Throws std::invalid_argument when generator degrees disagree.
  void validate() const;
};

struct ElementSet {
  std::vector<Perm> elements;  // sorted lexicographically
  bool complete = false;
};

constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

enum class StandardKind { sym, alt };
GroupPresentation standard_gens(StandardKind kind, std::size_t n);

// Breadth-first enumeration; the visitor sees every element once, starting
// with the identity. Returns false if the cap stopped it early.
bool enumerate(const GroupPresentation& g, std::uint64_t cap, const std::function<void(const Perm&)>& visit);
ElementSet closure(const GroupPresentation& g, std::uint64_t cap = kDefaultEnumCap);

struct ElemAbelianCheck {
  bool is_elementary_abelian = false;
  std::size_t rank = 0;  // log_p of the order, when elementary abelian
  std::uint64_t order = 0;
};
// Throws CapExceeded if the closure does not fit under cap.
ElemAbelianCheck is_elementary_abelian(const GroupPresentation& g, std::uint32_t p,
                                       std::uint64_t cap = kDefaultEnumCap);

struct RankSearchResult {
  std::size_t rank = 0;
  std::vector<Perm> witness;
  bool exact = false;
  std::uint64_t nodes = 0;
};
RankSearchResult elem_abelian_rank_search(const ElementSet& group, std::uint32_t p, std::uint64_t budget);

enum class SpecialKind { H, K_power_H, tilde_H, K_power_tilde_H };
// H_n, K^m x H_{n-4m}, H_n n A_n, K^m x (H_{n-4m} n A_n).
GroupPresentation special_subgroup(SpecialKind kind, std::size_t n, std::size_t m = 0);

}  // namespace modsym::grp
