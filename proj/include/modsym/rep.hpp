#pragma once

// A permutation group together with matrix images of its generators.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modsym/exactla.hpp"
#include "modsym/forms.hpp"
#include "modsym/grp.hpp"

namespace modsym::rep {

struct Representation {
  grp::GroupPresentation group;
  gf::Field field;
  std::size_t dim = 0;
  std::vector<la::Mat> images;  // one per group generator
  // Direct image of an arbitrary group element; empty when only the
  // generator images are known.
  std::function<la::Mat(const grp::Perm&)> image_of;
  std::optional<bool> faithful;
  std::string label;

  // Image of g; throws std::logic_error when image_of is unset.
  la::Mat image(const grp::Perm& g) const;
};

// Orders up to this bound get faithfulness computed at construction.
constexpr std::uint64_t kAutoFaithfulLimit = 100'000;

// Kernel of the map on the enumerated group is trivial. nullopt when the
// group exceeds cap.
std::optional<bool> compute_faithfulness(const Representation& r, std::uint64_t cap);

// Number of distinct matrices in the image; nullopt when the group exceeds cap.
std::optional<std::uint64_t> image_order(const Representation& r, std::uint64_t cap);

// Random words of length <= max_len: the product of generator images must
// equal the directly computed image of the product permutation.
bool relations_hold(const Representation& r, std::uint64_t seed, std::size_t samples = 64, std::size_t max_len = 10);

// Every generator image preserves the form.
bool check_invariance(const Representation& r, const forms::FormSpec& f);

// Natural permutation module on F^n: g maps basis vector i to g(i).
Representation permutation_rep(const grp::GroupPresentation& g, const gf::Field& field);

// Same group and field with the generator images replaced.
Representation with_images(const Representation& r, std::size_t dim, std::vector<la::Mat> images,
                           std::function<la::Mat(const grp::Perm&)> image_of, std::string label);

}  // namespace modsym::rep
