#include "modsym/rep.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace modsym::rep {

la::Mat Representation::image(const grp::Perm& g) const {
  if (!image_of) throw std::logic_error("representation has no element-wise image map");
  return image_of(g);
}

std::optional<bool> compute_faithfulness(const Representation& r, std::uint64_t cap) {
  std::uint64_t trivial = 0;
  const bool done = grp::enumerate(r.group, cap, [&](const grp::Perm& g) {
    if (r.image(g).is_identity()) ++trivial;
  });
  if (!done) return std::nullopt;
  return trivial == 1;
}

std::optional<std::uint64_t> image_order(const Representation& r, std::uint64_t cap) {
  std::set<std::vector<std::uint32_t>> seen;
  const bool done = grp::enumerate(r.group, cap, [&](const grp::Perm& g) { seen.insert(r.image(g).data()); });
  if (!done) return std::nullopt;
  return seen.size();
}

bool relations_hold(const Representation& r, std::uint64_t seed, std::size_t samples, std::size_t max_len) {
  if (r.images.size() != r.group.gens.size()) return false;
  for (std::size_t i = 0; i < r.images.size(); ++i)
    if (r.images[i] != r.image(r.group.gens[i])) return false;
  if (r.images.empty()) return true;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t len = 1 + rng() % max_len;
    grp::Perm word(r.group.degree);
    la::Mat m = la::Mat::identity(r.field, r.dim);
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t i = rng() % r.images.size();
      word = word * r.group.gens[i];
      m = la::mul(m, r.images[i]);
    }
    if (m != r.image(word)) return false;
  }
  return true;
}

bool check_invariance(const Representation& r, const forms::FormSpec& f) {
  if (r.dim != f.dim()) throw la::DimensionMismatch("representation and form dimensions differ");
  for (const auto& g : r.images)
    if (!forms::preserves(g, f)) return false;
  return true;
}

Representation permutation_rep(const grp::GroupPresentation& g, const gf::Field& field) {
  Representation r;
  r.group = g;
  r.field = field;
  r.dim = g.degree;
  r.label = "perm(" + g.label + ")";
  r.image_of = [field](const grp::Perm& x) {
    la::Mat m(field, x.degree(), x.degree());
    for (std::size_t j = 0; j < x.degree(); ++j) m.set(x(j), j, 1);
    return m;
  };
  for (const auto& x : g.gens) r.images.push_back(r.image_of(x));
  return r;
}

Representation with_images(const Representation& r, std::size_t dim, std::vector<la::Mat> images,
                           std::function<la::Mat(const grp::Perm&)> image_of, std::string label) {
  Representation out;
  out.group = r.group;
  out.field = r.field;
  out.dim = dim;
  out.images = std::move(images);
  out.image_of = std::move(image_of);
  out.label = std::move(label);
  return out;
}

}  // namespace modsym::rep
