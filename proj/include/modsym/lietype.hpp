#pragma once

// Split classical groups SL_m, Sp_2m, SO_2m and SO_2m+1 over F_q in their
// standard representations, and their intersection with the unipotent
// radical fixing a half-dimensional subspace W.
//
// Basis order for the form families: v_1 .. v_m, v_-m .. v_-1 (then v_0 for
// SO_2m+1), so v_i and v_-i are a hyperbolic pair and W = <v_1 .. v_m>.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modsym/exactla.hpp"
#include "modsym/forms.hpp"

namespace modsym::lietype {

enum class Family { SL, Sp, SOeven, SOodd };

const char* family_name(Family f);
Family parse_family(const std::string& s);  // throws std::invalid_argument

struct ClassicalSpec {
  Family family = Family::SL;
  std::size_t m = 0;
  gf::Field field;
  std::optional<forms::FormSpec> form;
  std::size_t dim_v = 0;
  bool nonstandard = false;  // m below the range the closed forms cover
};

// Throws std::invalid_argument for m < 1, SO_2m+1 over even q, or m below the
// standard range without allow_nonstandard (m >= 2; m >= 4 for SO_2m).
ClassicalSpec make_classical(Family family, std::size_t m, std::uint64_t q, bool allow_nonstandard = false);

bool in_standard_range(Family family, std::size_t m);

bool group_membership(const la::Mat& g, const ClassicalSpec& spec);

// W: first m coordinates, or first floor(m/2) for SL.
la::Subspace standard_w(const ClassicalSpec& spec);

struct RootElement {
  std::string label;  // e.g. "e1-e3", "e1+e2", "2e1"
  std::uint32_t t = 1;
  la::Mat matrix;
};

// One element per root and per F_p-basis scalar x^k of F_q. Throws
// std::logic_error if an element leaves the group or fails to act trivially
// on W and V/W.
std::vector<RootElement> ug_generators(const ClassicalSpec& spec);

std::size_t closed_form(Family family, std::size_t m);
// Reference value of r_p(G)/r.
std::size_t rp_reference(Family family, std::size_t m, std::uint64_t q);

struct IntersectionResult {
  std::size_t computed = 0;     // dim over F_q of the constraint solution space
  std::size_t closed_form = 0;
  bool match = false;
  std::size_t root_span = 0;    // F_q-span of {g - I : g in ug_generators}
  std::size_t fp_dim = 0;       // F_p-span of the same
  std::size_t rp_reference = 0;
};

IntersectionResult intersection_dim(const ClassicalSpec& spec);

}  // namespace modsym::lietype
