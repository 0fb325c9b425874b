#include "doctest.h"
#include "modsym/gf.hpp"

#include <algorithm>
#include <vector>

using modsym::gf::Elem;
using modsym::gf::Field;

namespace {

// Independent irreducibility oracle: a monic polynomial of degree 2..4 is
// irreducible iff it has no monic factor of degree <= r/2. Checked by
// multiplying out all pairs of monic polynomials.
std::vector<std::uint32_t> polymul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                   std::uint32_t p) {
  std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

std::vector<std::vector<std::uint32_t>> monics(std::uint32_t p, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint32_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(d + 1, 0);
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

bool reducible_by_products(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::uint32_t r = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= r / 2; ++d)
    for (const auto& a : monics(p, d))
      for (const auto& b : monics(p, r - d))
        if (polymul(a, b, p) == f) return true;
  return false;
}

}  // namespace

TEST_CASE("make_field picks the smallest irreducible modulus") {
  const Field f9 = Field::make(3, 2);
  CHECK(std::vector<std::uint32_t>(f9.modulus().begin(), f9.modulus().end()) == std::vector<std::uint32_t>{1, 0, 1});
  const Field f4 = Field::make(2, 2);
  CHECK(std::vector<std::uint32_t>(f4.modulus().begin(), f4.modulus().end()) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(2).modulus().empty());

  // Oracle: first monic polynomial in low-degree-first order with no factorization.
  const std::pair<std::uint32_t, std::uint32_t> cases[] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}};
  for (auto [p, r] : cases) {
    std::vector<std::uint32_t> expected;
    // monics() enumerates with c_0 as the least significant digit; reorder so
    // c_0 is compared first.
    auto all = monics(p, r);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    for (const auto& f : all)
      if (!reducible_by_products(f, p)) {
        expected = f;
        break;
      }
    const Field F = Field::make(p, r);
    CHECK(std::vector<std::uint32_t>(F.modulus().begin(), F.modulus().end()) == expected);
  }
}

TEST_CASE("make_field rejects bad parameters and is deterministic") {
  CHECK_THROWS_AS(Field::make(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(67), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
  CHECK(Field::make(5, 3) == Field::make(5, 3));
  CHECK(Field::of_order(27) == Field::make(3, 3));
}

TEST_CASE("spot arithmetic values") {
  const Field f2 = Field::make(2);
  CHECK(f2.add(1, 1) == 0);
  const Field f9 = Field::make(3, 2);
  // x is encoded as 3 (digit 1 in the x position).
  CHECK(f9.mul(3, 3) == 2);
  CHECK(f9.inv(3) == 6);
  const Field f5 = Field::make(5);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(2) == 3);
  CHECK(f2.inv(1) == 1);
  CHECK_THROWS_AS(f5.inv(0), std::domain_error);
}

TEST_CASE("Elem operators reject mixed fields") {
  const Elem a(Field::make(5), 2);
  const Elem b(Field::make(7), 2);
  CHECK_THROWS_AS(a + b, modsym::gf::FieldMismatch);
  CHECK((a * a).value == 4);
  CHECK((a - a).is_zero());
  CHECK((modsym::gf::inv(a) * a).value == 1);
}

TEST_CASE("field axioms hold exhaustively for q <= 81") {
  const std::uint64_t orders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 81};
  for (std::uint64_t q : orders) {
    CAPTURE(q);
    const Field F = Field::of_order(q);
    const std::uint32_t n = F.q();
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) {
      if (a != 0) ok &= F.pow(a, n - 1) == 1 && F.mul(a, F.inv(a)) == 1;
      ok &= F.add(a, F.neg(a)) == 0;
      for (std::uint32_t b = 0; b < n && ok; ++b) {
        ok &= F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
        ok &= F.sub(F.add(a, b), b) == a;
        for (std::uint32_t c = 0; c < n && ok; ++c) {
          ok &= F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
          ok &= F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
          ok &= F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}
