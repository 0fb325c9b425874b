#pragma once

// Arithmetic in GF(p) and GF(p^r).
//
// Elements are encoded as integers in [0, q): the base-p digits of the value
// are the coordinates in the polynomial basis 1, x, ..., x^(r-1) modulo the
// field's defining polynomial.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modsym::gf {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
struct FieldImpl;
}

class Field {
 public:
  // Smallest monic irreducible modulus of degree r, coefficients compared
  // low-degree first. Throws std::invalid_argument on non-prime p,
  // r outside [1, 4], or p outside [2, 61].
  static Field make(std::uint32_t p, std::uint32_t r = 1);

  // GF(q) for a prime power q.
  static Field of_order(std::uint64_t q);

  Field();  // GF(2)

  std::uint32_t p() const;
  std::uint32_t r() const;
  std::uint32_t q() const;
  bool is_gf2() const;
  bool is_prime() const;

  // Full coefficient list c_0..c_r (c_r = 1); empty for prime fields.
  std::span<const std::uint32_t> modulus() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  // Throws std::domain_error for a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // Integer (possibly negative) mapped into the prime subfield.
  std::uint32_t from_int(std::int64_t v) const;

  // Base-p digits of an element (length r).
  std::vector<std::uint32_t> digits(std::uint32_t a) const;

  std::string name() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl);
  std::shared_ptr<const detail::FieldImpl> impl_;
};

// Element bound to its field; operators throw FieldMismatch when mixing
// fields.
struct Elem {
  Field field;
  std::uint32_t value = 0;

  Elem() = default;
  Elem(Field f, std::uint32_t v);

  bool is_zero() const { return value == 0; }
  bool operator==(const Elem& o) const { return field == o.field && value == o.value; }
};

enum class ArithKind { add, sub, mul };

Elem arith(const Elem& a, const Elem& b, ArithKind kind);
Elem inv(const Elem& a);

inline Elem operator+(const Elem& a, const Elem& b) { return arith(a, b, ArithKind::add); }
inline Elem operator-(const Elem& a, const Elem& b) { return arith(a, b, ArithKind::sub); }
inline Elem operator*(const Elem& a, const Elem& b) { return arith(a, b, ArithKind::mul); }

bool is_prime(std::uint64_t n);

}  // namespace modsym::gf
