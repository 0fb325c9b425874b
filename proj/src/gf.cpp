#include "modsym/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace modsym::gf {

namespace detail {

struct FieldImpl {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // c_0..c_r, empty for r == 1
  // Log/antilog tables for extension fields of order <= kTableLimit.
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> pw;  // p^k, k = 0..r
};

}  // namespace detail

namespace {

constexpr std::uint32_t kTableLimit = 1u << 16;

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo monic-or-not b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d * 2 <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t r) {
  // Lexicographic order with c_0 most significant.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < r; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(r + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t i = r; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[r] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::uint32_t poly_mul_reduce(const detail::FieldImpl& F, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = F.p, r = F.r;
  std::uint32_t da[4] = {}, db[4] = {};
  for (std::uint32_t i = 0; i < r; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  std::uint64_t prod[8] = {};
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < r; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
  for (auto& c : prod) c %= p;
  // Reduce with the monic modulus: x^r = -(c_0 + ... + c_{r-1} x^{r-1}).
  for (std::uint32_t k = 2 * r - 2; k >= r; --k) {
    const std::uint64_t c = prod[k];
    if (c) {
      prod[k] = 0;
      for (std::uint32_t i = 0; i < r; ++i) {
        prod[k - r + i] = (prod[k - r + i] + c * (p - F.modulus[i])) % p;
      }
    }
    if (k == r) break;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = r; i-- > 0;) out = out * p + static_cast<std::uint32_t>(prod[i]);
  return out;
}

std::uint32_t digit_add(const detail::FieldImpl& F, std::uint32_t a, std::uint32_t b) {
  if (F.p == 2) return a ^ b;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < F.r; ++i) {
    const std::uint32_t s = (a % F.p + b % F.p) % F.p;
    out += s * F.pw[i];
    a /= F.p;
    b /= F.p;
  }
  return out;
}

std::uint32_t digit_neg(const detail::FieldImpl& F, std::uint32_t a) {
  if (F.p == 2) return a;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < F.r; ++i) {
    const std::uint32_t d = a % F.p;
    out += ((F.p - d) % F.p) * F.pw[i];
    a /= F.p;
  }
  return out;
}

void build_tables(detail::FieldImpl& F) {
  const std::uint32_t q = F.q;
  // Search for a primitive element by brute force; q is small.
  for (std::uint32_t g = 2; g < q; ++g) {
    std::vector<std::uint32_t> exp(q - 1);
    std::vector<std::uint32_t> log(q, 0);
    std::uint32_t x = 1;
    bool ok = true;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      if (k > 0 && x == 1) {
        ok = false;
        break;
      }
      exp[k] = x;
      log[x] = k;
      x = poly_mul_reduce(F, x, g);
    }
    if (ok && x == 1) {
      F.exp = std::move(exp);
      F.log = std::move(log);
      return;
    }
  }
  throw std::logic_error("no primitive element found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field() : Field(make(2, 1)) {}

Field::Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}

Field Field::make(std::uint32_t p, std::uint32_t r) {
  if (p < 2 || p > 61 || !gf::is_prime(p)) throw std::invalid_argument("field characteristic must be a prime in [2, 61]");
  if (r < 1 || r > 4) throw std::invalid_argument("extension degree must lie in [1, 4]");
  // Fields are immutable; share one instance per (p, r).
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldImpl>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({p, r}); it != cache.end()) return Field(it->second);
  auto F = std::make_shared<detail::FieldImpl>();
  F->p = p;
  F->r = r;
  std::uint64_t q = 1;
  F->pw.push_back(1);
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    F->pw.push_back(static_cast<std::uint32_t>(q));
  }
  F->q = static_cast<std::uint32_t>(q);
  if (r > 1) {
    F->modulus = smallest_irreducible(p, r);
    if (F->q <= kTableLimit) build_tables(*F);
  }
  cache[{p, r}] = F;
  return Field(std::move(F));
}

Field Field::of_order(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= 61; ++p) {
    if (!gf::is_prime(p)) continue;
    std::uint64_t v = q;
    std::uint32_t r = 0;
    while (v % p == 0) {
      v /= p;
      ++r;
    }
    if (r > 0) {
      if (v != 1) break;
      return make(p, r);
    }
  }
  throw std::invalid_argument("field order must be a prime power p^r with p <= 61, r <= 4");
}

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::r() const { return impl_->r; }
std::uint32_t Field::q() const { return impl_->q; }
bool Field::is_gf2() const { return impl_->q == 2; }
bool Field::is_prime() const { return impl_->r == 1; }
std::span<const std::uint32_t> Field::modulus() const { return impl_->modulus; }

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  const auto& F = *impl_;
  if (F.r == 1) {
    const std::uint32_t s = a + b;
    return s >= F.p ? s - F.p : s;
  }
  return digit_add(F, a, b);
}

std::uint32_t Field::neg(std::uint32_t a) const {
  const auto& F = *impl_;
  if (F.r == 1) return a == 0 ? 0 : F.p - a;
  return digit_neg(F, a);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  const auto& F = *impl_;
  if (F.r == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % F.p);
  if (a == 0 || b == 0) return 0;
  if (!F.exp.empty()) {
    std::uint32_t k = F.log[a] + F.log[b];
    if (k >= F.q - 1) k -= F.q - 1;
    return F.exp[k];
  }
  return poly_mul_reduce(F, a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1, base = a;
  for (; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const auto& F = *impl_;
  if (F.r == 1) return inv_mod(a, F.p);
  if (!F.exp.empty()) return F.exp[(F.q - 1 - F.log[a]) % (F.q - 1)];
  return pow(a, F.q - 2);
}

std::uint32_t Field::from_int(std::int64_t v) const {
  const std::int64_t p = impl_->p;
  return static_cast<std::uint32_t>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> out(impl_->r);
  for (auto& d : out) {
    d = a % impl_->p;
    a /= impl_->p;
  }
  return out;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << impl_->q << ")";
  return os.str();
}

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->r == other.impl_->r && impl_->modulus == other.impl_->modulus;
}

Elem::Elem(Field f, std::uint32_t v) : field(std::move(f)), value(v) {
  if (value >= field.q()) throw std::invalid_argument("element value out of range for field");
}

Elem arith(const Elem& a, const Elem& b, ArithKind kind) {
  if (a.field != b.field) throw FieldMismatch("operands belong to different fields");
  switch (kind) {
    case ArithKind::add:
      return {a.field, a.field.add(a.value, b.value)};
    case ArithKind::sub:
      return {a.field, a.field.sub(a.value, b.value)};
    case ArithKind::mul:
      return {a.field, a.field.mul(a.value, b.value)};
  }
  throw std::logic_error("unreachable");
}

Elem inv(const Elem& a) { return {a.field, a.field.inv(a.value)}; }

}  // namespace modsym::gf
