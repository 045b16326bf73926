#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcpc/error.hpp"

namespace qcpc {

// Field elements are stored as packed base-p integers: the element
// sum d_i xi^i (polynomial basis over F_p) is the integer sum d_i p^i.
using Value = std::uint64_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over F_p as ascending coefficient vectors. Only used while a
// field is being set up, before any Field handle exists.
using RawPoly = std::vector<std::uint64_t>;

inline void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& f, std::uint64_t p) {
  raw_trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t inv_lead = inv_mod_p(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    raw_trim(a);
  }
  return a;
}

inline RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return raw_mod(std::move(r), f, p);
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree s is irreducible iff gcd(X^{p^i} - X, f) = 1 for i <= s/2.
inline bool raw_is_irreducible(const RawPoly& f, std::uint64_t p) {
  const std::size_t s = f.size() - 1;
  if (s == 0) return false;
  if (s == 1) return true;
  RawPoly h = raw_mod(RawPoly{0, 1}, f, p);
  for (std::size_t i = 1; i <= s / 2; ++i) {
    RawPoly base = h, acc{1};
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) acc = raw_mulmod(acc, base, f, p);
      base = raw_mulmod(base, base, f, p);
    }
    h = acc;
    RawPoly t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    raw_trim(t);
    if (raw_gcd(f, t, p).size() > 1) return false;
  }
  return true;
}

struct FieldCore {
  std::uint64_t p = 2;
  std::uint32_t s = 1;
  Value size = 2;
  RawPoly modulus;
  std::vector<Value> p_pow;
  Value primitive = 1;
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;

  bool has_tables() const { return !log_table.empty(); }

  Value add(Value a, Value b) const {
    if (p == 2) return a ^ b;
    if (s == 1) return (a + b) % p;
    Value r = 0;
    for (std::uint32_t i = 0; i < s && (a || b); ++i) {
      r += ((a % p + b % p) % p) * p_pow[i];
      a /= p;
      b /= p;
    }
    return r;
  }

  Value neg(Value a) const {
    if (p == 2) return a;
    if (s == 1) return (p - a) % p;
    Value r = 0;
    for (std::uint32_t i = 0; i < s && a; ++i) {
      r += ((p - a % p) % p) * p_pow[i];
      a /= p;
    }
    return r;
  }

  Value mul_generic(Value a, Value b) const {
    if (a == 0 || b == 0) return 0;
    if (s == 1) return static_cast<Value>(static_cast<unsigned __int128>(a) * b % p);
    if (p == 2) {
      const Value top = Value{1} << s;
      Value red = 0;
      for (std::uint32_t i = 0; i < s; ++i)
        if (modulus[i]) red |= Value{1} << i;
      Value r = 0;
      while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= top | red;
      }
      return r;
    }
    RawPoly da(s, 0), db(s, 0);
    for (std::uint32_t i = 0; i < s; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    raw_trim(da);
    raw_trim(db);
    RawPoly r = raw_mulmod(da, db, modulus, p);
    Value out = 0;
    for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * p_pow[i];
    return out;
  }

  Value mul(Value a, Value b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables()) return exp_table[log_table[a] + log_table[b]];
    return mul_generic(a, b);
  }

  Value pow_generic(Value a, std::uint64_t e) const {
    Value r = 1;
    while (e) {
      if (e & 1) r = mul_generic(r, a);
      a = mul_generic(a, a);
      e >>= 1;
    }
    return r;
  }

  Value pow(Value a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = size - 1;
    e %= n;
    if (has_tables()) return exp_table[(log_table[a] * e) % n];
    return pow_generic(a, e);
  }

  Value inv(Value a) const {
    if (a == 0) throw DomainError("inverse of zero");
    if (has_tables()) {
      const std::uint64_t n = size - 1;
      return exp_table[(n - log_table[a]) % n];
    }
    return pow_generic(a, size - 2);
  }
};

inline std::unique_ptr<FieldCore> build_core(std::uint64_t p, RawPoly modulus) {
  if (!is_prime(p)) throw DomainError("field characteristic must be prime");
  if (p > (std::uint64_t{1} << 31)) throw OutOfScope("characteristic too large");
  for (auto& c : modulus) c %= p;
  raw_trim(modulus);
  if (modulus.size() < 2) throw DomainError("modulus must have degree at least 1");
  if (modulus.back() != 1) throw DomainError("modulus must be monic");
  if (!raw_is_irreducible(modulus, p)) throw DomainError("modulus is not irreducible");
  auto core = std::make_unique<FieldCore>();
  core->p = p;
  core->s = static_cast<std::uint32_t>(modulus.size() - 1);
  core->modulus = std::move(modulus);
  core->p_pow.assign(core->s + 1, 1);
  for (std::uint32_t i = 1; i <= core->s; ++i) {
    if (core->p_pow[i - 1] > (std::uint64_t{1} << 40) / p)
      throw OutOfScope("field larger than 2^40 elements");
    core->p_pow[i] = core->p_pow[i - 1] * p;
  }
  core->size = core->p_pow[core->s];
  const std::uint64_t n = core->size - 1;
  const auto factors = prime_factors(n);
  for (Value g = 1; g < core->size; ++g) {
    bool full = true;
    for (auto r : factors)
      if (core->pow_generic(g, n / r) == 1) {
        full = false;
        break;
      }
    if (full) {
      core->primitive = g;
      break;
    }
  }
  if (core->size <= (std::uint64_t{1} << 20)) {
    core->exp_table.resize(2 * n + 1);
    core->log_table.assign(core->size, 0);
    Value x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      core->exp_table[i] = static_cast<std::uint32_t>(x);
      core->exp_table[i + n] = static_cast<std::uint32_t>(x);
      core->log_table[x] = static_cast<std::uint32_t>(i);
      x = core->mul_generic(x, core->primitive);
    }
    core->exp_table[2 * n] = 1;
  }
  return core;
}

// Fields are interned: one immutable core per (p, modulus), alive for the
// whole process, so handles compare by pointer and are safe across threads.
inline const FieldCore* intern_field(std::uint64_t p, RawPoly modulus) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, RawPoly>, std::unique_ptr<FieldCore>> registry;
  for (auto& c : modulus) c = p ? c % p : c;
  raw_trim(modulus);
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, modulus);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto core = build_core(p, std::move(modulus));
  const FieldCore* out = core.get();
  registry.emplace(std::move(key), std::move(core));
  return out;
}

}  // namespace detail

class Element;

// Handle to an interned finite field F_{p^s}.
class Field {
 public:
  Field() = default;

  static Field prime(std::uint64_t p) { return Field(detail::intern_field(p, {0, 1})); }

  static Field from_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (modulus.size() == 2 && modulus[1] % p == 1) modulus = {0, 1};
    return Field(detail::intern_field(p, std::move(modulus)));
  }

  bool valid() const { return core_ != nullptr; }
  std::uint64_t characteristic() const { return core().p; }
  std::uint32_t degree() const { return core().s; }
  Value size() const { return core().size; }
  bool is_prime_field() const { return core().s == 1; }
  const std::vector<std::uint64_t>& modulus() const { return core().modulus; }

  Value add(Value a, Value b) const { return core().add(a, b); }
  Value sub(Value a, Value b) const { return core().add(a, core().neg(b)); }
  Value neg(Value a) const { return core().neg(a); }
  Value mul(Value a, Value b) const { return core().mul(a, b); }
  Value inv(Value a) const { return core().inv(a); }

  Value pow(Value a, std::int64_t e) const {
    if (e >= 0) return core().pow(a, static_cast<std::uint64_t>(e));
    return core().pow(core().inv(a), static_cast<std::uint64_t>(-(e + 1)) + 1);
  }

  // Discrete log base the primitive element; requires a != 0.
  std::uint64_t log(Value a) const {
    if (a == 0) throw DomainError("log of zero");
    if (core().has_tables()) return core().log_table[a];
    const std::uint64_t n = size() - 1;
    Value x = 1;
    for (std::uint64_t i = 0; i < n; ++i, x = core().mul_generic(x, core().primitive))
      if (x == a) return i;
    throw DomainError("log: element not in field");
  }

  std::vector<std::uint64_t> digits(Value a) const {
    std::vector<std::uint64_t> d(degree(), 0);
    for (std::uint32_t i = 0; i < degree(); ++i) {
      d[i] = a % core().p;
      a /= core().p;
    }
    return d;
  }

  Value from_digits(std::span<const std::uint64_t> d) const {
    if (d.size() > degree()) throw DomainError("too many digits for field");
    Value v = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] >= core().p) throw DomainError("digit out of range");
      v += d[i] * core().p_pow[i];
    }
    return v;
  }

  Element element(Value v) const;
  Element zero() const;
  Element one() const;
  Element primitive_element() const;

  const detail::FieldCore* core_ptr() const { return core_; }

  friend bool operator==(const Field& a, const Field& b) { return a.core_ == b.core_; }

 private:
  explicit Field(const detail::FieldCore* c) : core_(c) {}
  const detail::FieldCore& core() const {
    if (!core_) throw DomainError("use of an empty field handle");
    return *core_;
  }

  const detail::FieldCore* core_ = nullptr;
};

class Element {
 public:
  Element() = default;
  Element(Field f, Value v) : field_(f), value_(v) {
    if (v >= f.size()) throw DomainError("element value out of range");
  }

  const Field& field() const { return field_; }
  Value value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  std::vector<std::uint64_t> digits() const { return field_.digits(value_); }

  Element operator+(const Element& o) const { return {same(o), field_.add(value_, o.value_)}; }
  Element operator-(const Element& o) const { return {same(o), field_.sub(value_, o.value_)}; }
  Element operator*(const Element& o) const { return {same(o), field_.mul(value_, o.value_)}; }
  Element operator/(const Element& o) const {
    return {same(o), field_.mul(value_, field_.inv(o.value_))};
  }
  Element operator-() const { return {field_, field_.neg(value_)}; }
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  Element inverse() const { return {field_, field_.inv(value_)}; }
  Element pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }

  // Multiplicative order; requires a nonzero element.
  std::uint64_t order() const {
    if (is_zero()) throw DomainError("order of zero");
    const std::uint64_t n = field_.size() - 1;
    std::uint64_t ord = n;
    for (auto r : detail::prime_factors(n))
      while (ord % r == 0 && field_.pow(value_, static_cast<std::int64_t>(ord / r)) == 1) ord /= r;
    return ord;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  const Field& same(const Element& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("elements belong to different fields");
    return field_;
  }

  Field field_;
  Value value_ = 0;
};

inline Element Field::element(Value v) const { return Element(*this, v); }
inline Element Field::zero() const { return Element(*this, 0); }
inline Element Field::one() const { return Element(*this, 1); }
inline Element Field::primitive_element() const { return Element(*this, core().primitive); }

}  // namespace qcpc
