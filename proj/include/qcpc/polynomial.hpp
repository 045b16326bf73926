#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qcpc/field.hpp"

namespace qcpc {

// Degree of a polynomial; the zero polynomial has degree minus infinity,
// which compares below every finite degree.
class Degree {
 public:
  static Degree neg_inf() { return Degree(); }
  explicit Degree(std::size_t d) : d_(d) {}

  bool is_neg_inf() const { return !d_.has_value(); }
  std::size_t value() const {
    if (!d_) throw DomainError("degree of the zero polynomial");
    return *d_;
  }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.d_ || !b.d_) return a.d_.has_value() <=> b.d_.has_value();
    return *a.d_ <=> *b.d_;
  }

 private:
  Degree() = default;
  std::optional<std::size_t> d_;
};

// Dense univariate polynomial over a finite field, coefficients ascending,
// never stored with trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field f) : field_(f) {}
  Polynomial(Field f, std::vector<Value> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (auto v : c_)
      if (v >= f.size()) throw DomainError("coefficient out of range");
    trim();
  }

  static Polynomial constant(Field f, Value c) { return Polynomial(f, {c}); }
  static Polynomial monomial(Field f, std::size_t e, Value c = 1) {
    std::vector<Value> v(e + 1, 0);
    v[e] = c;
    return Polynomial(f, std::move(v));
  }
  // X^m - 1.
  static Polynomial x_pow_minus_one(Field f, std::size_t m) {
    std::vector<Value> v(m + 1, 0);
    v[m] = 1;
    v[0] = f.add(v[0], f.neg(1));
    return Polynomial(f, std::move(v));
  }

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::size_t size() const { return c_.size(); }
  Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
  Value coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Value lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Value>& coefficients() const { return c_; }
  std::size_t weight() const {
    std::size_t w = 0;
    for (auto v : c_) w += v != 0;
    return w;
  }

  void set_coeff(std::size_t i, Value v) {
    if (v >= field_.size()) throw DomainError("coefficient out of range");
    if (i >= c_.size()) {
      if (v == 0) return;
      c_.resize(i + 1, 0);
    }
    c_[i] = v;
    trim();
  }

  Polynomial operator+(const Polynomial& o) const {
    check(o);
    std::vector<Value> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(r), Raw{});
  }
  Polynomial operator-(const Polynomial& o) const {
    check(o);
    std::vector<Value> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(r), Raw{});
  }
  Polynomial operator-() const {
    std::vector<Value> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.neg(c_[i]);
    return Polynomial(field_, std::move(r), Raw{});
  }
  Polynomial operator*(const Polynomial& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    std::vector<Value> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        if (o.c_[j]) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Polynomial(field_, std::move(r), Raw{});
  }
  Polynomial scaled(Value s) const {
    if (s == 0) return Polynomial(field_);
    std::vector<Value> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.mul(c_[i], s);
    return Polynomial(field_, std::move(r), Raw{});
  }
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Value> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(field_, std::move(r), Raw{});
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lead()));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  struct Raw {};
  Polynomial(Field f, std::vector<Value> c, Raw) : field_(f), c_(std::move(c)) { trim(); }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void check(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  }

  Field field_;
  std::vector<Value> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("polynomials over different fields");
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const Field& f = a.field();
  if (a.size() < b.size()) return {Polynomial(f), a};
  std::vector<Value> r = a.coefficients();
  std::vector<Value> q(a.size() - b.size() + 1, 0);
  const Value inv_lead = f.inv(b.lead());
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Value c = f.mul(r[k + db], inv_lead);
    q[k] = c;
    if (!c) continue;
    for (std::size_t i = 0; i <= db; ++i)
      if (bc[i]) r[k + i] = f.sub(r[k + i], f.mul(c, bc[i]));
  }
  r.resize(db);
  return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
}

inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

// Exact division; throws when b does not divide a.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

inline bool divides(const Polynomial& d, const Polynomial& a) { return (a % d).is_zero(); }

struct Xgcd {
  Polynomial gcd;
  Polynomial u;
  Polynomial v;
};

// Monic gcd with cofactors u*a + v*b = gcd; the cofactors are the ones the
// extended Euclidean algorithm produces, so deg v < deg a - deg gcd when
// deg b > 0. gcd(0, 0) = 0.
inline Xgcd xgcd(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial u0 = Polynomial::constant(f, 1), u1(f);
  Polynomial v0(f), v1 = Polynomial::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    Polynomial v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, Polynomial(f), Polynomial(f)};
  const Value s = f.inv(r0.lead());
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

inline Polynomial gcd(const Polynomial& a, const Polynomial& b) { return xgcd(a, b).gcd; }

// a mod (X^m - 1), by folding exponents.
inline Polynomial reduce_mod_xm1(const Polynomial& a, std::size_t m) {
  if (m == 0) throw DomainError("X^0 - 1 is zero");
  if (a.size() <= m) return a;
  const Field& f = a.field();
  std::vector<Value> r(m, 0);
  const auto& c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) r[i % m] = f.add(r[i % m], c[i]);
  return Polynomial(f, std::move(r));
}

inline Polynomial mul_mod_xm1(const Polynomial& a, const Polynomial& b, std::size_t m) {
  if (!(a.field() == b.field())) throw FieldMismatch("polynomials over different fields");
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  std::vector<Value> r(m, 0);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (!ac[i]) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      if (bc[j]) {
        const std::size_t k = (i + j) % m;
        r[k] = f.add(r[k], f.mul(ac[i], bc[j]));
      }
  }
  return Polynomial(f, std::move(r));
}

inline std::size_t mod_index(std::int64_t e, std::size_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::size_t>(((e % mm) + mm) % mm);
}

// X^s * a mod (X^m - 1), s may be negative.
inline Polynomial shift_mod_xm1(const Polynomial& a, std::int64_t s, std::size_t m) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  std::vector<Value> r(m, 0);
  const auto& c = a.coefficients();
  const std::size_t k = mod_index(s, m);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) r[(i + k) % m] = f.add(r[(i + k) % m], c[i]);
  return Polynomial(f, std::move(r));
}

// f(X^e) mod (X^m - 1); e is reduced mod m first, so negative exponents work.
inline Polynomial substitute_power(const Polynomial& a, std::int64_t e, std::size_t m) {
  const Field& f = a.field();
  const std::size_t k = mod_index(e, m);
  std::vector<Value> r(m, 0);
  const auto& c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) {
      const std::size_t t = static_cast<std::size_t>((static_cast<unsigned __int128>(i) * k) % m);
      r[t] = f.add(r[t], c[i]);
    }
  return Polynomial(f, std::move(r));
}

// Evaluate at x. x may live in an extension of a prime coefficient field of
// the same characteristic; prime-field values embed as constants.
inline Element evaluate(const Polynomial& a, const Element& x) {
  const Field& xf = x.field();
  if (!(a.field() == xf)) {
    if (!a.field().is_prime_field() || a.field().characteristic() != xf.characteristic())
      throw FieldMismatch("evaluation point is not in an extension of the coefficient field");
  }
  Value acc = 0;
  const auto& c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = xf.add(xf.mul(acc, x.value()), c[i]);
  return Element(xf, acc);
}

// Reinterpret a polynomial over F_p as one over an extension F_{p^s}.
inline Polynomial lift(const Polynomial& a, const Field& ext) {
  if (a.field() == ext) return a;
  if (!a.field().is_prime_field() || a.field().characteristic() != ext.characteristic())
    throw FieldMismatch("target is not an extension of the coefficient field");
  return Polynomial(ext, a.coefficients());
}

// Inverse of lift; throws if a coefficient is outside the prime subfield.
inline Polynomial restrict_to_prime(const Polynomial& a) {
  const Field base = Field::prime(a.field().characteristic());
  for (auto v : a.coefficients())
    if (v >= base.size()) throw DomainError("coefficient outside the prime subfield");
  return Polynomial(base, a.coefficients());
}

}  // namespace qcpc
