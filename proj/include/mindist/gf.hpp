#ifndef MINDIST_GF_HPP
#define MINDIST_GF_HPP

// Exact arithmetic in GF(p^e) for q = p^e <= 2^16.
//
// Elements are stored as their canonical encoding: for e = 1 the residue in
// [0, p), for e > 1 the coefficient vector (c_0, ..., c_{e-1}) of the
// polynomial-basis representative, packed as sum c_i p^i. Multiplication
// goes through discrete log / antilog tables built once per field.

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mindist/errors.hpp"

namespace mindist::gf {

using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Builds GF(p^e). The modulus is the smallest monic irreducible of degree
  /// e, comparing coefficient vectors low-degree first.
  static FieldPtr make(std::uint32_t p, std::uint32_t e = 1) {
    return FieldPtr(new Field(p, e));
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Coefficients c_0..c_e of the modulus (c_e = 1); empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// Smallest-encoding generator of the multiplicative group.
  Elem primitive() const noexcept { return exp_[1]; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }

  bool contains(std::uint64_t v) const noexcept { return v < q_; }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  bool in_prime_subfield(Elem a) const noexcept { return a < p_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (e_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }

  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("gf: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Elem div(Elem a, Elem b) const {
    if (b == 0) throw std::domain_error("gf: division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + (q_ - 1 - log_[b]) % (q_ - 1)];
  }

  Elem pow(Elem a, long long n) const {
    if (n == 0) return 1;
    if (a == 0) {
      if (n < 0) throw std::domain_error("gf: negative power of zero");
      return 0;
    }
    long long order = q_ - 1;
    long long k = (static_cast<long long>(log_[a]) * (n % order)) % order;
    if (k < 0) k += order;
    return exp_[static_cast<std::size_t>(k)];
  }

  /// Elements of the subfield GF(p^d); d must divide e. Sorted by encoding.
  std::vector<Elem> subfield_elements(std::uint32_t d) const {
    if (d == 0 || e_ % d != 0)
      throw PreconditionError("gf: subfield degree " + std::to_string(d) +
                              " does not divide " + std::to_string(e_));
    long long pd = 1;
    for (std::uint32_t i = 0; i < d; ++i) pd *= p_;
    std::vector<Elem> out;
    for (Elem x = 0; x < q_; ++x)
      if (pow(x, pd) == x) out.push_back(x);
    return out;
  }

  /// All elements in encoding order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out(q_);
    for (Elem x = 0; x < q_; ++x) out[x] = x;
    return out;
  }

  std::string name() const {
    return "GF(" + std::to_string(q_) + ")";
  }

  bool same_as(const Field& o) const noexcept {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    if (!is_prime(p)) throw PreconditionError("gf: characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw PreconditionError("gf: extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxFieldSize)
        throw PreconditionError("gf: field size exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (e_ > 1) modulus_ = find_modulus();
    build_tables();
  }

  std::vector<std::uint32_t> digits(Elem a) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  Elem pack(const std::vector<std::uint32_t>& d) const {
    Elem v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
  }

  Elem add_digits(Elem a, Elem b) const {
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  // Remainder of a by the monic polynomial m over GF(p); coefficients low first.
  std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                      const std::vector<std::uint32_t>& m) const {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
      std::uint32_t c = a[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dm; ++j)
        a[i - dm + j] = (a[i - dm + j] + (p_ - c) * m[j]) % p_;
    }
    a.resize(dm);
    return a;
  }

  bool irreducible(const std::vector<std::uint32_t>& f) const {
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::uint32_t k = 1; 2 * k <= deg; ++k) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < k; ++i) count *= p_;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> g(k + 1);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
          g[i] = static_cast<std::uint32_t>(t % p_);
          t /= p_;
        }
        g[k] = 1;
        auto r = poly_mod(f, g);
        bool zero = true;
        for (auto c : r) zero = zero && c == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> find_modulus() const {
    std::uint64_t count = q_;  // p^e choices for c_0..c_{e-1}
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      // c_0 is the most significant digit of idx.
      std::vector<std::uint32_t> f(e_ + 1);
      std::uint64_t t = idx;
      for (std::uint32_t i = e_; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(t % p_);
        t /= p_;
      }
      f[e_] = 1;
      if (irreducible(f)) return f;
    }
    throw std::logic_error("gf: no irreducible polynomial found");
  }

  Elem slow_mul(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
      for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    return pack(poly_mod(prod, modulus_));
  }

  void build_tables() {
    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
      auto d = digits(a);
      for (auto& c : d) c = (p_ - c) % p_;
      neg_[a] = pack(d);
    }
    if (e_ > 1 && p_ != 2 && q_ <= 256) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
    }
    const std::uint32_t order = q_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(order) + 1, 0);
    log_.assign(q_, 0);
    if (order == 1) {  // GF(2)
      exp_[0] = exp_[1] = exp_[2] = 1;
      return;
    }
    for (Elem g = 1; g < q_; ++g) {
      Elem x = 1;
      std::uint32_t k = 0;
      do {
        x = slow_mul(x, g);
        ++k;
      } while (x != 1 && k <= order);
      if (k != order) continue;
      x = 1;
      for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, g);
      }
      for (std::uint32_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
      return;
    }
    throw std::logic_error("gf: no primitive element");
  }

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
  std::vector<std::uint16_t> add_table_;
};

/// Field element bound to its field; arithmetic checks that operands agree.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw std::invalid_argument("gf: null field");
    if (value_ >= field_->q())
      throw std::out_of_range("gf: encoding " + std::to_string(value) + " out of range for " +
                              field_->name());
  }

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->div(a.value_, b.value_)};
  }
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(long long n) const { return {field_, field_->pow(value_, n)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value_; }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_ && !a.field_->same_as(*b.field_))
      throw std::invalid_argument("gf: operands belong to different fields");
  }

  FieldPtr field_;
  Elem value_;
};

/// Parses "p^e", or a bare prime power such as "4".
inline FieldPtr parse_field(std::string_view text) {
  auto to_uint = [&](std::string_view s) -> std::uint32_t {
    if (s.empty() || s.size() > 9) throw ParseError("bad field spec '" + std::string(text) + "'");
    std::uint32_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("bad field spec '" + std::string(text) + "'");
      v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return v;
  };
  auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    std::uint32_t q = to_uint(text), p = 2, e = 0;
    while (q > 1 && p * p <= q && q % p) ++p;
    if (q > 1 && q % p) p = q;
    for (; q > 1 && q % p == 0; q /= p) ++e;
    if (q != 1 || e == 0) return Field::make(to_uint(text), 1);
    return Field::make(p, e);
  }
  return Field::make(to_uint(text.substr(0, caret)), to_uint(text.substr(caret + 1)));
}

}  // namespace mindist::gf

#endif  // MINDIST_GF_HPP
