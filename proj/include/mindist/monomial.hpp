#ifndef MINDIST_MONOMIAL_HPP
#define MINDIST_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mindist {

/// Upper bound on the number of variables of any ring handled here,
/// including auxiliary elimination variables.
inline constexpr std::size_t kMaxVars = 16;

/// t^a = t_1^{a_1} ... t_s^{a_s}, stored inline.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : n_(checked_arity(nvars)) {}

  Monomial(std::initializer_list<unsigned> exps) : n_(checked_arity(exps.size())) {
    std::size_t i = 0;
    for (unsigned v : exps) set(i++, v);
  }

  explicit Monomial(std::span<const unsigned> exps) : n_(checked_arity(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  unsigned degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(std::size_t i, unsigned v) {
    if (i >= n_) throw std::out_of_range("monomial: variable index out of range");
    if (v > 0xFFFFu) throw std::overflow_error("monomial: exponent overflow");
    deg_ = deg_ - e_[i] + v;
    e_[i] = static_cast<Exponent>(v);
  }

  std::vector<unsigned> exponents() const { return {e_.begin(), e_.begin() + n_}; }

  /// this | other
  bool divides(const Monomial& other) const noexcept {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    same_arity(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, unsigned(a.e_[i]) + b.e_[i]);
    return r;
  }

  /// Exact quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    same_arity(a, b);
    if (!b.divides(a)) throw std::domain_error("monomial: inexact division");
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    same_arity(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    same_arity(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::min(a.e_[i], b.e_[i]));
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.n_ != b.n_ || a.deg_ != b.deg_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }

  /// Canonical storage order: lex with t_s most significant, so that
  /// t_1 < t_2 < ... < t_s. Order-sensitive algorithms use MonomialOrder.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (std::size_t i = a.n_; i-- > 0;)
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    return std::strong_ordering::equal;
  }

  /// Copy into a ring with `nvars` variables, shifting indices by `offset`.
  Monomial embed(std::size_t nvars, std::size_t offset) const {
    if (offset + n_ > nvars) throw std::out_of_range("monomial: embedding does not fit");
    Monomial r(nvars);
    for (std::size_t i = 0; i < n_; ++i) r.set(offset + i, e_[i]);
    return r;
  }

  /// Drops the first k variables, which must have exponent zero.
  Monomial drop_prefix(std::size_t k) const {
    Monomial r(n_ - k);
    for (std::size_t i = 0; i < n_; ++i) {
      if (i < k) {
        if (e_[i] != 0) throw std::domain_error("monomial: eliminated variable present");
      } else {
        r.set(i - k, e_[i]);
      }
    }
    return r;
  }

  bool free_of_prefix(std::size_t k) const noexcept {
    for (std::size_t i = 0; i < k && i < n_; ++i)
      if (e_[i] != 0) return false;
    return true;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

  /// "t1*t2^3"; "1" for the unit monomial.
  std::string to_string(const std::vector<std::string>* names = nullptr) const {
    if (deg_ == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += names ? (*names)[i] : "t" + std::to_string(i + 1);
      if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out;
  }

 private:
  static std::uint8_t checked_arity(std::size_t n) {
    if (n > kMaxVars) throw std::length_error("monomial: more than kMaxVars variables");
    return static_cast<std::uint8_t>(n);
  }

  static void same_arity(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("monomial: arity mismatch");
  }

  std::array<Exponent, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of total degree d in s variables, ascending in the
/// canonical order.
inline std::vector<Monomial> monomials_of_degree(std::size_t s, unsigned d) {
  std::vector<Monomial> out;
  if (s == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(s, 0);
  // Recursive fill from the last variable (most significant) downwards.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == 0) {
      e[0] = left;
      out.emplace_back(std::span<const unsigned>(e));
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i - 1, left - v);
    }
    e[i] = 0;
  };
  rec(s - 1, d);
  return out;
}

}  // namespace mindist

#endif  // MINDIST_MONOMIAL_HPP
