#ifndef MINDIST_ORDER_HPP
#define MINDIST_ORDER_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mindist/errors.hpp"
#include "mindist/monomial.hpp"

namespace mindist {

/// Variable priority t_s > t_{s-1} > ... > t_1 (0-based indices, most
/// significant first). This is the default for every order.
inline std::vector<std::size_t> default_priority(std::size_t s) {
  std::vector<std::size_t> p(s);
  for (std::size_t i = 0; i < s; ++i) p[i] = s - 1 - i;
  return p;
}

/// t_1 > t_2 > ... > t_s.
inline std::vector<std::size_t> natural_priority(std::size_t s) {
  std::vector<std::size_t> p(s);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

/// Lex, graded reverse lex, or a two-block elimination order. Priorities
/// list variable indices from most to least significant.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex(std::vector<std::size_t> priority) {
    return MonomialOrder(Kind::Lex, Kind::Lex, 0, std::move(priority));
  }
  static MonomialOrder lex(std::size_t s) { return lex(default_priority(s)); }

  static MonomialOrder grevlex(std::vector<std::size_t> priority) {
    return MonomialOrder(Kind::GrevLex, Kind::GrevLex, 0, std::move(priority));
  }
  static MonomialOrder grevlex(std::size_t s) { return grevlex(default_priority(s)); }

  /// Elimination order on k + tail.arity() variables: the first k variables
  /// form a grevlex block that dominates; ties are broken by `tail` on the
  /// remaining variables.
  static MonomialOrder block(std::size_t k, const MonomialOrder& tail) {
    if (tail.kind_ == Kind::Block) throw std::invalid_argument("order: nested block orders unsupported");
    std::vector<std::size_t> prio;
    for (std::size_t i = 0; i < k; ++i) prio.push_back(i);
    for (auto v : tail.priority_) prio.push_back(v + k);
    return MonomialOrder(Kind::Block, tail.kind_, k, std::move(prio));
  }

  Kind kind() const noexcept { return kind_; }
  Kind tail_kind() const noexcept { return tail_kind_; }
  std::size_t arity() const noexcept { return priority_.size(); }
  std::size_t block_size() const noexcept { return k_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != priority_.size() || b.size() != priority_.size())
      throw std::invalid_argument("order: arity mismatch");
    switch (kind_) {
      case Kind::Lex:
        return lex_range(0, prio_.size(), a, b);
      case Kind::GrevLex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        return revlex_range(0, prio_.size(), a, b);
      case Kind::Block: {
        auto c = graded_block(0, k_, a, b);
        if (c != 0) return c;
        if (tail_kind_ == Kind::Lex) return lex_range(k_, prio_.size(), a, b);
        return graded_block(k_, prio_.size(), a, b);
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const {
    auto list = [&](std::size_t from, std::size_t to) {
      std::string s;
      for (std::size_t i = from; i < to; ++i) {
        if (i > from) s += ">";
        s += "t" + std::to_string(priority_[i] + 1);
      }
      return s;
    };
    switch (kind_) {
      case Kind::Lex: return "lex(" + list(0, arity()) + ")";
      case Kind::GrevLex: return "grevlex(" + list(0, arity()) + ")";
      case Kind::Block:
        return "block(" + std::to_string(k_) + "; " +
               (tail_kind_ == Kind::Lex ? "lex(" : "grevlex(") + list(k_, arity()) + "))";
    }
    return {};
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.tail_kind_ == b.tail_kind_ && a.k_ == b.k_ && a.priority_ == b.priority_;
  }

 private:
  MonomialOrder(Kind kind, Kind tail_kind, std::size_t k, std::vector<std::size_t> priority)
      : kind_(kind), tail_kind_(tail_kind), k_(k), priority_(std::move(priority)) {
    const std::size_t s = priority_.size();
    if (s > kMaxVars) throw PreconditionError("order: too many variables");
    std::vector<bool> seen(s, false);
    for (auto v : priority_) {
      if (v >= s || seen[v]) throw PreconditionError("order: priority is not a permutation");
      seen[v] = true;
    }
    prio_.assign(priority_.begin(), priority_.end());
  }

  std::strong_ordering lex_range(std::size_t from, std::size_t to, const Monomial& a,
                                 const Monomial& b) const noexcept {
    for (std::size_t i = from; i < to; ++i) {
      const auto v = prio_[i];
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }

  // Among equal partial degrees, the monomial with the smaller exponent in
  // the least significant differing variable is larger.
  std::strong_ordering revlex_range(std::size_t from, std::size_t to, const Monomial& a,
                                    const Monomial& b) const noexcept {
    for (std::size_t i = to; i-- > from;) {
      const auto v = prio_[i];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering graded_block(std::size_t from, std::size_t to, const Monomial& a,
                                    const Monomial& b) const noexcept {
    unsigned da = 0, db = 0;
    for (std::size_t i = from; i < to; ++i) {
      da += a[prio_[i]];
      db += b[prio_[i]];
    }
    if (da != db) return da <=> db;
    return revlex_range(from, to, a, b);
  }

  Kind kind_;
  Kind tail_kind_;
  std::size_t k_;
  std::vector<std::size_t> priority_;
  std::vector<std::uint8_t> prio_;
};

}  // namespace mindist

#endif  // MINDIST_ORDER_HPP
