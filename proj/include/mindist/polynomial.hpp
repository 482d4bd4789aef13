#ifndef MINDIST_POLYNOMIAL_HPP
#define MINDIST_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindist/errors.hpp"
#include "mindist/gf.hpp"
#include "mindist/monomial.hpp"
#include "mindist/order.hpp"

namespace mindist {

struct Term {
  Monomial mono;
  gf::Elem coeff;
};

/// Sparse polynomial over GF(q). Terms are kept in descending canonical
/// monomial order with nonzero coefficients; the storage is independent of
/// any MonomialOrder.
class Polynomial {
 public:
  Polynomial(gf::FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
    if (!field_) throw std::invalid_argument("polynomial: null field");
    if (nvars_ > kMaxVars) throw std::length_error("polynomial: too many variables");
  }

  static Polynomial constant(gf::FieldPtr field, std::size_t nvars, gf::Elem c) {
    Polynomial p(std::move(field), nvars);
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }

  static Polynomial monomial(gf::FieldPtr field, const Monomial& m, gf::Elem c = 1) {
    Polynomial p(std::move(field), m.size());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  static Polynomial variable(gf::FieldPtr field, std::size_t nvars, std::size_t i) {
    return monomial(std::move(field), Monomial::variable(nvars, i));
  }

  /// Combines like terms and drops zeros.
  static Polynomial from_terms(gf::FieldPtr field, std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(std::move(field), nvars);
    for (const auto& t : terms)
      if (t.mono.size() != nvars) throw std::invalid_argument("polynomial: term arity mismatch");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.field_->add(p.terms_.back().coeff, t.coeff);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(t);
      }
    }
    return p;
  }

  const gf::FieldPtr& field() const noexcept { return field_; }
  const gf::Field& F() const noexcept { return *field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const noexcept {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  gf::Elem coefficient(const Monomial& m) const noexcept {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return 0;
  }

  Term leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw PreconditionError("polynomial: leading term of zero");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
      if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
  }

  Monomial leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).mono; }

  Polynomial scaled(gf::Elem c) const {
    Polynomial r(field_, nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field_->mul(t.coeff, c)});
    return r;
  }

  /// Divides by the leading coefficient under `ord`.
  Polynomial monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading_term(ord).coeff));
  }

  Polynomial mul_term(const Monomial& m, gf::Elem c) const {
    Polynomial r(field_, nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the canonical (lex) order.
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_->mul(t.coeff, c)});
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
  Polynomial operator-() const { return scaled(field_->neg(1)); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, a.field_->mul(x.coeff, y.coeff)});
    return from_terms(a.field_, a.nvars_, std::move(prod));
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }

  gf::Elem evaluate(std::span<const gf::Elem> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("polynomial: point arity mismatch");
    const auto& F = *field_;
    gf::Elem acc = 0;
    for (const auto& t : terms_) {
      gf::Elem v = t.coeff;
      for (std::size_t i = 0; i < nvars_ && v != 0; ++i)
        if (t.mono[i] != 0) v = F.mul(v, F.pow(point[i], t.mono[i]));
      acc = F.add(acc, v);
    }
    return acc;
  }

  /// Same polynomial in a ring with `nvars` variables, indices shifted by `offset`.
  Polynomial embed(std::size_t nvars, std::size_t offset) const {
    Polynomial r(field_, nvars);
    std::vector<Term> ts;
    for (const auto& t : terms_) ts.push_back({t.mono.embed(nvars, offset), t.coeff});
    return from_terms(field_, nvars, std::move(ts));
  }

  bool free_of_prefix(std::size_t k) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [k](const Term& t) { return t.mono.free_of_prefix(k); });
  }

  /// Drops the first k variables (which must not occur).
  Polynomial drop_prefix(std::size_t k) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) ts.push_back({t.mono.drop_prefix(k), t.coeff});
    return from_terms(field_, nvars_ - k, std::move(ts));
  }

  /// Textual form, highest term first under `ord` (canonical order if null).
  std::string to_string(const MonomialOrder* ord = nullptr,
                        const std::vector<std::string>* names = nullptr) const {
    if (terms_.empty()) return "0";
    std::vector<Term> ts = terms_;
    if (ord) std::stable_sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return ord->greater(a.mono, b.mono); });
    std::string out;
    const auto& F = *field_;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto& t = ts[i];
      bool negative = false;
      std::string mag;
      if (F.in_prime_subfield(t.coeff)) {
        long long c = t.coeff;
        if (F.p() > 2 && 2 * c > static_cast<long long>(F.p())) {
          negative = true;
          c = F.p() - c;
        }
        mag = c == 1 ? "" : std::to_string(c);
      } else {
        mag = "{" + std::to_string(t.coeff) + "}";
      }
      if (i == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (t.mono.is_one()) {
        out += mag.empty() ? "1" : mag;
      } else {
        if (!mag.empty()) out += mag + "*";
        out += t.mono.to_string(names);
      }
    }
    return out;
  }

 private:
  void check_compatible(const Polynomial& b) const {
    if (nvars_ != b.nvars_) throw std::invalid_argument("polynomial: arity mismatch");
    if (field_ != b.field_ && !field_->same_as(*b.field_))
      throw std::invalid_argument("polynomial: field mismatch");
  }

  Polynomial combine(const Polynomial& b, bool subtract) const {
    check_compatible(b);
    const auto& F = *field_;
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < terms_.size() && terms_[i].mono > b.terms_[j].mono)) {
        r.terms_.push_back(terms_[i++]);
      } else {
        gf::Elem bc = subtract ? F.neg(b.terms_[j].coeff) : b.terms_[j].coeff;
        if (i < terms_.size() && terms_[i].mono == b.terms_[j].mono) {
          gf::Elem c = F.add(terms_[i].coeff, bc);
          if (c != 0) r.terms_.push_back({terms_[i].mono, c});
          ++i;
        } else {
          r.terms_.push_back({b.terms_[j].mono, bc});
        }
        ++j;
      }
    }
    return r;
  }

  gf::FieldPtr field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const gf::FieldPtr& field, std::size_t nvars, char prefix)
      : text_(text), field_(field), nvars_(nvars), prefix_(prefix) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    for (;;) {
      Term t = term();
      if (negative) t.coeff = field_->neg(t.coeff);
      terms.push_back(t);
      skip_ws();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      negative = c == '-';
    }
    return Polynomial::from_terms(field_, nvars_, std::move(terms));
  }

 private:
  Term term() {
    Term t{Monomial(nvars_), 1};
    for (;;) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff = field_->mul(t.coeff, field_->from_int(integer_mod_p()));
      } else if (c == '{') {
        get();
        skip_ws();
        unsigned long long v = integer();
        skip_ws();
        if (at_end() || get() != '}') fail("expected '}'");
        if (!field_->contains(v)) fail("field element encoding out of range");
        t.coeff = field_->mul(t.coeff, static_cast<gf::Elem>(v));
      } else if (c == prefix_) {
        get();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
        unsigned long long idx = integer();
        if (idx == 0 || idx > nvars_)
          fail("unknown variable " + std::string(1, prefix_) + std::to_string(idx));
        unsigned long long e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          e = integer();
        }
        t.mono.set(idx - 1, static_cast<unsigned>(t.mono[idx - 1] + e));
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
    }
    return t;
  }

  long long integer_mod_p() {
    long long r = 0;
    const long long p = field_->p();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) r = (r * 10 + (get() - '0')) % p;
    return r;
  }

  unsigned long long integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    unsigned long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(get() - '0');
      if (v > 0xFFFFFFFFull) fail("integer too large");
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view text_;
  const gf::FieldPtr& field_;
  std::size_t nvars_;
  char prefix_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. "t1*t2 - t3*t4" or "2*t1^2 + {5}*t2". Integer coefficients are
/// reduced mod p; "{n}" is the field element with canonical encoding n.
inline Polynomial parse_polynomial(std::string_view text, const gf::FieldPtr& field, std::size_t nvars,
                                   char prefix = 't') {
  return detail::PolyParser(text, field, nvars, prefix).parse();
}

/// Largest variable index (1-based) mentioned in the text, 0 if none.
inline std::size_t max_variable_index(std::string_view text, char prefix = 't') {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != prefix || i + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))
      continue;
    std::size_t v = 0, j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000) v = v * 10 + (text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

}  // namespace mindist

#endif  // MINDIST_POLYNOMIAL_HPP
