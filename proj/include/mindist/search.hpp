#ifndef MINDIST_SEARCH_HPP
#define MINDIST_SEARCH_HPP

// Exhaustive search over coefficient vectors in GF(q)^n up to scalars.
//
// Vectors are walked as an odometer with position 0 least significant.
// Only vectors whose last nonzero entry is 1 are visited; their rank in
// this walk is (q^j - 1)/(q - 1) + (value of the lower j digits) where j is
// the position of that entry. Workers take contiguous index ranges and the
// reduction keeps the largest score, ties going to the smallest index.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "mindist/errors.hpp"
#include "mindist/gf.hpp"

namespace mindist::search {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

struct Options {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

/// q^n, saturating at uint64 max.
inline std::uint64_t pow_sat(std::uint64_t q, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

/// Number of nonzero vectors with last nonzero entry 1: (q^n - 1)/(q - 1).
inline std::uint64_t projective_count(std::uint64_t q, std::size_t n) {
  const auto all = pow_sat(q, n);
  if (all == std::numeric_limits<std::uint64_t>::max()) return all;
  return (all - 1) / (q - 1);
}

/// Throws BudgetExceeded unless q^n - 1 fits the budget.
inline void check_budget(const char* what, std::uint64_t q, std::size_t n, std::uint64_t budget) {
  const auto all = pow_sat(q, n);
  const auto needed = all == std::numeric_limits<std::uint64_t>::max() ? all : all - 1;
  if (needed > budget) throw BudgetExceeded(what, needed, budget);
}

/// The normalized vector of length n with the given walk index.
inline std::vector<gf::Elem> vector_at(std::uint64_t q, std::size_t n, std::uint64_t index) {
  std::vector<gf::Elem> v(n, 0);
  std::size_t j = 0;
  std::uint64_t block = 1, start = 0;  // block = q^j
  while (j < n && index >= start + block) {
    start += block;
    block *= q;
    ++j;
  }
  if (j >= n) throw std::out_of_range("vector_at: index out of range");
  v[j] = 1;
  std::uint64_t low = index - start;
  for (std::size_t i = 0; i < j; ++i) {
    v[i] = static_cast<gf::Elem>(low % q);
    low /= q;
  }
  return v;
}

/// Walks indices [lo, hi). `set(i, old, now)` is called for every entry that
/// changes (including the initial fill from zero), then `visit(index, v)`.
template <class Set, class Visit>
void walk(std::uint64_t q, std::size_t n, std::uint64_t lo, std::uint64_t hi, Set&& set, Visit&& visit) {
  if (lo >= hi) return;
  std::vector<gf::Elem> v = vector_at(q, n, lo);
  std::size_t top = 0;  // position of the leading 1
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) set(i, gf::Elem{0}, v[i]);
    if (v[i] != 0) top = i;
  }
  for (std::uint64_t idx = lo;;) {
    visit(idx, static_cast<const std::vector<gf::Elem>&>(v));
    if (++idx >= hi) break;
    // Increment the digits below `top`; on full carry move the leading 1 up.
    std::size_t i = 0;
    for (; i < top; ++i) {
      const gf::Elem old = v[i];
      const gf::Elem now = old + 1 == q ? 0 : old + 1;
      v[i] = now;
      set(i, old, now);
      if (now != 0) break;
    }
    if (i == top) {
      set(top, gf::Elem{1}, gf::Elem{0});
      v[top] = 0;
      ++top;
      v[top] = 1;
      set(top, gf::Elem{0}, gf::Elem{1});
    }
  }
}

struct Best {
  std::optional<long long> score;
  std::uint64_t index = 0;

  void offer(long long s, std::uint64_t idx) {
    if (!score || s > *score || (s == *score && idx < index)) {
      score = s;
      index = idx;
    }
  }
  void merge(const Best& o) {
    if (o.score) offer(*o.score, o.index);
  }
};

/// Maximizes a score over all normalized vectors of GF(q)^n.
///
/// `make_worker()` returns a fresh object with `set(i, old, now)` and
/// `score(index, v) -> std::optional<long long>` (nullopt excludes the
/// candidate). Each thread owns one worker.
template <class MakeWorker>
Best maximize(std::uint64_t q, std::size_t n, const Options& opt, const char* what, MakeWorker&& make_worker) {
  check_budget(what, q, n, opt.budget);
  const std::uint64_t total = projective_count(q, n);
  Best best;
  if (total == 0) return best;
  const unsigned jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(opt.jobs == 0 ? 1 : opt.jobs, 1, total));
  auto run = [&](std::uint64_t lo, std::uint64_t hi, Best& out) {
    auto w = make_worker();
    walk(q, n, lo, hi, [&](std::size_t i, gf::Elem a, gf::Elem b) { w.set(i, a, b); },
         [&](std::uint64_t idx, const std::vector<gf::Elem>& v) {
           if (auto s = w.score(idx, v)) out.offer(*s, idx);
         });
  };
  if (jobs == 1) {
    run(0, total, best);
    return best;
  }
  std::vector<Best> parts(jobs);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned k = 0; k < jobs; ++k) {
    const std::uint64_t lo = total * k / jobs, hi = total * (k + 1) / jobs;
    threads.emplace_back([&, k, lo, hi]() {
      try {
        run(lo, hi, parts[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& p : parts) best.merge(p);
  return best;
}

}  // namespace mindist::search

#endif  // MINDIST_SEARCH_HPP
