#ifndef MINDIST_LINALG_HPP
#define MINDIST_LINALG_HPP

// Dense Gaussian elimination over GF(q).

#include <optional>
#include <stdexcept>
#include <vector>

#include "mindist/gf.hpp"

namespace mindist::linalg {

using Matrix = std::vector<std::vector<gf::Elem>>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(const gf::Field& F, Matrix& A) {
  std::vector<std::size_t> pivots;
  if (A.empty()) return pivots;
  const std::size_t rows = A.size(), cols = A[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    const gf::Elem inv = F.inv(A[r][c]);
    for (auto& x : A[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const gf::Elem f = A[i][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const gf::Field& F, Matrix A) { return rref(F, A).size(); }

/// Some x with A x = b, or nullopt if the system is inconsistent.
inline std::optional<std::vector<gf::Elem>> solve(const gf::Field& F, const Matrix& A, const std::vector<gf::Elem>& b) {
  if (A.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t cols = A.empty() ? 0 : A[0].size();
  Matrix M = A;
  for (std::size_t i = 0; i < M.size(); ++i) M[i].push_back(b[i]);
  const auto piv = rref(F, M);
  std::vector<gf::Elem> x(cols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == cols) return std::nullopt;
    x[piv[r]] = M[r][cols];
  }
  return x;
}

inline Matrix transpose(const Matrix& A) {
  if (A.empty()) return {};
  Matrix T(A[0].size(), std::vector<gf::Elem>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
  return T;
}

}  // namespace mindist::linalg

#endif  // MINDIST_LINALG_HPP
