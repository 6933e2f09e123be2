#include "uhw/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace uhw {

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<int> rref(Mat& M) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  const std::size_t rows = M.size(), cols = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && M[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    Rational inv = Rational(1) / M[r][c];
    for (auto& x : M[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      Rational f = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(Mat M) { return static_cast<int>(rref(M).size()); }

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  if (A.empty()) return is_zero_vec(b) ? std::optional<Vec>(Vec{}) : std::nullopt;
  const std::size_t rows = A.size(), cols = A[0].size();
  if (b.size() != rows) throw std::invalid_argument("solve: size mismatch");
  Mat M(rows, Vec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
    M[i][cols] = b[i];
  }
  auto pivots = rref(M);
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  Vec x(cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = M[k][cols];
  return x;
}

std::vector<Vec> nullspace(const Mat& A) {
  std::vector<Vec> basis;
  if (A.empty()) return basis;
  Mat M = A;
  const std::size_t cols = M[0].size();
  auto pivots = rref(M);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v(cols, Rational(0));
    v[free_c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -M[k][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Inertia inertia(Mat G) {
  const std::size_t n = G.size();
  for (const auto& row : G)
    if (row.size() != n) throw std::invalid_argument("inertia: matrix not square");
  Inertia sig;
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    // prefer a nonzero diagonal pivot
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i] && !G[i][i].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < n) {
      const Rational d = G[piv][piv];
      (d.sign() > 0 ? sig.positive : sig.negative) += 1;
      active[piv] = false;
      --remaining;
      for (std::size_t a = 0; a < n; ++a) {
        if (!active[a] || G[a][piv].is_zero()) continue;
        Rational f = G[a][piv] / d;
        for (std::size_t b = 0; b < n; ++b) {
          if (!active[b]) continue;
          G[a][b] -= f * G[piv][b];
        }
      }
      continue;
    }
    // all-active diagonal is zero; look for a surviving off-diagonal entry
    std::size_t hi = n, hj = n;
    for (std::size_t i = 0; i < n && hi == n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && !G[i][j].is_zero()) {
          hi = i;
          hj = j;
          break;
        }
      }
    }
    if (hi == n) {  // whole active block vanishes
      sig.zero += static_cast<int>(remaining);
      break;
    }
    // hyperbolic 2x2 pivot [[0,c],[c,0]] contributes (+1,-1);
    // Schur complement: G[a][b] -= (G[a][hi] G[hj][b] + G[a][hj] G[hi][b]) / c
    const Rational c = G[hi][hj];
    sig.positive += 1;
    sig.negative += 1;
    active[hi] = active[hj] = false;
    remaining -= 2;
    for (std::size_t a = 0; a < n; ++a) {
      if (!active[a]) continue;
      const Rational ai = G[a][hi], aj = G[a][hj];
      if (ai.is_zero() && aj.is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!active[b]) continue;
        G[a][b] -= (ai * G[hj][b] + aj * G[hi][b]) / c;
      }
    }
  }
  return sig;
}

}  // namespace uhw
