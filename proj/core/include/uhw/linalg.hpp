#pragma once
// Exact dense linear algebra, sized for root-system ranks (<= 8) and for
// Gram blocks of low-degree PBW weight spaces (<= a few dozen rows).
//
// The one nonstandard piece is inertia(): the signature of an exact
// symmetric matrix by congruence.  Diagonal pivots are eliminated
// symmetrically; when the active diagonal is all zero but an off-diagonal
// entry c = G[i][j] survives, the 2x2 block [[0,c],[c,0]] contributes the
// hyperbolic pair (+1,-1) and is pivoted out via its exact inverse.  Over Q
// no pivot-growth or cancellation concerns exist; signs are exact.

#include <optional>
#include <string>
#include <vector>

#include "uhw/rational.hpp"

namespace uhw {

using Vec = std::vector<Rational>;
using Mat = std::vector<std::vector<Rational>>;

// "(1,-1/2,0)" — the one textual form used by renders, JSON and tests.
std::string vec_str(const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
Rational dot(const Vec& a, const Vec& b);  // the ambient Euclidean form
bool is_zero_vec(const Vec& a);

// Lexicographic compare, used whenever a deterministic root order is needed.
bool lex_less(const Vec& a, const Vec& b);

// Row-reduces M in place; returns the pivot column indices.
std::vector<int> rref(Mat& M);

int rank(Mat M);

// Solves A x = b exactly.  Returns nullopt when inconsistent; when the
// solution space is positive-dimensional, free variables are set to zero.
std::optional<Vec> solve(const Mat& A, const Vec& b);

// Basis of { x : A x = 0 }, one vector per free column, deterministic order.
std::vector<Vec> nullspace(const Mat& A);

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  bool operator==(const Inertia&) const = default;
};

// Signature of a symmetric matrix by exact symmetric elimination.
Inertia inertia(Mat G);

}  // namespace uhw
