#pragma once
// Root data for the hermitian non-compact simple families
//
//   su(p,q)      A_{p+q-1} in R^{p+q},  beta = e_p - e_{p+1}
//   sp(n,R)      C_n in R^n,            beta = 2 e_n
//   so*(2n)      D_n in R^n,            beta = e_{n-1} + e_n
//   so(2n-1,2)   B_n in R^n,            beta = e_1 - e_2
//   so(2n-2,2)   D_n in R^n,            beta = e_1 - e_2
//   e6           in R^8 (span x6=x7=-x8), beta = (1,-1,-1,-1,-1,-1,-1,1)/2
//   e7           in R^8 (span x7=-x8),     beta = e_6 - e_5
//
// Exactly one simple root (beta) is noncompact; a positive root is
// noncompact iff beta appears with coefficient 1 in its expansion over the
// simple roots (coefficients 0/1 only — verified at build time).  gamma_r is
// the unique highest root.  R is the half sum of positive roots.  epsilon is
// the vector in the root span orthogonal to every compact simple root with
// <epsilon, gamma_r> = 1; it is derived here by solving those constraints,
// never transcribed, and it satisfies <epsilon,alpha>(alpha,alpha) =
// (gamma_r,gamma_r) for every noncompact positive alpha (checked at build).
//
// Pairings are <x,y> = 2(x,y)/(y,y) throughout (second argument carries the
// normalization).

#include <cstddef>
#include <string>
#include <vector>

#include "uhw/linalg.hpp"

namespace uhw {

enum class Family { su, sp, so_star, so_odd, so_even, e6, e7 };

struct AlgebraSpec {
  Family family = Family::su;
  int p = 0, q = 0;  // su(p,q)
  int n = 0;         // sp(n,R), so*(2n), so(2n-1,2), so(2n-2,2)

  static AlgebraSpec su(int p, int q) { return {Family::su, p, q, 0}; }
  static AlgebraSpec sp(int n) { return {Family::sp, 0, 0, n}; }
  static AlgebraSpec so_star(int two_n);   // takes 2n
  static AlgebraSpec so(int m);            // so(m,2); m odd or even
  static AlgebraSpec e6() { return {Family::e6, 0, 0, 0}; }
  static AlgebraSpec e7() { return {Family::e7, 0, 0, 0}; }

  // Command-line grammar: {"su","2","2"} {"sp","3"} {"so","5","2"}
  // {"sostar","8"} (alias "so*"), {"e6"}, {"e7"}.
  static AlgebraSpec parse(const std::vector<std::string>& tokens);

  void validate() const;  // throws std::invalid_argument out of range
  int ambient_dim() const;
  int rank() const;
  std::string name() const;  // "su(2,2)", "sp(2,R)", "so*(8)", "so(5,2)", "e6"
};

struct RootSystem {
  AlgebraSpec spec;
  int dim = 0;

  std::vector<Vec> simple;                        // fixed per-family order
  std::size_t beta_index = 0;                     // position of beta in `simple`
  std::vector<std::size_t> compact_simple_index;  // the mu_i order used everywhere

  std::vector<Vec> positive;              // sorted by (height, lex)
  std::vector<std::vector<long long>> coeff;  // expansion over `simple`
  std::vector<int> height;                // coefficient sums
  std::vector<bool> noncompact;           // beta-coefficient == 1

  Vec gamma_r;   // unique highest root
  Vec half_sum;  // R
  Vec epsilon;   // derived, see header comment

  const Vec& beta() const { return simple[beta_index]; }
  std::vector<Vec> compact_simples() const;
  std::vector<Vec> noncompact_positives() const;  // (height, lex) order
  bool is_positive_root(const Vec& v) const;
  bool is_root(const Vec& v) const;
  int positive_index(const Vec& v) const;  // -1 when absent
};

RootSystem build(const AlgebraSpec& spec);

// 2(x,y)/(y,y); throws std::domain_error when y = 0.
Rational pairing(const Vec& x, const Vec& y);

struct WeightDecomposition {
  Vec lambda0;      // Lambda - lambda * epsilon
  Rational lambda;  // <Lambda, gamma_r>
  Vec pi0;          // Lambda - z * epsilon
  Rational z;       // <Lambda + R, gamma_r>
  bool dominant_integral = false;  // <lambda0, mu> in Z>=0 for compact simples
};

WeightDecomposition decompose(const RootSystem& rs, const Vec& Lambda);

// The point of the root span with <w, mu_i> = pattern[i] along
// compact_simple_index and <w, gamma_r> = 0.  Unique.
Vec weight_from_pattern(const RootSystem& rs, const std::vector<Rational>& pattern);

// A reflection-closed subsystem with inherited positivity: the irreducible
// component containing gamma_r of the closure of `generators`.
struct Subsystem {
  std::vector<Vec> positive;         // ambient-positive members, (ambient height, lex)
  std::vector<Vec> simple;           // indecomposables, (ambient height, lex)
  std::vector<bool> simple_noncompact;
  std::vector<int> height;           // heights inside the subsystem
  std::string cartan_type;           // "A3", "B2", "C3", "D5", "E6", "E7"
  std::string hermitian_type;        // "su(1,3)", "sp(2,R)", "so(8,2)", ...
  bool contains(const Vec& root) const;
  std::vector<Vec> noncompact_positives() const;
};

Subsystem subsystem(const RootSystem& rs, const std::vector<Vec>& generators);

}  // namespace uhw
