#pragma once
// Reduction-point constants and the classification of unitarizable points.
//
// Weights are written Lambda = Pi0 + z*eps with <Pi0 + R, gamma_r> = 0, so
// z = <Lambda + R, gamma_r>.  From Pi0:
//
//   Q = irreducible component of gamma_r inside the subsystem generated by
//       {±gamma_r} and the compact roots orthogonal to Pi0;
//   T = same with the short compact positive roots mu, <Pi0,mu> = 1, not
//       orthogonal to Q, adjoined (T can differ from Q only when short
//       compact roots exist, i.e. for sp(n,R) and so(2n-1,2));
//   B = 1 + <R_{c,Q} + R_{c,T}, gamma_r>   (half sums of the ambient-compact
//       positive members of Q resp. T), except that for so(2n-1,2) with
//       Q != T only the T term enters: B = 1 + <R_{c,T}, gamma_r>;
//   C = -lambda_s(ambient);   A = B - (split_rank(Q) - 1) * C.
//
// The unitarizable z-set is (-inf, A] together with the evenly spaced points
// A + C, A + 2C, ..., B; its size is the level (B - A)/C + 1.  The last
// reduction point B always equals lambda0 + <R, gamma_r> from the diagram
// method; classify() reports both so the agreement is checkable end to end.

#include <string>
#include <vector>

#include "uhw/jakobsen.hpp"
#include "uhw/rootsys.hpp"

namespace uhw {

struct EHWConstants {
  Rational A, B, C;
  std::string q_type, t_type;  // hermitian names, e.g. "su(1,2)", "so(5,2)"
  int q_split_rank = 0;
};

struct UnitaritySet {
  Rational continuous_max;       // A
  std::vector<Rational> discrete;  // A+C, ..., B (empty when A = B)
  int level() const { return static_cast<int>(discrete.size()) + 1; }
  bool contains_z(const Rational& z) const;
};

Subsystem q_system(const RootSystem& rs, const Vec& Pi0);
Subsystem t_system(const RootSystem& rs, const Vec& Pi0);
EHWConstants constants(const RootSystem& rs, const Vec& Pi0);
UnitaritySet unitarizable_set(const RootSystem& rs, const Vec& Pi0);

// Full decomposition of Lambda; throws std::invalid_argument when the
// compact part is not dominant integral.
bool is_unitarizable(const RootSystem& rs, const Vec& Lambda);

struct ClassificationReport {
  AlgebraSpec algebra;
  Vec weight;
  WeightDecomposition decomposition;
  ReductionWitness witness;        // diagram method on Lambda0
  Vec missing;                     // Lambda(at lambda0) - alpha0
  EHWConstants ehw;
  UnitaritySet set;
  Rational lambda0_from_B;         // B - <R, gamma_r>
  bool methods_agree = false;      // lambda0_from_B == witness.lambda0
  bool unitarizable = false;

  std::string to_text() const;
  std::string to_json() const;     // serialized ordered JSON
};

ClassificationReport classify(const RootSystem& rs, const Vec& Lambda);

// ---- exhaustive agreement sweep over vanishing patterns ----

// One representative per class of compact-simple value patterns.  Both
// methods see <Lambda0, mu_i> only through the classes {0, 1, >= 2}, and the
// distinction between 1 and 2 matters only where short compact roots exist,
// so values range over {0,1} -- over {0,1,2} for sp(n,R) and so(2n-1,2) --
// exhaustively over the compact simple roots.
std::vector<std::vector<Rational>> pattern_representatives(const RootSystem& rs);

struct CrossCheck {
  std::vector<Rational> pattern;  // <Lambda0, mu_i> along compact_simple_index
  Vec lambda0_weight;             // weight_from_pattern(pattern)
  ReductionWitness witness;       // diagram method
  EHWConstants ehw;               // reduction-point method
  Rational lambda0_from_B;        // B - <R, gamma_r>
  bool agree = false;
};

CrossCheck cross_check(const RootSystem& rs, const std::vector<Rational>& pattern);
std::vector<CrossCheck> cross_check_all(const RootSystem& rs);  // every representative

}  // namespace uhw
