#pragma once
// Diagram method for the last possible reduction point.
//
// Nodes are the noncompact positive roots ordered by (height, lex); edges
// alpha -> alpha + mu_k (mu_k compact simple) when the target is again a
// noncompact positive root.  H_alpha is the chain height (H_beta = 1, +1 per
// edge, equal to the coefficient-sum height because beta contributes 1).
//
// Step (i): alpha is a candidate when for every compact simple mu with
// alpha - mu still a noncompact positive root, <Lambda0, mu> >= max(1,
// <alpha, mu>).  beta is vacuously a candidate.
//
// Step (ii): lambda_alpha = (1 - <Lambda0,alpha> - <R,alpha>) / <eps,alpha>;
// the last reduction point is lambda0 = min over candidates, attained at
// alpha0 (ties broken by height then lex — reproduces every tabulated case).
// The first missing weight of M(Lambda0 + lambda0 eps) is Lambda - alpha0.
//
// The split rank collection gamma_1 = beta, gamma_{k+1} = the (height, lex)-
// minimal noncompact positive root orthogonal to all previous ones; lambda_s
// = -c/2 where c counts compact positive roots whose orthogonal projection
// onto span(gamma_1..gamma_t) equals (gamma_2 - gamma_1)/2.

#include <string>
#include <utility>
#include <vector>

#include "uhw/rootsys.hpp"

namespace uhw {

struct DiagramEdge {
  int from = 0, to = 0;  // node indices
  int label = 0;         // compact-simple slot (index into compact_simple_index)
};

struct JakobsenDiagram {
  std::vector<Vec> node;     // noncompact positive roots, (height, lex)
  std::vector<int> height;   // H_alpha
  std::vector<DiagramEdge> edges;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: node_i <= node_j (reachability)

  int node_index(const Vec& alpha) const;  // -1 when absent
  std::string render(const RootSystem& rs) const;
};

JakobsenDiagram diagram(const RootSystem& rs);

// (forward cone C+, backward cone C-) of alpha, both containing alpha.
std::pair<std::vector<Vec>, std::vector<Vec>> cones(const RootSystem& rs, const Vec& alpha);

struct SplitCollection {
  std::vector<Vec> gamma;
  int t() const { return static_cast<int>(gamma.size()); }
};

SplitCollection split_rank(const RootSystem& rs);

// Definition applied to any hermitian noncompact-positive set with its own
// heights (used for the q-system of the reduction-point constants).
SplitCollection split_collection(const std::vector<Vec>& noncompact_positive,
                                 const std::vector<int>& height);

Rational lambda_s(const AlgebraSpec& spec);      // closed form
Rational lambda_s_derived(const RootSystem& rs); // projection count; needs t >= 2

struct ReductionWitness {
  Vec alpha0;
  Rational lambda0;
  std::vector<std::pair<Vec, Rational>> candidates;  // (alpha, lambda_alpha), diagram order
};

ReductionWitness last_place(const RootSystem& rs, const Vec& Lambda0);

Vec missing_weight(const RootSystem& rs, const Vec& Lambda0, const ReductionWitness& w);

}  // namespace uhw
