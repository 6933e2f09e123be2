#pragma once
// Worked catalogs of positive-energy unitary highest-weight modules for
// su(2,2) and so(3,2), the two low-rank cases whose module structure is
// spelled out generator by generator.
//
// Every entry is produced at runtime from the classification engine and is
// re-verified before it is returned:
//   * the boundary value lambda0 and the root alpha0 come from the diagram
//     method (last_place) and must match the stated family;
//   * the full weight Lambda = Lambda0 + lambda * epsilon must classify as
//     unitarizable with both methods in agreement;
//   * boundary entries carry the first missing weight Lambda - alpha0 and an
//     explicit extremal (singular) vector, which must pass extremal_check in
//     the exact Verma machinery at exactly that weight.
// A violation throws std::logic_error: the catalog cannot silently drift
// away from the engines that back it.
//
// su(2,2) labels: j1 = (L1-L2)/2, j2 = (L3-L4)/2, d = (L1+L2-L3-L4)/2
// (conformal so(4,2) ~ su(2,2) spin-and-dimension labels).  so(3,2) labels:
// E0 = -L1, j = L2 (anti-de-Sitter energy and spin; Di = (1,1/2) and
// Rac = (1/2,0) are the two singletons).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uhw/ehw.hpp"
#include "uhw/verma.hpp"

namespace uhw {

struct PhysicalLabel {
  std::vector<std::pair<std::string, Rational>> values;
  std::string str() const;  // "j1=1/2, j2=0, d=-3/2"
  Rational value(const std::string& name) const;  // throws when absent
};

struct CatalogEntry {
  std::string case_id;      // "a" .. "f"
  AlgebraSpec algebra;
  Vec highest_weight;       // Lambda = Lambda0 + lambda * epsilon
  Rational lambda;          // the lambda used for this entry
  Rational lambda0;         // boundary of the entry's family
  PhysicalLabel label;
  std::string poincare;     // computed physical reading ("massless, ...")
  std::optional<Vec> missing;          // boundary entries only
  std::optional<UEAElement> extremal;  // singular vector at `missing`
  std::string extremal_text;           // printed PBW form ("" when interior)
};

// Families for su(2,2); n >= 1 throughout, m >= 1 when given.
//   a) first reduction point of Lambda0 with <Lambda0,e1-e2> = n: massless;
//   b) the same chain at lambda < -1 (requires `lambda`);
//   c) mirror chain with <Lambda0,e3-e4> = n: massless, opposite helicity;
//   d) mirror of b (requires `lambda`);
//   e) two-sided chain (m, n), boundary lambda0 = -2 (requires `m`);
//   f) two-sided chain at lambda < -2 (requires `m` and `lambda`; omitted
//      when -2 <= lambda < -1).
// A supplied lambda must satisfy lambda < -1 (std::invalid_argument).
std::vector<CatalogEntry> su22_catalog(int n, std::optional<int> m = std::nullopt,
                                       std::optional<Rational> lambda = std::nullopt);

// Families for so(3,2); m >= 1 when given.
//   a) spin-m/2 massless boundary, m >= 2 (requires `m`);
//   b) the same chain at lambda < -1 (requires `m` and `lambda`);
//   c) the Dirac singleton Di at (E0,j) = (1,1/2);
//   d) the m = 1 chain at lambda < -1/2 (requires `lambda`);
//   e) the Dirac singleton Rac at (E0,j) = (1/2,0).
// A supplied lambda must satisfy lambda < -1/2 (std::invalid_argument).
std::vector<CatalogEntry> so32_catalog(std::optional<int> m = std::nullopt,
                                       std::optional<Rational> lambda = std::nullopt);

std::string catalog_text(const std::vector<CatalogEntry>& entries);
std::string catalog_json(const std::vector<CatalogEntry>& entries);

}  // namespace uhw
