#pragma once
// Exact Verma-module machinery over the classical matrix realizations.
//
// The four classical series are realized by explicit matrices:
//
//   gl(n)      for su(p,q), n = p+q       (H_i = |i><i|, G_ij = |i><j|)
//   so(2n+1)   for so(2n-1,2)             ((2n+1) x (2n+1), paired rows)
//   sp(2n)     for sp(n,R)                (2x2 block form)
//   so(2n)     for so*(2n), so(2n-2,2)    (paired rows, no odd vector)
//
// The generator list is ordered
//
//   lowerings  Eb(1)..Eb(n), Fb(i,j) row-major, Gb(i,j) row-major   (< )
//   Cartans    H(1)..H(n)                                           (< )
//   raisings   E(1)..E(n),  F(i,j),   G(i,j)   (mirror of the lowerings)
//
// as applicable per series (gl has only Gb/G; so(2n) has no Eb/E).  PBW
// monomials in the lowering part are exponent vectors over that order.
// Brackets are tabulated once from exact matrix commutators; every entry is
// decomposed over the generator basis and re-verified against the matrices,
// so a wrong structure constant cannot survive construction.
//
// The hermitian form: eta maps a lowering generator to its raising partner,
// with a minus sign when the root is noncompact (the marking comes from the
// algebra's root system).  shapovalov(x,y) is the v-coefficient of
// eta(x) y . v; positive semidefiniteness of its weight-space blocks at
// highest weight Lambda is exactly unitarizability of L(Lambda) for the
// noncompact real form, which is what gram() tests degree by degree.
//
// normal_order() straightens arbitrary generator words into the full PBW
// order (lowerings < Cartans < raisings); its Cartan part evaluated at
// Lambda reproduces shapovalov() and serves as an independent cross-check.
//
// VermaModule instances carry private memo tables and share only the
// immutable GeneratorBasis, so distinct Gram blocks (or threads) can each
// run their own instance concurrently.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uhw/linalg.hpp"
#include "uhw/rootsys.hpp"

namespace uhw {

enum class Series { gl, so_odd_dim, sp_even_dim, so_even_dim };

struct Generator {
  enum Kind { lowering, cartan, raising };
  std::string label;  // "Gb(1,2)", "H(2)", "E(1)", ...
  Kind kind = lowering;
  int i = 0, j = 0;   // 1-based index labels; j = 0 for Eb/E/H
  Mat matrix;
  Vec weight;         // length n; [H_k, X] = weight[k] X (verified)
  int partner = -1;   // lowering <-> raising; -1 for Cartans
  bool noncompact = false;
};

// A sparse bracket: [a,b] = sum of coefficient * generator.
using BracketTerms = std::vector<std::pair<int, Rational>>;

struct GeneratorBasis {
  AlgebraSpec spec;     // the hermitian algebra this basis serves
  Series series = Series::gl;
  int n = 0;            // coordinate rank (gl(n), B_n, C_n, D_n)
  int dim = 0;          // matrix size
  std::vector<Generator> gen;
  int n_lowering = 0;
  std::vector<std::vector<BracketTerms>> bracket;  // [a][b], all pairs

  int cartan_begin() const { return n_lowering; }
  int raising_begin() const { return n_lowering + n; }
  int size() const { return static_cast<int>(gen.size()); }
  int find(const std::string& label) const;             // -1 when absent
  int lowering_of(const Vec& positive_root) const;      // -1 when absent
};

// Throws std::invalid_argument for e6/e7 (no matrix realization here).
GeneratorBasis generator_basis(const AlgebraSpec& spec);

// Exponent vector over the lowering generators.
using Monomial = std::vector<int>;

int degree(const Monomial& m);
// Sum of exponent * positive root; the monomial's weight is Lambda - offset.
Vec monomial_offset(const GeneratorBasis& gb, const Monomial& m);

struct UEAElement {
  std::map<Monomial, Rational> term;  // deterministic (lex) order; no zeros
  bool is_zero() const { return term.empty(); }
  UEAElement& add(const Monomial& m, const Rational& c);
  UEAElement& operator+=(const UEAElement& o);
  UEAElement operator*(const Rational& c) const;
};

UEAElement uea_one(const GeneratorBasis& gb);             // empty monomial
UEAElement uea_generator(const GeneratorBasis& gb, int lowering);

std::string monomial_str(const GeneratorBasis& gb, const Monomial& m);
std::string element_str(const GeneratorBasis& gb, const UEAElement& e);

// Product of lowering generators (leftmost factor applied last), readied
// into PBW form.  Used to enter the printed extremal vectors.
using Word = std::vector<int>;
UEAElement lowering_word(const GeneratorBasis& gb, const Word& w,
                         const Rational& coefficient = Rational(1));

// ---- full PBW normal ordering (any generators) ----

struct OrderedElement {
  std::map<std::vector<int>, Rational> term;  // exponents over all generators
};

OrderedElement normal_order(const GeneratorBasis& gb, const Word& word);
OrderedElement normal_order(const GeneratorBasis& gb,
                            const std::vector<std::pair<Word, Rational>>& words);
// Keep only the pure-Cartan monomials.
OrderedElement cartan_part(const GeneratorBasis& gb, const OrderedElement& e);
// Evaluate the pure-Cartan part at Lambda (H_k -> Lambda[k]): the
// v-coefficient of e . v in the Verma module M(Lambda).
Rational cartan_eval(const GeneratorBasis& gb, const OrderedElement& e, const Vec& Lambda);

std::string ordered_str(const GeneratorBasis& gb, const OrderedElement& e);

// ---- the module ----

class VermaModule {
 public:
  VermaModule(const GeneratorBasis& gb, Vec Lambda);

  const Vec& highest_weight() const { return Lambda_; }
  const GeneratorBasis& basis() const { return gb_; }

  // g . (x . v) for any generator index g, result back in Omega_- . v form.
  UEAElement act(int g, const UEAElement& x);
  // Apply a word (leftmost factor last).
  UEAElement act_word(const Word& w, const UEAElement& x);

  Rational shapovalov(const UEAElement& x, const UEAElement& y);

 private:
  UEAElement mul_lowering(int g, const Monomial& m);
  UEAElement mul_lowering(int g, const UEAElement& x);
  UEAElement raise(int g, const Monomial& m);
  Rational cartan_eigenvalue(int h, const Monomial& m) const;

  const GeneratorBasis& gb_;
  Vec Lambda_;
  std::map<std::pair<int, Monomial>, UEAElement> mul_memo_;
  std::map<std::pair<int, Monomial>, UEAElement> raise_memo_;
};

// ---- Gram blocks ----

struct GramBlock {
  Vec offset;                   // weight = Lambda - offset
  std::vector<Monomial> basis;  // deterministic order
  Mat gram;                     // exact Shapovalov entries
  Inertia inertia;
};

struct GramReport {
  AlgebraSpec algebra;
  Vec highest_weight;
  int degree = 0;
  std::vector<GramBlock> blocks;      // sorted by offset (lex)
  bool positive_semidefinite = true;  // no negative pivot in any block

  std::string to_text(const GeneratorBasis& gb) const;
  std::string to_json(const GeneratorBasis& gb) const;
};

GramReport gram(const GeneratorBasis& gb, const Vec& Lambda, int max_degree);

// ---- extremal vectors ----

struct ExtremalCheck {
  bool extremal = false;
  Vec weight;  // Lambda - offset of y
};

// Requires y nonzero and weight-homogeneous (throws std::invalid_argument).
ExtremalCheck extremal_check(const GeneratorBasis& gb, const Vec& Lambda, const UEAElement& y);

// Basis of the extremal vectors of weight `target` in M(Lambda), primitive
// integer normalization, deterministic order.  Throws std::invalid_argument
// when the weight space at `target` is empty.
std::vector<UEAElement> extremal_search(const GeneratorBasis& gb, const Vec& Lambda,
                                        const Vec& target);

}  // namespace uhw
