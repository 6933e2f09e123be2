#include "uhw/verma.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace uhw {

namespace {

// Matrices here have at most two nonzero entries; commutators are formed on
// (row, col) -> value triples so basis construction stays O(#generators^2).
using SparseMat = std::map<std::pair<int, int>, Rational>;

SparseMat sparse_of(const Mat& M) {
  SparseMat s;
  for (int r = 0; r < static_cast<int>(M.size()); ++r)
    for (int c = 0; c < static_cast<int>(M[r].size()); ++c)
      if (!M[r][c].is_zero()) s[{r, c}] = M[r][c];
  return s;
}

void sparse_accumulate_product(SparseMat& out, const SparseMat& A, const SparseMat& B,
                               const Rational& scale) {
  for (const auto& [rc1, v1] : A)
    for (const auto& [rc2, v2] : B)
      if (rc1.second == rc2.first) {
        auto key = std::make_pair(rc1.first, rc2.second);
        auto it = out.find(key);
        if (it == out.end())
          out[key] = scale * v1 * v2;
        else {
          it->second += scale * v1 * v2;
          if (it->second.is_zero()) out.erase(it);
        }
      }
}

SparseMat sparse_commutator(const SparseMat& A, const SparseMat& B) {
  SparseMat C;
  sparse_accumulate_product(C, A, B, Rational(1));
  sparse_accumulate_product(C, B, A, Rational(-1));
  return C;
}

Mat zero_mat(int d) { return Mat(d, Vec(d, Rational(0))); }

void put(Mat& M, int r, int c, long long v) { M[r - 1][c - 1] += Rational(v); }

Vec coord_weight(int n, std::initializer_list<std::pair<int, long long>> entries) {
  Vec w(n, Rational(0));
  for (const auto& [k, v] : entries) w[k - 1] += Rational(v);
  return w;
}

std::string idx1(const char* base, int i) {
  return std::string(base) + "(" + std::to_string(i) + ")";
}

std::string idx2(const char* base, int i, int j) {
  return std::string(base) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

int GeneratorBasis::find(const std::string& label) const {
  for (int k = 0; k < size(); ++k)
    if (gen[k].label == label) return k;
  return -1;
}

int GeneratorBasis::lowering_of(const Vec& positive_root) const {
  for (int k = 0; k < n_lowering; ++k)
    if (vec_scale(Rational(-1), gen[k].weight) == positive_root) return k;
  return -1;
}

GeneratorBasis generator_basis(const AlgebraSpec& spec) {
  spec.validate();
  GeneratorBasis gb;
  gb.spec = spec;
  switch (spec.family) {
    case Family::su:
      gb.series = Series::gl;
      gb.n = spec.p + spec.q;
      gb.dim = gb.n;
      break;
    case Family::sp:
      gb.series = Series::sp_even_dim;
      gb.n = spec.n;
      gb.dim = 2 * gb.n;
      break;
    case Family::so_odd:
      gb.series = Series::so_odd_dim;
      gb.n = spec.n;
      gb.dim = 2 * gb.n + 1;
      break;
    case Family::so_star:
    case Family::so_even:
      gb.series = Series::so_even_dim;
      gb.n = spec.n;
      gb.dim = 2 * gb.n;
      break;
    default:
      throw std::invalid_argument("no matrix realization for " + spec.name());
  }
  const int n = gb.n, d = gb.dim;

  auto add_gen = [&](std::string label, Generator::Kind kind, int i, int j, Mat M, Vec w) {
    Generator g;
    g.label = std::move(label);
    g.kind = kind;
    g.i = i;
    g.j = j;
    g.matrix = std::move(M);
    g.weight = std::move(w);
    gb.gen.push_back(std::move(g));
  };

  // Lowerings in the fixed PBW order: Eb(i), then Fb(i,j), then Gb(i,j),
  // each block row-major; Cartans; raisings mirroring the lowerings.
  const bool has_e = gb.series == Series::so_odd_dim || gb.series == Series::sp_even_dim;
  const bool has_f = gb.series != Series::gl;

  for (int pass = 0; pass < 2; ++pass) {
    const bool low = pass == 0;
    const auto kind = low ? Generator::lowering : Generator::raising;
    if (pass == 1)
      for (int i = 1; i <= n; ++i) {
        Mat M = zero_mat(d);
        switch (gb.series) {
          case Series::gl:
            put(M, i, i, 1);
            break;
          case Series::sp_even_dim:
            put(M, i, i, 1);
            put(M, n + i, n + i, -1);
            break;
          default:
            put(M, 2 * i - 1, 2 * i - 1, 1);
            put(M, 2 * i, 2 * i, -1);
        }
        add_gen(idx1("H", i), Generator::cartan, i, 0, std::move(M), Vec(n, Rational(0)));
      }
    if (has_e)
      for (int i = 1; i <= n; ++i) {
        Mat M = zero_mat(d);
        if (gb.series == Series::so_odd_dim) {
          if (low) {
            put(M, 2 * n + 1, 2 * i - 1, 1);
            put(M, 2 * i, 2 * n + 1, -1);
          } else {
            put(M, 2 * i - 1, 2 * n + 1, 1);
            put(M, 2 * n + 1, 2 * i, -1);
          }
          add_gen(idx1(low ? "Eb" : "E", i), kind, i, 0, std::move(M),
                  coord_weight(n, {{i, low ? -1 : 1}}));
        } else {
          if (low)
            put(M, n + i, i, 1);
          else
            put(M, i, n + i, 1);
          add_gen(idx1(low ? "Eb" : "E", i), kind, i, 0, std::move(M),
                  coord_weight(n, {{i, low ? -2 : 2}}));
        }
      }
    if (has_f)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          Mat M = zero_mat(d);
          if (gb.series == Series::sp_even_dim) {
            if (low) {
              put(M, n + i, j, 1);
              put(M, n + j, i, 1);
            } else {
              put(M, i, n + j, 1);
              put(M, j, n + i, 1);
            }
          } else {
            if (low) {
              put(M, 2 * j, 2 * i - 1, 1);
              put(M, 2 * i, 2 * j - 1, -1);
            } else {
              put(M, 2 * i - 1, 2 * j, 1);
              put(M, 2 * j - 1, 2 * i, -1);
            }
          }
          add_gen(idx2(low ? "Fb" : "F", i, j), kind, i, j, std::move(M),
                  coord_weight(n, {{i, low ? -1 : 1}, {j, low ? -1 : 1}}));
        }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Mat M = zero_mat(d);
        switch (gb.series) {
          case Series::gl:
            if (low)
              put(M, j, i, 1);
            else
              put(M, i, j, 1);
            break;
          case Series::sp_even_dim:
            if (low) {
              put(M, j, i, 1);
              put(M, n + i, n + j, -1);
            } else {
              put(M, i, j, 1);
              put(M, n + j, n + i, -1);
            }
            break;
          default:
            if (low) {
              put(M, 2 * j - 1, 2 * i - 1, 1);
              put(M, 2 * i, 2 * j, -1);
            } else {
              put(M, 2 * i - 1, 2 * j - 1, 1);
              put(M, 2 * j, 2 * i, -1);
            }
        }
        add_gen(idx2(low ? "Gb" : "G", i, j), kind, i, j, std::move(M),
                coord_weight(n, {{i, low ? -1 : 1}, {j, low ? 1 : -1}}));
      }
    if (pass == 0) gb.n_lowering = static_cast<int>(gb.gen.size());
  }

  // Partners (mirror order) and hermitian marking from the root system.
  RootSystem rs = build(spec);
  if (rs.dim != n) throw std::logic_error("coordinate rank mismatch with the root system");
  if (static_cast<int>(rs.positive.size()) != gb.n_lowering)
    throw std::logic_error("lowering count differs from the positive-root count");
  for (int k = 0; k < gb.n_lowering; ++k) {
    int r = gb.raising_begin() + k;
    gb.gen[k].partner = r;
    gb.gen[r].partner = k;
    if (gb.gen[r].weight != vec_scale(Rational(-1), gb.gen[k].weight))
      throw std::logic_error("raising partner weight mismatch");
    int idx = rs.positive_index(gb.gen[r].weight);
    if (idx < 0) throw std::logic_error("generator weight is not a positive root");
    gb.gen[k].noncompact = gb.gen[r].noncompact = rs.noncompact[idx];
  }

  // Verify [H_k, X] = weight_k X against the matrices.
  std::vector<SparseMat> sp;
  sp.reserve(gb.gen.size());
  for (const auto& g : gb.gen) sp.push_back(sparse_of(g.matrix));
  for (int g = 0; g < gb.size(); ++g)
    for (int k = 0; k < n; ++k) {
      SparseMat C = sparse_commutator(sp[gb.cartan_begin() + k], sp[g]);
      SparseMat expect;
      for (const auto& [rc, v] : sp[g])
        if (!(gb.gen[g].weight[k] * v).is_zero()) expect[rc] = gb.gen[g].weight[k] * v;
      if (C != expect) throw std::logic_error("weight label disagrees with the matrices");
    }

  // Bracket table from exact commutators, decomposed and re-verified.
  gb.bracket.assign(gb.size(), std::vector<BracketTerms>(gb.size()));
  for (int a = 0; a < gb.size(); ++a)
    for (int b = a + 1; b < gb.size(); ++b) {
      SparseMat C = sparse_commutator(sp[a], sp[b]);
      BracketTerms terms;
      if (!C.empty()) {
        Vec w = vec_add(gb.gen[a].weight, gb.gen[b].weight);
        SparseMat rebuilt;
        if (!is_zero_vec(w)) {
          int k = -1;
          for (int g = 0; g < gb.size(); ++g)
            if (gb.gen[g].kind != Generator::cartan && gb.gen[g].weight == w) {
              k = g;
              break;
            }
          if (k < 0) throw std::logic_error("commutator weight is not a root");
          const auto& [rc, v] = *sp[k].begin();
          auto it = C.find(rc);
          if (it == C.end()) throw std::logic_error("commutator misses its root vector");
          Rational coeff = it->second / v;
          terms.push_back({k, coeff});
          for (const auto& [rc2, v2] : sp[k]) rebuilt[rc2] = coeff * v2;
        } else {
          for (int k = 0; k < n; ++k) {
            int h = gb.cartan_begin() + k;
            const auto& [rc, v] = *sp[h].begin();
            auto it = C.find(rc);
            if (it == C.end()) continue;
            Rational coeff = it->second / v;
            terms.push_back({h, coeff});
            for (const auto& [rc2, v2] : sp[h]) {
              auto jt = rebuilt.find(rc2);
              if (jt == rebuilt.end())
                rebuilt[rc2] = coeff * v2;
              else {
                jt->second += coeff * v2;
                if (jt->second.is_zero()) rebuilt.erase(jt);
              }
            }
          }
        }
        if (rebuilt != C) throw std::logic_error("commutator does not decompose over the basis");
      }
      gb.bracket[a][b] = terms;
      for (auto& [k, c] : terms) c = -c;
      gb.bracket[b][a] = std::move(terms);
    }
  return gb;
}

int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Vec monomial_offset(const GeneratorBasis& gb, const Monomial& m) {
  Vec off(gb.n, Rational(0));
  for (int g = 0; g < gb.n_lowering; ++g)
    if (m[g] != 0) off = vec_sub(off, vec_scale(Rational(m[g]), gb.gen[g].weight));
  return off;
}

UEAElement& UEAElement::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return *this;
  auto it = term.find(m);
  if (it == term.end())
    term.emplace(m, c);
  else {
    it->second += c;
    if (it->second.is_zero()) term.erase(it);
  }
  return *this;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, c] : o.term) add(m, c);
  return *this;
}

UEAElement UEAElement::operator*(const Rational& c) const {
  UEAElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : term) r.term.emplace(m, v * c);
  return r;
}

UEAElement uea_one(const GeneratorBasis& gb) {
  UEAElement e;
  e.add(Monomial(gb.n_lowering, 0), Rational(1));
  return e;
}

UEAElement uea_generator(const GeneratorBasis& gb, int lowering) {
  if (lowering < 0 || lowering >= gb.n_lowering)
    throw std::invalid_argument("not a lowering generator index");
  Monomial m(gb.n_lowering, 0);
  m[lowering] = 1;
  UEAElement e;
  e.add(m, Rational(1));
  return e;
}

namespace {

int first_letter(const Monomial& m) {
  for (int g = 0; g < static_cast<int>(m.size()); ++g)
    if (m[g] > 0) return g;
  return -1;
}

using StraightenMemo = std::map<std::pair<int, Monomial>, UEAElement>;

// g . m straightened into the PBW basis of Omega_-; g must be a lowering.
// Recursion: with a the first factor of m, g m = a (g m') + [g,a] m'.
// The measure (degree of m, g) decreases lexicographically on every call.
UEAElement mul_lowering_pbw(const GeneratorBasis& gb, int g, const Monomial& m,
                            StraightenMemo* memo) {
  if (memo) {
    auto it = memo->find({g, m});
    if (it != memo->end()) return it->second;
  }
  UEAElement res;
  int a = first_letter(m);
  if (a < 0 || g <= a) {
    Monomial m1 = m;
    m1[g] += 1;
    res.add(m1, Rational(1));
  } else {
    Monomial m2 = m;
    m2[a] -= 1;
    UEAElement inner = mul_lowering_pbw(gb, g, m2, memo);
    for (const auto& [mi, ci] : inner.term) {
      UEAElement t = mul_lowering_pbw(gb, a, mi, memo);
      for (const auto& [mj, cj] : t.term) res.add(mj, ci * cj);
    }
    for (const auto& [h, c] : gb.bracket[g][a]) {
      if (gb.gen[h].kind != Generator::lowering)
        throw std::logic_error("lowering bracket left the lowering span");
      UEAElement t = mul_lowering_pbw(gb, h, m2, memo);
      for (const auto& [mj, cj] : t.term) res.add(mj, c * cj);
    }
  }
  if (memo) (*memo)[{g, m}] = res;
  return res;
}

}  // namespace

UEAElement lowering_word(const GeneratorBasis& gb, const Word& w, const Rational& coefficient) {
  for (int g : w)
    if (g < 0 || g >= gb.n_lowering)
      throw std::invalid_argument("lowering_word: not a lowering generator index");
  UEAElement e;
  e.add(Monomial(gb.n_lowering, 0), coefficient);
  StraightenMemo memo;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    UEAElement next;
    for (const auto& [m, c] : e.term) {
      UEAElement t = mul_lowering_pbw(gb, *it, m, &memo);
      for (const auto& [mj, cj] : t.term) next.add(mj, c * cj);
    }
    e = std::move(next);
  }
  return e;
}

std::string monomial_str(const GeneratorBasis& gb, const Monomial& m) {
  std::string s;
  for (int g = 0; g < gb.n_lowering; ++g) {
    if (m[g] == 0) continue;
    if (!s.empty()) s += " ";
    s += gb.gen[g].label;
    if (m[g] > 1) s += "^" + std::to_string(m[g]);
  }
  return s.empty() ? "1" : s;
}

namespace {

template <typename Map, typename Namer>
std::string combination_str(const Map& terms, Namer name) {
  if (terms.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = c.abs();
    if (first)
      o << (c.sign() < 0 ? "-" : "");
    else
      o << (c.sign() < 0 ? " - " : " + ");
    first = false;
    std::string mono = name(m);
    if (mono == "1")
      o << a.str();
    else if (a == Rational(1))
      o << mono;
    else
      o << a.str() << " " << mono;
  }
  return o.str();
}

}  // namespace

std::string element_str(const GeneratorBasis& gb, const UEAElement& e) {
  return combination_str(e.term, [&](const Monomial& m) { return monomial_str(gb, m); });
}

// ---- full normal ordering ----

namespace {

void ordered_add(OrderedElement& e, const std::vector<int>& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = e.term.find(m);
  if (it == e.term.end())
    e.term.emplace(m, c);
  else {
    it->second += c;
    if (it->second.is_zero()) e.term.erase(it);
  }
}

OrderedElement normal_order_impl(const GeneratorBasis& gb, const Word& w,
                                 std::map<Word, OrderedElement>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  OrderedElement res;
  int k = -1;
  for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
    if (w[i] > w[i + 1]) {
      k = i;
      break;
    }
  if (k < 0) {
    std::vector<int> exps(gb.size(), 0);
    for (int g : w) exps[g] += 1;
    res.term.emplace(std::move(exps), Rational(1));
  } else {
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    res = normal_order_impl(gb, swapped, memo);
    for (const auto& [h, c] : gb.bracket[w[k]][w[k + 1]]) {
      Word reduced;
      reduced.reserve(w.size() - 1);
      for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (i == k) reduced.push_back(h);
        if (i != k && i != k + 1) reduced.push_back(w[i]);
      }
      OrderedElement t = normal_order_impl(gb, reduced, memo);
      for (const auto& [m, cc] : t.term) ordered_add(res, m, c * cc);
    }
  }
  memo[w] = res;
  return res;
}

}  // namespace

OrderedElement normal_order(const GeneratorBasis& gb, const Word& word) {
  return normal_order(gb, {{word, Rational(1)}});
}

OrderedElement normal_order(const GeneratorBasis& gb,
                            const std::vector<std::pair<Word, Rational>>& words) {
  for (const auto& [w, c] : words)
    for (int g : w)
      if (g < 0 || g >= gb.size()) throw std::invalid_argument("unknown generator index");
  std::map<Word, OrderedElement> memo;
  OrderedElement res;
  for (const auto& [w, c] : words) {
    OrderedElement t = normal_order_impl(gb, w, memo);
    for (const auto& [m, cc] : t.term) ordered_add(res, m, c * cc);
  }
  return res;
}

OrderedElement cartan_part(const GeneratorBasis& gb, const OrderedElement& e) {
  OrderedElement r;
  for (const auto& [m, c] : e.term) {
    bool pure = true;
    for (int g = 0; g < gb.size() && pure; ++g)
      if (m[g] != 0 && gb.gen[g].kind != Generator::cartan) pure = false;
    if (pure) r.term.emplace(m, c);
  }
  return r;
}

Rational cartan_eval(const GeneratorBasis& gb, const OrderedElement& e, const Vec& Lambda) {
  if (static_cast<int>(Lambda.size()) != gb.n)
    throw std::invalid_argument("weight has wrong coordinate rank");
  Rational total(0);
  for (const auto& [m, c] : cartan_part(gb, e).term) {
    Rational v = c;
    for (int k = 0; k < gb.n; ++k)
      for (int rep = 0; rep < m[gb.cartan_begin() + k]; ++rep) v *= Lambda[k];
    total += v;
  }
  return total;
}

std::string ordered_str(const GeneratorBasis& gb, const OrderedElement& e) {
  return combination_str(e.term, [&](const std::vector<int>& m) {
    std::string s;
    for (int g = 0; g < gb.size(); ++g) {
      if (m[g] == 0) continue;
      if (!s.empty()) s += " ";
      s += gb.gen[g].label;
      if (m[g] > 1) s += "^" + std::to_string(m[g]);
    }
    return s.empty() ? std::string("1") : s;
  });
}

// ---- the module ----

VermaModule::VermaModule(const GeneratorBasis& gb, Vec Lambda) : gb_(gb), Lambda_(std::move(Lambda)) {
  if (static_cast<int>(Lambda_.size()) != gb_.n)
    throw std::invalid_argument("highest weight has wrong coordinate rank");
}

Rational VermaModule::cartan_eigenvalue(int h, const Monomial& m) const {
  int k = h - gb_.cartan_begin();
  Rational eig = Lambda_[k];
  for (int g = 0; g < gb_.n_lowering; ++g)
    if (m[g] != 0) eig += Rational(m[g]) * gb_.gen[g].weight[k];
  return eig;
}

UEAElement VermaModule::mul_lowering(int g, const Monomial& m) {
  return mul_lowering_pbw(gb_, g, m, &mul_memo_);
}

UEAElement VermaModule::mul_lowering(int g, const UEAElement& x) {
  UEAElement res;
  for (const auto& [m, c] : x.term) {
    UEAElement t = mul_lowering(g, m);
    for (const auto& [mj, cj] : t.term) res.add(mj, c * cj);
  }
  return res;
}

// g . (m . v) for a raising g: with m = a m', use g a = a g + [g,a]; the
// bracket dispatches on the kind of each descendant.
UEAElement VermaModule::raise(int g, const Monomial& m) {
  auto it = raise_memo_.find({g, m});
  if (it != raise_memo_.end()) return it->second;
  UEAElement res;
  int a = first_letter(m);
  if (a >= 0) {
    Monomial m2 = m;
    m2[a] -= 1;
    UEAElement inner = raise(g, m2);
    for (const auto& [mi, ci] : inner.term) {
      UEAElement t = mul_lowering(a, mi);
      for (const auto& [mj, cj] : t.term) res.add(mj, ci * cj);
    }
    for (const auto& [h, c] : gb_.bracket[g][a]) {
      switch (gb_.gen[h].kind) {
        case Generator::lowering: {
          UEAElement t = mul_lowering(h, m2);
          for (const auto& [mj, cj] : t.term) res.add(mj, c * cj);
          break;
        }
        case Generator::cartan:
          res.add(m2, c * cartan_eigenvalue(h, m2));
          break;
        case Generator::raising: {
          UEAElement t = raise(h, m2);
          for (const auto& [mj, cj] : t.term) res.add(mj, c * cj);
          break;
        }
      }
    }
  }
  raise_memo_[{g, m}] = res;
  return res;
}

UEAElement VermaModule::act(int g, const UEAElement& x) {
  if (g < 0 || g >= gb_.size()) throw std::invalid_argument("unknown generator index");
  UEAElement res;
  switch (gb_.gen[g].kind) {
    case Generator::lowering:
      res = mul_lowering(g, x);
      break;
    case Generator::cartan:
      for (const auto& [m, c] : x.term) res.add(m, c * cartan_eigenvalue(g, m));
      break;
    case Generator::raising:
      for (const auto& [m, c] : x.term) {
        UEAElement t = raise(g, m);
        for (const auto& [mj, cj] : t.term) res.add(mj, c * cj);
      }
      break;
  }
  return res;
}

UEAElement VermaModule::act_word(const Word& w, const UEAElement& x) {
  UEAElement e = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) e = act(*it, e);
  return e;
}

// S(x, y): apply eta(x) to y . v and read the v-coefficient.  For the PBW
// word x = g_0^{a_0} ... g_L^{a_L}, eta(x) = eta(g_L)^{a_L} ... eta(g_0)^{a_0}
// acts with eta(g_0) first; eta sends a lowering to its raising partner with
// a minus sign on noncompact roots.
Rational VermaModule::shapovalov(const UEAElement& x, const UEAElement& y) {
  Rational S(0);
  const Monomial empty(gb_.n_lowering, 0);
  for (const auto& [mx, cx] : x.term) {
    UEAElement e = y;
    int sign = 1;
    for (int g = 0; g < gb_.n_lowering && !e.is_zero(); ++g)
      for (int k = 0; k < mx[g] && !e.is_zero(); ++k) {
        if (gb_.gen[g].noncompact) sign = -sign;
        e = act(gb_.gen[g].partner, e);
      }
    auto it = e.term.find(empty);
    if (it != e.term.end()) S += cx * (sign > 0 ? it->second : -it->second);
  }
  return S;
}

// ---- Gram blocks ----

namespace {

void enumerate_monomials(int pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (pos == static_cast<int>(cur.size())) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    enumerate_monomials(pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

GramReport gram(const GeneratorBasis& gb, const Vec& Lambda, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  std::vector<Monomial> all;
  Monomial cur(gb.n_lowering, 0);
  enumerate_monomials(0, max_degree, cur, all);

  std::map<Vec, std::vector<Monomial>> groups;
  for (const auto& m : all) groups[monomial_offset(gb, m)].push_back(m);

  VermaModule mod(gb, Lambda);
  GramReport rep;
  rep.algebra = gb.spec;
  rep.highest_weight = Lambda;
  rep.degree = max_degree;
  for (auto& [off, basis] : groups) {
    std::sort(basis.begin(), basis.end());
    GramBlock b;
    b.offset = off;
    b.basis = basis;
    const int k = static_cast<int>(basis.size());
    b.gram = Mat(k, Vec(k, Rational(0)));
    std::vector<UEAElement> single(k);
    for (int i = 0; i < k; ++i) single[i].add(basis[i], Rational(1));
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) b.gram[i][j] = b.gram[j][i] = mod.shapovalov(single[i], single[j]);
    b.inertia = inertia(b.gram);
    if (b.inertia.negative > 0) rep.positive_semidefinite = false;
    rep.blocks.push_back(std::move(b));
  }
  return rep;
}

std::string GramReport::to_text(const GeneratorBasis& gb) const {
  std::ostringstream o;
  o << "algebra:  " << algebra.name() << "\n";
  o << "weight:   " << vec_str(highest_weight) << "\n";
  o << "degree:   " << degree << "\n";
  for (const auto& b : blocks) {
    o << "block offset " << vec_str(b.offset) << "  dim " << b.basis.size() << "  inertia (+"
      << b.inertia.positive << ", 0:" << b.inertia.zero << ", -" << b.inertia.negative << ")\n";
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
      o << "  " << monomial_str(gb, b.basis[i]) << ":";
      for (const auto& v : b.gram[i]) o << "  " << v.str();
      o << "\n";
    }
  }
  o << "positive semidefinite: " << (positive_semidefinite ? "yes" : "no") << "\n";
  return o.str();
}

std::string GramReport::to_json(const GeneratorBasis& gb) const {
  nlohmann::ordered_json j;
  j["algebra"] = algebra.name();
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (const auto& x : highest_weight) w.push_back(x.str());
  j["weight"] = w;
  j["degree"] = degree;
  j["positive_semidefinite"] = positive_semidefinite;
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : blocks) {
    nlohmann::ordered_json jb;
    nlohmann::ordered_json off = nlohmann::ordered_json::array();
    for (const auto& x : b.offset) off.push_back(x.str());
    jb["offset"] = off;
    jb["basis"] = nlohmann::ordered_json::array();
    for (const auto& m : b.basis) jb["basis"].push_back(monomial_str(gb, m));
    jb["gram"] = nlohmann::ordered_json::array();
    for (const auto& row : b.gram) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& v : row) r.push_back(v.str());
      jb["gram"].push_back(r);
    }
    jb["inertia"] = {{"positive", b.inertia.positive},
                     {"zero", b.inertia.zero},
                     {"negative", b.inertia.negative}};
    j["blocks"].push_back(jb);
  }
  return j.dump(2);
}

// ---- extremal vectors ----

ExtremalCheck extremal_check(const GeneratorBasis& gb, const Vec& Lambda, const UEAElement& y) {
  if (y.is_zero()) throw std::invalid_argument("extremal_check: zero vector");
  if (static_cast<int>(Lambda.size()) != gb.n)
    throw std::invalid_argument("highest weight has wrong coordinate rank");
  Vec off = monomial_offset(gb, y.term.begin()->first);
  for (const auto& [m, c] : y.term)
    if (monomial_offset(gb, m) != off)
      throw std::invalid_argument("extremal_check: vector is not weight-homogeneous");
  VermaModule mod(gb, Lambda);
  ExtremalCheck r;
  r.weight = vec_sub(Lambda, off);
  r.extremal = true;
  for (int g = gb.raising_begin(); g < gb.size() && r.extremal; ++g)
    r.extremal = mod.act(g, y).is_zero();
  return r;
}

namespace {

std::vector<Vec> series_simples(const GeneratorBasis& gb) {
  std::vector<Vec> s;
  for (int i = 1; i < gb.n; ++i) s.push_back(coord_weight(gb.n, {{i, 1}, {i + 1, -1}}));
  switch (gb.series) {
    case Series::gl:
      break;
    case Series::so_odd_dim:
      s.push_back(coord_weight(gb.n, {{gb.n, 1}}));
      break;
    case Series::sp_even_dim:
      s.push_back(coord_weight(gb.n, {{gb.n, 2}}));
      break;
    case Series::so_even_dim:
      s.push_back(coord_weight(gb.n, {{gb.n - 1, 1}, {gb.n, 1}}));
      break;
  }
  return s;
}

// Nonnegative-integer decomposition over the series' simple roots; nullopt
// when the vector is not a sum of positive roots (empty weight space).
std::optional<std::vector<long long>> simple_decomposition(const std::vector<Vec>& simples,
                                                           const Vec& v) {
  const int dim = static_cast<int>(v.size());
  Mat A(dim, Vec(simples.size(), Rational(0)));
  for (int r = 0; r < dim; ++r)
    for (std::size_t k = 0; k < simples.size(); ++k) A[r][k] = simples[k][r];
  auto c = solve(A, v);
  if (!c) return std::nullopt;
  std::vector<long long> out;
  for (const auto& x : *c) {
    if (!x.is_nonneg_integer()) return std::nullopt;
    out.push_back(static_cast<long long>(x.num()));
  }
  return out;
}

void enumerate_offset_monomials(const GeneratorBasis& gb, const std::vector<long long>& root_height,
                                int g, Vec remaining, long long remaining_height, Monomial& cur,
                                std::vector<Monomial>& out) {
  if (g == gb.n_lowering) {
    if (is_zero_vec(remaining)) out.push_back(cur);
    return;
  }
  const Vec root = vec_scale(Rational(-1), gb.gen[g].weight);
  for (int e = 0;; ++e) {
    if (static_cast<long long>(e) * root_height[g] > remaining_height) break;
    cur[g] = e;
    enumerate_offset_monomials(gb, root_height, g + 1,
                               vec_sub(remaining, vec_scale(Rational(e), root)),
                               remaining_height - static_cast<long long>(e) * root_height[g], cur,
                               out);
  }
  cur[g] = 0;
}

}  // namespace

std::vector<UEAElement> extremal_search(const GeneratorBasis& gb, const Vec& Lambda,
                                        const Vec& target) {
  if (static_cast<int>(Lambda.size()) != gb.n || static_cast<int>(target.size()) != gb.n)
    throw std::invalid_argument("weight has wrong coordinate rank");
  const Vec off = vec_sub(Lambda, target);
  const std::vector<Vec> simples = series_simples(gb);
  auto decomp = simple_decomposition(simples, off);
  if (!decomp) throw std::invalid_argument("empty weight space at the target weight");
  long long total_height = 0;
  for (long long c : decomp.value()) total_height += c;

  std::vector<long long> root_height(gb.n_lowering, 0);
  for (int g = 0; g < gb.n_lowering; ++g) {
    auto d = simple_decomposition(simples, vec_scale(Rational(-1), gb.gen[g].weight));
    if (!d) throw std::logic_error("positive root fails to decompose over the simples");
    for (long long c : d.value()) root_height[g] += c;
  }

  std::vector<Monomial> basis;
  Monomial cur(gb.n_lowering, 0);
  enumerate_offset_monomials(gb, root_height, 0, off, total_height, cur, basis);
  if (basis.empty()) throw std::invalid_argument("empty weight space at the target weight");
  std::sort(basis.begin(), basis.end());

  VermaModule mod(gb, Lambda);
  std::map<std::pair<int, Monomial>, int> row_of;
  std::vector<std::map<int, Rational>> cols(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    UEAElement yj;
    yj.add(basis[j], Rational(1));
    for (int g = gb.raising_begin(); g < gb.size(); ++g) {
      UEAElement img = mod.act(g, yj);
      for (const auto& [m, c] : img.term) {
        auto key = std::make_pair(g, m);
        auto it = row_of.find(key);
        if (it == row_of.end()) it = row_of.emplace(key, static_cast<int>(row_of.size())).first;
        cols[j][it->second] = c;
      }
    }
  }
  Mat A(row_of.size(), Vec(basis.size(), Rational(0)));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [r, c] : cols[j]) A[r][j] = c;

  std::vector<Vec> null =
      row_of.empty() ? std::vector<Vec>() : nullspace(A);
  if (row_of.empty())
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Vec e(basis.size(), Rational(0));
      e[j] = Rational(1);
      null.push_back(std::move(e));
    }

  auto gcd128 = [](int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  std::vector<UEAElement> out;
  for (auto& v : null) {
    int128 num_gcd = 0, den_lcm = 1;
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      num_gcd = gcd128(num_gcd, x.num());
      den_lcm = den_lcm / gcd128(den_lcm, x.den()) * x.den();
    }
    if (num_gcd == 0) continue;
    Rational scale = Rational::make(den_lcm, num_gcd);
    int lead = 0;
    while (v[lead].is_zero()) ++lead;
    if ((v[lead] * scale).sign() < 0) scale = -scale;
    UEAElement e;
    for (std::size_t j = 0; j < basis.size(); ++j) e.add(basis[j], v[j] * scale);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace uhw
