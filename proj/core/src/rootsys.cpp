#include "uhw/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace uhw {

namespace {

Vec unit(int dim, int i) {
  Vec v(dim, Rational(0));
  v[i] = 1;
  return v;
}

Vec e_diff(int dim, int i, int j) {  // e_i - e_j, 0-based
  Vec v(dim, Rational(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

Vec e_sum(int dim, int i, int j) {
  Vec v(dim, Rational(0));
  v[i] = 1;
  v[j] = 1;
  return v;
}

struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

[[noreturn]] void build_bug(const std::string& what) {
  throw std::logic_error("root system invariant violated: " + what);
}

}  // namespace

AlgebraSpec AlgebraSpec::so_star(int two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("so*(m) needs even m");
  return {Family::so_star, 0, 0, two_n / 2};
}

AlgebraSpec AlgebraSpec::so(int m) {
  if (m % 2 == 1) return {Family::so_odd, 0, 0, (m + 1) / 2};
  return {Family::so_even, 0, 0, (m + 2) / 2};
}

void AlgebraSpec::validate() const {
  switch (family) {
    case Family::su:
      if (p < 1 || q < 1) throw std::invalid_argument("su(p,q) needs p,q >= 1");
      return;
    case Family::sp:
      if (n < 2) throw std::invalid_argument("sp(n,R) needs n >= 2 (sp(1,R) is su(1,1))");
      return;
    case Family::so_star:
      if (n < 3) throw std::invalid_argument("so*(2n) needs n >= 3 (so*(4) is not simple)");
      return;
    case Family::so_odd:
      if (n < 2) throw std::invalid_argument("so(2n-1,2) needs n >= 2");
      return;
    case Family::so_even:
      if (n < 3) throw std::invalid_argument("so(2n-2,2) needs n >= 3 (so(2,2) is not simple)");
      return;
    case Family::e6:
    case Family::e7:
      return;
  }
  throw std::invalid_argument("unknown family");
}

int AlgebraSpec::ambient_dim() const {
  switch (family) {
    case Family::su: return p + q;
    case Family::sp:
    case Family::so_star:
    case Family::so_odd:
    case Family::so_even: return n;
    case Family::e6:
    case Family::e7: return 8;
  }
  return 0;
}

int AlgebraSpec::rank() const {
  switch (family) {
    case Family::su: return p + q - 1;
    case Family::sp:
    case Family::so_star:
    case Family::so_odd:
    case Family::so_even: return n;
    case Family::e6: return 6;
    case Family::e7: return 7;
  }
  return 0;
}

std::string AlgebraSpec::name() const {
  switch (family) {
    case Family::su: return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Family::sp: return "sp(" + std::to_string(n) + ",R)";
    case Family::so_star: return "so*(" + std::to_string(2 * n) + ")";
    case Family::so_odd: return "so(" + std::to_string(2 * n - 1) + ",2)";
    case Family::so_even: return "so(" + std::to_string(2 * n - 2) + ",2)";
    case Family::e6: return "e6";
    case Family::e7: return "e7";
  }
  return "?";
}

AlgebraSpec AlgebraSpec::parse(const std::vector<std::string>& tokens) {
  auto to_int = [](const std::string& s) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + s + "' in algebra");
    }
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "' in algebra");
    return v;
  };
  if (tokens.empty()) throw std::invalid_argument("empty algebra");
  const std::string& f = tokens[0];
  auto need = [&](std::size_t k) {
    if (tokens.size() != k + 1)
      throw std::invalid_argument("algebra '" + f + "' takes " + std::to_string(k) + " integer argument(s)");
  };
  AlgebraSpec s;
  if (f == "su") {
    need(2);
    s = AlgebraSpec::su(to_int(tokens[1]), to_int(tokens[2]));
  } else if (f == "sp") {
    need(1);
    s = AlgebraSpec::sp(to_int(tokens[1]));
  } else if (f == "so") {
    need(2);
    if (to_int(tokens[2]) != 2) throw std::invalid_argument("so(m,k) supported only for k = 2");
    s = AlgebraSpec::so(to_int(tokens[1]));
  } else if (f == "sostar" || f == "so*") {
    need(1);
    s = AlgebraSpec::so_star(to_int(tokens[1]));
  } else if (f == "e6") {
    need(0);
    s = AlgebraSpec::e6();
  } else if (f == "e7") {
    need(0);
    s = AlgebraSpec::e7();
  } else {
    throw std::invalid_argument("unknown algebra family '" + f + "'");
  }
  s.validate();
  return s;
}

Rational pairing(const Vec& x, const Vec& y) {
  Rational yy = dot(y, y);
  if (yy.is_zero()) throw std::domain_error("pairing against the zero vector");
  return Rational(2) * dot(x, y) / yy;
}

std::vector<Vec> RootSystem::compact_simples() const {
  std::vector<Vec> out;
  for (auto i : compact_simple_index) out.push_back(simple[i]);
  return out;
}

std::vector<Vec> RootSystem::noncompact_positives() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < positive.size(); ++i)
    if (noncompact[i]) out.push_back(positive[i]);
  return out;
}

int RootSystem::positive_index(const Vec& v) const {
  for (std::size_t i = 0; i < positive.size(); ++i)
    if (positive[i] == v) return static_cast<int>(i);
  return -1;
}

bool RootSystem::is_positive_root(const Vec& v) const { return positive_index(v) >= 0; }

bool RootSystem::is_root(const Vec& v) const {
  if (is_positive_root(v)) return true;
  Vec neg = vec_scale(Rational(-1), v);
  return is_positive_root(neg);
}

RootSystem build(const AlgebraSpec& spec) {
  spec.validate();
  RootSystem rs;
  rs.spec = spec;
  const int d = spec.ambient_dim();
  rs.dim = d;

  switch (spec.family) {
    case Family::su: {
      for (int i = 0; i + 1 < d; ++i) rs.simple.push_back(e_diff(d, i, i + 1));
      rs.beta_index = spec.p - 1;
      break;
    }
    case Family::sp: {
      for (int i = 0; i + 1 < d; ++i) rs.simple.push_back(e_diff(d, i, i + 1));
      Vec last(d, Rational(0));
      last[d - 1] = 2;
      rs.simple.push_back(last);
      rs.beta_index = d - 1;
      break;
    }
    case Family::so_star:
    case Family::so_even: {
      for (int i = 0; i + 1 < d; ++i) rs.simple.push_back(e_diff(d, i, i + 1));
      rs.simple.push_back(e_sum(d, d - 2, d - 1));
      rs.beta_index = spec.family == Family::so_star ? d - 1 : 0;
      break;
    }
    case Family::so_odd: {
      for (int i = 0; i + 1 < d; ++i) rs.simple.push_back(e_diff(d, i, i + 1));
      rs.simple.push_back(unit(d, d - 1));
      rs.beta_index = 0;
      break;
    }
    case Family::e6:
    case Family::e7: {
      Vec a1(8, Rational(1, 2));
      for (int i = 1; i <= 6; ++i) a1[i] = Rational(-1, 2);
      rs.simple.push_back(a1);                 // (1,-1,-1,-1,-1,-1,-1,1)/2
      rs.simple.push_back(e_sum(8, 0, 1));     // e1+e2
      rs.simple.push_back(e_diff(8, 1, 0));    // e2-e1
      rs.simple.push_back(e_diff(8, 2, 1));
      rs.simple.push_back(e_diff(8, 3, 2));
      rs.simple.push_back(e_diff(8, 4, 3));
      if (spec.family == Family::e7) {
        rs.simple.push_back(e_diff(8, 5, 4));  // e6-e5
        rs.beta_index = 6;
      } else {
        rs.beta_index = 0;
      }
      break;
    }
  }
  for (std::size_t i = 0; i < rs.simple.size(); ++i)
    if (i != rs.beta_index) rs.compact_simple_index.push_back(i);

  // reflection closure of the simple roots gives the full root set
  std::set<Vec, LexLess> roots(rs.simple.begin(), rs.simple.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> snapshot(roots.begin(), roots.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        Vec r = vec_sub(b, vec_scale(pairing(b, a), a));
        if (roots.insert(r).second) grew = true;
      }
    }
  }

  // expansion over the simple basis; positives have all-nonnegative rows
  Mat A(d, Vec(rs.simple.size()));
  for (int r = 0; r < d; ++r)
    for (std::size_t c = 0; c < rs.simple.size(); ++c) A[r][c] = rs.simple[c][r];
  struct Pos {
    Vec root;
    std::vector<long long> coeff;
    int height;
  };
  std::vector<Pos> pos;
  for (const auto& r : roots) {
    auto sol = solve(A, r);
    if (!sol) build_bug("root outside simple span");
    bool nonneg = true, nonpos = true;
    int ht = 0;
    std::vector<long long> cc;
    for (const auto& c : *sol) {
      if (!c.is_integer()) build_bug("non-integral simple-root expansion");
      long long v = static_cast<long long>(c.num());
      cc.push_back(v);
      ht += static_cast<int>(v);
      nonneg &= v >= 0;
      nonpos &= v <= 0;
    }
    if (!nonneg && !nonpos) build_bug("root with mixed-sign expansion");
    if (nonneg) pos.push_back({r, std::move(cc), ht});
  }
  std::sort(pos.begin(), pos.end(), [](const Pos& a, const Pos& b) {
    if (a.height != b.height) return a.height < b.height;
    return lex_less(a.root, b.root);
  });

  long long expected_pos = 0;
  switch (spec.family) {
    case Family::su: expected_pos = 1LL * d * (d - 1) / 2; break;
    case Family::sp: expected_pos = 1LL * d * d; break;
    case Family::so_odd: expected_pos = 1LL * d * d; break;
    case Family::so_star:
    case Family::so_even: expected_pos = 1LL * d * (d - 1); break;
    case Family::e6: expected_pos = 36; break;
    case Family::e7: expected_pos = 63; break;
  }
  if (static_cast<long long>(pos.size()) != expected_pos) build_bug("positive root count");
  if (roots.size() != 2 * pos.size()) build_bug("total root count");

  for (auto& pr : pos) {
    long long bc = pr.coeff[rs.beta_index];
    if (bc != 0 && bc != 1) build_bug("beta coefficient outside {0,1}");
    rs.positive.push_back(pr.root);
    rs.coeff.push_back(pr.coeff);
    rs.height.push_back(pr.height);
    rs.noncompact.push_back(bc == 1);
  }

  // unique highest root, dominating every other root coefficient-wise
  if (pos.size() >= 2 && pos[pos.size() - 2].height == pos.back().height)
    build_bug("highest root not unique");
  rs.gamma_r = rs.positive.back();
  const auto& gc = rs.coeff.back();
  for (const auto& cc : rs.coeff)
    for (std::size_t k = 0; k < cc.size(); ++k)
      if (cc[k] > gc[k]) build_bug("highest root fails to dominate");
  if (!rs.noncompact.back()) build_bug("highest root is compact");

  rs.half_sum = Vec(d, Rational(0));
  for (const auto& r : rs.positive) rs.half_sum = vec_add(rs.half_sum, r);
  rs.half_sum = vec_scale(Rational(1, 2), rs.half_sum);
  for (const auto& s : rs.simple)
    if (pairing(rs.half_sum, s) != Rational(1)) build_bug("<R,mu> != 1 at a simple root");

  // epsilon: in span(simple), orthogonal to compact simples, <eps,gamma_r>=1
  {
    const std::size_t rk = rs.simple.size();
    Mat M(rk, Vec(rk));
    Vec b(rk, Rational(0));
    std::size_t row = 0;
    for (auto ci : rs.compact_simple_index) {
      for (std::size_t k = 0; k < rk; ++k) M[row][k] = dot(rs.simple[k], rs.simple[ci]);
      b[row] = 0;
      ++row;
    }
    for (std::size_t k = 0; k < rk; ++k) M[row][k] = dot(rs.simple[k], rs.gamma_r);
    b[row] = dot(rs.gamma_r, rs.gamma_r) / Rational(2);
    if (rank(M) != static_cast<int>(rk)) build_bug("epsilon system is singular");
    auto sol = solve(M, b);
    if (!sol) build_bug("epsilon system inconsistent");
    rs.epsilon = Vec(d, Rational(0));
    for (std::size_t k = 0; k < rk; ++k)
      rs.epsilon = vec_add(rs.epsilon, vec_scale((*sol)[k], rs.simple[k]));
  }
  for (auto ci : rs.compact_simple_index)
    if (!pairing(rs.epsilon, rs.simple[ci]).is_zero()) build_bug("epsilon not k-orthogonal");
  if (pairing(rs.epsilon, rs.gamma_r) != Rational(1)) build_bug("<epsilon,gamma_r> != 1");
  const Rational g2 = dot(rs.gamma_r, rs.gamma_r);
  for (std::size_t i = 0; i < rs.positive.size(); ++i)
    if (rs.noncompact[i] && pairing(rs.epsilon, rs.positive[i]) * dot(rs.positive[i], rs.positive[i]) != g2)
      build_bug("<epsilon,alpha>(alpha,alpha) != (gamma_r,gamma_r)");

  return rs;
}

WeightDecomposition decompose(const RootSystem& rs, const Vec& Lambda) {
  if (static_cast<int>(Lambda.size()) != rs.dim)
    throw std::invalid_argument("weight has wrong dimension for " + rs.spec.name());
  WeightDecomposition w;
  w.lambda = pairing(Lambda, rs.gamma_r);
  w.lambda0 = vec_sub(Lambda, vec_scale(w.lambda, rs.epsilon));
  w.z = pairing(vec_add(Lambda, rs.half_sum), rs.gamma_r);
  w.pi0 = vec_sub(Lambda, vec_scale(w.z, rs.epsilon));
  w.dominant_integral = true;
  for (auto ci : rs.compact_simple_index)
    w.dominant_integral &= pairing(w.lambda0, rs.simple[ci]).is_nonneg_integer();
  return w;
}

Vec weight_from_pattern(const RootSystem& rs, const std::vector<Rational>& pattern) {
  if (pattern.size() != rs.compact_simple_index.size())
    throw std::invalid_argument("pattern needs one value per compact simple root of " + rs.spec.name());
  const std::size_t rk = rs.simple.size();
  Mat M(rk, Vec(rk));
  Vec b(rk, Rational(0));
  std::size_t row = 0;
  for (std::size_t e = 0; e < pattern.size(); ++e, ++row) {
    const Vec& mu = rs.simple[rs.compact_simple_index[e]];
    for (std::size_t k = 0; k < rk; ++k)
      M[row][k] = Rational(2) * dot(rs.simple[k], mu) / dot(mu, mu);
    b[row] = pattern[e];
  }
  for (std::size_t k = 0; k < rk; ++k)
    M[row][k] = Rational(2) * dot(rs.simple[k], rs.gamma_r) / dot(rs.gamma_r, rs.gamma_r);
  b[row] = 0;
  auto sol = solve(M, b);
  if (!sol) throw std::logic_error("pattern system inconsistent");
  Vec w(rs.dim, Rational(0));
  for (std::size_t k = 0; k < rk; ++k) w = vec_add(w, vec_scale((*sol)[k], rs.simple[k]));
  return w;
}

namespace {

// Dynkin-graph shape recognition for an inherited simple system.
void classify_simples(const RootSystem& ambient, const std::vector<Vec>& simples,
                      const std::vector<bool>& nc, std::string* cartan, std::string* hermitian) {
  const int r = static_cast<int>(simples.size());
  int nc_at = -1;
  for (int i = 0; i < r; ++i) {
    if (nc[i]) {
      if (nc_at >= 0) throw std::logic_error("subsystem with two noncompact simple roots");
      nc_at = i;
    }
  }
  if (nc_at < 0) throw std::logic_error("subsystem with no noncompact simple root");

  if (r == 1) {
    *cartan = "A1";
    *hermitian = "su(1,1)";
    return;
  }

  std::vector<std::vector<int>> adj(r);
  int doubles = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      Rational m = pairing(simples[i], simples[j]) * pairing(simples[j], simples[i]);
      if (m.is_zero()) continue;
      if (m == Rational(1)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      } else if (m == Rational(2)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++doubles;
      } else {
        throw std::logic_error("triple bond in subsystem diagram");
      }
    }
  }

  auto su_name = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return "su(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  int max_deg = 0, branch = -1;
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(adj[i].size()) > max_deg) max_deg = static_cast<int>(adj[i].size());
    if (adj[i].size() == 3) branch = i;
  }
  if (max_deg > 3) throw std::logic_error("subsystem diagram with degree-4 node");

  if (doubles == 0 && max_deg <= 2) {  // chain, simply laced: A_r
    int start = -1;
    for (int i = 0; i < r && start < 0; ++i)
      if (adj[i].size() <= 1) start = i;
    std::vector<int> order{start};
    std::vector<bool> seen(r, false);
    seen[start] = true;
    while (static_cast<int>(order.size()) < r) {
      bool moved = false;
      for (int nb : adj[order.back()]) {
        if (!seen[nb]) {
          order.push_back(nb);
          seen[nb] = true;
          moved = true;
          break;
        }
      }
      if (!moved) throw std::logic_error("disconnected subsystem diagram");
    }
    int k = 0;
    while (order[k] != nc_at) ++k;
    *cartan = "A" + std::to_string(r);
    *hermitian = su_name(k + 1, r - k);
    return;
  }

  if (doubles == 1 && max_deg <= 2) {  // B_r or C_r chain
    *cartan = "";
    int shorts = 0;
    Rational maxlen = dot(simples[0], simples[0]);
    for (int i = 1; i < r; ++i) maxlen = std::max(maxlen, dot(simples[i], simples[i]),
                                                  [](const Rational& a, const Rational& b){ return a < b; });
    for (int i = 0; i < r; ++i)
      if (dot(simples[i], simples[i]) < maxlen) ++shorts;
    bool nc_terminal = adj[nc_at].size() == 1;
    bool nc_long = dot(simples[nc_at], simples[nc_at]) == maxlen;
    if (!nc_terminal || !nc_long) throw std::logic_error("unexpected noncompact node in B/C chain");
    if (r == 2) {
      // B2 = C2; so(3,2) and sp(2,R) are the same algebra, pick by ambient habit
      *cartan = "B2";
      *hermitian = ambient.spec.family == Family::so_odd ? "so(3,2)" : "sp(2,R)";
      return;
    }
    if (shorts == 1) {
      *cartan = "B" + std::to_string(r);
      *hermitian = "so(" + std::to_string(2 * r - 1) + ",2)";
    } else if (shorts == r - 1) {
      *cartan = "C" + std::to_string(r);
      *hermitian = "sp(" + std::to_string(r) + ",R)";
    } else {
      throw std::logic_error("unrecognized two-length chain");
    }
    return;
  }

  if (doubles == 0 && branch >= 0) {  // D_r, E6 or E7
    std::vector<std::vector<int>> arms;
    for (int nb : adj[branch]) {
      std::vector<int> arm{nb};
      int prev = branch;
      while (adj[arm.back()].size() == 2) {
        int cur = arm.back();
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        arm.push_back(nxt);
      }
      arms.push_back(arm);
    }
    std::sort(arms.begin(), arms.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    auto len = [&](int i) { return static_cast<int>(arms[i].size()); };
    if (arms.size() != 3) throw std::logic_error("branch node of unexpected degree");
    if (len(0) == 1 && len(1) == 2 && len(2) == 2) {
      *cartan = "E6";
      if (nc_at != arms[1].back() && nc_at != arms[2].back())
        throw std::logic_error("unexpected noncompact node in E6");
      *hermitian = "e6";
      return;
    }
    if (len(0) == 1 && len(1) == 2 && len(2) == 3) {
      *cartan = "E7";
      if (nc_at != arms[2].back()) throw std::logic_error("unexpected noncompact node in E7");
      *hermitian = "e7";
      return;
    }
    if (len(0) == 1 && len(1) == 1) {  // D_r, tail arm has length r-3
      *cartan = "D" + std::to_string(r);
      bool at_fork = nc_at == arms[0][0] || nc_at == arms[1][0];
      bool at_tail = nc_at == arms[2].back();
      if (r == 4) {  // all three tips equivalent; so*(8) and so(6,2) coincide
        if (!at_fork && !at_tail) throw std::logic_error("unexpected noncompact node in D4");
        *hermitian = ambient.spec.family == Family::so_star ? "so*(8)" : "so(6,2)";
        return;
      }
      if (at_tail && len(2) == r - 2 - 1) {
        *hermitian = "so(" + std::to_string(2 * r - 2) + ",2)";
        return;
      }
      if (at_fork) {
        *hermitian = "so*(" + std::to_string(2 * r) + ")";
        return;
      }
      throw std::logic_error("unexpected noncompact node in D chain");
    }
    throw std::logic_error("unrecognized branched diagram");
  }
  throw std::logic_error("unrecognized subsystem diagram");
}

}  // namespace

bool Subsystem::contains(const Vec& root) const {
  for (const auto& p : positive)
    if (p == root) return true;
  Vec neg = vec_scale(Rational(-1), root);
  for (const auto& p : positive)
    if (p == neg) return true;
  return false;
}

std::vector<Vec> Subsystem::noncompact_positives() const {
  // noncompactness is inherited from the ambient algebra via the simple flags:
  // a member is noncompact iff its expansion uses the noncompact simple once.
  // Heights were computed from the same expansion, so recompute cheaply here.
  std::vector<Vec> out;
  Mat A(positive.empty() ? 0 : positive[0].size(), Vec(simple.size()));
  if (!positive.empty()) {
    for (std::size_t r = 0; r < positive[0].size(); ++r)
      for (std::size_t c = 0; c < simple.size(); ++c) A[r][c] = simple[c][r];
  }
  for (const auto& p : positive) {
    auto sol = solve(A, p);
    if (!sol) throw std::logic_error("subsystem member outside simple span");
    Rational nc_coeff = 0;
    for (std::size_t k = 0; k < simple.size(); ++k)
      if (simple_noncompact[k]) nc_coeff += (*sol)[k];
    if (nc_coeff == Rational(1)) out.push_back(p);
  }
  return out;
}

Subsystem subsystem(const RootSystem& rs, const std::vector<Vec>& generators) {
  std::set<Vec, LexLess> S;
  for (const auto& g : generators) {
    if (!rs.is_root(g)) throw std::invalid_argument("subsystem generator is not a root");
    S.insert(g);
    S.insert(vec_scale(Rational(-1), g));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> snap(S.begin(), S.end());
    for (const auto& a : snap)
      for (const auto& b : snap) {
        Vec r = vec_sub(b, vec_scale(pairing(b, a), a));
        if (S.insert(r).second) grew = true;
      }
  }

  // irreducible component of gamma_r via the non-orthogonality graph
  std::vector<Vec> members;
  for (std::size_t i = 0; i < rs.positive.size(); ++i)
    if (S.count(rs.positive[i])) members.push_back(rs.positive[i]);
  int start = -1;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == rs.gamma_r) start = static_cast<int>(i);
  if (start < 0) throw std::invalid_argument("subsystem generators must reach gamma_r");
  std::vector<bool> in_comp(members.size(), false);
  std::vector<int> queue{start};
  in_comp[start] = true;
  while (!queue.empty()) {
    int cur = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (!in_comp[j] && !dot(members[cur], members[j]).is_zero()) {
        in_comp[j] = true;
        queue.push_back(static_cast<int>(j));
      }
    }
  }

  Subsystem sub;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (in_comp[i]) sub.positive.push_back(members[i]);
  // `members` came from rs.positive, which is already (height, lex) sorted

  // indecomposables of the inherited positive system
  auto member_of = [&](const Vec& v) {
    for (const auto& m : sub.positive)
      if (m == v) return true;
    return false;
  };
  for (const auto& p : sub.positive) {
    bool decomposable = false;
    for (const auto& a : sub.positive) {
      if (decomposable) break;
      Vec rem = vec_sub(p, a);
      if (!is_zero_vec(rem) && member_of(rem)) decomposable = true;
    }
    if (!decomposable) sub.simple.push_back(p);
  }
  for (const auto& s : sub.simple) {
    int idx = rs.positive_index(s);
    sub.simple_noncompact.push_back(idx >= 0 && rs.noncompact[idx]);
  }

  // heights inside the subsystem
  const std::size_t d = rs.dim;
  Mat A(d, Vec(sub.simple.size()));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < sub.simple.size(); ++c) A[r][c] = sub.simple[c][r];
  for (const auto& p : sub.positive) {
    auto sol = solve(A, p);
    if (!sol) throw std::logic_error("subsystem member outside simple span");
    Rational h = 0;
    for (const auto& c : *sol) {
      if (!c.is_nonneg_integer()) throw std::logic_error("subsystem expansion not nonneg-integral");
      h += c;
    }
    sub.height.push_back(static_cast<int>(h.num()));
  }

  classify_simples(rs, sub.simple, sub.simple_noncompact, &sub.cartan_type, &sub.hermitian_type);
  return sub;
}

}  // namespace uhw
