#include "uhw/jakobsen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uhw {

int JakobsenDiagram::node_index(const Vec& alpha) const {
  for (std::size_t i = 0; i < node.size(); ++i)
    if (node[i] == alpha) return static_cast<int>(i);
  return -1;
}

JakobsenDiagram diagram(const RootSystem& rs) {
  JakobsenDiagram d;
  for (std::size_t i = 0; i < rs.positive.size(); ++i) {
    if (!rs.noncompact[i]) continue;
    d.node.push_back(rs.positive[i]);
    d.height.push_back(rs.height[i]);
  }
  for (std::size_t a = 0; a < d.node.size(); ++a) {
    for (std::size_t k = 0; k < rs.compact_simple_index.size(); ++k) {
      Vec up = vec_add(d.node[a], rs.simple[rs.compact_simple_index[k]]);
      int b = d.node_index(up);
      if (b >= 0) d.edges.push_back({static_cast<int>(a), b, static_cast<int>(k)});
    }
  }
  const std::size_t n = d.node.size();
  d.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) d.leq[i][i] = true;
  for (const auto& e : d.edges) d.leq[e.from][e.to] = true;
  for (std::size_t k = 0; k < n; ++k)  // transitive closure
    for (std::size_t i = 0; i < n; ++i)
      if (d.leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (d.leq[k][j]) d.leq[i][j] = true;
  return d;
}

std::string JakobsenDiagram::render(const RootSystem& rs) const {
  std::ostringstream out;
  out << "noncompact positive roots of " << rs.spec.name() << " (H = chain height)\n";
  int maxh = 0;
  for (int h : height) maxh = std::max(maxh, h);
  for (int h = 1; h <= maxh; ++h) {
    bool any = false;
    for (std::size_t i = 0; i < node.size(); ++i)
      if (height[i] == h) any = true;
    if (!any) continue;
    out << "H=" << h << ":";
    for (std::size_t i = 0; i < node.size(); ++i)
      if (height[i] == h) out << "  " << vec_str(node[i]);
    out << "\n";
  }
  for (std::size_t i = 0; i < node.size(); ++i) {
    for (const auto& e : edges) {
      if (e.from != static_cast<int>(i)) continue;
      out << "  " << vec_str(node[e.from]) << " --mu" << (e.label + 1) << "--> "
          << vec_str(node[e.to]) << "\n";
    }
  }
  return out.str();
}

std::pair<std::vector<Vec>, std::vector<Vec>> cones(const RootSystem& rs, const Vec& alpha) {
  JakobsenDiagram d = diagram(rs);
  int i = d.node_index(alpha);
  if (i < 0) throw std::invalid_argument("cones: not a noncompact positive root");
  std::vector<Vec> fwd, bwd;
  for (std::size_t j = 0; j < d.node.size(); ++j) {
    if (d.leq[i][j]) fwd.push_back(d.node[j]);
    if (d.leq[j][i]) bwd.push_back(d.node[j]);
  }
  return {fwd, bwd};
}

SplitCollection split_collection(const std::vector<Vec>& noncompact_positive,
                                 const std::vector<int>& height) {
  SplitCollection sc;
  std::vector<std::size_t> order(noncompact_positive.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return lex_less(noncompact_positive[a], noncompact_positive[b]);
  });
  while (true) {
    const Vec* next = nullptr;
    for (auto idx : order) {
      const Vec& cand = noncompact_positive[idx];
      bool ok = true;
      for (const auto& g : sc.gamma)
        if (!dot(cand, g).is_zero()) {
          ok = false;
          break;
        }
      if (ok) {
        next = &cand;
        break;
      }
    }
    if (!next) break;
    sc.gamma.push_back(*next);
  }
  return sc;
}

SplitCollection split_rank(const RootSystem& rs) {
  std::vector<Vec> nc;
  std::vector<int> h;
  for (std::size_t i = 0; i < rs.positive.size(); ++i) {
    if (!rs.noncompact[i]) continue;
    nc.push_back(rs.positive[i]);
    h.push_back(rs.height[i]);
  }
  return split_collection(nc, h);
}

Rational lambda_s(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::su: return -1;
    case Family::sp: return Rational(-1, 2);
    case Family::so_star: return -2;
    case Family::so_odd: return Rational(3, 2) - spec.n;   // -n + 3/2
    case Family::so_even: return Rational(2) - spec.n;     // -n + 2
    case Family::e6: return -3;
    case Family::e7: return -4;
  }
  throw std::invalid_argument("unknown family");
}

Rational lambda_s_derived(const RootSystem& rs) {
  SplitCollection sc = split_rank(rs);
  if (sc.t() < 2)
    throw std::invalid_argument("lambda_s_derived needs split rank >= 2, " + rs.spec.name() +
                                " has t = " + std::to_string(sc.t()));
  // target projection (gamma_2 - gamma_1)/2; the gammas are mutually orthogonal
  Vec target = vec_scale(Rational(1, 2), vec_sub(sc.gamma[1], sc.gamma[0]));
  long long count = 0;
  for (std::size_t i = 0; i < rs.positive.size(); ++i) {
    if (rs.noncompact[i]) continue;
    Vec proj(rs.dim, Rational(0));
    for (const auto& g : sc.gamma)
      proj = vec_add(proj, vec_scale(dot(rs.positive[i], g) / dot(g, g), g));
    if (proj == target) ++count;
  }
  return Rational(-count, 2);
}

ReductionWitness last_place(const RootSystem& rs, const Vec& Lambda0) {
  if (static_cast<int>(Lambda0.size()) != rs.dim)
    throw std::invalid_argument("weight has wrong dimension for " + rs.spec.name());
  for (auto ci : rs.compact_simple_index)
    if (!pairing(Lambda0, rs.simple[ci]).is_nonneg_integer())
      throw std::invalid_argument("last_place needs a dominant integral compact part");
  if (!pairing(Lambda0, rs.gamma_r).is_zero())
    throw std::invalid_argument("last_place needs <Lambda0, gamma_r> = 0");

  ReductionWitness w;
  bool have = false;
  for (std::size_t i = 0; i < rs.positive.size(); ++i) {
    if (!rs.noncompact[i]) continue;
    const Vec& alpha = rs.positive[i];
    bool candidate = true;
    for (auto ci : rs.compact_simple_index) {
      const Vec& mu = rs.simple[ci];
      Vec down = vec_sub(alpha, mu);
      int di = rs.positive_index(down);
      if (di < 0 || !rs.noncompact[di]) continue;  // no constraint from this mu
      Rational need = pairing(alpha, mu);
      if (need < Rational(1)) need = 1;
      if (pairing(Lambda0, mu) < need) {
        candidate = false;
        break;
      }
    }
    if (!candidate) continue;
    Rational la = (Rational(1) - pairing(Lambda0, alpha) - pairing(rs.half_sum, alpha)) /
                  pairing(rs.epsilon, alpha);
    w.candidates.emplace_back(alpha, la);
    // positives are (height, lex) sorted, so the first strict minimum wins ties
    if (!have || la < w.lambda0) {
      w.lambda0 = la;
      w.alpha0 = alpha;
      have = true;
    }
  }
  if (!have) throw std::logic_error("no reduction candidates (beta is always one)");
  return w;
}

Vec missing_weight(const RootSystem& rs, const Vec& Lambda0, const ReductionWitness& w) {
  if (!rs.is_positive_root(w.alpha0)) throw std::invalid_argument("witness root is not positive");
  Vec Lambda = vec_add(Lambda0, vec_scale(w.lambda0, rs.epsilon));
  return vec_sub(Lambda, w.alpha0);
}

}  // namespace uhw
