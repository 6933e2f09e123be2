#include "uhw/ehw.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace uhw {

namespace {

void require_pi0(const RootSystem& rs, const Vec& Pi0) {
  if (static_cast<int>(Pi0.size()) != rs.dim)
    throw std::invalid_argument("weight has wrong dimension for " + rs.spec.name());
  if (!pairing(vec_add(Pi0, rs.half_sum), rs.gamma_r).is_zero())
    throw std::invalid_argument("Pi0 must satisfy <Pi0 + R, gamma_r> = 0");
  for (auto ci : rs.compact_simple_index)
    if (!pairing(Pi0, rs.simple[ci]).is_nonneg_integer())
      throw std::invalid_argument("Pi0 must be dominant integral on compact simples");
}

std::vector<Vec> q_generators(const RootSystem& rs, const Vec& Pi0) {
  std::vector<Vec> gens{rs.gamma_r};
  for (std::size_t i = 0; i < rs.positive.size(); ++i)
    if (!rs.noncompact[i] && pairing(Pi0, rs.positive[i]).is_zero())
      gens.push_back(rs.positive[i]);
  return gens;
}

}  // namespace

bool UnitaritySet::contains_z(const Rational& z) const {
  if (z <= continuous_max) return true;
  for (const auto& d : discrete)
    if (z == d) return true;
  return false;
}

Subsystem q_system(const RootSystem& rs, const Vec& Pi0) {
  require_pi0(rs, Pi0);
  return subsystem(rs, q_generators(rs, Pi0));
}

Subsystem t_system(const RootSystem& rs, const Vec& Pi0) {
  require_pi0(rs, Pi0);
  Subsystem Q = subsystem(rs, q_generators(rs, Pi0));
  const Rational g2 = dot(rs.gamma_r, rs.gamma_r);
  std::vector<Vec> gens = q_generators(rs, Pi0);
  for (std::size_t i = 0; i < rs.positive.size(); ++i) {
    if (rs.noncompact[i]) continue;
    const Vec& mu = rs.positive[i];
    if (dot(mu, mu) >= g2) continue;                       // only short roots qualify
    if (pairing(Pi0, mu) != Rational(1)) continue;
    bool touches_q = false;
    for (const auto& rho : Q.positive)
      if (!dot(mu, rho).is_zero()) {
        touches_q = true;
        break;
      }
    if (touches_q) gens.push_back(mu);
  }
  return subsystem(rs, gens);
}

EHWConstants constants(const RootSystem& rs, const Vec& Pi0) {
  require_pi0(rs, Pi0);
  Subsystem Q = q_system(rs, Pi0);
  Subsystem T = t_system(rs, Pi0);

  auto compact_half_sum = [&](const Subsystem& sub) {
    Vec r(rs.dim, Rational(0));
    for (const auto& p : sub.positive) {
      int idx = rs.positive_index(p);
      if (idx >= 0 && !rs.noncompact[idx]) r = vec_add(r, p);
    }
    return vec_scale(Rational(1, 2), r);
  };

  EHWConstants c;
  c.q_type = Q.hermitian_type;
  c.t_type = T.hermitian_type;
  const bool q_equals_t = Q.positive == T.positive;
  if (rs.spec.family == Family::so_odd && !q_equals_t)
    c.B = Rational(1) + pairing(compact_half_sum(T), rs.gamma_r);
  else
    c.B = Rational(1) + pairing(vec_add(compact_half_sum(Q), compact_half_sum(T)), rs.gamma_r);
  c.C = -lambda_s(rs.spec);

  std::vector<Vec> nc = Q.noncompact_positives();
  std::vector<int> h;
  for (const auto& p : nc) {
    for (std::size_t k = 0; k < Q.positive.size(); ++k)
      if (Q.positive[k] == p) h.push_back(Q.height[k]);
  }
  c.q_split_rank = split_collection(nc, h).t();
  c.A = c.B - Rational(c.q_split_rank - 1) * c.C;
  return c;
}

UnitaritySet unitarizable_set(const RootSystem& rs, const Vec& Pi0) {
  EHWConstants c = constants(rs, Pi0);
  UnitaritySet s;
  s.continuous_max = c.A;
  Rational steps = (c.B - c.A) / c.C;
  if (!steps.is_nonneg_integer()) throw std::logic_error("(B - A)/C is not a nonnegative integer");
  for (long long k = 1; k <= static_cast<long long>(steps.num()); ++k)
    s.discrete.push_back(c.A + Rational(k) * c.C);
  return s;
}

bool is_unitarizable(const RootSystem& rs, const Vec& Lambda) {
  WeightDecomposition w = decompose(rs, Lambda);
  if (!w.dominant_integral)
    throw std::invalid_argument("weight is not dominant integral on compact simples");
  return unitarizable_set(rs, w.pi0).contains_z(w.z);
}

ClassificationReport classify(const RootSystem& rs, const Vec& Lambda) {
  ClassificationReport r;
  r.algebra = rs.spec;
  r.weight = Lambda;
  r.decomposition = decompose(rs, Lambda);
  if (!r.decomposition.dominant_integral)
    throw std::invalid_argument("weight is not dominant integral on compact simples");
  r.witness = last_place(rs, r.decomposition.lambda0);
  r.missing = missing_weight(rs, r.decomposition.lambda0, r.witness);
  r.ehw = constants(rs, r.decomposition.pi0);
  r.set = unitarizable_set(rs, r.decomposition.pi0);
  r.lambda0_from_B = r.ehw.B - pairing(rs.half_sum, rs.gamma_r);
  r.methods_agree = r.lambda0_from_B == r.witness.lambda0;
  r.unitarizable = r.set.contains_z(r.decomposition.z);
  return r;
}

std::string ClassificationReport::to_text() const {
  std::ostringstream o;
  o << "algebra:        " << algebra.name() << "\n";
  o << "weight:         " << vec_str(weight) << "\n";
  o << "Lambda0:        " << vec_str(decomposition.lambda0) << "\n";
  o << "lambda:         " << decomposition.lambda.str() << "\n";
  o << "Pi0:            " << vec_str(decomposition.pi0) << "\n";
  o << "z:              " << decomposition.z.str() << "\n";
  o << "candidates:";
  for (const auto& [root, la] : witness.candidates)
    o << "  " << vec_str(root) << " -> " << la.str();
  o << "\n";
  o << "lambda0:        " << witness.lambda0.str() << " at alpha0 = " << vec_str(witness.alpha0)
    << "\n";
  o << "missing weight: " << vec_str(missing) << "\n";
  o << "q_type:         " << ehw.q_type << " (split rank " << ehw.q_split_rank << ")\n";
  o << "t_type:         " << ehw.t_type << "\n";
  o << "A, B, C:        " << ehw.A.str() << ", " << ehw.B.str() << ", " << ehw.C.str() << "\n";
  o << "level:          " << set.level() << "\n";
  o << "set:            z <= " << set.continuous_max.str();
  for (const auto& d : set.discrete) o << ", z = " << d.str();
  o << "\n";
  o << "methods agree:  " << (methods_agree ? "yes" : "NO") << " (B - <R,gamma_r> = "
    << lambda0_from_B.str() << ")\n";
  o << "unitarizable:   " << (unitarizable ? "yes" : "no") << "\n";
  return o.str();
}

std::string ClassificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["algebra"] = algebra.name();
  auto vec_json = [](const Vec& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };
  j["weight"] = vec_json(weight);
  j["lambda0_part"] = vec_json(decomposition.lambda0);
  j["lambda"] = decomposition.lambda.str();
  j["pi0"] = vec_json(decomposition.pi0);
  j["z"] = decomposition.z.str();
  j["lambda0"] = witness.lambda0.str();
  j["alpha0"] = vec_json(witness.alpha0);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& [root, la] : witness.candidates)
    j["witnesses"].push_back({{"root", vec_json(root)}, {"lambda", la.str()}});
  j["missing_weight"] = vec_json(missing);
  j["q_type"] = ehw.q_type;
  j["t_type"] = ehw.t_type;
  j["q_split_rank"] = ehw.q_split_rank;
  j["A"] = ehw.A.str();
  j["B"] = ehw.B.str();
  j["C"] = ehw.C.str();
  j["level"] = set.level();
  j["continuous_max"] = set.continuous_max.str();
  j["discrete"] = nlohmann::ordered_json::array();
  for (const auto& d : set.discrete) j["discrete"].push_back(d.str());
  j["lambda0_from_B"] = lambda0_from_B.str();
  j["methods_agree"] = methods_agree;
  j["unitarizable"] = unitarizable;
  return j.dump(2);
}

std::vector<std::vector<Rational>> pattern_representatives(const RootSystem& rs) {
  const bool has_short =
      rs.spec.family == Family::sp || rs.spec.family == Family::so_odd;
  const long long top = has_short ? 2 : 1;
  const int k = static_cast<int>(rs.compact_simple_index.size());
  std::vector<std::vector<Rational>> out;
  std::vector<long long> cur(k, 0);
  while (true) {
    std::vector<Rational> pat;
    pat.reserve(k);
    for (long long v : cur) pat.push_back(Rational(v));
    out.push_back(std::move(pat));
    int i = k - 1;
    while (i >= 0 && cur[i] == top) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

CrossCheck cross_check(const RootSystem& rs, const std::vector<Rational>& pattern) {
  CrossCheck c;
  c.pattern = pattern;
  c.lambda0_weight = weight_from_pattern(rs, pattern);
  c.witness = last_place(rs, c.lambda0_weight);
  c.ehw = constants(rs, decompose(rs, c.lambda0_weight).pi0);
  c.lambda0_from_B = c.ehw.B - pairing(rs.half_sum, rs.gamma_r);
  c.agree = c.lambda0_from_B == c.witness.lambda0;
  return c;
}

std::vector<CrossCheck> cross_check_all(const RootSystem& rs) {
  std::vector<CrossCheck> out;
  for (const auto& pat : pattern_representatives(rs)) out.push_back(cross_check(rs, pat));
  return out;
}

}  // namespace uhw
