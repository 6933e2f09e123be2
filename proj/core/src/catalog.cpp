#include "uhw/catalog.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "uhw/jakobsen.hpp"

namespace uhw {

std::string PhysicalLabel::str() const {
  std::string s;
  for (const auto& [name, v] : values) {
    if (!s.empty()) s += ", ";
    s += name + "=" + v.str();
  }
  return s;
}

Rational PhysicalLabel::value(const std::string& name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  throw std::invalid_argument("no label named " + name);
}

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

int gen_index(const GeneratorBasis& gb, const std::string& label) {
  int k = gb.find(label);
  if (k < 0) throw std::logic_error("catalog references unknown generator " + label);
  return k;
}

// A printed singular vector: sum of coefficient * word of lowering labels.
struct WordSum {
  std::vector<std::pair<std::vector<std::string>, Rational>> terms;
};

UEAElement build_vector(const GeneratorBasis& gb, const WordSum& ws) {
  UEAElement y;
  for (const auto& [labels, c] : ws.terms) {
    Word w;
    for (const auto& lab : labels) w.push_back(gen_index(gb, lab));
    y += lowering_word(gb, w, c);
  }
  return y;
}

struct FamilyData {
  std::string case_id;
  Vec Lambda0;
  Rational lambda;          // actual lambda for the entry
  Rational expected_lambda0;
  std::optional<Vec> expected_alpha0;  // boundary families only
  std::optional<WordSum> words;        // extremal vector, boundary only
  std::string poincare;
};

CatalogEntry make_entry(const AlgebraSpec& spec, const RootSystem& rs, const GeneratorBasis& gb,
                        const FamilyData& f,
                        const std::function<PhysicalLabel(const Vec&)>& label_of) {
  ReductionWitness w = last_place(rs, f.Lambda0);
  if (w.lambda0 != f.expected_lambda0)
    throw std::logic_error("catalog case " + f.case_id +
                           ": diagram boundary disagrees with the stated family");
  if (f.expected_alpha0 && w.alpha0 != *f.expected_alpha0)
    throw std::logic_error("catalog case " + f.case_id + ": unexpected first-reduction root");

  CatalogEntry e;
  e.case_id = f.case_id;
  e.algebra = spec;
  e.lambda = f.lambda;
  e.lambda0 = w.lambda0;
  e.highest_weight = vec_add(f.Lambda0, vec_scale(f.lambda, rs.epsilon));
  e.label = label_of(e.highest_weight);
  e.poincare = f.poincare;

  ClassificationReport rep = classify(rs, e.highest_weight);
  if (!rep.unitarizable || !rep.methods_agree)
    throw std::logic_error("catalog case " + f.case_id + ": entry fails classification");

  if (f.words) {
    e.missing = missing_weight(rs, f.Lambda0, w);
    UEAElement y = build_vector(gb, *f.words);
    ExtremalCheck ck = extremal_check(gb, e.highest_weight, y);
    if (!ck.extremal)
      throw std::logic_error("catalog case " + f.case_id + ": printed vector is not extremal");
    if (ck.weight != *e.missing)
      throw std::logic_error("catalog case " + f.case_id +
                             ": extremal vector sits at the wrong weight");
    e.extremal_text = element_str(gb, y);
    e.extremal = std::move(y);
  }
  return e;
}

}  // namespace

std::vector<CatalogEntry> su22_catalog(int n, std::optional<int> m,
                                       std::optional<Rational> lambda) {
  if (n < 1) throw std::invalid_argument("su(2,2) catalog needs n >= 1");
  if (m && *m < 1) throw std::invalid_argument("su(2,2) catalog needs m >= 1");
  if (lambda && !(*lambda < rat(-1)))
    throw std::invalid_argument("su(2,2) interior samples need lambda < -1");

  const AlgebraSpec spec = AlgebraSpec::su(2, 2);
  const RootSystem rs = build(spec);
  const GeneratorBasis gb = generator_basis(spec);

  auto label_of = [](const Vec& L) {
    PhysicalLabel lab;
    lab.values = {{"j1", (L[0] - L[1]) / rat(2)},
                  {"j2", (L[2] - L[3]) / rat(2)},
                  {"d", (L[0] + L[1] - L[2] - L[3]) / rat(2)}};
    return lab;
  };

  auto spin_str = [](const Rational& j) { return j.str(); };

  // Lambda0 chains: case I vanishes on e3-e4, case II on e1-e2, case III on
  // neither; all are normalized against gamma_r = e1-e4.
  const Vec L0_I = {rat(n, 4), rat(-3 * n, 4), rat(n, 4), rat(n, 4)};
  const Vec L0_II = {rat(-n, 4), rat(-n, 4), rat(3 * n, 4), rat(-n, 4)};

  const Vec alpha_I = {rat(1), rat(0), rat(-1), rat(0)};   // e1 - e3
  const Vec alpha_II = {rat(0), rat(1), rat(0), rat(-1)};  // e2 - e4
  const Vec gamma_r = {rat(1), rat(0), rat(0), rat(-1)};   // e1 - e4

  const Rational half_n = rat(n, 2);
  std::vector<CatalogEntry> out;

  WordSum wa{{{{"Gb(2,3)", "Gb(1,2)"}, rat(1)}, {{"Gb(1,3)"}, rat(n)}}};
  out.push_back(make_entry(spec, rs, gb,
                           {"a", L0_I, rat(-1), rat(-1), alpha_I, wa,
                            "massless, helicity " + spin_str(half_n)},
                           label_of));
  if (lambda)
    out.push_back(make_entry(spec, rs, gb,
                             {"b", L0_I, *lambda, rat(-1), std::nullopt, std::nullopt,
                              "massive continuation, spin (" + spin_str(half_n) + ", 0)"},
                             label_of));

  WordSum wc{{{{"Gb(2,3)", "Gb(3,4)"}, rat(1)}, {{"Gb(2,4)"}, rat(-n)}}};
  out.push_back(make_entry(spec, rs, gb,
                           {"c", L0_II, rat(-1), rat(-1), alpha_II, wc,
                            "massless, helicity -" + spin_str(half_n)},
                           label_of));
  if (lambda)
    out.push_back(make_entry(spec, rs, gb,
                             {"d", L0_II, *lambda, rat(-1), std::nullopt, std::nullopt,
                              "massive continuation, spin (0, " + spin_str(half_n) + ")"},
                             label_of));

  if (m) {
    const int mm = *m;
    const Vec L0_III = {rat(mm - n, 4), rat(-3 * mm - n, 4), rat(mm + 3 * n, 4), rat(mm - n, 4)};
    const Rational half_m = rat(mm, 2);
    WordSum we{{{{"Gb(2,3)", "Gb(3,4)", "Gb(1,2)"}, rat(1)},
                {{"Gb(2,4)", "Gb(1,2)"}, rat(-n)},
                {{"Gb(1,3)", "Gb(3,4)"}, rat(mm)},
                {{"Gb(1,4)"}, rat(-static_cast<long long>(mm) * n)}}};
    out.push_back(make_entry(spec, rs, gb,
                             {"e", L0_III, rat(-2), rat(-2), gamma_r, we,
                              "conserved-current type, spin (" + spin_str(half_m) + ", " +
                                  spin_str(half_n) + ")"},
                             label_of));
    if (lambda && *lambda < rat(-2)) {
      Rational lo = (rat(std::abs(mm - n)) / rat(2));
      Rational hi = (rat(mm + n) / rat(2));
      out.push_back(make_entry(spec, rs, gb,
                               {"f", L0_III, *lambda, rat(-2), std::nullopt, std::nullopt,
                                "massive, spins " + lo.str() + " .. " + hi.str()},
                               label_of));
    }
  }
  return out;
}

std::vector<CatalogEntry> so32_catalog(std::optional<int> m, std::optional<Rational> lambda) {
  if (m && *m < 1) throw std::invalid_argument("so(3,2) catalog needs m >= 1");
  if (lambda && !(*lambda < rat(-1, 2)))
    throw std::invalid_argument("so(3,2) interior samples need lambda < -1/2");

  const AlgebraSpec spec = AlgebraSpec::so(3);
  const RootSystem rs = build(spec);
  const GeneratorBasis gb = generator_basis(spec);

  auto label_of = [](const Vec& L) {
    PhysicalLabel lab;
    lab.values = {{"E0", -L[0]}, {"j", L[1]}};
    return lab;
  };

  const Vec gamma_r = {rat(1), rat(1)};  // e1 + e2
  const Vec e1 = {rat(1), rat(0)};
  std::vector<CatalogEntry> out;

  if (m && *m >= 2) {
    const int mm = *m;
    const Vec L0 = {rat(-mm, 2), rat(mm, 2)};
    // Coefficients determined by the rank-2 extremal equations; the solution
    // at this weight is one-dimensional, so the vector is unique up to scale.
    WordSum wa{{{{"Eb(2)", "Eb(2)", "Gb(1,2)"}, rat(1)},
                {{"Eb(1)", "Eb(2)"}, rat(-(mm + 1))},
                {{"Fb(1,2)"}, rat(1) - rat(static_cast<long long>(mm) * (mm - 1), 2)}}};
    out.push_back(make_entry(spec, rs, gb,
                             {"a", L0, rat(-1), rat(-1), gamma_r, wa,
                              "massless, spin " + rat(mm, 2).str()},
                             label_of));
    if (lambda && *lambda < rat(-1))
      out.push_back(make_entry(spec, rs, gb,
                               {"b", L0, *lambda, rat(-1), std::nullopt, std::nullopt,
                                "massive, spin " + rat(mm, 2).str()},
                               label_of));
  }

  const Vec L0_spinor = {rat(-1, 2), rat(1, 2)};
  WordSum wc{{{{"Gb(1,2)", "Eb(2)"}, rat(1)}, {{"Eb(1)"}, rat(-1, 2)}}};
  out.push_back(make_entry(spec, rs, gb,
                           {"c", L0_spinor, rat(-1, 2), rat(-1, 2), e1, wc,
                            "Dirac singleton Di"},
                           label_of));
  if (lambda)
    out.push_back(make_entry(spec, rs, gb,
                             {"d", L0_spinor, *lambda, rat(-1, 2), std::nullopt, std::nullopt,
                              "massive, spin 1/2"},
                             label_of));

  // Rac: the endpoint of the continuous unitarizable interval of Lambda0 = 0.
  const Vec L0_zero = {rat(0), rat(0)};
  {
    ReductionWitness w = last_place(rs, L0_zero);
    if (w.lambda0 != rat(0))
      throw std::logic_error("catalog case e: scalar chain boundary moved");
    UnitaritySet set = unitarizable_set(rs, decompose(rs, L0_zero).pi0);
    Rational z_end = set.continuous_max;
    Rational lam = z_end - pairing(rs.half_sum, rs.gamma_r);
    if (lam != rat(-1, 2))
      throw std::logic_error("catalog case e: Rac endpoint moved");
    CatalogEntry e;
    e.case_id = "e";
    e.algebra = spec;
    e.lambda = lam;
    e.lambda0 = w.lambda0;
    e.highest_weight = vec_add(L0_zero, vec_scale(lam, rs.epsilon));
    e.label = label_of(e.highest_weight);
    e.poincare = "Dirac singleton Rac";
    ClassificationReport rep = classify(rs, e.highest_weight);
    if (!rep.unitarizable || !rep.methods_agree)
      throw std::logic_error("catalog case e: entry fails classification");
    out.push_back(std::move(e));
  }
  return out;
}

std::string catalog_text(const std::vector<CatalogEntry>& entries) {
  std::ostringstream o;
  for (const auto& e : entries) {
    o << "case " << e.case_id << "  " << e.algebra.name() << "  lambda=" << e.lambda.str()
      << "  (boundary lambda0=" << e.lambda0.str() << ")\n";
    o << "  weight:   " << vec_str(e.highest_weight) << "\n";
    o << "  label:    " << e.label.str() << "\n";
    o << "  type:     " << e.poincare << "\n";
    if (e.missing) o << "  missing:  " << vec_str(*e.missing) << "\n";
    if (!e.extremal_text.empty()) o << "  extremal: " << e.extremal_text << "\n";
  }
  return o.str();
}

std::string catalog_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["case"] = e.case_id;
    j["algebra"] = e.algebra.name();
    j["lambda"] = e.lambda.str();
    j["lambda0"] = e.lambda0.str();
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& x : e.highest_weight) w.push_back(x.str());
    j["weight"] = w;
    nlohmann::ordered_json lab;
    for (const auto& [k, v] : e.label.values) lab[k] = v.str();
    j["label"] = lab;
    j["type"] = e.poincare;
    if (e.missing) {
      nlohmann::ordered_json mw = nlohmann::ordered_json::array();
      for (const auto& x : *e.missing) mw.push_back(x.str());
      j["missing"] = mw;
    }
    if (!e.extremal_text.empty()) j["extremal"] = e.extremal_text;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace uhw
