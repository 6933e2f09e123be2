// Command-line front end for the unitarizable highest-weight toolkit.
//
// Subcommands: classify, diagram, split-rank, gram, extremal, catalog,
// cross-check.  Algebras are spelled positionally ("su 2 2", "sp 3",
// "so 5 2", "sostar 8", "e6", "e7"); weights are comma-separated fractions.
// Output is deterministic text or JSON (--format, or the UHW_FORMAT
// environment variable).
//
// Exit codes: 0 success, 1 usage error, 2 invalid mathematical input,
// 3 cross-check mismatch.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uhw/catalog.hpp"
#include "uhw/ehw.hpp"
#include "uhw/jakobsen.hpp"
#include "uhw/rootsys.hpp"
#include "uhw/verma.hpp"

namespace {

using namespace uhw;

std::vector<Rational> parse_csv(const std::string& s) {
  std::vector<Rational> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::string trimmed;
    for (char c : tok)
      if (c != ' ' && c != '\t') trimmed += c;
    v.push_back(Rational::parse(trimmed));
  }
  if (v.empty()) throw std::invalid_argument("empty coordinate list");
  return v;
}

nlohmann::ordered_json vec_json(const Vec& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

int g_exit = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unitarizable highest-weight modules of the hermitian simple Lie algebras"};
  app.require_subcommand(1);

  const char* env_format = std::getenv("UHW_FORMAT");
  std::string format = env_format ? env_format : "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto json_out = [&]() { return format == "json"; };

  const std::string alg_help = "su p q | sp n | so m 2 | sostar 2n | e6 | e7";

  // ---- classify ----
  auto* cls = app.add_subcommand("classify", "classify one highest weight");
  std::vector<std::string> cls_alg;
  std::string cls_weight, cls_pattern, cls_lambda;
  cls->add_option("algebra", cls_alg, alg_help)->required()->expected(1, 3);
  cls->add_option("--weight", cls_weight, "Lambda as comma-separated fractions");
  cls->add_option("--pattern", cls_pattern, "<Lambda0, mu_i> values over the compact simples");
  cls->add_option("--lambda", cls_lambda, "coefficient on eps (with --pattern; default 0)");
  add_format(cls);
  cls->callback([&] {
    AlgebraSpec spec = AlgebraSpec::parse(cls_alg);
    RootSystem rs = build(spec);
    Vec L;
    if (!cls_weight.empty()) {
      L = parse_csv(cls_weight);
    } else if (!cls_pattern.empty()) {
      Vec L0 = weight_from_pattern(rs, parse_csv(cls_pattern));
      Rational lam = cls_lambda.empty() ? Rational(0) : Rational::parse(cls_lambda);
      L = vec_add(L0, vec_scale(lam, rs.epsilon));
    } else {
      throw CLI::ValidationError("classify", "provide --weight, or --pattern with --lambda");
    }
    ClassificationReport rep = classify(rs, L);
    if (json_out())
      std::cout << rep.to_json() << "\n";
    else
      std::cout << rep.to_text();
  });

  // ---- diagram ----
  auto* dia = app.add_subcommand("diagram", "render the noncompact-root diagram");
  std::vector<std::string> dia_alg;
  std::string dia_pattern;
  dia->add_option("algebra", dia_alg, alg_help)->required()->expected(1, 3);
  dia->add_option("--pattern", dia_pattern, "also run the reduction-point search on Lambda0");
  add_format(dia);
  dia->callback([&] {
    AlgebraSpec spec = AlgebraSpec::parse(dia_alg);
    RootSystem rs = build(spec);
    JakobsenDiagram dg = diagram(rs);
    std::optional<ReductionWitness> wit;
    Vec L0;
    if (!dia_pattern.empty()) {
      L0 = weight_from_pattern(rs, parse_csv(dia_pattern));
      wit = last_place(rs, L0);
    }
    if (json_out()) {
      nlohmann::ordered_json j;
      j["algebra"] = spec.name();
      j["nodes"] = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < dg.node.size(); ++i)
        j["nodes"].push_back({{"root", vec_json(dg.node[i])}, {"height", dg.height[i]}});
      j["edges"] = nlohmann::ordered_json::array();
      for (const auto& e : dg.edges)
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
      if (wit) {
        j["pattern_weight"] = vec_json(L0);
        j["candidates"] = nlohmann::ordered_json::array();
        for (const auto& [root, la] : wit->candidates)
          j["candidates"].push_back({{"root", vec_json(root)}, {"lambda", la.str()}});
        j["lambda0"] = wit->lambda0.str();
        j["alpha0"] = vec_json(wit->alpha0);
        j["missing_weight"] = vec_json(missing_weight(rs, L0, *wit));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << dg.render(rs);
      if (wit) {
        std::cout << "Lambda0:  " << vec_str(L0) << "\n";
        std::cout << "candidates:\n";
        for (const auto& [root, la] : wit->candidates)
          std::cout << "  " << vec_str(root) << "  lambda = " << la.str() << "\n";
        std::cout << "lambda0:  " << wit->lambda0.str() << "  at alpha0 = "
                  << vec_str(wit->alpha0) << "\n";
        std::cout << "missing:  " << vec_str(missing_weight(rs, L0, *wit)) << "\n";
      }
    }
  });

  // ---- split-rank ----
  auto* spl = app.add_subcommand("split-rank", "orthogonal noncompact collection and lambda_s");
  std::vector<std::string> spl_alg;
  spl->add_option("algebra", spl_alg, alg_help)->required()->expected(1, 3);
  add_format(spl);
  spl->callback([&] {
    AlgebraSpec spec = AlgebraSpec::parse(spl_alg);
    RootSystem rs = build(spec);
    SplitCollection sc = split_rank(rs);
    Rational ls = lambda_s(spec);
    if (json_out()) {
      nlohmann::ordered_json j;
      j["algebra"] = spec.name();
      j["split_rank"] = sc.t();
      j["gamma"] = nlohmann::ordered_json::array();
      for (const auto& g : sc.gamma) j["gamma"].push_back(vec_json(g));
      j["lambda_s"] = ls.str();
      if (sc.t() >= 2) j["lambda_s_derived"] = lambda_s_derived(rs).str();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "algebra:    " << spec.name() << "\n";
      std::cout << "split rank: " << sc.t() << "\n";
      for (int k = 0; k < sc.t(); ++k)
        std::cout << "  gamma_" << (k + 1) << " = " << vec_str(sc.gamma[k]) << "\n";
      std::cout << "lambda_s:   " << ls.str() << "\n";
      if (sc.t() >= 2)
        std::cout << "derived:    " << lambda_s_derived(rs).str() << "\n";
    }
  });

  // ---- gram ----
  auto* grm = app.add_subcommand("gram", "exact Shapovalov Gram blocks up to a degree");
  std::vector<std::string> grm_alg;
  std::string grm_weight;
  int grm_degree = 2;
  grm->add_option("algebra", grm_alg, alg_help)->required()->expected(1, 3);
  grm->add_option("--weight", grm_weight, "Lambda as comma-separated fractions")->required();
  grm->add_option("--degree", grm_degree, "maximum PBW degree (default 2)");
  add_format(grm);
  grm->callback([&] {
    AlgebraSpec spec = AlgebraSpec::parse(grm_alg);
    GeneratorBasis gb = generator_basis(spec);
    GramReport rep = gram(gb, parse_csv(grm_weight), grm_degree);
    if (json_out())
      std::cout << rep.to_json(gb) << "\n";
    else
      std::cout << rep.to_text(gb);
  });

  // ---- extremal ----
  auto* ext = app.add_subcommand("extremal", "search extremal vectors at a target weight");
  std::vector<std::string> ext_alg;
  std::string ext_weight, ext_target;
  ext->add_option("algebra", ext_alg, alg_help)->required()->expected(1, 3);
  ext->add_option("--weight", ext_weight, "highest weight Lambda")->required();
  ext->add_option("--target", ext_target, "weight of the sought extremal vectors")->required();
  add_format(ext);
  ext->callback([&] {
    AlgebraSpec spec = AlgebraSpec::parse(ext_alg);
    GeneratorBasis gb = generator_basis(spec);
    Vec L = parse_csv(ext_weight);
    Vec target = parse_csv(ext_target);
    std::vector<UEAElement> found = extremal_search(gb, L, target);
    if (json_out()) {
      nlohmann::ordered_json j;
      j["algebra"] = spec.name();
      j["weight"] = vec_json(L);
      j["target"] = vec_json(target);
      j["vectors"] = nlohmann::ordered_json::array();
      for (const auto& y : found) j["vectors"].push_back(element_str(gb, y));
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "algebra: " << spec.name() << "\n";
      std::cout << "weight:  " << vec_str(L) << "\n";
      std::cout << "target:  " << vec_str(target) << "\n";
      std::cout << "extremal vectors: " << found.size() << "\n";
      for (const auto& y : found) std::cout << "  " << element_str(gb, y) << "\n";
    }
  });

  // ---- catalog ----
  auto* cat = app.add_subcommand("catalog", "worked module catalogs for su(2,2) and so(3,2)");
  std::vector<std::string> cat_alg;
  int cat_n = 0, cat_m = 0;
  std::string cat_lambda;
  cat->add_option("algebra", cat_alg, "su 2 2 | so 3 2")->required()->expected(1, 3);
  cat->add_option("--n", cat_n, "chain value n (su(2,2); required there)");
  cat->add_option("--m", cat_m, "second chain value m");
  cat->add_option("--lambda", cat_lambda, "interior sample lambda");
  add_format(cat);
  cat->callback([&] {
    AlgebraSpec spec = AlgebraSpec::parse(cat_alg);
    std::optional<int> m = cat_m > 0 ? std::optional<int>(cat_m) : std::nullopt;
    std::optional<Rational> lam;
    if (!cat_lambda.empty()) lam = Rational::parse(cat_lambda);
    std::vector<CatalogEntry> entries;
    if (spec.family == Family::su && spec.p == 2 && spec.q == 2) {
      if (cat_n <= 0) throw CLI::ValidationError("catalog", "su(2,2) needs --n >= 1");
      entries = su22_catalog(cat_n, m, lam);
    } else if (spec.family == Family::so_odd && spec.n == 2) {
      entries = so32_catalog(m, lam);
    } else {
      throw std::invalid_argument("the catalog covers su(2,2) and so(3,2) only");
    }
    std::cout << (json_out() ? catalog_json(entries) + "\n" : catalog_text(entries));
  });

  // ---- cross-check ----
  auto* crs = app.add_subcommand("cross-check",
                                 "diagram vs reduction-point agreement over all patterns");
  std::vector<std::string> crs_alg;
  crs->add_option("algebra", crs_alg, alg_help)->required()->expected(1, 3);
  add_format(crs);
  crs->callback([&] {
    AlgebraSpec spec = AlgebraSpec::parse(crs_alg);
    RootSystem rs = build(spec);
    std::vector<CrossCheck> checks = cross_check_all(rs);
    bool all_agree = true;
    for (const auto& c : checks) all_agree = all_agree && c.agree;
    if (json_out()) {
      nlohmann::ordered_json j;
      j["algebra"] = spec.name();
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        nlohmann::ordered_json pat = nlohmann::ordered_json::array();
        for (const auto& x : c.pattern) pat.push_back(x.str());
        jc["pattern"] = pat;
        jc["lambda0"] = c.witness.lambda0.str();
        jc["alpha0"] = vec_json(c.witness.alpha0);
        jc["B"] = c.ehw.B.str();
        jc["A"] = c.ehw.A.str();
        jc["C"] = c.ehw.C.str();
        jc["lambda0_from_B"] = c.lambda0_from_B.str();
        jc["agree"] = c.agree;
        j["checks"].push_back(jc);
      }
      j["all_agree"] = all_agree;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "algebra: " << spec.name() << "  (" << checks.size() << " patterns)\n";
      for (const auto& c : checks) {
        std::cout << "  pattern (";
        for (std::size_t i = 0; i < c.pattern.size(); ++i)
          std::cout << (i ? "," : "") << c.pattern[i].str();
        std::cout << ")  lambda0 = " << c.witness.lambda0.str() << "  B = " << c.ehw.B.str()
                  << "  from B = " << c.lambda0_from_B.str()
                  << (c.agree ? "  ok" : "  MISMATCH") << "\n";
      }
      std::cout << "all agree: " << (all_agree ? "yes" : "no") << "\n";
    }
    if (!all_agree) g_exit = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return g_exit;
}
