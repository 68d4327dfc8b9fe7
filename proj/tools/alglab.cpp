// alglab: metrized (non)associative algebra laboratory.
//
// Subcommands construct algebras from presets or JSON files, evaluate
// sectional nonassociativity, certify constant values, estimate extremal
// bounds, search for idempotents and square-zero elements, and run the
// verification suites. Reports go to standard output as JSON (default) or
// CSV; identical (input, seed, config) give byte-identical reports under any
// thread count.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "alglab/io.hpp"
#include "alglab/suites.hpp"

using namespace alglab;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5EC7;

std::uint64_t env_seed_default() {
  if (const char* s = std::getenv("ALG_LAB_SEED")) {
    try {
      return std::stoull(s, nullptr, 0);
    } catch (...) {
      throw CLI::ValidationError("ALG_LAB_SEED", "not an integer");
    }
  }
  return kDefaultSeed;
}

struct element_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// element literals: "1,0,-1" | "diag(1,0,-1)" | "sym(i,j)" (1-based, herm)
std::pair<std::optional<Vec<Rat>>, Vec<double>> parse_element(const std::string& text,
                                                              const Preset& p) {
  const int dim = p.flt.dim();
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (!isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto from_rationals = [&](const std::vector<Rat>& coords) {
    Vec<Rat> r = coords;
    Vec<double> f(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) f[i] = rat_double(coords[i]);
    return std::pair<std::optional<Vec<Rat>>, Vec<double>>{
        p.rational_mode ? std::optional<Vec<Rat>>(r) : std::nullopt, f};
  };

  std::string s = text;
  if (s.rfind("diag(", 0) == 0 || s.rfind("sym(", 0) == 0) {
    if (p.desc.name != "herm")
      throw element_error("diag(...)/sym(...) literals need a herm preset");
    int n = std::stoi(p.desc.params.at(0));
    int level = std::stoi(p.desc.params.at(1));
    HermBasisLayout lay = herm_layout(n, level);
    if (s.back() != ')') throw element_error("unterminated element literal: " + text);
    std::string inner = s.substr(s.find('(') + 1, s.size() - s.find('(') - 2);
    std::vector<Rat> coords(lay.dim, Rat(0));
    if (s[0] == 'd') {
      auto parts = split(inner);
      if (static_cast<int>(parts.size()) != n)
        throw element_error("diag(...) needs " + std::to_string(n) + " entries");
      for (int i = 0; i < n; ++i) {
        auto q = parse_rat(parts[i]);
        if (!q) throw element_error("bad rational in diag: " + parts[i]);
        coords[i] = *q;
      }
    } else {
      auto parts = split(inner);
      if (parts.size() != 2) throw element_error("sym(i,j) needs two indices");
      int i = std::stoi(parts[0]), j = std::stoi(parts[1]);
      if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw element_error("sym(i,j) needs distinct 1-based indices within the matrix size");
      if (i > j) std::swap(i, j);
      coords[lay.off(i - 1, j - 1, 0)] = Rat(1);
    }
    return from_rationals(coords);
  }
  auto parts = split(s);
  if (static_cast<int>(parts.size()) != dim)
    throw element_error("element needs " + std::to_string(dim) + " coordinates, got " +
                        std::to_string(parts.size()));
  std::vector<Rat> coords;
  Vec<double> fcoords;
  bool all_rational = true;
  for (const auto& part : parts) {
    auto q = parse_rat(part);
    if (q) {
      coords.push_back(*q);
      fcoords.push_back(rat_double(*q));
    } else {
      all_rational = false;
      try {
        fcoords.push_back(std::stod(part));
      } catch (...) {
        throw element_error("bad coordinate: " + part);
      }
    }
  }
  if (all_rational && p.rational_mode) return from_rationals(coords);
  return {std::nullopt, fcoords};
}

void emit(const Report& rep, const std::string& format) {
  if (format == "csv")
    std::cout << rep.to_csv();
  else
    std::cout << rep.to_json();
}

json preset_config(const Preset& p, std::uint64_t seed) {
  json j;
  j["source"] = p.desc.canonical;
  j["mode"] = p.rational_mode ? "rational" : "float";
  j["seed"] = seed;
  return j;
}

json witness_json(const PlaneWitness& w) {
  return json{{"x", w.x}, {"y", w.y}, {"value", w.value}, {"start", w.start_index}};
}

int run(int argc, char** argv) {
  CLI::App app{"metrized (non)associative algebra laboratory"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware; never affects results)");

  std::uint64_t seed = env_seed_default();

  auto* cmd_list = app.add_subcommand("list-presets", "catalog of built-in algebras");

  std::string src_info;
  auto* cmd_info = app.add_subcommand("info", "dimensions and metric certificate");
  cmd_info->add_option("src", src_info, "preset address or algebra file")->required();

  std::string src_sect, x_text, y_text;
  auto* cmd_sect = app.add_subcommand("sect", "sectional nonassociativity of a plane");
  cmd_sect->add_option("src", src_sect)->required();
  cmd_sect->add_option("--x", x_text, "first element")->required();
  cmd_sect->add_option("--y", y_text, "second element")->required();

  std::string src_cs;
  auto* cmd_cs = app.add_subcommand("constant-sect", "certify a constant sectional value");
  cmd_cs->add_option("src", src_cs)->required();

  std::string src_ex;
  OptimizerConfig ocfg;
  auto* cmd_ex = app.add_subcommand("extrema", "multi-start bounds over the grassmannian");
  cmd_ex->add_option("src", src_ex)->required();
  cmd_ex->add_option("--starts", ocfg.starts);
  cmd_ex->add_option("--iters", ocfg.max_iters);
  cmd_ex->add_option("--samples", ocfg.samples);
  cmd_ex->add_option("--seed", seed);

  std::string src_bw;
  OptimizerConfig bcfg;
  bcfg.starts = 32;
  auto* cmd_bw = app.add_subcommand("bw", "commutator norm constant of the carried product");
  cmd_bw->add_option("src", src_bw)->required();
  cmd_bw->add_option("--starts", bcfg.starts);
  cmd_bw->add_option("--samples", bcfg.samples);
  cmd_bw->add_option("--seed", seed);

  std::string src_id;
  SearchConfig scfg;
  auto* cmd_id = app.add_subcommand("idempotents", "newton search for idempotents");
  cmd_id->add_option("src", src_id)->required();
  cmd_id->add_option("--starts", scfg.starts);
  cmd_id->add_option("--grid", scfg.grid, "sphere-grid starts for dim <= 3");
  cmd_id->add_option("--seed", seed);

  std::string src_sz;
  SearchConfig zcfg;
  auto* cmd_sz = app.add_subcommand("square-zero", "search for square-zero rays");
  cmd_sz->add_option("src", src_sz)->required();
  cmd_sz->add_option("--starts", zcfg.starts);
  cmd_sz->add_option("--grid", zcfg.grid);
  cmd_sz->add_option("--seed", seed);

  std::string src_sp, e_text;
  auto* cmd_sp = app.add_subcommand("spectrum", "orthogonal spectrum of an idempotent");
  cmd_sp->add_option("src", src_sp)->required();
  cmd_sp->add_option("--e", e_text, "the idempotent")->required();

  std::string src_exp, out_path;
  auto* cmd_exp = app.add_subcommand("export", "write the algebra document to a file");
  cmd_exp->add_option("src", src_exp)->required();
  cmd_exp->add_option("--out", out_path)->required();

  auto* cmd_verify = app.add_subcommand("verify", "verification suites with pinned expected values");
  cmd_verify->require_subcommand(1);
  std::string eps_text = "1";
  auto* v_table1 = cmd_verify->add_subcommand("table1", "idempotent/square-zero table");
  v_table1->add_option("--eps", eps_text, "rational parameter");
  int vn = 3, vlevel = 0;
  long vsamples = 100000;
  auto* v_herm = cmd_verify->add_subcommand("herm-bounds", "hermitian sect bounds");
  v_herm->add_option("--n", vn)->required();
  v_herm->add_option("--level", vlevel)->required();
  v_herm->add_option("--starts", ocfg.starts);
  v_herm->add_option("--samples", vsamples);
  v_herm->add_option("--seed", seed);
  int bn = 2, blevel = 1, bso = 0;
  auto* v_bw = cmd_verify->add_subcommand("bw-mat", "commutator norm constants");
  v_bw->add_option("--n", bn);
  v_bw->add_option("--level", blevel);
  v_bw->add_option("--so", bso, "use so(n) instead of mat(n, K)");
  v_bw->add_option("--samples", bcfg.samples);
  v_bw->add_option("--seed", seed);
  auto* v_comp = cmd_verify->add_subcommand("symmetric-composition", "composition algebra bounds");
  v_comp->add_option("--samples", bcfg.samples);
  v_comp->add_option("--seed", seed);
  auto* v_ids = cmd_verify->add_subcommand("identities", "identity battery");
  int balgebras = 20;
  auto* v_bianchi = cmd_verify->add_subcommand("bianchi", "random-algebra property battery");
  v_bianchi->add_option("--count", balgebras);
  v_bianchi->add_option("--seed", seed);
  auto* v_norton = cmd_verify->add_subcommand("norton", "hermitian sampling bounds");
  v_norton->add_option("--n", vn);
  v_norton->add_option("--level", vlevel);
  v_norton->add_option("--samples", vsamples);
  v_norton->add_option("--seed", seed);
  long csamples = 10000;
  bool cexplore = false;
  auto* v_cdk = cmd_verify->add_subcommand("cdk", "commutator inequality sampling");
  v_cdk->add_option("--n", vn);
  v_cdk->add_option("--level", vlevel);
  v_cdk->add_option("--samples", csamples);
  v_cdk->add_option("--seed", seed);
  v_cdk->add_flag("--explore", cexplore, "sample non-diagonal x over the octonions");
  auto* v_cs = cmd_verify->add_subcommand("constant-sect", "exact constant-sect battery");
  auto* v_cons = cmd_verify->add_subcommand("consequences", "idempotent/square-zero structure");
  v_cons->add_option("--seed", seed);
  auto* v_opt = cmd_verify->add_subcommand("optimizer-health", "gradient + determinism checks");
  v_opt->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
  }

  ocfg.threads = threads;
  bcfg.threads = threads;
  scfg.threads = threads;
  zcfg.threads = threads;
  ocfg.seed = seed;
  bcfg.seed = seed;
  scfg.seed = seed;
  zcfg.seed = seed;

  if (*cmd_list) {
    json result = json::array();
    for (const auto& info : preset_catalog())
      result.push_back({{"pattern", info.pattern}, {"description", info.description}});
    emit(make_report("list-presets", json::object(), result), format);
    return 0;
  }

  if (*cmd_info) {
    Source src = resolve_source(src_info);
    const Preset& p = src.preset;
    json result;
    result["dim"] = p.flt.dim();
    result["mode"] = p.rational_mode ? "rational" : "float";
    result["provenance"] = p.desc.provenance;
    if (!p.flt.alg.labels().empty()) result["labels"] = p.flt.alg.labels();
    const MetricReport& cert = p.rational_mode ? p.exact->cert : p.flt.cert;
    result["metric"] = {{"invariant", cert.invariant},
                        {"max_defect", cert.max_defect},
                        {"witness", cert.witness},
                        {"nondegenerate", cert.nondegenerate},
                        {"definiteness", definiteness_name(cert.definiteness)},
                        {"signature",
                         {{"positive", cert.signature.positive},
                          {"negative", cert.signature.negative},
                          {"zero", cert.signature.zero}}}};
    result["unit"] = p.unit.has_value();
    result["composition_candidate"] = p.composition_candidate;
    emit(make_report("info", preset_config(p, seed), result), format);
    return 0;
  }

  if (*cmd_sect) {
    Source src = resolve_source(src_sect);
    const Preset& p = src.preset;
    auto [xr, xf] = parse_element(x_text, p);
    auto [yr, yf] = parse_element(y_text, p);
    json result;
    if (xr && yr && p.rational_mode) {
      Rat v = sect(*p.exact, *xr, *yr);
      result["sect"] = rat_str(v);
      result["sect_float"] = rat_double(v);
    } else {
      result["sect_float"] = sect_value(p.flt, xf, yf);
    }
    json cfg = preset_config(p, seed);
    cfg["x"] = x_text;
    cfg["y"] = y_text;
    emit(make_report("sect", cfg, result), format);
    return 0;
  }

  if (*cmd_cs) {
    Source src = resolve_source(src_cs);
    const Preset& p = src.preset;
    json result;
    if (p.rational_mode) {
      auto c = constant_sect(*p.exact);
      result["constant"] = c.has_value();
      if (c) {
        result["value"] = rat_str(*c);
        result["value_float"] = rat_double(*c);
      }
    } else {
      auto c = constant_sect(p.flt);
      result["constant"] = c.has_value();
      if (c) result["value_float"] = *c;
    }
    if (p.flt.dim() < 2) result["note"] = "dimension 1: constancy is vacuous";
    emit(make_report("constant-sect", preset_config(p, seed), result), format);
    return 0;
  }

  if (*cmd_ex) {
    Source src = resolve_source(src_ex);
    const Preset& p = src.preset;
    BoundsReport rep = estimate_extrema(p.flt, ocfg);
    json result;
    result["bwl"] = rep.bwl;
    result["bwu"] = rep.bwu;
    result["witness_low"] = witness_json(rep.lo);
    result["witness_high"] = witness_json(rep.hi);
    result["iterations"] = rep.iterations;
    if (rep.samples > 0) {
      result["samples"] = rep.samples;
      result["sample_min"] = rep.sample_min;
      result["sample_max"] = rep.sample_max;
    }
    json cfg = preset_config(p, seed);
    cfg["starts"] = ocfg.starts;
    cfg["max_iters"] = ocfg.max_iters;
    cfg["samples"] = ocfg.samples;
    emit(make_report("extrema", cfg, result), format);
    return 0;
  }

  if (*cmd_bw) {
    Source src = resolve_source(src_bw);
    const Preset& p = src.preset;
    BwReport rep = bw_constant(p.flt, bcfg);
    json result;
    result["sup"] = rep.sup_plain;
    result["sup_gram_form"] = rep.sup_gram;
    result["gap"] = rep.gap;
    result["witness"] = witness_json(rep.plain_witness);
    result["sample_sup"] = rep.sample_sup_plain;
    result["sample_sup_gram_form"] = rep.sample_sup_gram;
    result["samples"] = rep.samples;
    json cfg = preset_config(p, seed);
    cfg["starts"] = bcfg.starts;
    emit(make_report("bw", cfg, result), format);
    return 0;
  }

  auto emit_special = [&](const char* cmd, const Preset& p, const SpecialElementSet& s,
                          const SearchConfig& cfg) {
    json result;
    result["kind"] = special_kind_name(s.kind);
    result["count"] = s.elements.size();
    json els = json::array();
    for (const auto& el : s.elements) {
      json e;
      e["coords"] = el.coords;
      if (!el.coords_exact.empty()) e["coords_exact"] = el.coords_exact;
      e["residual"] = el.residual;
      e["norm"] = el.norm;
      if (el.norm_exact) e["norm_exact"] = *el.norm_exact;
      e["exact_verified"] = el.exact_verified;
      json spec = json::array();
      for (auto v : el.spectrum) {
        if (std::fabs(v.imag()) <= 1e-9)
          spec.push_back(v.real());
        else
          spec.push_back(json{{"re", v.real()}, {"im", v.imag()}});
      }
      e["spectrum"] = spec;
      els.push_back(e);
    }
    result["elements"] = els;
    json jcfg = preset_config(p, cfg.seed);
    jcfg["starts"] = cfg.starts;
    jcfg["grid"] = cfg.grid;
    emit(make_report(cmd, jcfg, result), format);
  };

  if (*cmd_id) {
    Source src = resolve_source(src_id);
    const Preset& p = src.preset;
    SpecialElementSet s = find_idempotents(p.flt, scfg, p.rational_mode ? &*p.exact : nullptr);
    emit_special("idempotents", p, s, scfg);
    return 0;
  }

  if (*cmd_sz) {
    Source src = resolve_source(src_sz);
    const Preset& p = src.preset;
    SpecialElementSet s = find_square_zero(p.flt, zcfg, p.rational_mode ? &*p.exact : nullptr);
    emit_special("square-zero", p, s, zcfg);
    return 0;
  }

  if (*cmd_sp) {
    Source src = resolve_source(src_sp);
    const Preset& p = src.preset;
    auto [er, ef] = parse_element(e_text, p);
    OrthogonalSpectrum sp = orthogonal_spectrum(p.flt, ef);
    json result;
    json vals = json::array();
    for (auto v : sp.values) {
      if (std::fabs(v.imag()) <= 1e-9)
        vals.push_back(v.real());
      else
        vals.push_back(json{{"re", v.real()}, {"im", v.imag()}});
    }
    result["values"] = vals;
    result["idempotent_residual"] = sp.idempotent_residual;
    if (sp.residual_warning) result["warning"] = "element is not an idempotent at 1e-9";
    json cfg = preset_config(p, seed);
    cfg["e"] = e_text;
    emit(make_report("spectrum", cfg, result), format);
    return 0;
  }

  if (*cmd_exp) {
    Source src = resolve_source(src_exp);
    const Preset& p = src.preset;
    json doc = p.rational_mode ? algebra_to_json(p.exact->alg, &p.exact->h)
                               : algebra_to_json(p.flt.alg, &p.flt.h);
    doc["meta"]["source"] = p.desc.canonical;
    save_algebra_file(out_path, doc);
    json result{{"path", out_path}, {"dim", p.flt.dim()}};
    emit(make_report("export", preset_config(p, seed), result), format);
    return 0;
  }

  if (*cmd_verify) {
    SuiteResult suite;
    json cfg;
    cfg["seed"] = seed;
    if (*v_table1) {
      auto eps = parse_rat(eps_text);
      if (!eps) throw CLI::ValidationError("--eps", "not a rational");
      SearchConfig c;
      c.seed = seed;
      c.threads = threads;
      cfg["eps"] = eps_text;
      suite = suite_table1(*eps, c);
    } else if (*v_herm) {
      ocfg.samples = vsamples;
      cfg["n"] = vn;
      cfg["level"] = vlevel;
      cfg["starts"] = ocfg.starts;
      cfg["samples"] = vsamples;
      suite = suite_herm_bounds(vn, vlevel, ocfg);
    } else if (*v_bw) {
      cfg["samples"] = bcfg.samples;
      if (bso > 0) {
        cfg["so"] = bso;
        suite = suite_bw_so(bso, bcfg);
      } else {
        cfg["n"] = bn;
        cfg["level"] = blevel;
        suite = suite_bw_mat(bn, blevel, bcfg);
      }
    } else if (*v_comp) {
      suite = suite_symmetric_composition(bcfg);
    } else if (*v_ids) {
      suite = suite_identities();
    } else if (*v_bianchi) {
      cfg["count"] = balgebras;
      suite = suite_bianchi(balgebras, seed);
    } else if (*v_norton) {
      cfg["n"] = vn;
      cfg["level"] = vlevel;
      cfg["samples"] = vsamples;
      suite = suite_norton(vn, vlevel, vsamples, seed, threads);
    } else if (*v_cdk) {
      cfg["n"] = vn;
      cfg["level"] = vlevel;
      cfg["samples"] = csamples;
      cfg["explore"] = cexplore;
      suite = suite_cdk(vn, vlevel, csamples, seed, cexplore);
    } else if (*v_cs) {
      suite = suite_constant_sect();
    } else if (*v_cons) {
      SearchConfig c;
      c.seed = seed;
      c.threads = threads;
      suite = suite_consequences(c);
    } else if (*v_opt) {
      suite = suite_optimizer_health(ocfg);
    }
    emit(make_report("verify", cfg, suite.to_json()), format);
    return suite.passed ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const element_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const preset_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
