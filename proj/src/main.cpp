#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superroot/report.hpp"

namespace {

using nlohmann::json;
using namespace superroot;

int write_report(const json& j, const std::string& path) {
  std::string text = canonical_dump(j);
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

// ---- root-set construction shared by the roots subcommands ----------------

struct GenOpts {
  std::string kind = "finite";
  std::string family = "A";
  int rank = 2;
  int m = 2;
  int n = 2;
  int t = 1;
  int t2 = 0;
  std::string lambda = "1";
  int window = 2;
};

void add_gen_opts(CLI::App* c, GenOpts& o) {
  c->add_option("--kind", o.kind, "finite, super, imaginary, d21, or affine")
      ->check(CLI::IsMember({"finite", "super", "imaginary", "d21", "affine"}));
  c->add_option("--family", o.family,
                "A/B/C/D/BC for finite, B/C/D/BC for super, A0T/C0T/ATT for imaginary");
  c->add_option("--rank", o.rank, "rank of a finite family");
  c->add_option("-m,--m", o.m, "number of positive-norm index pairs");
  c->add_option("-n,--n", o.n, "number of negative-norm index pairs");
  c->add_option("--t", o.t, "first size of an imaginary family");
  c->add_option("--t2", o.t2, "second size of an imaginary family");
  c->add_option("--lambda", o.lambda, "parameter of the d21 family, as p/q");
  c->add_option("--window", o.window, "degree window of the affine kind");
}

RootSet build_rootset(const GenOpts& o) {
  if (o.kind == "finite") return gen_finite(o.family, o.rank);
  if (o.kind == "super") return gen_super(o.family, o.m, o.n);
  if (o.kind == "imaginary") return gen_imaginary(o.family, o.t, o.t2);
  if (o.kind == "d21") return gen_d21(scalar_parse(o.lambda));
  OspContext ctx(o.m, o.n);
  GradedAlgebra loop = build_graded(ctx, data_laurent(o.window));
  return affinize(loop).root_set();
}

std::map<std::string, std::string> gen_inputs(const GenOpts& o) {
  std::map<std::string, std::string> in{{"kind", o.kind}};
  if (o.kind == "finite") {
    in["family"] = o.family;
    in["rank"] = std::to_string(o.rank);
  } else if (o.kind == "super") {
    in["family"] = o.family;
    in["m"] = std::to_string(o.m);
    in["n"] = std::to_string(o.n);
  } else if (o.kind == "imaginary") {
    in["family"] = o.family;
    in["t"] = std::to_string(o.t);
    in["t2"] = std::to_string(o.t2);
  } else if (o.kind == "d21") {
    in["lambda"] = o.lambda;
  } else {
    in["m"] = std::to_string(o.m);
    in["n"] = std::to_string(o.n);
    in["window"] = std::to_string(o.window);
  }
  return in;
}

// ---- module expressions ----------------------------------------------------

Module component_module(const std::string& name, const OspContext& ctx) {
  if (name == "g") return adjoint_module(ctx);
  if (name == "s") return second_module(ctx);
  if (name == "u") return natural_module(ctx);
  if (name == "trivial") return trivial_module(ctx);
  std::vector<std::string> gens = even_part_generators(ctx);
  if (name == "g0") return parity_component(adjoint_module(ctx), 0, gens);
  if (name == "g1") return parity_component(adjoint_module(ctx), 1, gens);
  if (name == "s0") return parity_component(second_module(ctx), 0, gens);
  if (name == "s1") return parity_component(second_module(ctx), 1, gens);
  if (name == "u0") return parity_component(natural_module(ctx), 0, gens);
  if (name == "u1") return parity_component(natural_module(ctx), 1, gens);
  throw std::invalid_argument("unknown module name: " + name);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Module expr_module(const std::string& expr, const OspContext& ctx) {
  std::vector<std::string> parts = split_list(expr, '*');
  if (parts.empty()) throw std::invalid_argument("empty module expression");
  Module acc = component_module(parts[0], ctx);
  for (size_t i = 1; i < parts.size(); ++i)
    acc = tensor_module(acc, component_module(parts[i], ctx));
  return acc;
}

// ---- coordinate data loading ----------------------------------------------

CoordinateData load_data(const std::string& spec, int window, std::string* file_hash) {
  if (auto b = builtin_data(spec, window)) return *b;
  std::ifstream f(spec);
  if (!f)
    throw std::invalid_argument("no builtin dataset or readable file named '" + spec + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  std::string bytes = buf.str();
  if (file_hash) *file_hash = fnv1a64_hex(bytes);
  return coordinate_data_from_json(json::parse(bytes));
}

bool is_builtin(const std::string& spec) { return builtin_data(spec, 0).has_value(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and certification of orthosymplectic root-graded algebras"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- roots ----------------------------------------------------------------
  CLI::App* roots = app.add_subcommand("roots", "root set generators and certificates");
  roots->require_subcommand(1);

  GenOpts gen_o, chk_o, prj_o;
  std::string gen_json, chk_json, prj_json;
  int prj_window = 2;

  CLI::App* roots_gen = roots->add_subcommand("gen", "generate a root set");
  add_gen_opts(roots_gen, gen_o);
  roots_gen->add_option("--json", gen_json, "report path, - for stdout");
  roots_gen->callback([&] {
    RootSet rs = build_rootset(gen_o);
    json j = make_envelope("roots gen", gen_inputs(gen_o));
    j["set"] = rootset_to_json(rs);
    j["root_count"] = rs.roots.size();
    rc = write_report(j, gen_json);
  });

  CLI::App* roots_chk = roots->add_subcommand("check", "run the axiom certificate on a root set");
  add_gen_opts(roots_chk, chk_o);
  roots_chk->add_option("--json", chk_json, "report path, - for stdout");
  roots_chk->callback([&] {
    RootSet rs = build_rootset(chk_o);
    EarsCheck c = check_ears(rs);
    Partition01 parts = partition_r01(rs);
    json j = make_envelope("roots check", gen_inputs(chk_o));
    j["set_name"] = rs.name;
    j["root_count"] = rs.roots.size();
    j["r0_count"] = parts.r0.size();
    j["r1_count"] = parts.r1.size();
    j["check"] = ears_to_json(c);
    int w = write_report(j, chk_json);
    rc = w != 0 ? w : (c.passed() ? 0 : 1);
  });

  CLI::App* roots_prj = roots->add_subcommand("project", "project a root set along its radical");
  add_gen_opts(roots_prj, prj_o);
  roots_prj->add_option("--fiber-window", prj_window, "degree window for the fiber conditions");
  roots_prj->add_option("--json", prj_json, "report path, - for stdout");
  roots_prj->callback([&] {
    RootSet rs = build_rootset(prj_o);
    RadicalProjection p = project_radical(rs);
    FiberConditionCheck f = check_fiber_conditions(p, prj_window);
    auto in = gen_inputs(prj_o);
    in["fiber_window"] = std::to_string(prj_window);
    json j = make_envelope("roots project", in);
    j["projection"] = projection_to_json(p);
    j["fiber_check"] = fibers_to_json(f);
    int w = write_report(j, prj_json);
    rc = w != 0 ? w : (f.passed() ? 0 : 1);
  });

  // ---- osp ------------------------------------------------------------------
  CLI::App* osp = app.add_subcommand("osp", "orthosymplectic algebras and their tables");
  osp->require_subcommand(1);

  int ob_m = 2, ob_n = 2;
  std::string ob_json;
  CLI::App* osp_build = osp->add_subcommand("build", "construct the algebra and certify its weights");
  osp_build->add_option("-m,--m", ob_m);
  osp_build->add_option("-n,--n", ob_n);
  osp_build->add_option("--json", ob_json, "report path, - for stdout");
  osp_build->callback([&] {
    OspContext ctx(ob_m, ob_n);
    int formula = osp_dim_formula(ob_m, ob_n);
    bool one_dim = true;
    std::set<Weight> weights;
    for (const auto& [w, idxs] : ctx.g_by_weight) {
      weights.insert(w);
      if (!w.is_zero() && idxs.size() != 1) one_dim = false;
    }
    weights.insert(Weight());
    RootSet rs = gen_super("B", ob_m, ob_n);
    bool match = (weights == rs.roots);
    json j = make_envelope("osp build", {{"m", std::to_string(ob_m)}, {"n", std::to_string(ob_n)}});
    j["dim"] = ctx.gdim();
    j["dim_formula"] = formula;
    j["formula_matches"] = (ctx.gdim() == formula);
    j["nonzero_weight_spaces_one_dim"] = one_dim;
    j["weights_match_roots"] = match;
    j["s_dim"] = ctx.sdim_alg();
    int w = write_report(j, ob_json);
    rc = w != 0 ? w : ((ctx.gdim() == formula && one_dim && match) ? 0 : 1);
  });

  int ot_m = 2, ot_n = 2, ot_gamma = -1;
  std::string ot_json;
  CLI::App* osp_table = osp->add_subcommand("table", "certify the displayed spanning table");
  osp_table->add_option("-m,--m", ot_m);
  osp_table->add_option("-n,--n", ot_n);
  osp_table->add_option("--gamma", ot_gamma, "sign condition, +1 or -1")
      ->check(CLI::IsMember({-1, 1}));
  osp_table->add_option("--json", ot_json, "report path, - for stdout");
  osp_table->callback([&] {
    TableReport t = verify_span_table(ot_m, ot_n, ot_gamma);
    json j = make_envelope("osp table", {{"m", std::to_string(ot_m)},
                                         {"n", std::to_string(ot_n)},
                                         {"gamma", std::to_string(ot_gamma)}});
    j["table"] = table_to_json(t);
    int w = write_report(j, ot_json);
    rc = w != 0 ? w : (t.span_complete ? 0 : 1);
  });

  int oc_m = 2, oc_n = 2;
  std::string oc_mod = "g", oc_json;
  CLI::App* osp_cas = osp->add_subcommand("casimir", "quadratic Casimir action on a module");
  osp_cas->add_option("-m,--m", oc_m);
  osp_cas->add_option("-n,--n", oc_n);
  osp_cas->add_option("--module", oc_mod, "g, s, or u")
      ->check(CLI::IsMember({"g", "s", "u"}));
  osp_cas->add_option("--json", oc_json, "report path, - for stdout");
  osp_cas->callback([&] {
    OspContext ctx(oc_m, oc_n);
    Module mod = component_module(oc_mod, ctx);
    CasimirResult c = casimir_on(ctx, mod);
    json j = make_envelope("osp casimir", {{"m", std::to_string(oc_m)},
                                           {"n", std::to_string(oc_n)},
                                           {"module", oc_mod}});
    j["module_dim"] = mod.dim;
    j["casimir"] = casimir_to_json(c);
    int w = write_report(j, oc_json);
    rc = w != 0 ? w : ((c.is_scalar && c.commutes) ? 0 : 1);
  });

  // ---- repn -----------------------------------------------------------------
  CLI::App* repn = app.add_subcommand("repn", "module decomposition and intertwiners");
  repn->require_subcommand(1);

  int rd_m = 2, rd_n = 2;
  std::string rd_input, rd_sum = "g,s,u", rd_emit, rd_json;
  bool rd_shuffle = false, rd_fast = false;
  std::uint64_t rd_seed = 0;
  CLI::App* repn_dec = repn->add_subcommand("decompose", "constituent multiset of a module");
  repn_dec->add_option("-m,--m", rd_m);
  repn_dec->add_option("-n,--n", rd_n);
  repn_dec->add_option("--input", rd_input, "module file to decompose");
  repn_dec->add_option("--sum", rd_sum, "comma list over g,s,u,trivial");
  repn_dec->add_flag("--shuffle", rd_shuffle, "apply a random basis change first");
  repn_dec->add_option("--seed", rd_seed, "seed of the basis change");
  repn_dec->add_flag("--fast", rd_fast, "multiplicity count only, skip generation");
  repn_dec->add_option("--emit", rd_emit, "write the constructed module to this file");
  repn_dec->add_option("--json", rd_json, "report path, - for stdout");
  repn_dec->callback([&] {
    std::map<std::string, std::string> in{{"m", std::to_string(rd_m)},
                                          {"n", std::to_string(rd_n)}};
    Module mod;
    if (!rd_input.empty()) {
      std::ifstream f(rd_input);
      if (!f) throw std::invalid_argument("cannot read " + rd_input);
      std::stringstream buf;
      buf << f.rdbuf();
      in["input_file_hash"] = fnv1a64_hex(buf.str());
      mod = module_from_json(json::parse(buf.str()), rd_m, rd_n);
      in["m"] = std::to_string(rd_m);
      in["n"] = std::to_string(rd_n);
    } else {
      in["sum"] = rd_sum;
      in["shuffle"] = rd_shuffle ? "1" : "0";
      in["seed"] = std::to_string(rd_seed);
      OspContext ctx(rd_m, rd_n);
      std::vector<Module> parts;
      for (const std::string& name : split_list(rd_sum, ','))
        parts.push_back(component_module(name, ctx));
      std::vector<const Module*> ptrs;
      for (const Module& p : parts) ptrs.push_back(&p);
      mod = direct_sum(ptrs);
      if (rd_shuffle) {
        std::mt19937_64 rng(rd_seed);
        mod = shuffled(mod, rng);
      }
      if (!rd_emit.empty()) {
        int w = write_report(module_to_json(mod, rd_m, rd_n), rd_emit);
        if (w != 0) {
          rc = w;
          return;
        }
      }
    }
    OspContext ctx(rd_m, rd_n);
    DecomposeResult d = rd_fast ? decompose_tags(mod, ctx) : decompose_full(mod, ctx);
    json j = make_envelope("repn decompose", in);
    j["module_dim"] = mod.dim;
    j["decompose"] = decompose_to_json(d);
    int w = write_report(j, rd_json);
    rc = w != 0 ? w : (d.complete ? 0 : 1);
  });

  int rh_m = 2, rh_n = 2;
  std::string rh_x = "g1*u0", rh_y = "s0", rh_over = "g0", rh_json;
  CLI::App* repn_hom = repn->add_subcommand("hom", "dimension of the intertwiner space");
  repn_hom->add_option("-m,--m", rh_m);
  repn_hom->add_option("-n,--n", rh_n);
  repn_hom->add_option("--x", rh_x, "source module expression, * for tensor");
  repn_hom->add_option("--y", rh_y, "target module expression");
  repn_hom->add_option("--over", rh_over, "acting subalgebra (g0)")
      ->check(CLI::IsMember({"g0"}));
  repn_hom->add_option("--json", rh_json, "report path, - for stdout");
  repn_hom->callback([&] {
    OspContext ctx(rh_m, rh_n);
    Module x = expr_module(rh_x, ctx);
    Module y = expr_module(rh_y, ctx);
    std::vector<std::string> gens = even_part_generators(ctx);
    auto basis = hom_space(x, y, gens);
    json j = make_envelope("repn hom", {{"m", std::to_string(rh_m)},
                                        {"n", std::to_string(rh_n)},
                                        {"over", rh_over},
                                        {"x", rh_x},
                                        {"y", rh_y}});
    j["x_dim"] = x.dim;
    j["y_dim"] = y.dim;
    j["hom_dim"] = basis.size();
    rc = write_report(j, rh_json);
  });

  // ---- graded -----------------------------------------------------------------
  CLI::App* graded = app.add_subcommand("graded", "coordinate data and graded assembly");
  graded->require_subcommand(1);

  struct GradedOpts {
    int m = 2, n = 2, window = 2;
    std::string data = "trivial", json_path;
  };
  auto add_graded_opts = [](CLI::App* c, GradedOpts& o) {
    c->add_option("-m,--m", o.m);
    c->add_option("-n,--n", o.n);
    c->add_option("--data", o.data, "trivial, laurent, hermitian, m2, or a file");
    c->add_option("--window", o.window, "degree window of the laurent dataset");
    c->add_option("--json", o.json_path, "report path, - for stdout");
  };
  auto graded_prepare = [](GradedOpts& o, CLI::App* c,
                           std::map<std::string, std::string>& in) -> CoordinateData {
    if (o.data == "m2") {
      if ((c->count("-m") || c->count("-n")) && (o.m != 1 || o.n != 1))
        throw CLI::ValidationError("--data m2", "this dataset is sized for m=1, n=1");
      o.m = 1;
      o.n = 1;
    }
    std::string file_hash;
    CoordinateData d = load_data(o.data, o.window, &file_hash);
    in["m"] = std::to_string(o.m);
    in["n"] = std::to_string(o.n);
    in["data"] = o.data;
    if (is_builtin(o.data))
      in["window"] = std::to_string(d.window);
    else
      in["data_file_hash"] = file_hash;
    return d;
  };

  GradedOpts gv_o;
  CLI::App* graded_verify = graded->add_subcommand("verify-data", "axioms of a coordinate package");
  add_graded_opts(graded_verify, gv_o);
  graded_verify->callback([&] {
    std::map<std::string, std::string> in;
    CoordinateData d = graded_prepare(gv_o, graded_verify, in);
    DataCheck c = verify_data(d, gv_o.m, gv_o.n);
    json j = make_envelope("graded verify-data", in);
    j["data_name"] = d.name;
    j["check"] = datacheck_to_json(c);
    int w = write_report(j, gv_o.json_path);
    rc = w != 0 ? w : (c.passed() ? 0 : 1);
  });

  GradedOpts gb_o;
  CLI::App* graded_build = graded->add_subcommand("build", "assemble the graded algebra");
  add_graded_opts(graded_build, gb_o);
  graded_build->callback([&] {
    std::map<std::string, std::string> in;
    CoordinateData d = graded_prepare(gb_o, graded_build, in);
    OspContext ctx(gb_o.m, gb_o.n);
    GradedAlgebra g = build_graded(ctx, d);
    std::map<std::string, int> sector_dims{{"G", 0}, {"S", 0}, {"U", 0}, {"D", 0}};
    for (const BElem& b : g.basis) {
      if (b.sector == Sector::G) ++sector_dims["G"];
      if (b.sector == Sector::S) ++sector_dims["S"];
      if (b.sector == Sector::U) ++sector_dims["U"];
      if (b.sector == Sector::D) ++sector_dims["D"];
    }
    json j = make_envelope("graded build", in);
    j["data_name"] = d.name;
    j["dim"] = g.dim();
    j["sector_dims"] = sector_dims;
    j["rejected_pairs"] = g.rejected_count();
    j["weight_support"] = json::array();
    for (const auto& [w, idxs] : g.by_weight)
      j["weight_support"].push_back(
          json::array({weight_to_json(w), static_cast<int>(idxs.size())}));
    rc = write_report(j, gb_o.json_path);
  });

  GradedOpts gj_o;
  bool gj_exhaustive = false;
  long gj_samples = 0;
  std::uint64_t gj_seed = 0;
  CLI::App* graded_jac = graded->add_subcommand("jacobi", "graded identity sweep");
  add_graded_opts(graded_jac, gj_o);
  graded_jac->add_flag("--exhaustive", gj_exhaustive, "check every triple");
  graded_jac->add_option("--sampled", gj_samples, "check this many sampled triples");
  graded_jac->add_option("--seed", gj_seed, "seed of the sample stream");
  graded_jac->callback([&] {
    std::map<std::string, std::string> in;
    CoordinateData d = graded_prepare(gj_o, graded_jac, in);
    bool exhaustive = gj_exhaustive || gj_samples <= 0;
    in["mode"] = exhaustive ? "exhaustive" : "sampled";
    if (!exhaustive) {
      in["samples"] = std::to_string(gj_samples);
      in["seed"] = std::to_string(gj_seed);
    }
    OspContext ctx(gj_o.m, gj_o.n);
    GradedAlgebra g = build_graded(ctx, d);
    JacobiReport r = verify_super_jacobi(g, exhaustive, gj_samples, gj_seed);
    json j = make_envelope("graded jacobi", in);
    j["data_name"] = d.name;
    j["dim"] = g.dim();
    j["jacobi"] = jacobi_to_json(r);
    int w = write_report(j, gj_o.json_path);
    rc = w != 0 ? w : (r.passed() ? 0 : 1);
  });

  GradedOpts gr_o;
  CLI::App* graded_rg = graded->add_subcommand("check-rg", "root-graded certificate");
  add_graded_opts(graded_rg, gr_o);
  graded_rg->callback([&] {
    std::map<std::string, std::string> in;
    CoordinateData d = graded_prepare(gr_o, graded_rg, in);
    OspContext ctx(gr_o.m, gr_o.n);
    GradedAlgebra g = build_graded(ctx, d);
    RootGradedCheck c = verify_root_graded(g);
    json j = make_envelope("graded check-rg", in);
    j["data_name"] = d.name;
    j["dim"] = g.dim();
    j["check"] = rootgraded_to_json(c);
    int w = write_report(j, gr_o.json_path);
    rc = w != 0 ? w : (c.passed() ? 0 : 1);
  });

  // ---- eals -------------------------------------------------------------------
  CLI::App* eals = app.add_subcommand("eals", "affinization and its certificates");
  eals->require_subcommand(1);

  int ea_m = 2, ea_n = 2, ea_w = 2;
  std::string ea_json;
  CLI::App* eals_aff = eals->add_subcommand("affinize", "extend a loop algebra by Lam1 and d1");
  eals_aff->add_option("-m,--m", ea_m);
  eals_aff->add_option("-n,--n", ea_n);
  eals_aff->add_option("--window", ea_w, "degree window of the loop algebra");
  eals_aff->add_option("--json", ea_json, "report path, - for stdout");
  eals_aff->callback([&] {
    OspContext ctx(ea_m, ea_n);
    GradedAlgebra loop = build_graded(ctx, data_laurent(ea_w));
    Eals v = affinize(loop);
    json j = make_envelope("eals affinize", {{"m", std::to_string(ea_m)},
                                             {"n", std::to_string(ea_n)},
                                             {"window", std::to_string(ea_w)}});
    j["dim"] = v.dim();
    j["loop_dim"] = loop.dim();
    j["algebra"] = eals_to_json(v);
    rc = write_report(j, ea_json);
  });

  int ec_m = 2, ec_n = 2, ec_w = 2;
  long ec_samples = 100000;
  std::uint64_t ec_seed = 0;
  std::string ec_input, ec_json;
  CLI::App* eals_chk = eals->add_subcommand("check", "axioms of the affinized algebra");
  eals_chk->add_option("-m,--m", ec_m);
  eals_chk->add_option("-n,--n", ec_n);
  eals_chk->add_option("--window", ec_w, "degree window of the loop algebra");
  eals_chk->add_option("--input", ec_input, "read the algebra from an affinize report");
  eals_chk->add_option("--sampled", ec_samples, "invariance sample count");
  eals_chk->add_option("--seed", ec_seed, "seed of the sample stream");
  eals_chk->callback([&] {
    std::map<std::string, std::string> in{{"samples", std::to_string(ec_samples)},
                                          {"seed", std::to_string(ec_seed)}};
    Eals v;
    if (!ec_input.empty()) {
      std::ifstream f(ec_input);
      if (!f) throw std::invalid_argument("cannot read " + ec_input);
      std::stringstream buf;
      buf << f.rdbuf();
      in["input_file_hash"] = fnv1a64_hex(buf.str());
      json parsed = json::parse(buf.str());
      v = eals_from_json(parsed.contains("algebra") ? parsed.at("algebra") : parsed);
    } else {
      in["m"] = std::to_string(ec_m);
      in["n"] = std::to_string(ec_n);
      in["window"] = std::to_string(ec_w);
      OspContext ctx(ec_m, ec_n);
      v = affinize(build_graded(ctx, data_laurent(ec_w)));
    }
    EalsCheck c = check_eals(v, ec_samples, ec_seed);
    json j = make_envelope("eals check", in);
    j["dim"] = v.dim();
    j["check"] = ealscheck_to_json(c);
    int w = write_report(j, ec_json);
    rc = w != 0 ? w : (c.passed() ? 0 : 1);
  });
  eals_chk->add_option("--json", ec_json, "report path, - for stdout");

  int eo_m = 2, eo_n = 2, eo_w = 2;
  std::string eo_json;
  CLI::App* eals_core = eals->add_subcommand("core", "core, its center, and the quotient constants");
  eals_core->add_option("-m,--m", eo_m);
  eals_core->add_option("-n,--n", eo_n);
  eals_core->add_option("--window", eo_w, "degree window of the loop algebra");
  eals_core->add_option("--json", eo_json, "report path, - for stdout");
  eals_core->callback([&] {
    OspContext ctx(eo_m, eo_n);
    GradedAlgebra loop = build_graded(ctx, data_laurent(eo_w));
    Eals v = affinize(loop);
    CoreReport c = analyze_core(v, loop);
    json j = make_envelope("eals core", {{"m", std::to_string(eo_m)},
                                         {"n", std::to_string(eo_n)},
                                         {"window", std::to_string(eo_w)}});
    j["dim"] = v.dim();
    j["loop_dim"] = loop.dim();
    j["core"] = core_to_json(c);
    int w = write_report(j, eo_json);
    rc = w != 0 ? w : (c.passed() ? 0 : 1);
  });

  auto t0 = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "# elapsed_ms "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";
  return rc;
}
