#include "superroot/report.hpp"

#include <stdexcept>

namespace superroot {

using nlohmann::json;

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json make_envelope(const std::string& command,
                   const std::map<std::string, std::string>& inputs) {
  std::string folded;
  for (const auto& [k, v] : inputs) folded += k + "=" + v + "\n";
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["inputs"] = json::object();
  for (const auto& [k, v] : inputs) j["inputs"][k] = v;
  j["input_hash"] = fnv1a64_hex(folded);
  return j;
}

std::string scalar_str(const Scalar& v) { return v.get_str(); }

Scalar scalar_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Scalar v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  v.canonicalize();
  return v;
}

json svec_to_json(const SVec<int>& v) {
  json out = json::array();
  for (const auto& [k, c] : v) out.push_back(json::array({k, scalar_str(c)}));
  return out;
}

SVec<int> svec_from_json(const json& j) {
  SVec<int> out;
  for (const auto& e : j) {
    Scalar c = scalar_parse(e.at(1).get<std::string>());
    if (c != 0) out[e.at(0).get<int>()] = std::move(c);
  }
  return out;
}

Sym sym_from_label(const std::string& s) {
  if (s == "a*") return sym_star();
  if (s.size() >= 2) {
    int ord = std::stoi(s.substr(1));
    if (s[0] == 'e') return sym_e(ord);
    if (s[0] == 'd') return sym_d(ord);
    if (s[0] == 'L') return sym_L(ord);
  }
  throw std::invalid_argument("bad symbol label: " + s);
}

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (const auto& [s, c] : w.coeffs()) out.push_back(json::array({s.label(), c}));
  return out;
}

Weight weight_from_json(const json& j) {
  Weight w;
  for (const auto& e : j) w.add(sym_from_label(e.at(0).get<std::string>()), e.at(1).get<int>());
  return w;
}

json rootset_to_json(const RootSet& rs) {
  json j;
  j["name"] = rs.name;
  j["symbols"] = json::array();
  for (const Sym& s : rs.symbols) j["symbols"].push_back(s.label());
  j["gram"] = json::array();
  for (const auto& [key, v] : rs.gram.entries())
    j["gram"].push_back(json::array({key.first.label(), key.second.label(), scalar_str(v)}));
  j["roots"] = json::array();
  for (const Weight& w : rs.roots) j["roots"].push_back(weight_to_json(w));
  j["experimental"] = rs.experimental;
  return j;
}

RootSet rootset_from_json(const json& j) {
  RootSet rs;
  rs.name = j.at("name").get<std::string>();
  for (const auto& e : j.at("symbols")) rs.symbols.push_back(sym_from_label(e.get<std::string>()));
  for (const auto& e : j.at("gram"))
    rs.gram.set(sym_from_label(e.at(0).get<std::string>()),
                sym_from_label(e.at(1).get<std::string>()),
                scalar_parse(e.at(2).get<std::string>()));
  for (const auto& e : j.at("roots")) rs.roots.insert(weight_from_json(e));
  if (j.contains("experimental")) rs.experimental = j.at("experimental").get<bool>();
  return rs;
}

json spmat_to_json(const SpMat& a) {
  json j;
  j["dim"] = a.dim();
  j["entries"] = json::array();
  for (const auto& [r, row] : a.rows())
    for (const auto& [c, v] : row) j["entries"].push_back(json::array({r, c, scalar_str(v)}));
  return j;
}

SpMat spmat_from_json(const json& j) {
  SpMat a(j.at("dim").get<int>());
  for (const auto& e : j.at("entries"))
    a.set(e.at(0).get<int>(), e.at(1).get<int>(), scalar_parse(e.at(2).get<std::string>()));
  return a;
}

json module_to_json(const Module& mod, int m, int n) {
  json j;
  j["m"] = m;
  j["n"] = n;
  j["dim"] = mod.dim;
  j["parity"] = mod.parity;
  j["labels"] = mod.labels;
  j["weights"] = json::array();
  for (const Weight& w : mod.weights) j["weights"].push_back(weight_to_json(w));
  j["action"] = json::object();
  for (const auto& [g, mat] : mod.action) j["action"][g] = spmat_to_json(mat);
  j["gen_parity"] = json::object();
  for (const auto& [g, p] : mod.gen_parity) j["gen_parity"][g] = p;
  return j;
}

Module module_from_json(const json& j, int& m, int& n) {
  m = j.at("m").get<int>();
  n = j.at("n").get<int>();
  Module mod;
  mod.dim = j.at("dim").get<int>();
  mod.parity = j.at("parity").get<std::vector<int>>();
  mod.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& e : j.at("weights")) mod.weights.push_back(weight_from_json(e));
  for (const auto& [g, mat] : j.at("action").items()) mod.action[g] = spmat_from_json(mat);
  for (const auto& [g, p] : j.at("gen_parity").items()) mod.gen_parity[g] = p.get<int>();
  return mod;
}

namespace {

json ij_table_json(const std::map<std::pair<int, int>, SVec<int>>& t) {
  json out = json::array();
  for (const auto& [key, v] : t)
    out.push_back(json::array({key.first, key.second, svec_to_json(v)}));
  return out;
}

void ij_table_parse(const json& j, std::map<std::pair<int, int>, SVec<int>>& t) {
  for (const auto& e : j)
    t[{e.at(0).get<int>(), e.at(1).get<int>()}] = svec_from_json(e.at(2));
}

json ij_set_json(const std::set<std::pair<int, int>>& s) {
  json out = json::array();
  for (const auto& [i, jx] : s) out.push_back(json::array({i, jx}));
  return out;
}

void ij_set_parse(const json& j, std::set<std::pair<int, int>>& s) {
  for (const auto& e : j) s.insert({e.at(0).get<int>(), e.at(1).get<int>()});
}

}  // namespace

json coordinate_data_to_json(const CoordinateData& d) {
  json j;
  j["name"] = d.name;
  j["window"] = d.window;
  j["a_labels"] = d.a_labels;
  j["a_parity"] = d.a_parity;
  j["a_eta"] = d.a_eta;
  j["a_degree"] = d.a_degree;
  j["unit"] = d.unit;
  j["a_product"] = ij_table_json(d.a_product);
  j["a_reject"] = ij_set_json(d.a_reject);
  j["c_labels"] = d.c_labels;
  j["c_parity"] = d.c_parity;
  j["c_degree"] = d.c_degree;
  j["act"] = ij_table_json(d.act);
  j["act_reject"] = ij_set_json(d.act_reject);
  j["chi"] = ij_table_json(d.chi);
  j["chi_reject"] = ij_set_json(d.chi_reject);
  j["d_labels"] = d.d_labels;
  j["d_parity"] = d.d_parity;
  j["d_degree"] = d.d_degree;
  j["d_bracket"] = ij_table_json(d.d_bracket);
  j["d_act_a"] = ij_table_json(d.d_act_a);
  j["d_act_c"] = ij_table_json(d.d_act_c);
  j["pairing"] = ij_table_json(d.pairing);
  return j;
}

CoordinateData coordinate_data_from_json(const json& j) {
  CoordinateData d;
  d.name = j.at("name").get<std::string>();
  d.window = j.at("window").get<int>();
  d.a_labels = j.at("a_labels").get<std::vector<std::string>>();
  d.a_parity = j.at("a_parity").get<std::vector<int>>();
  d.a_eta = j.at("a_eta").get<std::vector<int>>();
  d.a_degree = j.at("a_degree").get<std::vector<int>>();
  d.unit = j.at("unit").get<int>();
  ij_table_parse(j.at("a_product"), d.a_product);
  ij_set_parse(j.at("a_reject"), d.a_reject);
  d.c_labels = j.at("c_labels").get<std::vector<std::string>>();
  d.c_parity = j.at("c_parity").get<std::vector<int>>();
  d.c_degree = j.at("c_degree").get<std::vector<int>>();
  ij_table_parse(j.at("act"), d.act);
  ij_set_parse(j.at("act_reject"), d.act_reject);
  ij_table_parse(j.at("chi"), d.chi);
  ij_set_parse(j.at("chi_reject"), d.chi_reject);
  d.d_labels = j.at("d_labels").get<std::vector<std::string>>();
  d.d_parity = j.at("d_parity").get<std::vector<int>>();
  d.d_degree = j.at("d_degree").get<std::vector<int>>();
  ij_table_parse(j.at("d_bracket"), d.d_bracket);
  ij_table_parse(j.at("d_act_a"), d.d_act_a);
  ij_table_parse(j.at("d_act_c"), d.d_act_c);
  ij_table_parse(j.at("pairing"), d.pairing);
  return d;
}

json eals_to_json(const Eals& v) {
  const int D = v.dim();
  json j;
  j["m"] = v.m;
  j["n"] = v.n;
  j["window"] = v.window;
  j["dim"] = D;
  j["labels"] = v.labels;
  j["parity"] = v.parity;
  j["degree"] = v.degree;
  j["roots"] = json::array();
  for (const Weight& w : v.roots) j["roots"].push_back(weight_to_json(w));
  j["lam1"] = v.lam1;
  j["d1"] = v.d1;
  j["cartan"] = v.cartan;
  j["cartan_names"] = v.cartan_names;
  json table = json::array();
  json rejected = json::array();
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      long f = v.flat(a, b);
      if (v.rejected[f])
        rejected.push_back(json::array({a, b}));
      else if (!v.table[f].empty())
        table.push_back(json::array({a, b, svec_to_json(v.table[f])}));
    }
  j["table"] = std::move(table);
  j["rejected"] = std::move(rejected);
  json form = json::array();
  for (const auto& [key, val] : v.form_entries)
    form.push_back(json::array({key.first, key.second, scalar_str(val)}));
  j["form"] = std::move(form);
  return j;
}

Eals eals_from_json(const json& j) {
  Eals v;
  v.m = j.at("m").get<int>();
  v.n = j.at("n").get<int>();
  v.window = j.at("window").get<int>();
  v.labels = j.at("labels").get<std::vector<std::string>>();
  v.parity = j.at("parity").get<std::vector<int>>();
  v.degree = j.at("degree").get<std::vector<int>>();
  for (const auto& e : j.at("roots")) v.roots.push_back(weight_from_json(e));
  v.lam1 = j.at("lam1").get<int>();
  v.d1 = j.at("d1").get<int>();
  v.cartan = j.at("cartan").get<std::vector<int>>();
  v.cartan_names = j.at("cartan_names").get<std::vector<std::string>>();
  const int D = v.dim();
  if (D != j.at("dim").get<int>()) throw std::invalid_argument("inconsistent dimension");
  v.table.assign(static_cast<long>(D) * D, {});
  v.rejected.assign(static_cast<long>(D) * D, 0);
  for (const auto& e : j.at("table"))
    v.table[v.flat(e.at(0).get<int>(), e.at(1).get<int>())] = svec_from_json(e.at(2));
  for (const auto& e : j.at("rejected"))
    v.rejected[v.flat(e.at(0).get<int>(), e.at(1).get<int>())] = 1;
  for (const auto& e : j.at("form"))
    v.form_entries[{e.at(0).get<int>(), e.at(1).get<int>()}] =
        scalar_parse(e.at(2).get<std::string>());
  return v;
}

json ears_to_json(const EarsCheck& c) {
  json j;
  j["zero_in_set"] = c.zero_in_set;
  j["negation_closed"] = c.negation_closed;
  j["integrality"] = c.integrality;
  j["strings_ok"] = c.strings_ok;
  j["isotropic_links_ok"] = c.isotropic_links_ok;
  j["lattice_rank"] = c.lattice_rank;
  j["form_nondegenerate"] = c.form_nondegenerate;
  j["irreducible"] = c.irreducible;
  j["failures"] = c.failures;
  j["passed"] = c.passed();
  return j;
}

json projection_to_json(const RadicalProjection& p) {
  json j;
  j["projected"] = rootset_to_json(p.projected);
  j["radical_basis"] = json::array();
  for (const auto& v : p.radical_basis) {
    json row = json::array();
    for (const auto& [s, c] : v) row.push_back(json::array({s.label(), scalar_str(c)}));
    j["radical_basis"].push_back(std::move(row));
  }
  j["fibers"] = json::array();
  for (const auto& [w, offsets] : p.fibers) {
    json row;
    row["root"] = weight_to_json(w);
    row["offsets"] = json::array();
    for (const Weight& o : offsets) row["offsets"].push_back(weight_to_json(o));
    j["fibers"].push_back(std::move(row));
  }
  j["notes"] = p.notes;
  return j;
}

json fibers_to_json(const FiberConditionCheck& c) {
  json j;
  j["s_minus_2s"] = c.s_minus_2s;
  j["s_plus_f"] = c.s_plus_f;
  j["two_s_plus_f"] = c.two_s_plus_f;
  j["checked"] = c.checked;
  j["skipped_out_of_window"] = c.skipped_out_of_window;
  j["failures"] = c.failures;
  j["passed"] = c.passed();
  return j;
}

json table_to_json(const TableReport& t) {
  json j;
  j["gamma"] = t.gamma;
  j["solved_dim"] = t.solved_dim;
  j["expected_dim"] = t.expected_dim;
  j["span_complete"] = t.span_complete;
  j["rows"] = json::array();
  for (const TableRow& r : t.rows) {
    json row;
    row["row"] = r.row;
    row["weight"] = r.weight;
    row["applicable"] = r.applicable;
    row["zero_claim"] = r.zero_claim;
    row["printed_ok"] = r.printed_ok;
    row["flagged"] = r.flagged;
    row["printed"] = r.printed;
    row["derived"] = r.derived;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

json casimir_to_json(const CasimirResult& c) {
  json j;
  j["value"] = scalar_str(c.value);
  j["is_scalar"] = c.is_scalar;
  j["commutes"] = c.commutes;
  j["odd_flip"] = c.odd_flip;
  return j;
}

json decompose_to_json(const DecomposeResult& d) {
  json j;
  j["tags"] = json::object();
  for (const auto& [t, k] : d.tags) j["tags"][t] = k;
  j["primitive_total"] = d.primitive_total;
  j["dims_match"] = d.dims_match;
  j["generated_ok"] = d.generated_ok;
  j["complete"] = d.complete;
  return j;
}

json datacheck_to_json(const DataCheck& c) {
  json j;
  j["unital"] = c.unital;
  j["assoc"] = c.assoc;
  j["eta_antihom"] = c.eta_antihom;
  j["module_ok"] = c.module_ok;
  j["chi_ok"] = c.chi_ok;
  j["diamond_heart_ok"] = c.diamond_heart_ok;
  j["pairing_sectors"] = c.pairing_sectors;
  j["derivation_ok"] = c.derivation_ok;
  j["derivation_sectors"] = c.derivation_sectors;
  j["derivation_pairing"] = c.derivation_pairing;
  j["cyclic_ok"] = c.cyclic_ok;
  j["action_a_on_a"] = c.action_a_on_a;
  j["action_a_on_c"] = c.action_a_on_c;
  j["action_c_on_a"] = c.action_c_on_a;
  j["action_c_on_c"] = c.action_c_on_c;
  j["surjective"] = c.surjective;
  j["checked"] = c.checked;
  j["skipped"] = c.skipped;
  j["failures"] = c.failures;
  j["passed"] = c.passed();
  return j;
}

json jacobi_to_json(const JacobiReport& r) {
  json j;
  j["exhaustive"] = r.exhaustive;
  j["triples"] = r.triples;
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  j["failed"] = r.failed;
  j["witness"] = r.witness;
  j["passed"] = r.passed();
  return j;
}

json rootgraded_to_json(const RootGradedCheck& c) {
  json j;
  j["support_ok"] = c.support_ok;
  j["grading_ok"] = c.grading_ok;
  j["zero_piece_ok"] = c.zero_piece_ok;
  j["toral_ok"] = c.toral_ok;
  j["fine"] = c.fine;
  j["predivision"] = c.predivision;
  j["support_tag"] = c.support_tag;
  j["checked"] = c.checked;
  j["skipped"] = c.skipped;
  j["failures"] = c.failures;
  j["passed"] = c.passed();
  return j;
}

json ealscheck_to_json(const EalsCheck& c) {
  json j;
  j["form_even"] = c.form_even;
  j["form_supersymmetric"] = c.form_supersymmetric;
  j["form_invariant"] = c.form_invariant;
  j["form_nondegenerate"] = c.form_nondegenerate;
  j["cartan_ok"] = c.cartan_ok;
  j["axiom1"] = c.axiom1;
  j["coroot_identity"] = c.coroot_identity;
  j["axiom2"] = c.axiom2;
  j["axiom2_tight"] = c.axiom2_tight;
  j["cube_witness"] = c.cube_witness;
  j["center_is_lam1"] = c.center_is_lam1;
  j["checked"] = c.checked;
  j["skipped"] = c.skipped;
  j["failures"] = c.failures;
  j["passed"] = c.passed();
  return j;
}

json core_to_json(const CoreReport& c) {
  json j;
  j["core_matches"] = c.core_matches;
  j["center_is_lam1"] = c.center_is_lam1;
  j["quotient_matches"] = c.quotient_matches;
  j["core_dim"] = c.core_dim;
  j["center_dim"] = c.center_dim;
  j["compared"] = c.compared;
  j["skipped"] = c.skipped;
  j["failures"] = c.failures;
  j["passed"] = c.passed();
  return j;
}

}  // namespace superroot
