// Acceptance gate: runs the numbered end-to-end certifications and prints
// exactly one pass/fail line per criterion.  Exit status is zero when every
// executed criterion passes.
//
//   acceptance [--only N] [--cli PATH]
//
// --only runs a single criterion; --cli names the command-line binary used
// by the determinism criterion (two runs of each command, byte-compared).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "superroot/eals.hpp"
#include "superroot/osp.hpp"
#include "superroot/repn.hpp"
#include "superroot/rootsys.hpp"

using namespace superroot;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string fmt_ms(long ms) { return std::to_string(ms) + "ms"; }

// step counts of the alpha-string through beta by direct membership walking
std::pair<int, int> walk_string(const RootSet& rs, const Weight& alpha, const Weight& beta) {
  int p = 0, q = 0;
  while (rs.contains(beta - alpha * (p + 1))) ++p;
  while (rs.contains(beta + alpha * (q + 1))) ++q;
  return {p, q};
}

// ---- criterion 1: dimensions and simple weight spaces ----------------------

Outcome c1() {
  const int sizes[4][3] = {{1, 1, 12}, {2, 2, 40}, {4, 2, 82}, {4, 4, 144}};
  std::string dims;
  long big_ms = 0;
  for (const auto& s : sizes) {
    const int m = s[0], n = s[1], want = s[2];
    Clock::time_point t0 = Clock::now();
    if (osp_dim_formula(m, n) != want)
      return {false, "closed-form dimension wrong at (" + std::to_string(m) + "," +
                         std::to_string(n) + ")"};
    OspContext ctx(m, n);
    if (ctx.gdim() != want)
      return {false, "constructed dimension " + std::to_string(ctx.gdim()) + " != " +
                         std::to_string(want) + " at (" + std::to_string(m) + "," +
                         std::to_string(n) + ")"};
    std::set<Weight> weights;
    for (const auto& [w, idxs] : ctx.g_by_weight) {
      weights.insert(w);
      if (!w.is_zero() && idxs.size() != 1)
        return {false, "weight space of " + w.to_string() + " has dimension " +
                           std::to_string(idxs.size()) + " at (" + std::to_string(m) + "," +
                           std::to_string(n) + ")"};
    }
    weights.insert(Weight());
    if (weights != gen_super("B", m, n).roots)
      return {false, "weight support differs from the generated BC-type set at (" +
                         std::to_string(m) + "," + std::to_string(n) + ")"};
    long ms = elapsed_ms(t0);
    if (m == 4 && n == 4) big_ms = ms;
    if (!dims.empty()) dims += "/";
    dims += std::to_string(want);
  }
  if (big_ms >= 10000)
    return {false, "largest size took " + fmt_ms(big_ms) + ", budget is 10s"};
  return {true, "dims " + dims + ", all nonzero weight spaces simple, largest size in " +
                    fmt_ms(big_ms)};
}

// ---- criterion 2: spanning-table certification ------------------------------

Outcome c2() {
  std::string note;
  for (int gamma : {-1, +1}) {
    TableReport rep = verify_span_table(2, 2, gamma);
    if (!rep.span_complete)
      return {false, "solved rows do not span at gamma=" + std::to_string(gamma)};
    std::set<int> flagged;
    for (const auto& r : rep.rows)
      if (r.flagged) flagged.insert(r.row);
    if (flagged != std::set<int>{10, 13, 14}) {
      std::string got;
      for (int r : flagged) got += std::to_string(r) + " ";
      return {false, "flagged rows {" + got + "} at gamma=" + std::to_string(gamma) +
                         ", expected {10 13 14}"};
    }
    for (const auto& r : rep.rows) {
      if (r.flagged && r.derived.empty())
        return {false, "flagged row " + std::to_string(r.row) +
                           " carries no derived spanning vector"};
      if (r.row == 10 && r.weight != "d1+d2")
        return {false, "row 10 weight is " + r.weight};
    }
    note += "gamma=" + std::to_string(gamma) + " solves " + std::to_string(rep.solved_dim) +
            "/" + std::to_string(rep.expected_dim) + "; ";
  }
  return {true, note + "rows 10,13,14 flagged with derived replacements under both signs"};
}

// ---- criterion 3: exhaustive graded identity on the plain algebra ----------

Outcome c3() {
  Clock::time_point t0 = Clock::now();
  OspContext ctx(2, 2);
  GradedAlgebra g = build_graded(ctx, data_trivial());
  JacobiReport rep = verify_super_jacobi(g, true, 0, 0);
  long ms = elapsed_ms(t0);
  if (rep.triples != 40L * 40 * 40)
    return {false, "triple count " + std::to_string(rep.triples) + " != 64000"};
  if (!rep.passed())
    return {false, "identity fails: " + rep.witness};
  if (ms >= 60000) return {false, "sweep took " + fmt_ms(ms) + ", budget is 60s"};
  return {true, "64000 triples exhaustively zero in " + fmt_ms(ms)};
}

// ---- criterion 4: Casimir eigenvalues ---------------------------------------

Outcome c4() {
  struct Pin {
    int m, n;
    const char* mod;
    int value;
  };
  const Pin pins[] = {{2, 2, "u", 0}, {2, 2, "g", -2}, {2, 2, "s", 2},
                      {4, 2, "u", 4}, {4, 2, "g", 6},  {4, 2, "s", 10}};
  std::string note;
  int last_m = 0, last_n = 0;
  OspContext ctx(2, 2);
  for (const Pin& p : pins) {
    if (p.m != last_m || p.n != last_n) {
      ctx = OspContext(p.m, p.n);
      last_m = p.m;
      last_n = p.n;
      note += " (" + std::to_string(p.m) + "," + std::to_string(p.n) + "):";
    }
    Module mod = p.mod[0] == 'g'   ? adjoint_module(ctx)
                 : p.mod[0] == 's' ? second_module(ctx)
                                   : natural_module(ctx);
    CasimirResult c = casimir_on(ctx, mod);
    if (!c.is_scalar || !c.commutes)
      return {false, std::string("Casimir is not scalar+central on ") + p.mod};
    if (c.value != Scalar(p.value))
      return {false, std::string("Casimir on ") + p.mod + " at (" + std::to_string(p.m) +
                         "," + std::to_string(p.n) + ") is " + c.value.get_str() +
                         ", expected " + std::to_string(p.value)};
    note += std::string(" ") + p.mod + "=" + std::to_string(p.value);
  }
  return {true, "exact eigenvalues" + note};
}

// ---- criterion 5: vanishing intertwiner spaces ------------------------------

Outcome c5() {
  Clock::time_point t0 = Clock::now();
  OspContext ctx(2, 2);
  std::vector<std::string> gens = even_part_generators(ctx);
  Module g1 = parity_component(adjoint_module(ctx), 1, gens);
  Module s0 = parity_component(second_module(ctx), 0, gens);
  Module u0 = parity_component(natural_module(ctx), 0, gens);
  Module u1 = parity_component(natural_module(ctx), 1, gens);
  size_t d0 = hom_space(tensor_module(g1, u0), s0, gens).size();
  size_t d1 = hom_space(tensor_module(g1, u1), s0, gens).size();
  long ms = elapsed_ms(t0);
  if (d0 != 0 || d1 != 0)
    return {false, "intertwiner dimensions " + std::to_string(d0) + "," + std::to_string(d1) +
                       ", expected 0,0"};
  if (ms >= 600000) return {false, "took " + fmt_ms(ms) + ", budget is 10min"};
  return {true, "both intertwiner spaces are zero in " + fmt_ms(ms)};
}

// ---- criterion 6: round trip through shuffled direct sums -------------------

Outcome c6() {
  OspContext ctx(2, 2);
  Module g = adjoint_module(ctx);
  Module s = second_module(ctx);
  Module u = natural_module(ctx);
  Module tr = trivial_module(ctx);
  const Module* parts[4] = {&g, &s, &u, &tr};
  const char* names[4] = {"g", "s", "u", "trivial"};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    int count = 1 + static_cast<int>(rng() % 6);
    std::vector<const Module*> chosen;
    std::map<std::string, int> expected;
    for (int i = 0; i < count; ++i) {
      int pick = static_cast<int>(rng() % 4);
      chosen.push_back(parts[pick]);
      ++expected[names[pick]];
    }
    Module sum = direct_sum(chosen);
    Module hidden = shuffled(sum, rng);
    DecomposeResult dec = decompose_full(hidden, ctx);
    if (!dec.complete)
      return {false, "decomposition incomplete at seed " + std::to_string(seed)};
    if (dec.tags != expected) {
      std::string got, want;
      for (const auto& [k, v] : dec.tags) got += k + ":" + std::to_string(v) + " ";
      for (const auto& [k, v] : expected) want += k + ":" + std::to_string(v) + " ";
      return {false, "seed " + std::to_string(seed) + " recovered {" + got +
                         "}, expected {" + want + "}"};
    }
  }
  return {true, "50/50 shuffled sums of up to 6 constituents recovered exactly"};
}

// ---- criterion 7: root-set certificates and strings -------------------------

Outcome c7() {
  struct Named {
    std::string label;
    RootSet rs;
  };
  std::vector<Named> sets;
  sets.push_back({"B_2", gen_finite("B", 2)});
  sets.push_back({"C_2", gen_finite("C", 2)});
  sets.push_back({"BC_2", gen_finite("BC", 2)});
  sets.push_back({"D_3", gen_finite("D", 3)});
  sets.push_back({"A_2", gen_finite("A", 2)});
  sets.push_back({"B(2,2)", gen_super("B", 2, 2)});
  sets.push_back({"BC(2,2)", gen_super("BC", 2, 2)});
  sets.push_back({"A.(0,2)", gen_imaginary("A0T", 2)});
  for (const Named& nd : sets)
    if (!check_ears(nd.rs).passed()) return {false, "certificate fails on " + nd.label};

  RootSet broken = gen_finite("BC", 2);
  broken.roots.erase(Weight::of(sym_e(1)) + Weight::of(sym_e(2)));
  if (check_ears(broken).passed())
    return {false, "certificate still passes after deleting a root from BC_2"};

  RootSet bc2 = gen_finite("BC", 2);
  long pairs = 0;
  for (const Weight& alpha : bc2.roots) {
    if (!bc2.is_real(alpha)) continue;
    for (const Weight& beta : bc2.roots) {
      RootString st = root_string(bc2, alpha, beta);
      auto [p, q] = walk_string(bc2, alpha, beta);
      if (!st.unbroken || !st.cartan_matches || st.p != p || st.q != q)
        return {false, "string through " + beta.to_string() + " along " + alpha.to_string() +
                           " disagrees with the direct walk"};
      ++pairs;
    }
  }
  return {true, "8 certificates pass, deletion is detected, " + std::to_string(pairs) +
                    " strings match the direct walk"};
}

// ---- criterion 8: coordinate data to graded algebras ------------------------

Outcome c8() {
  OspContext ctx(2, 2);
  struct Ds {
    std::string label;
    CoordinateData dat;
    bool exhaustive;
    bool want_rg;
  };
  std::vector<Ds> sets;
  sets.push_back({"plain", data_trivial(), true, true});
  sets.push_back({"laurent", data_laurent(2), false, true});
  sets.push_back({"hermitian", data_hermitian(), false, false});
  std::string note;
  for (const Ds& d : sets) {
    DataCheck dc = verify_data(d.dat, 2, 2);
    if (!dc.passed()) return {false, d.label + ": coordinate axioms fail"};
    GradedAlgebra g = build_graded(ctx, d.dat);
    JacobiReport jr = d.exhaustive ? verify_super_jacobi(g, true, 0, 0)
                                   : verify_super_jacobi(g, false, 100000, 0);
    if (!jr.passed()) return {false, d.label + ": graded identity fails: " + jr.witness};
    if (d.want_rg) {
      RootGradedCheck rg = verify_root_graded(g);
      if (!rg.passed() || !rg.fine || !rg.predivision)
        return {false, d.label + ": root-graded certificate fails"};
    }
    note += d.label + " dim " + std::to_string(g.dim()) +
            (d.exhaustive ? " (exhaustive)" : " (100000 sampled)") + "; ";
  }
  return {true, note + "fine+predivision hold where claimed"};
}

// ---- criterion 9: affinization and its core ---------------------------------

Outcome c9() {
  OspContext ctx(2, 2);
  GradedAlgebra loop = build_graded(ctx, data_laurent(2));
  Eals v = affinize(loop);
  EalsCheck chk = check_eals(v, 100000, 0);
  if (!chk.passed()) {
    std::string why = chk.failures.empty() ? "unnamed axiom" : chk.failures.front();
    return {false, "axiom certificate fails: " + why};
  }
  CoreReport core = analyze_core(v, loop);
  if (!core.passed()) {
    std::string why = core.failures.empty() ? "core analysis" : core.failures.front();
    return {false, why};
  }
  return {true, "dim " + std::to_string(v.dim()) + ", all axioms hold, core " +
                    std::to_string(core.core_dim) + " with 1-dim center, " +
                    std::to_string(core.compared) + " quotient constants equal the loop table"};
}

// ---- criterion 10: radical projection of the affine roots -------------------

Outcome c10() {
  OspContext ctx(2, 2);
  Eals v = affinize(build_graded(ctx, data_laurent(2)));
  RootSet aff = v.root_set();
  RadicalProjection proj = project_radical(aff);
  if (proj.radical_basis.size() != 1)
    return {false, "radical rank " + std::to_string(proj.radical_basis.size()) + ", expected 1"};
  RootSet fin = gen_super("B", 2, 2);
  if (proj.projected.roots != fin.roots)
    return {false, "projected roots differ from the finite BC-type set"};
  FiberConditionCheck fib = check_fiber_conditions(proj, 2);
  if (!fib.passed()) {
    std::string why = fib.failures.empty() ? "fiber condition" : fib.failures.front();
    return {false, why};
  }
  return {true, "projection has " + std::to_string(proj.projected.roots.size()) +
                    " roots matching the finite set; fiber conditions hold (" +
                    std::to_string(fib.checked) + " checked, " +
                    std::to_string(fib.skipped_out_of_window) + " out of window)"};
}

// ---- criterion 11: byte-identical reports ------------------------------------

std::string run_capture(const std::string& cmd, int& rc) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    rc = -1;
    return "";
  }
  std::string out;
  char buf[1 << 16];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  rc = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome c11(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli path provided"};
  const std::vector<std::string> commands = {
      "roots gen --kind super --family B -m 2 -n 2",
      "roots check --kind finite --family BC --rank 2",
      "roots project --kind affine -m 2 -n 2 --window 2 --fiber-window 2",
      "osp build -m 2 -n 2",
      "osp table -m 2 -n 2 --gamma -1",
      "osp casimir -m 2 -n 2 --module s",
      "repn decompose --sum g,s,u --shuffle --seed 0 --fast -m 2 -n 2",
      "repn hom -m 2 -n 2 --x g1*u0 --y s0 --over g0",
      "graded jacobi --data laurent --window 2 -m 2 -n 2 --sampled 20000 --seed 0",
      "graded check-rg --data trivial -m 2 -n 2",
      "eals affinize -m 2 -n 2 --window 2",
      "eals check -m 2 -n 2 --window 2 --sampled 20000 --seed 0",
  };
  for (const std::string& cmd : commands) {
    int rc1 = 0, rc2 = 0;
    std::string a = run_capture(cli + " " + cmd, rc1);
    std::string b = run_capture(cli + " " + cmd, rc2);
    if (rc1 != 0 || rc2 != 0)
      return {false, "`" + cmd + "` exited " + std::to_string(rc1) + "/" +
                         std::to_string(rc2)};
    if (a.empty()) return {false, "`" + cmd + "` produced no report"};
    if (a != b) return {false, "`" + cmd + "` differs between runs"};
  }
  return {true, std::to_string(commands.size()) +
                    " commands byte-identical across two runs each"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (arg == "--cli" && i + 1 < argc)
      cli = argv[++i];
    else {
      std::cerr << "usage: acceptance [--only N] [--cli PATH]\n";
      return 2;
    }
  }

  std::vector<std::pair<int, std::function<Outcome()>>> gates = {
      {1, c1},
      {2, c2},
      {3, c3},
      {4, c4},
      {5, c5},
      {6, c6},
      {7, c7},
      {8, c8},
      {9, c9},
      {10, c10},
      {11, [&cli] { return c11(cli); }},
  };

  int run = 0, failed = 0;
  for (const auto& [num, fn] : gates) {
    if (only != 0 && num != only) continue;
    ++run;
    Clock::time_point t0 = Clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.ok) ++failed;
    std::ostringstream line;
    line << "criterion " << (num < 10 ? " " : "") << num << ": "
         << (out.ok ? "PASS" : "FAIL") << " — " << out.detail << " [" << fmt_ms(elapsed_ms(t0))
         << "]";
    std::cout << line.str() << std::endl;
  }
  if (run == 0) {
    std::cerr << "no such criterion: " << only << "\n";
    return 2;
  }
  std::cout << "acceptance: " << (run - failed) << "/" << run << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
