#include "superroot/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace superroot {

namespace {

std::string pair_str(const Weight& a, const Weight& b) {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

void note_failure(std::vector<std::string>& fails, std::string msg) {
  if (fails.size() < 16) fails.push_back(std::move(msg));
}

}  // namespace

std::set<Weight> RootSet::radical_roots() const {
  std::set<Weight> out;
  for (const Weight& a : roots) {
    bool rad = true;
    for (const Weight& b : roots)
      if (form(a, b) != 0) {
        rad = false;
        break;
      }
    if (rad) out.insert(a);
  }
  return out;
}

Weight reflect(const RootSet& rs, const Weight& alpha, const Weight& beta) {
  Scalar nn = rs.norm(alpha);
  if (nn == 0) throw std::invalid_argument("reflection needs a real root");
  Scalar c = 2 * rs.form(beta, alpha) / nn;
  if (c.get_den() != 1)
    throw std::runtime_error("non-integral reflection coefficient at " +
                             pair_str(alpha, beta));
  long k = c.get_num().get_si();
  return beta - alpha * static_cast<int>(k);
}

std::set<Weight> weyl_orbit(const RootSet& rs, const std::vector<Weight>& reflecting,
                            const std::vector<Weight>& seeds) {
  std::set<Weight> seen(seeds.begin(), seeds.end());
  std::deque<Weight> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    Weight w = todo.front();
    todo.pop_front();
    for (const Weight& a : reflecting) {
      Weight r = reflect(rs, a, w);
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return seen;
}

RootString root_string(const RootSet& rs, const Weight& alpha, const Weight& beta) {
  RootString out;
  int p = 0, q = 0;
  while (rs.contains(beta - alpha * (p + 1))) ++p;
  while (rs.contains(beta + alpha * (q + 1))) ++q;
  out.p = p;
  out.q = q;
  for (int k = -p; k <= q; ++k) out.elems.push_back(beta + alpha * k);

  // stray members beyond the walked range break the string
  for (const Weight& rho : rs.roots) {
    Weight diff = rho - beta;
    if (diff.is_zero()) continue;
    // diff == k*alpha for integer k?
    if (alpha.is_zero()) continue;
    auto [s0, c0] = *alpha.coeffs().begin();
    int d0 = diff.coeff(s0);
    if (d0 % c0 != 0) continue;
    int k = d0 / c0;
    if (alpha * k == diff && (k < -p || k > q)) out.unbroken = false;
  }

  Scalar nn = rs.norm(alpha);
  if (nn == 0) {
    out.cartan_matches = false;
  } else {
    Scalar cart = 2 * rs.form(beta, alpha) / nn;
    out.cartan_matches = (cart.get_den() == 1) &&
                         (cart == Scalar(p - q));
  }
  return out;
}

EarsCheck check_ears(const RootSet& rs) {
  EarsCheck out;

  out.zero_in_set = rs.roots.count(Weight{}) != 0;
  if (!out.zero_in_set) note_failure(out.failures, "0 missing from the set");

  out.negation_closed = true;
  for (const Weight& a : rs.roots)
    if (!rs.contains(-a)) {
      out.negation_closed = false;
      note_failure(out.failures, "negation missing for " + a.to_string());
    }

  std::set<Weight> rad = rs.radical_roots();
  std::vector<Weight> real_roots, isotropic;
  for (const Weight& a : rs.roots) {
    if (a.is_zero()) continue;
    if (rs.norm(a) != 0)
      real_roots.push_back(a);
    else if (!rad.count(a))
      isotropic.push_back(a);
  }

  out.integrality = true;
  for (const Weight& a : real_roots)
    for (const Weight& b : rs.roots) {
      Scalar c = 2 * rs.form(b, a) / rs.norm(a);
      if (c.get_den() != 1) {
        out.integrality = false;
        note_failure(out.failures, "non-integral Cartan number at " + pair_str(a, b));
      }
    }

  out.strings_ok = true;
  for (const Weight& a : real_roots)
    for (const Weight& b : rs.roots) {
      RootString s = root_string(rs, a, b);
      if (!s.unbroken || !s.cartan_matches) {
        out.strings_ok = false;
        note_failure(out.failures,
                     std::string(!s.unbroken ? "broken" : "mismatched") +
                         " string through " + pair_str(a, b));
      }
    }

  out.isotropic_links_ok = true;
  for (const Weight& a : isotropic)
    for (const Weight& b : rs.roots) {
      if (rs.form(a, b) == 0) continue;
      if (!rs.contains(b + a) && !rs.contains(b - a)) {
        out.isotropic_links_ok = false;
        note_failure(out.failures, "isolated isotropic pair " + pair_str(a, b));
      }
    }

  // span rank and nondegeneracy of the form on the rational span
  std::vector<SVec<Sym>> vecs;
  for (const Weight& a : rs.roots)
    if (!a.is_zero()) vecs.push_back(a.to_svec());
  RowBasis<Sym> span;
  for (const auto& v : vecs) span.insert(v);
  out.lattice_rank = span.rank();
  auto rows = span.sorted_rows();
  std::vector<SVec<int>> gram_rows;
  for (const auto& r : rows) {
    SVec<int> g;
    for (size_t j = 0; j < rows.size(); ++j) {
      Scalar v = rs.gram.form(r, rows[j]);
      if (v != 0) g.emplace(static_cast<int>(j), v);
    }
    gram_rows.push_back(std::move(g));
  }
  out.form_nondegenerate = rank_of(gram_rows) == static_cast<int>(rows.size());

  // irreducibility: the non-radical part is not an orthogonal disjoint union
  std::vector<Weight> cross;
  for (const Weight& a : rs.roots)
    if (!a.is_zero() && !rad.count(a)) cross.push_back(a);
  if (cross.empty()) {
    out.irreducible = false;
  } else {
    std::set<Weight> seen{cross.front()};
    std::deque<Weight> todo{cross.front()};
    while (!todo.empty()) {
      Weight w = todo.front();
      todo.pop_front();
      for (const Weight& b : cross)
        if (!seen.count(b) && rs.form(w, b) != 0) {
          seen.insert(b);
          todo.push_back(b);
        }
    }
    out.irreducible = seen.size() == cross.size();
  }

  return out;
}

// ---- generators ------------------------------------------------------------

RootSet gen_finite(const std::string& type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (type == "A" && rank < 2)
    throw std::invalid_argument("type A needs rank >= 2");
  if (type == "D" && rank < 3)
    throw std::invalid_argument("type D needs rank >= 3");

  RootSet rs;
  rs.name = type + "_" + std::to_string(rank);
  int nsym = (type == "A") ? rank + 1 : rank;
  for (int i = 1; i <= nsym; ++i) {
    rs.symbols.push_back(sym_e(i));
    rs.gram.set(sym_e(i), sym_e(i), Scalar(1));
  }
  rs.roots.insert(Weight{});

  auto add_pm = [&rs](const Weight& w) {
    rs.roots.insert(w);
    rs.roots.insert(-w);
  };

  if (type == "A") {
    for (int i = 1; i <= nsym; ++i)
      for (int j = 1; j <= nsym; ++j)
        if (i != j) rs.roots.insert(Weight::of(sym_e(i)) - Weight::of(sym_e(j)));
    return rs;
  }

  bool shorts = (type == "B" || type == "BC");
  bool doubles = (type == "C" || type == "BC");
  bool pairs = true;
  if (type != "B" && type != "C" && type != "D" && type != "BC")
    throw std::invalid_argument("unknown finite type '" + type + "'");

  if (shorts)
    for (int i = 1; i <= rank; ++i) add_pm(Weight::of(sym_e(i)));
  if (doubles)
    for (int i = 1; i <= rank; ++i) add_pm(Weight::of(sym_e(i), 2));
  if (pairs)
    for (int i = 1; i <= rank; ++i)
      for (int j = i + 1; j <= rank; ++j) {
        add_pm(Weight::of(sym_e(i)) + Weight::of(sym_e(j)));
        add_pm(Weight::of(sym_e(i)) - Weight::of(sym_e(j)));
      }
  return rs;
}

RootSet gen_super(const std::string& family, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("both ranks must be positive");
  if (family == "D" && m < 2) throw std::invalid_argument("family D needs m >= 2");

  RootSet rs;
  rs.name = family + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  for (int i = 1; i <= m; ++i) {
    rs.symbols.push_back(sym_e(i));
    rs.gram.set(sym_e(i), sym_e(i), Scalar(1));
  }
  for (int p = 1; p <= n; ++p) {
    rs.symbols.push_back(sym_d(p));
    rs.gram.set(sym_d(p), sym_d(p), Scalar(-1));
  }
  rs.roots.insert(Weight{});

  auto add_pm = [&rs](const Weight& w) {
    rs.roots.insert(w);
    rs.roots.insert(-w);
  };

  bool e_short = (family == "B" || family == "BC");
  bool e_double = (family == "C" || family == "BC");
  bool e_pairs_all = (family != "D");
  bool ok = (family == "B" || family == "C" || family == "D" || family == "BC");
  if (!ok) throw std::invalid_argument("unknown family '" + family + "'");

  if (e_short)
    for (int i = 1; i <= m; ++i) add_pm(Weight::of(sym_e(i)));
  if (e_double)
    for (int i = 1; i <= m; ++i) add_pm(Weight::of(sym_e(i), 2));
  (void)e_pairs_all;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      add_pm(Weight::of(sym_e(i)) + Weight::of(sym_e(j)));
      add_pm(Weight::of(sym_e(i)) - Weight::of(sym_e(j)));
    }

  bool d_short = (family == "B" || family == "BC");
  for (int p = 1; p <= n; ++p) {
    if (d_short) add_pm(Weight::of(sym_d(p)));
    add_pm(Weight::of(sym_d(p), 2));
    for (int q = p + 1; q <= n; ++q) {
      add_pm(Weight::of(sym_d(p)) + Weight::of(sym_d(q)));
      add_pm(Weight::of(sym_d(p)) - Weight::of(sym_d(q)));
    }
  }

  for (int i = 1; i <= m; ++i)
    for (int p = 1; p <= n; ++p) {
      add_pm(Weight::of(sym_e(i)) + Weight::of(sym_d(p)));
      add_pm(Weight::of(sym_e(i)) - Weight::of(sym_d(p)));
    }
  return rs;
}

RootSet gen_imaginary(const std::string& family, int t, int t2) {
  RootSet rs;
  rs.roots.insert(Weight{});
  Sym star = sym_star();
  rs.symbols.push_back(star);
  rs.gram.set(star, star, Scalar(0));

  auto add_e = [&rs](int count) {
    for (int i = 1; i <= count; ++i) {
      rs.symbols.push_back(sym_e(i));
      rs.gram.set(sym_e(i), sym_e(i), Scalar(1));
    }
  };
  auto add_pm = [&rs](const Weight& w) {
    rs.roots.insert(w);
    rs.roots.insert(-w);
  };

  std::vector<Weight> reflecting;

  if (family == "A0T") {
    if (t < 2) throw std::invalid_argument("A0T needs t >= 2");
    rs.name = "A.(0," + std::to_string(t) + ")";
    add_e(t);
    rs.gram.set(star, sym_e(1), Scalar(1));
    for (int i = 1; i <= t; ++i)
      for (int j = 1; j <= t; ++j)
        if (i != j) {
          Weight w = Weight::of(sym_e(i)) - Weight::of(sym_e(j));
          rs.roots.insert(w);
          reflecting.push_back(w);
        }
  } else if (family == "C0T") {
    if (t < 1) throw std::invalid_argument("C0T needs t >= 1");
    rs.name = "C.(0," + std::to_string(t) + ")";
    add_e(t);
    rs.gram.set(star, sym_e(1), Scalar(1));
    for (int i = 1; i <= t; ++i) {
      add_pm(Weight::of(sym_e(i), 2));
      reflecting.push_back(Weight::of(sym_e(i), 2));
      for (int j = i + 1; j <= t; ++j) {
        add_pm(Weight::of(sym_e(i)) + Weight::of(sym_e(j)));
        add_pm(Weight::of(sym_e(i)) - Weight::of(sym_e(j)));
        reflecting.push_back(Weight::of(sym_e(i)) + Weight::of(sym_e(j)));
        reflecting.push_back(Weight::of(sym_e(i)) - Weight::of(sym_e(j)));
      }
    }
  } else if (family == "ATT") {
    if (t < 2 || t2 < 2) throw std::invalid_argument("ATT needs both sizes >= 2");
    rs.name = "A.(" + std::to_string(t) + "," + std::to_string(t2) + ")";
    add_e(t);
    for (int p = 1; p <= t2; ++p) {
      rs.symbols.push_back(sym_d(p));
      rs.gram.set(sym_d(p), sym_d(p), Scalar(-1));
    }
    rs.gram.set(star, sym_e(1), Scalar(1));
    rs.gram.set(star, sym_d(1), Scalar(1));
    for (int i = 1; i <= t; ++i)
      for (int j = 1; j <= t; ++j)
        if (i != j) {
          Weight w = Weight::of(sym_e(i)) - Weight::of(sym_e(j));
          rs.roots.insert(w);
          reflecting.push_back(w);
        }
    for (int p = 1; p <= t2; ++p)
      for (int q = 1; q <= t2; ++q)
        if (p != q) {
          Weight w = Weight::of(sym_d(p)) - Weight::of(sym_d(q));
          rs.roots.insert(w);
          reflecting.push_back(w);
        }
  } else {
    throw std::invalid_argument("unknown imaginary family '" + family + "'");
  }

  std::set<Weight> orbit = weyl_orbit(rs, reflecting, {Weight::of(star)});
  for (const Weight& w : orbit) add_pm(w);
  return rs;
}

RootSet gen_d21(const Scalar& lambda) {
  if (lambda == 0 || lambda == -1)
    throw std::invalid_argument("parameter must avoid 0 and -1");
  RootSet rs;
  rs.name = "D(2,1;" + scalar_to_string(lambda) + ")";
  rs.experimental = true;
  Sym ds = sym_star(), a1 = sym_e(1), a2 = sym_e(2);
  rs.symbols = {ds, a1, a2};
  rs.gram.set(ds, ds, Scalar(0));
  rs.gram.set(ds, a1, Scalar(1));
  rs.gram.set(ds, a2, lambda);
  rs.gram.set(a1, a1, Scalar(2));
  rs.gram.set(a2, a2, 2 * lambda);
  rs.roots.insert(Weight{});

  Weight w1 = Weight::of(a1), w2 = Weight::of(a2);
  Weight w3 = Weight::of(ds, 2) - w1 - w2;
  Weight dstar = Weight::of(ds);
  auto add_pm = [&rs](const Weight& w) {
    rs.roots.insert(w);
    rs.roots.insert(-w);
  };
  add_pm(w1);
  add_pm(w2);
  add_pm(w3);
  for (const Weight& w : weyl_orbit(rs, {w1, w2, w3}, {dstar})) add_pm(w);
  return rs;
}

// ---- structure --------------------------------------------------------------

Partition01 partition_r01(const RootSet& rs) {
  Partition01 out;

  std::vector<Weight> re;
  for (const Weight& a : rs.roots)
    if (rs.is_real(a)) re.push_back(a);

  // orthogonality components of the real part
  std::map<Weight, int> comp;
  int ncomp = 0;
  for (const Weight& a : re) {
    if (comp.count(a)) continue;
    int id = ncomp++;
    std::deque<Weight> todo{a};
    comp[a] = id;
    while (!todo.empty()) {
      Weight w = todo.front();
      todo.pop_front();
      for (const Weight& b : re)
        if (!comp.count(b) && rs.form(w, b) != 0) {
          comp[b] = id;
          todo.push_back(b);
        }
    }
  }

  std::vector<bool> is_doubled(ncomp, false);
  std::vector<bool> has_negative(ncomp, false);
  std::vector<Scalar> min_abs_norm(ncomp, Scalar(0));
  for (const Weight& a : re) {
    int id = comp[a];
    if (rs.contains(a * 2)) is_doubled[id] = true;
    Scalar nn = rs.norm(a);
    if (nn < 0) has_negative[id] = true;
    Scalar an = abs(nn);
    if (min_abs_norm[id] == 0 || an < min_abs_norm[id]) min_abs_norm[id] = an;
  }

  bool both_doubled = ncomp == 2 && is_doubled[0] && is_doubled[1];
  if (both_doubled) {
    // remove the short roots of the negative-norm family (the second factor)
    int side2 = has_negative[1] ? 1 : (has_negative[0] ? 0 : 1);
    out.r0.insert(Weight{});
    for (const Weight& a : re) {
      bool short2 = comp[a] == side2 && abs(rs.norm(a)) == min_abs_norm[side2];
      if (!short2) out.r0.insert(a);
    }
  } else {
    out.r0.insert(Weight{});
    for (const Weight& a : re)
      if (!rs.contains(a * 2)) out.r0.insert(a);
  }

  for (const Weight& a : rs.roots)
    if (!out.r0.count(a)) out.r1.insert(a);
  return out;
}

RadicalProjection project_radical(const RootSet& rs) {
  RadicalProjection out;

  // rational span of the roots
  RowBasis<Sym> span;
  for (const Weight& a : rs.roots)
    if (!a.is_zero()) span.insert(a.to_svec());
  auto rows = span.sorted_rows();
  int k = static_cast<int>(rows.size());

  // radical = nullspace of the Gram matrix on the span
  std::vector<SVec<int>> gram_rows;
  for (int i = 0; i < k; ++i) {
    SVec<int> g;
    for (int j = 0; j < k; ++j) {
      Scalar v = rs.gram.form(rows[i], rows[j]);
      if (v != 0) g.emplace(j, v);
    }
    gram_rows.push_back(std::move(g));
  }
  std::vector<int> unknowns(k);
  for (int i = 0; i < k; ++i) unknowns[i] = i;
  auto null_coords = solve_nullspace(gram_rows, unknowns);
  RowBasis<Sym> radical;
  for (const auto& nc : null_coords) {
    SVec<Sym> v;
    for (const auto& [i, c] : nc) axpy(v, c, rows[i]);
    radical.insert(v);
  }
  out.radical_basis = radical.sorted_rows();
  int rad_dim = radical.rank();
  int comp_dim = k - rad_dim;

  // canonical complement: prefer unit symbol vectors, in symbol order
  std::vector<SVec<Sym>> comp;
  std::vector<Sym> comp_syms;
  auto keeps_nondegenerate = [&](const SVec<Sym>& cand) {
    std::vector<SVec<Sym>> test = comp;
    test.push_back(cand);
    std::vector<SVec<int>> g;
    for (size_t i = 0; i < test.size(); ++i) {
      SVec<int> row;
      for (size_t j = 0; j < test.size(); ++j) {
        Scalar v = rs.gram.form(test[i], test[j]);
        if (v != 0) row.emplace(static_cast<int>(j), v);
      }
      g.push_back(std::move(row));
    }
    return rank_of(g) == static_cast<int>(test.size());
  };
  for (const Sym& s : rs.symbols) {
    if (static_cast<int>(comp.size()) == comp_dim) break;
    SVec<Sym> cand{{s, Scalar(1)}};
    if (!span.contains(cand)) continue;
    if (keeps_nondegenerate(cand)) {
      comp.push_back(cand);
      comp_syms.push_back(s);
    }
  }
  bool pure = static_cast<int>(comp.size()) == comp_dim;
  if (!pure) {
    out.notes.push_back("complement is not spanned by pure symbols; using span rows");
    for (const auto& r : rows) {
      if (static_cast<int>(comp.size()) == comp_dim) break;
      if (keeps_nondegenerate(r)) comp.push_back(r);
    }
    if (static_cast<int>(comp.size()) != comp_dim)
      throw std::runtime_error("no nondegenerate complement found");
  }

  // projection data: alpha = (component in comp) + (component in radical)
  std::vector<SVec<Sym>> all = comp;
  for (const auto& r : out.radical_basis) all.push_back(r);

  out.projected.name = rs.name + "/rad";
  out.projected.experimental = rs.experimental;
  if (pure) {
    out.projected.symbols = comp_syms;
    for (size_t i = 0; i < comp_syms.size(); ++i)
      for (size_t j = i; j < comp_syms.size(); ++j) {
        Scalar v = rs.gram.value(comp_syms[i], comp_syms[j]);
        if (v != 0) out.projected.gram.set(comp_syms[i], comp_syms[j], v);
      }
  } else {
    out.projected.symbols = rs.symbols;
    out.projected.gram = rs.gram;
  }

  for (const Weight& a : rs.roots) {
    auto coords = coordinates_in_span(all, a.to_svec());
    if (!coords) throw std::runtime_error("root outside its own span");
    SVec<Sym> proj;
    for (int i = 0; i < comp_dim; ++i) axpy(proj, (*coords)[i], comp[i]);
    Weight adot;
    for (const auto& [s, c] : proj) {
      if (c.get_den() != 1)
        throw std::runtime_error("non-integral radical projection of " + a.to_string());
      adot.add(s, static_cast<int>(c.get_num().get_si()));
    }
    Weight offset = a - adot;
    out.projected.roots.insert(adot);
    out.fibers[adot].insert(offset);
  }
  return out;
}

FiberConditionCheck check_fiber_conditions(const RadicalProjection& proj, int window) {
  FiberConditionCheck out;

  auto in_window = [window](const Weight& w) {
    for (const auto& [s, c] : w.coeffs())
      if (c > window || c < -window) return false;
    return true;
  };

  // F: common fiber over the isotropic nonzero projected roots
  std::set<Weight> fset;
  bool have_f = false;
  for (const auto& [adot, fib] : proj.fibers) {
    if (adot.is_zero() || proj.projected.norm(adot) != 0) continue;
    if (!have_f) {
      fset = fib;
      have_f = true;
    } else if (fset != fib) {
      out.failures.push_back("isotropic fibers differ at " + adot.to_string());
    }
  }
  if (!have_f) {
    out.failures.push_back("no isotropic projected roots; nothing to check");
    out.s_minus_2s = out.s_plus_f = out.two_s_plus_f = false;
    return out;
  }

  for (const auto& [adot, fib] : proj.fibers) {
    for (const Weight& a : fib) {
      for (const Weight& b : fib) {
        Weight w = a - b * 2;
        if (!in_window(w)) {
          ++out.skipped_out_of_window;
        } else {
          ++out.checked;
          if (!fib.count(w)) {
            out.s_minus_2s = false;
            out.failures.push_back("S-2S escapes S at " + adot.to_string() + ": " +
                                   w.to_string());
          }
        }
      }
      for (const Weight& f : fset) {
        Weight w1 = a + f;
        if (!in_window(w1)) {
          ++out.skipped_out_of_window;
        } else {
          ++out.checked;
          if (!fib.count(w1)) {
            out.s_plus_f = false;
            out.failures.push_back("S+F escapes S at " + adot.to_string() + ": " +
                                   w1.to_string());
          }
        }
        Weight w2 = a * 2 + f;
        if (!in_window(w2)) {
          ++out.skipped_out_of_window;
        } else {
          ++out.checked;
          if (!fset.count(w2)) {
            out.two_s_plus_f = false;
            out.failures.push_back("2S+F escapes F at " + adot.to_string() + ": " +
                                   w2.to_string());
          }
        }
      }
    }
  }
  return out;
}

}  // namespace superroot
