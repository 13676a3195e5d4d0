#include "superroot/osp.hpp"

#include <sstream>
#include <stdexcept>

namespace superroot {

namespace {

// basis label of the natural space by flat index, for rendering
std::string nat_label(const SpaceDims& d, int flat) { return d.index_of(flat).label(); }

std::string render_pairs(const SpaceDims& d, const SVec<std::pair<int, int>>& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [rc, coef] : v) {
    Scalar c = coef;
    std::string sign = "+";
    if (c < 0) {
      sign = "-";
      c = -c;
    }
    if (!first || sign == "-") os << sign;
    if (c != 1) os << scalar_to_string(c) << "*";
    os << "e(" << nat_label(d, rc.first) << "," << nat_label(d, rc.second) << ")";
    first = false;
  }
  return os.str();
}

template <typename K>
void prune_zeros(SVec<K>& v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->second == 0)
      it = v.erase(it);
    else
      ++it;
  }
}

}  // namespace

long osp_dim_formula(int m, int n) {
  return static_cast<long>(m) * (2 * m + 1) + static_cast<long>(n) * (2 * n + 1) +
         2L * n * (2 * m + 1);
}

// Solve, weight slice by weight slice, the linear condition
//   (s v_a, v_b) = gamma (-1)^{|s||a|} (v_a, s v_b)   for all a, b.
// With F_{rc} = (v_r, v_c) this reads, entry by entry,
//   F_{b',b} s_{b',a} - gamma (-1)^{|s||a|} F_{a,a'} s_{a',b} = 0
// where a', b' are the bar-partners of a, b.  Both unknowns in one equation
// carry the same Cartan weight, so the system splits by weight.
GammaSlices solve_gamma_slices(const SpaceDims& d, int gamma) {
  if (gamma != 1 && gamma != -1) throw std::invalid_argument("gamma must be +1 or -1");
  const int N = d.dim();
  const SpMat F = form_matrix(d);
  auto barf = [&](int i) { return d.flat(d.index_of(i).conj()); };
  auto wt_of = [&](int i) -> Weight {
    SuperIndex s = d.index_of(i);
    switch (s.kind) {
      case SuperIndex::Kind::Zero: return Weight();
      case SuperIndex::Kind::Even: return Weight::of(sym_e(s.ord));
      case SuperIndex::Kind::EvenBar: return -Weight::of(sym_e(s.ord));
      case SuperIndex::Kind::Odd: return Weight::of(sym_d(s.ord));
      case SuperIndex::Kind::OddBar: return -Weight::of(sym_d(s.ord));
    }
    throw std::logic_error("bad index kind");
  };

  std::map<Weight, std::vector<std::pair<int, int>>> pairs;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) pairs[wt_of(r) - wt_of(c)].push_back({r, c});

  GammaSlices out;
  for (const auto& [w, unknowns] : pairs) {
    const int p_s = (d.parity_of(unknowns.front().first) +
                     d.parity_of(unknowns.front().second)) % 2;
    std::vector<SVec<std::pair<int, int>>> eqs;
    for (const auto& [r, c] : unknowns) {
      // equation indexed by (a, b) = (c, bar(r)); its first term is s_{r,c}
      const int a = c, b = barf(r);
      SVec<std::pair<int, int>> eq;
      eq[{r, c}] += F.at(r, b);
      Scalar coef = -Scalar(gamma) * F.at(a, barf(a));
      if (p_s == 1 && d.parity_of(a) == 1) coef = -coef;
      eq[{barf(a), b}] += coef;
      prune_zeros(eq);
      if (!eq.empty()) eqs.push_back(eq);
    }
    auto basis = solve_nullspace(eqs, unknowns);
    if (basis.empty()) continue;
    out.total_dim += static_cast<int>(basis.size());
    out.slices[w] = std::move(basis);
  }
  return out;
}

OspContext::OspContext(int m, int n) : dims{m, n}, F(1) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m >= 1 and n >= 1");
  F = form_matrix(dims);
  build_g();
  build_s();
}

Weight OspContext::weight_of_index(int flat) const {
  SuperIndex s = dims.index_of(flat);
  switch (s.kind) {
    case SuperIndex::Kind::Zero: return Weight();
    case SuperIndex::Kind::Even: return Weight::of(sym_e(s.ord));
    case SuperIndex::Kind::EvenBar: return -Weight::of(sym_e(s.ord));
    case SuperIndex::Kind::Odd: return Weight::of(sym_d(s.ord));
    case SuperIndex::Kind::OddBar: return -Weight::of(sym_d(s.ord));
  }
  throw std::logic_error("bad index kind");
}

Scalar OspContext::eval_weight(const Weight& w, const std::string& cartan_label) {
  if (cartan_label.size() < 2) throw std::invalid_argument("bad cartan label");
  int ord = std::stoi(cartan_label.substr(1));
  if (cartan_label[0] == 'h') return w.coeff(sym_e(ord));
  if (cartan_label[0] == 'd') return w.coeff(sym_d(ord));
  throw std::invalid_argument("bad cartan label: " + cartan_label);
}

void OspContext::build_g() {
  const int N = dims.dim();
  GammaSlices sl = solve_gamma_slices(dims, -1);

  if (sl.total_dim != osp_dim_formula(dims.m, dims.n))
    throw std::runtime_error("solved dimension disagrees with the closed formula");

  // Cartan part: h_t = e_{t,t} - e_{tbar,tbar}, d_k = e_{k,k} - e_{kbar,kbar}.
  auto zero_it = sl.slices.find(Weight());
  if (zero_it == sl.slices.end() ||
      static_cast<int>(zero_it->second.size()) != dims.m + dims.n)
    throw std::runtime_error("zero-weight slice has unexpected dimension");
  RowBasis<std::pair<int, int>> zero_span;
  for (const auto& v : zero_it->second) zero_span.insert(v);

  auto push_cartan = [&](const std::string& label, int fi, int fib) {
    AlgElem e;
    e.label = label;
    e.weight = Weight();
    e.parity = 0;
    e.mat = SpMat(N);
    e.mat.set(fi, fi, 1);
    e.mat.set(fib, fib, -1);
    if (!zero_span.contains(flatten_mat(e.mat)))
      throw std::runtime_error("cartan element escapes the solved zero slice");
    g_index[e.label] = static_cast<int>(g.size());
    g_by_weight[Weight()].push_back(static_cast<int>(g.size()));
    g.push_back(std::move(e));
  };
  for (int t = 1; t <= dims.m; ++t)
    push_cartan("h" + std::to_string(t), dims.flat({SuperIndex::Kind::Even, t}),
                dims.flat({SuperIndex::Kind::EvenBar, t}));
  for (int k = 1; k <= dims.n; ++k)
    push_cartan("d" + std::to_string(k), dims.flat({SuperIndex::Kind::Odd, k}),
                dims.flat({SuperIndex::Kind::OddBar, k}));

  for (const auto& [w, basis] : sl.slices) {
    if (w.is_zero()) continue;
    if (basis.size() != 1)
      throw std::runtime_error("nonzero weight slice is not one-dimensional: " +
                               w.to_string());
    AlgElem e;
    e.label = "g[" + w.to_string() + "]";
    e.weight = w;
    e.mat = unflatten_mat(N, basis.front());
    auto bp = block_parity(dims, e.mat);
    if (!bp) throw std::runtime_error("slice vector is not block-homogeneous");
    e.parity = *bp;
    g_index[e.label] = static_cast<int>(g.size());
    g_by_weight[w].push_back(static_cast<int>(g.size()));
    g.push_back(std::move(e));
  }

  // Certify the weight labels: [h, x] = w(h) x for every Cartan h.
  for (const auto& x : g) {
    if (x.weight.is_zero()) continue;
    for (int c = 0; c < dims.m + dims.n; ++c) {
      SpMat br = supercommutator(g[c].mat, 0, x.mat, x.parity);
      SpMat want = x.mat;
      want *= eval_weight(x.weight, g[c].label);
      if (!(br == want))
        throw std::runtime_error("weight certification failed for " + x.label);
    }
  }
}

void OspContext::build_s() {
  const int N = dims.dim();
  GammaSlices sl = solve_gamma_slices(dims, +1);

  // Diagonal part: re-solve the zero slice with the supertrace condition added.
  {
    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i < N; ++i) unknowns.push_back({i, i});
    std::vector<SVec<std::pair<int, int>>> eqs;
    for (int i = 0; i < N; ++i) {
      // gamma = +1 pairs each diagonal entry with its bar partner
      SuperIndex si = dims.index_of(i);
      int ib = dims.flat(si.conj());
      if (ib == i) continue;
      SVec<std::pair<int, int>> eq;
      eq[{i, i}] += 1;
      eq[{ib, ib}] += -1;
      eqs.push_back(eq);
    }
    SVec<std::pair<int, int>> str_eq;
    for (int i = 0; i < N; ++i)
      str_eq[{i, i}] += (dims.parity_of(i) == 0) ? Scalar(1) : Scalar(-1);
    eqs.push_back(str_eq);
    auto basis = solve_nullspace(eqs, unknowns);
    if (static_cast<int>(basis.size()) != dims.m + dims.n)
      throw std::runtime_error("traceless diagonal slice has unexpected dimension");
    int k = 1;
    for (const auto& v : basis) {
      AlgElem e;
      e.label = "s0[" + std::to_string(k++) + "]";
      e.weight = Weight();
      e.parity = 0;
      e.mat = unflatten_mat(N, v);
      s_index[e.label] = static_cast<int>(s.size());
      s_by_weight[Weight()].push_back(static_cast<int>(s.size()));
      s.push_back(std::move(e));
    }
  }

  for (const auto& [w, basis] : sl.slices) {
    if (w.is_zero()) continue;
    if (basis.size() != 1)
      throw std::runtime_error("nonzero twisted slice is not one-dimensional: " +
                               w.to_string());
    AlgElem e;
    e.label = "s[" + w.to_string() + "]";
    e.weight = w;
    e.mat = unflatten_mat(N, basis.front());
    if (supertrace(dims, e.mat) != 0)
      throw std::runtime_error("twisted root vector has nonzero supertrace");
    auto bp = block_parity(dims, e.mat);
    if (!bp) throw std::runtime_error("twisted slice vector is not block-homogeneous");
    e.parity = *bp;
    s_index[e.label] = static_cast<int>(s.size());
    s_by_weight[w].push_back(static_cast<int>(s.size()));
    s.push_back(std::move(e));
  }

  const long want = static_cast<long>(N) * N - osp_dim_formula(dims.m, dims.n) - 1;
  if (static_cast<long>(s.size()) != want)
    throw std::runtime_error("twisted complement has unexpected dimension");
}

RootSet OspContext::root_set() const {
  RootSet rs;
  rs.name = "R(" + std::to_string(dims.m) + "," + std::to_string(dims.n) + ")";
  for (int t = 1; t <= dims.m; ++t) {
    rs.symbols.push_back(sym_e(t));
    rs.gram.set(sym_e(t), sym_e(t), 1);
  }
  for (int k = 1; k <= dims.n; ++k) {
    rs.symbols.push_back(sym_d(k));
    rs.gram.set(sym_d(k), sym_d(k), -1);
  }
  for (const auto& [w, idx] : g_by_weight) rs.roots.insert(w);
  return rs;
}

RootSet OspContext::support_set() const {
  RootSet rs = root_set();
  rs.name = "Psi(" + std::to_string(dims.m) + "," + std::to_string(dims.n) + ")";
  for (const auto& [w, idx] : s_by_weight) rs.roots.insert(w);
  for (int i = 0; i < dims.dim(); ++i) rs.roots.insert(weight_of_index(i));
  return rs;
}

SVec<int> OspContext::coords_in(const std::vector<AlgElem>& basis,
                                const std::map<Weight, std::vector<int>>& by_weight,
                                const SpMat& x, const char* who) const {
  // split x by weight
  std::map<Weight, SVec<std::pair<int, int>>> parts;
  for (const auto& [r, row] : x.rows())
    for (const auto& [c, val] : row)
      parts[weight_of_index(r) - weight_of_index(c)][{r, c}] = val;

  SVec<int> coords;
  for (const auto& [w, part] : parts) {
    auto it = by_weight.find(w);
    if (it == by_weight.end())
      throw std::runtime_error(std::string(who) + ": no slice for weight " + w.to_string());
    if (w.is_zero()) {
      // small affine solve over the diagonal basis vectors
      std::vector<SVec<std::pair<int, int>>> vecs;
      for (int idx : it->second) vecs.push_back(flatten_mat(basis[idx].mat));
      SVec<std::pair<int, int>> target = part;
      auto sol = coordinates_in_span(vecs, target);
      if (!sol) throw std::runtime_error(std::string(who) + ": zero-weight part escapes");
      for (size_t j = 0; j < sol->size(); ++j)
        if ((*sol)[j] != 0) coords[it->second[j]] = (*sol)[j];
    } else {
      int idx = it->second.front();
      const SpMat& b = basis[idx].mat;
      auto r0 = b.rows().begin();
      int rr = r0->first, cc = r0->second.begin()->first;
      Scalar ratio = part.count({rr, cc}) ? part.at({rr, cc}) / r0->second.begin()->second
                                          : Scalar(0);
      if (ratio == 0)
        throw std::runtime_error(std::string(who) + ": part not proportional to slice");
      SVec<std::pair<int, int>> rest = part;
      axpy(rest, -ratio, flatten_mat(b));
      if (!rest.empty())
        throw std::runtime_error(std::string(who) + ": part not proportional to slice");
      coords[idx] = ratio;
    }
  }
  return coords;
}

SVec<int> OspContext::g_coords(const SpMat& x) const {
  return coords_in(g, g_by_weight, x, "g_coords");
}

SVec<int> OspContext::s_coords(const SpMat& x) const {
  return coords_in(s, s_by_weight, x, "s_coords");
}

SVec<int> OspContext::bracket_g(int i, int j) const {
  SpMat z = supercommutator(g[i].mat, g[i].parity, g[j].mat, g[j].parity);
  return g_coords(z);
}

Scalar OspContext::str_form(const SpMat& x, const SpMat& y) const {
  return supertrace(dims, x.mul(y)) / 2;
}

std::vector<std::string> OspContext::simple_raising_labels() const {
  std::vector<std::string> out;
  for (int k = 1; k < dims.n; ++k) {
    Weight w = Weight::of(sym_d(k)) - Weight::of(sym_d(k + 1));
    out.push_back("g[" + w.to_string() + "]");
  }
  {
    Weight w = Weight::of(sym_d(dims.n)) - Weight::of(sym_e(1));
    out.push_back("g[" + w.to_string() + "]");
  }
  for (int t = 1; t < dims.m; ++t) {
    Weight w = Weight::of(sym_e(t)) - Weight::of(sym_e(t + 1));
    out.push_back("g[" + w.to_string() + "]");
  }
  out.push_back("g[" + Weight::of(sym_e(dims.m)).to_string() + "]");
  return out;
}

std::vector<std::string> OspContext::simple_lowering_labels() const {
  std::vector<std::string> out;
  for (const auto& lab : simple_raising_labels()) {
    auto it = g_index.find(lab);
    if (it == g_index.end()) throw std::logic_error("missing raising label " + lab);
    Weight w = -g[it->second].weight;
    out.push_back("g[" + w.to_string() + "]");
  }
  return out;
}

std::vector<std::string> OspContext::cartan_labels() const {
  std::vector<std::string> out;
  for (int t = 1; t <= dims.m; ++t) out.push_back("h" + std::to_string(t));
  for (int k = 1; k <= dims.n; ++k) out.push_back("d" + std::to_string(k));
  return out;
}

TableReport verify_span_table(int m, int n, int gamma) {
  SpaceDims d{m, n};
  GammaSlices sl = solve_gamma_slices(d, gamma);
  const Scalar gm = gamma;

  TableReport rep;
  rep.gamma = gamma;
  rep.solved_dim = sl.total_dim;
  long gdim = osp_dim_formula(m, n);
  long nsq = static_cast<long>(d.dim()) * d.dim();
  rep.expected_dim = static_cast<int>(gamma == -1 ? gdim : nsq - gdim);
  rep.span_complete = (rep.solved_dim == rep.expected_dim);

  auto fe = [&](int t) { return d.flat({SuperIndex::Kind::Even, t}); };
  auto feb = [&](int t) { return d.flat({SuperIndex::Kind::EvenBar, t}); };
  auto fo = [&](int p) { return d.flat({SuperIndex::Kind::Odd, p}); };
  auto fob = [&](int p) { return d.flat({SuperIndex::Kind::OddBar, p}); };
  const int f0 = d.flat({SuperIndex::Kind::Zero, 0});

  struct RowSpec {
    int row;
    Weight w;
    bool applicable;
    bool zero_claim;
    SVec<std::pair<int, int>> printed;
  };
  std::vector<RowSpec> specs;
  auto add = [&](int row, Weight w, bool applicable,
                 std::vector<std::tuple<int, int, Scalar>> terms, bool zero_for_this_gamma) {
    RowSpec rs;
    rs.row = row;
    rs.w = w;
    rs.applicable = applicable;
    rs.zero_claim = zero_for_this_gamma;
    if (applicable && !zero_for_this_gamma) {
      for (auto& [r, c, coef] : terms) rs.printed[{r, c}] += coef;
      prune_zeros(rs.printed);
    }
    specs.push_back(std::move(rs));
  };

  Weight e1 = Weight::of(sym_e(1));
  Weight e2 = m >= 2 ? Weight::of(sym_e(2)) : Weight();
  Weight d1 = Weight::of(sym_d(1));
  Weight d2 = n >= 2 ? Weight::of(sym_d(2)) : Weight();
  bool two_e = m >= 2, two_d = n >= 2;

  add(1, e1, true, {{fe(1), f0, 1}, {f0, feb(1), gm}}, false);
  add(2, -e1, true, {{feb(1), f0, 1}, {f0, fe(1), gm}}, false);
  add(3, e1 + e2, two_e, two_e ? std::vector<std::tuple<int, int, Scalar>>{{fe(1), feb(2), 1}, {fe(2), feb(1), gm}} : std::vector<std::tuple<int, int, Scalar>>{}, false);
  add(4, -(e1 + e2), two_e, two_e ? std::vector<std::tuple<int, int, Scalar>>{{feb(1), fe(2), 1}, {feb(2), fe(1), gm}} : std::vector<std::tuple<int, int, Scalar>>{}, false);
  add(5, e1 - e2, two_e, two_e ? std::vector<std::tuple<int, int, Scalar>>{{fe(1), fe(2), 1}, {feb(2), feb(1), gm}} : std::vector<std::tuple<int, int, Scalar>>{}, false);
  add(6, e1 * 2, true, {{fe(1), feb(1), 1}}, gamma == -1);
  add(7, e1 * -2, true, {{feb(1), fe(1), 1}}, gamma == -1);
  add(8, d1 * 2, true, {{fo(1), fob(1), 1}}, gamma == 1);
  add(9, d1 * -2, true, {{fob(1), fo(1), 1}}, gamma == 1);
  // the displayed entry repeats the same matrix unit with opposite signs
  add(10, d1 + d2, two_d, two_d ? std::vector<std::tuple<int, int, Scalar>>{{fo(1), fob(2), 1}, {fo(1), fob(2), -gm}} : std::vector<std::tuple<int, int, Scalar>>{}, false);
  add(11, -(d1 + d2), two_d, two_d ? std::vector<std::tuple<int, int, Scalar>>{{fob(1), fo(2), 1}, {fob(2), fo(1), -gm}} : std::vector<std::tuple<int, int, Scalar>>{}, false);
  add(12, d1 - d2, two_d, two_d ? std::vector<std::tuple<int, int, Scalar>>{{fo(1), fo(2), 1}, {fob(2), fob(1), gm}} : std::vector<std::tuple<int, int, Scalar>>{}, false);
  add(13, d1, true, {{f0, fob(1), 1}, {fo(1), f0, -gm}}, false);
  add(14, -d1, true, {{f0, fo(1), 1}, {fob(1), f0, gm}}, false);
  add(15, e1 + d1, true, {{fe(1), fob(1), 1}, {fo(1), feb(1), gm}}, false);
  add(16, -(e1 + d1), true, {{feb(1), fo(1), 1}, {fob(1), fe(1), -gm}}, false);
  add(17, e1 - d1, true, {{fe(1), fo(1), 1}, {fob(1), feb(1), -gm}}, false);
  add(18, d1 - e1, true, {{feb(1), fob(1), 1}, {fo(1), fe(1), gm}}, false);

  for (const auto& spec : specs) {
    TableRow row;
    row.row = spec.row;
    row.weight = spec.applicable ? spec.w.to_string() : "-";
    row.applicable = spec.applicable;
    row.zero_claim = spec.zero_claim;
    if (!spec.applicable) {
      rep.rows.push_back(std::move(row));
      continue;
    }
    auto it = sl.slices.find(spec.w);
    if (spec.zero_claim) {
      row.printed = "0";
      row.printed_ok = (it == sl.slices.end());
      row.flagged = !row.printed_ok;
      if (row.flagged && it != sl.slices.end())
        row.derived = render_pairs(d, it->second.front());
      rep.rows.push_back(std::move(row));
      continue;
    }
    row.printed = render_pairs(d, spec.printed);
    bool in_span = false;
    if (it != sl.slices.end() && !spec.printed.empty()) {
      RowBasis<std::pair<int, int>> span;
      for (const auto& v : it->second) span.insert(v);
      in_span = span.contains(spec.printed) && it->second.size() == 1;
    }
    row.printed_ok = in_span && !spec.printed.empty();
    row.flagged = !row.printed_ok;
    if (row.flagged && it != sl.slices.end())
      row.derived = render_pairs(d, it->second.front());
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace superroot
