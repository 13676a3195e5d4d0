#include "superroot/repn.hpp"

#include <algorithm>
#include <stdexcept>

namespace superroot {

namespace {

// matrix of the action of g-basis element gi on the g basis itself
SpMat adjoint_matrix(const OspContext& ctx, int gi) {
  SpMat a(ctx.gdim());
  for (int j = 0; j < ctx.gdim(); ++j) {
    SVec<int> col = ctx.bracket_g(gi, j);
    for (const auto& [i, v] : col) a.set(i, j, v);
  }
  return a;
}

SpMat second_matrix(const OspContext& ctx, int gi) {
  SpMat a(ctx.sdim_alg());
  for (int j = 0; j < ctx.sdim_alg(); ++j) {
    SpMat z = supercommutator(ctx.g[gi].mat, ctx.g[gi].parity, ctx.s[j].mat,
                              ctx.s[j].parity);
    SVec<int> col = ctx.s_coords(z);
    for (const auto& [i, v] : col) a.set(i, j, v);
  }
  return a;
}

std::vector<SVec<int>> combine(const std::vector<SVec<int>>& basis,
                               const std::vector<SVec<int>>& combos) {
  std::vector<SVec<int>> out;
  out.reserve(combos.size());
  for (const auto& c : combos) {
    SVec<int> v;
    for (const auto& [j, coef] : c) axpy(v, coef, basis[j]);
    out.push_back(std::move(v));
  }
  return out;
}

// kernel of an operator restricted to the span of `basis`, as combinations
std::vector<SVec<int>> kernel_on_span(const SpMat& op, const std::vector<SVec<int>>& basis) {
  std::vector<SVec<int>> images;
  images.reserve(basis.size());
  for (const auto& v : basis) images.push_back(apply_mat(op, v));
  // nullspace of the coefficient map c -> sum c_j images[j]
  std::map<int, SVec<int>> by_key;  // coordinate -> (j -> coefficient)
  for (size_t j = 0; j < images.size(); ++j)
    for (const auto& [k, val] : images[j]) by_key[k][static_cast<int>(j)] = val;
  std::vector<SVec<int>> eqs;
  eqs.reserve(by_key.size());
  for (auto& [k, eq] : by_key) eqs.push_back(std::move(eq));
  std::vector<int> unknowns(basis.size());
  for (size_t j = 0; j < basis.size(); ++j) unknowns[j] = static_cast<int>(j);
  return solve_nullspace(eqs, unknowns);
}

std::vector<SVec<int>> restrict_kernel(const SpMat& op, const std::vector<SVec<int>>& basis) {
  return combine(basis, kernel_on_span(op, basis));
}

SpMat shifted_by(const SpMat& a, const Scalar& c) {
  SpMat out = a;
  if (c != 0)
    for (int i = 0; i < a.dim(); ++i) out.add(i, i, -c);
  return out;
}

struct TagInfo {
  std::string tag;
  Weight mu;
  long dim;
};

std::vector<TagInfo> tag_catalog(const OspContext& ctx) {
  const long N = ctx.dims.dim();
  return {
      {"g", Weight::of(sym_d(1)) * 2, osp_dim_formula(ctx.dims.m, ctx.dims.n)},
      {"s", Weight::of(sym_d(1)) + Weight::of(sym_d(2)), N * N - osp_dim_formula(ctx.dims.m, ctx.dims.n) - 1},
      {"u", Weight::of(sym_d(1)), N},
      {"trivial", Weight(), 1},
  };
}

DecomposeResult decompose_impl(const Module& m, const OspContext& ctx, bool full) {
  if (ctx.dims.n < 2)
    throw std::invalid_argument("constituent tagging needs n >= 2");
  for (const auto& lab : ctx.simple_raising_labels())
    if (!m.action.count(lab))
      throw std::invalid_argument("module lacks action of " + lab);

  // joint kernel of the simple raising operators
  std::vector<SVec<int>> prim;
  {
    bool first = true;
    for (const auto& lab : ctx.simple_raising_labels()) {
      const SpMat& op = m.action.at(lab);
      if (first) {
        prim = kernel_of(op);
        first = false;
      } else {
        prim = restrict_kernel(op, prim);
      }
      if (prim.empty()) break;
    }
  }

  DecomposeResult out;
  out.primitive_total = static_cast<long>(prim.size());

  long tagged = 0, dim_sum = 0;
  auto cartans = ctx.cartan_labels();
  for (const auto& info : tag_catalog(ctx)) {
    // within the primitive space, cut by each Cartan eigenvalue equation
    std::vector<SVec<int>> cur = prim;
    for (const auto& h : cartans) {
      if (cur.empty()) break;
      SpMat op = shifted_by(m.action.at(h), OspContext::eval_weight(info.mu, h));
      cur = restrict_kernel(op, cur);
    }
    int mult = static_cast<int>(cur.size());
    if (mult > 0) out.tags[info.tag] = mult;
    tagged += mult;
    dim_sum += mult * info.dim;

    if (full && mult > 0) {
      auto lowerings = ctx.simple_lowering_labels();
      for (const auto& seed : cur) {
        RowBasis<int> closure;
        std::vector<SVec<int>> queue{seed};
        closure.insert(seed);
        while (!queue.empty()) {
          SVec<int> v = std::move(queue.back());
          queue.pop_back();
          for (const auto& lab : lowerings) {
            SVec<int> w = apply_mat(m.action.at(lab), v);
            if (!w.empty() && closure.insert(w)) queue.push_back(w);
          }
        }
        if (closure.rank() != info.dim) out.generated_ok = false;
      }
    }
  }

  out.dims_match = (tagged == out.primitive_total) && (dim_sum == m.dim);
  if (full && out.dims_match) {
    // the pieces must jointly exhaust the module
    RowBasis<int> all;
    auto lowerings = ctx.simple_lowering_labels();
    for (const auto& seed : prim) {
      std::vector<SVec<int>> queue{seed};
      all.insert(seed);
      while (!queue.empty()) {
        SVec<int> v = std::move(queue.back());
        queue.pop_back();
        for (const auto& lab : lowerings) {
          SVec<int> w = apply_mat(m.action.at(lab), v);
          if (!w.empty() && all.insert(w)) queue.push_back(w);
        }
      }
    }
    if (all.rank() != m.dim) out.generated_ok = false;
  }
  out.complete = out.dims_match && (!full || out.generated_ok);
  return out;
}

}  // namespace

SVec<int> apply_mat(const SpMat& a, const SVec<int>& v) {
  SVec<int> out;
  for (const auto& [r, row] : a.rows()) {
    Scalar acc = 0;
    for (const auto& [c, val] : row) {
      auto it = v.find(c);
      if (it != v.end()) acc += val * it->second;
    }
    if (acc != 0) out[r] = acc;
  }
  return out;
}

Module adjoint_module(const OspContext& ctx) {
  Module m;
  m.dim = ctx.gdim();
  for (const auto& e : ctx.g) {
    m.parity.push_back(e.parity);
    m.weights.push_back(e.weight);
    m.labels.push_back(e.label);
  }
  for (int i = 0; i < ctx.gdim(); ++i) {
    m.action[ctx.g[i].label] = adjoint_matrix(ctx, i);
    m.gen_parity[ctx.g[i].label] = ctx.g[i].parity;
  }
  return m;
}

Module natural_module(const OspContext& ctx) {
  Module m;
  m.dim = ctx.dims.dim();
  for (int i = 0; i < m.dim; ++i) {
    m.parity.push_back(ctx.dims.parity_of(i));
    m.weights.push_back(ctx.weight_of_index(i));
    m.labels.push_back("u[" + ctx.dims.index_of(i).label() + "]");
  }
  for (int i = 0; i < ctx.gdim(); ++i) {
    m.action[ctx.g[i].label] = ctx.g[i].mat;
    m.gen_parity[ctx.g[i].label] = ctx.g[i].parity;
  }
  return m;
}

Module second_module(const OspContext& ctx) {
  Module m;
  m.dim = ctx.sdim_alg();
  for (const auto& e : ctx.s) {
    m.parity.push_back(e.parity);
    m.weights.push_back(e.weight);
    m.labels.push_back(e.label);
  }
  for (int i = 0; i < ctx.gdim(); ++i) {
    m.action[ctx.g[i].label] = second_matrix(ctx, i);
    m.gen_parity[ctx.g[i].label] = ctx.g[i].parity;
  }
  return m;
}

Module trivial_module(const OspContext& ctx) {
  Module m;
  m.dim = 1;
  m.parity = {0};
  m.weights = {Weight()};
  m.labels = {"triv"};
  for (int i = 0; i < ctx.gdim(); ++i) {
    m.action[ctx.g[i].label] = SpMat(1);
    m.gen_parity[ctx.g[i].label] = ctx.g[i].parity;
  }
  return m;
}

Module direct_sum(const std::vector<const Module*>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  Module m;
  for (const auto* p : parts) m.dim += p->dim;
  for (const auto& [lab, mat] : parts.front()->action) {
    (void)mat;
    SpMat big(m.dim);
    int off = 0;
    for (const auto* p : parts) {
      auto it = p->action.find(lab);
      if (it == p->action.end())
        throw std::invalid_argument("summands disagree on generator set");
      for (const auto& [r, row] : it->second.rows())
        for (const auto& [c, v] : row) big.set(off + r, off + c, v);
      off += p->dim;
    }
    m.action[lab] = std::move(big);
    m.gen_parity[lab] = parts.front()->gen_parity.at(lab);
  }
  bool all_weights = true;
  for (const auto* p : parts)
    if (p->weights.empty()) all_weights = false;
  int part_no = 0;
  for (const auto* p : parts) {
    for (int i = 0; i < p->dim; ++i) {
      m.parity.push_back(p->parity[i]);
      if (all_weights) m.weights.push_back(p->weights[i]);
      m.labels.push_back(std::to_string(part_no) + ":" +
                         (i < static_cast<int>(p->labels.size()) ? p->labels[i] : ""));
    }
    ++part_no;
  }
  return m;
}

Module tensor_module(const Module& a, const Module& b) {
  Module m;
  m.dim = a.dim * b.dim;
  auto at = [&](int i, int j) { return i * b.dim + j; };
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) {
      m.parity.push_back((a.parity[i] + b.parity[j]) % 2);
      if (!a.weights.empty() && !b.weights.empty())
        m.weights.push_back(a.weights[i] + b.weights[j]);
      std::string la = i < static_cast<int>(a.labels.size()) ? a.labels[i] : std::to_string(i);
      std::string lb = j < static_cast<int>(b.labels.size()) ? b.labels[j] : std::to_string(j);
      m.labels.push_back(la + "(x)" + lb);
    }
  for (const auto& [lab, ma] : a.action) {
    auto it = b.action.find(lab);
    if (it == b.action.end()) throw std::invalid_argument("factors disagree on generator set");
    const SpMat& mb = it->second;
    int gp = a.gen_parity.at(lab);
    SpMat big(m.dim);
    // first factor: (x e_i) (x) f_j
    for (const auto& [k, row] : ma.rows())
      for (const auto& [i, v] : row)
        for (int j = 0; j < b.dim; ++j) big.add(at(k, j), at(i, j), v);
    // second factor with the parity sign of moving x past e_i
    for (const auto& [l, row] : mb.rows())
      for (const auto& [j, v] : row)
        for (int i = 0; i < a.dim; ++i) {
          Scalar s = v;
          if (gp == 1 && a.parity[i] == 1) s = -s;
          big.add(at(i, l), at(i, j), s);
        }
    m.action[lab] = std::move(big);
    m.gen_parity[lab] = gp;
  }
  return m;
}

Module parity_component(const Module& m, int par, const std::vector<std::string>& gens) {
  std::vector<int> keep;
  std::map<int, int> newpos;
  for (int i = 0; i < m.dim; ++i)
    if (m.parity[i] == par) {
      newpos[i] = static_cast<int>(keep.size());
      keep.push_back(i);
    }
  Module out;
  out.dim = static_cast<int>(keep.size());
  for (int i : keep) {
    out.parity.push_back(par);
    if (!m.weights.empty()) out.weights.push_back(m.weights[i]);
    if (!m.labels.empty()) out.labels.push_back(m.labels[i]);
  }
  for (const auto& lab : gens) {
    auto it = m.action.find(lab);
    if (it == m.action.end()) throw std::invalid_argument("module lacks generator " + lab);
    if (m.gen_parity.at(lab) != 0)
      throw std::invalid_argument("parity restriction needs even generators");
    SpMat small(out.dim);
    for (const auto& [r, row] : it->second.rows())
      for (const auto& [c, v] : row) {
        bool rk = newpos.count(r), ck = newpos.count(c);
        if (rk && ck)
          small.set(newpos[r], newpos[c], v);
        else if (rk != ck)
          throw std::logic_error("even generator mixes parity blocks");
      }
    out.action[lab] = std::move(small);
    out.gen_parity[lab] = 0;
  }
  return out;
}

Module shuffled(const Module& m, std::mt19937_64& rng) {
  const int dim = m.dim;
  // permutation within each parity class
  std::vector<int> sigma(dim);
  for (int i = 0; i < dim; ++i) sigma[i] = i;
  for (int par : {0, 1}) {
    std::vector<int> cls;
    for (int i = 0; i < dim; ++i)
      if (m.parity[i] == par) cls.push_back(i);
    for (int k = static_cast<int>(cls.size()) - 1; k > 0; --k) {
      int r = static_cast<int>(rng() % (k + 1));
      std::swap(sigma[cls[k]], sigma[cls[r]]);
    }
  }
  SpMat t(dim), tinv(dim);
  for (int k = 0; k < dim; ++k) {
    t.set(k, sigma[k], 1);
    tinv.set(sigma[k], k, 1);
  }
  // integer shears within parity classes
  std::vector<std::vector<int>> classes(2);
  for (int i = 0; i < dim; ++i) classes[m.parity[i]].push_back(i);
  const Scalar coefs[4] = {1, -1, 2, -2};
  for (int step = 0; step < dim; ++step) {
    const auto& cls = classes[rng() % 2];
    if (cls.size() < 2) continue;
    int i = cls[rng() % cls.size()];
    int j = cls[rng() % cls.size()];
    if (i == j) continue;
    Scalar c = coefs[rng() % 4];
    // t <- (I + c E_ij) t : row i += c * row j
    {
      std::map<int, Scalar> rowj;
      auto it = t.rows().find(j);
      if (it != t.rows().end()) rowj = it->second;
      for (const auto& [col, v] : rowj) t.add(i, col, c * v);
    }
    // tinv <- tinv (I - c E_ij) : col j -= c * col i
    for (const auto& [r, row] : tinv.rows()) {
      auto it = row.find(i);
      if (it == row.end()) continue;
      tinv.add(r, j, -c * it->second);
    }
  }
  if (!(t.mul(tinv) == SpMat::identity(dim)))
    throw std::logic_error("shuffle transform failed to invert");

  Module out;
  out.dim = dim;
  out.parity = m.parity;  // classes are preserved setwise and pointwise in parity
  out.gen_parity = m.gen_parity;
  for (const auto& [lab, mat] : m.action) out.action[lab] = t.mul(mat).mul(tinv);
  return out;
}

std::vector<SVec<int>> weight_space(const Module& m, const OspContext& ctx, const Weight& mu) {
  std::vector<SVec<int>> eqs;
  for (const auto& h : ctx.cartan_labels()) {
    SpMat op = shifted_by(m.action.at(h), OspContext::eval_weight(mu, h));
    for (const auto& [r, row] : op.rows()) {
      SVec<int> eq;
      for (const auto& [c, v] : row) eq[c] = v;
      if (!eq.empty()) eqs.push_back(std::move(eq));
    }
  }
  std::vector<int> unknowns(m.dim);
  for (int i = 0; i < m.dim; ++i) unknowns[i] = i;
  return solve_nullspace(eqs, unknowns);
}

DecomposeResult decompose_tags(const Module& m, const OspContext& ctx) {
  return decompose_impl(m, ctx, false);
}

DecomposeResult decompose_full(const Module& m, const OspContext& ctx) {
  return decompose_impl(m, ctx, true);
}

std::vector<SVec<std::pair<int, int>>> hom_space(const Module& x, const Module& y,
                                                 const std::vector<std::string>& gens) {
  // unknowns: entries (i, j) of Phi : X -> Y with equal weights
  std::vector<std::pair<int, int>> unknowns;
  bool have_w = !x.weights.empty() && !y.weights.empty();
  for (int i = 0; i < y.dim; ++i)
    for (int j = 0; j < x.dim; ++j)
      if (!have_w || y.weights[i] == x.weights[j]) unknowns.push_back({i, j});
  std::set<std::pair<int, int>> allowed(unknowns.begin(), unknowns.end());

  std::map<std::pair<int, int>, SVec<std::pair<int, int>>> eqs;
  for (const auto& lab : gens) {
    const SpMat& rx = x.action.at(lab);
    const SpMat& ry = y.action.at(lab);
    // term Phi rho_X: entry (i, c) picks up Phi_{i,j} rx_{j,c}
    for (const auto& [j, row] : rx.rows())
      for (const auto& [c, v] : row)
        for (int i = 0; i < y.dim; ++i)
          if (allowed.count({i, j})) eqs[{i, c}][{i, j}] += v;
    // term -rho_Y Phi: entry (r, j) picks up -ry_{r,i} Phi_{i,j}
    for (const auto& [r, row] : ry.rows())
      for (const auto& [i, v] : row)
        for (int j = 0; j < x.dim; ++j)
          if (allowed.count({i, j})) eqs[{r, j}][{i, j}] -= v;
  }
  std::vector<SVec<std::pair<int, int>>> eqlist;
  for (auto& [k, eq] : eqs) {
    for (auto it = eq.begin(); it != eq.end();) {
      if (it->second == 0)
        it = eq.erase(it);
      else
        ++it;
    }
    if (!eq.empty()) eqlist.push_back(std::move(eq));
  }
  return solve_nullspace(eqlist, unknowns);
}

std::vector<std::string> even_part_generators(const OspContext& ctx) {
  std::vector<std::string> raise;
  for (int t = 1; t < ctx.dims.m; ++t)
    raise.push_back("g[" + (Weight::of(sym_e(t)) - Weight::of(sym_e(t + 1))).to_string() + "]");
  raise.push_back("g[" + Weight::of(sym_e(ctx.dims.m)).to_string() + "]");
  for (int k = 1; k < ctx.dims.n; ++k)
    raise.push_back("g[" + (Weight::of(sym_d(k)) - Weight::of(sym_d(k + 1))).to_string() + "]");
  raise.push_back("g[" + (Weight::of(sym_d(ctx.dims.n)) * 2).to_string() + "]");
  std::vector<std::string> out = raise;
  for (const auto& lab : raise) {
    auto it = ctx.g_index.find(lab);
    if (it == ctx.g_index.end()) throw std::logic_error("missing even generator " + lab);
    out.push_back("g[" + (-ctx.g[it->second].weight).to_string() + "]");
  }
  return out;
}

CasimirResult casimir_on(const OspContext& ctx, const Module& m) {
  // dual basis per weight-opposite block of the invariant form
  std::vector<SVec<int>> duals(ctx.gdim());
  for (const auto& [w, idxs] : ctx.g_by_weight) {
    auto jt = ctx.g_by_weight.find(-w);
    if (jt == ctx.g_by_weight.end())
      throw std::runtime_error("weight set is not negation-closed");
    const auto& J = jt->second;
    std::vector<SVec<int>> cols;
    for (size_t a = 0; a < idxs.size(); ++a) {
      std::vector<std::pair<SVec<int>, Scalar>> eqs;
      for (size_t ap = 0; ap < idxs.size(); ++ap) {
        SVec<int> row;
        for (size_t b = 0; b < J.size(); ++b) {
          Scalar v = ctx.str_form(ctx.g[idxs[ap]].mat, ctx.g[J[b]].mat);
          if (v != 0) row[static_cast<int>(b)] = v;
        }
        eqs.push_back({std::move(row), ap == a ? Scalar(1) : Scalar(0)});
      }
      std::vector<int> unknowns(J.size());
      for (size_t b = 0; b < J.size(); ++b) unknowns[b] = static_cast<int>(b);
      auto sol = solve_affine(eqs, unknowns);
      if (!sol) throw std::runtime_error("invariant form degenerate on a weight block");
      SVec<int> dual;
      for (const auto& [b, c] : sol->particular) dual[J[b]] = c;
      duals[idxs[a]] = std::move(dual);
    }
  }

  auto rho_of = [&](const SVec<int>& combo) {
    SpMat acc(m.dim);
    for (const auto& [i, c] : combo) {
      SpMat t = m.action.at(ctx.g[i].label);
      t *= c;
      acc += t;
    }
    return acc;
  };

  auto build = [&](bool flip) {
    SpMat acc(m.dim);
    for (int i = 0; i < ctx.gdim(); ++i) {
      SpMat prod = m.action.at(ctx.g[i].label).mul(rho_of(duals[i]));
      if (flip && ctx.g[i].parity == 1) prod *= Scalar(-1);
      acc += prod;
    }
    return acc;
  };
  auto is_scalar = [&](const SpMat& a, Scalar& val) {
    val = a.at(0, 0);
    for (const auto& [r, row] : a.rows())
      for (const auto& [c, v] : row) {
        (void)v;
        if (r != c) return false;
      }
    for (int i = 0; i < a.dim(); ++i)
      if (!(a.at(i, i) == val)) return false;
    return true;
  };

  CasimirResult res;
  SpMat gamma = build(false);
  Scalar val;
  if (is_scalar(gamma, val)) {
    res.is_scalar = true;
    res.odd_flip = false;
  } else {
    gamma = build(true);
    if (is_scalar(gamma, val)) {
      res.is_scalar = true;
      res.odd_flip = true;
    }
  }
  res.value = res.is_scalar ? val : Scalar(0);
  res.commutes = true;
  for (const auto& [lab, mat] : m.action)
    if (!(gamma.mul(mat) == mat.mul(gamma))) {
      res.commutes = false;
      break;
    }
  return res;
}

}  // namespace superroot
