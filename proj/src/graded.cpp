#include "superroot/graded.hpp"

#include <sstream>
#include <stdexcept>

#include "superroot/sweep.hpp"

namespace superroot {

namespace {

void acc_add(SVec<int>& acc, int key, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

std::optional<SVec<int>> GradedAlgebra::bracket(int i, int j) const {
  long f = flat(i, j);
  if (rejected_[f]) return std::nullopt;
  return table_[f];
}

std::optional<SVec<int>> GradedAlgebra::bracket_vv(const SVec<int>& x,
                                                   const SVec<int>& y) const {
  SVec<int> acc;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      long f = flat(i, j);
      if (rejected_[f]) return std::nullopt;
      for (const auto& [t, c] : table_[f]) acc_add(acc, t, ci * cj * c);
    }
  return acc;
}

int GradedAlgebra::parity_of_vec(const SVec<int>& x) const {
  int p = -1;
  for (const auto& [i, c] : x) {
    (void)c;
    if (p < 0)
      p = basis[i].parity;
    else if (p != basis[i].parity)
      return -1;
  }
  return p;
}

int GradedAlgebra::find_basis(Sector sec, int alg_i, int coord_i) const {
  auto it = index_.find({static_cast<int>(sec), alg_i, coord_i});
  return it == index_.end() ? -1 : it->second;
}

void GradedAlgebra::finalize() {
  const long d = dim();
  if (static_cast<long>(table_.size()) != d * d) {
    table_.assign(d * d, {});
    rejected_.assign(d * d, 0);
  }
  index_.clear();
  by_weight.clear();
  for (int i = 0; i < d; ++i) {
    const BElem& b = basis[i];
    index_[{static_cast<int>(b.sector), b.alg_i, b.coord_i}] = i;
    by_weight[b.weight].push_back(i);
  }
  rejected_pairs_ = 0;
  for (char r : rejected_) rejected_pairs_ += r;
}

namespace {

// Precomputed orthosymplectic-side structure constants feeding the ten
// bracket rows.  circ is the twisted symmetrization
//   x o y = xy + (-1)^{|x||y|} yx - (2 str(xy) / N) id,
// which swaps the gamma sectors, and the u-side operators send pairs of
// natural vectors into g and s:
//   (u o v) w = (v,w) u - (-1)^{|u||v|} (u,w) v
//   [u, v] w  = (v,w) u + (-1)^{|u||v|} (u,w) v - (2 (u,v) / N) id.
struct Builder {
  const OspContext& ctx;
  const CoordinateData& dat;
  GradedAlgebra& g;
  int gd, sd, nd, ad, cd, dd;
  Scalar N;

  std::vector<SVec<int>> gg_brk, gg_circ, gs_circ, gs_brk, ss_brk, ss_circ;
  std::vector<SVec<int>> uu_circ, uu_brk;
  std::vector<Scalar> gg_str, ss_str;
  std::vector<SVec<int>> g_col, s_col;  // natural action columns, [i * nd + f]

  Builder(const OspContext& c, const CoordinateData& d, GradedAlgebra& out)
      : ctx(c), dat(d), g(out) {
    gd = ctx.gdim();
    sd = ctx.sdim_alg();
    nd = ctx.dims.dim();
    ad = dat.adim();
    cd = dat.cdim();
    dd = dat.ddim();
    N = Scalar(ctx.dims.sdim());
  }

  bool need_s() const {
    for (int i = 0; i < ad; ++i)
      if (dat.a_eta[i] == -1) return true;
    return false;
  }

  void fill_basis() {
    for (int gi = 0; gi < gd; ++gi)
      for (int ai = 0; ai < ad; ++ai) {
        if (dat.a_eta[ai] != 1) continue;
        g.basis.push_back({Sector::G, gi, ai,
                           (ctx.g[gi].parity + dat.a_parity[ai]) % 2, ctx.g[gi].weight,
                           dat.a_degree[ai],
                           ctx.g[gi].label + "(" + dat.a_labels[ai] + ")"});
      }
    for (int si = 0; si < sd; ++si)
      for (int bi = 0; bi < ad; ++bi) {
        if (dat.a_eta[bi] != -1) continue;
        g.basis.push_back({Sector::S, si, bi,
                           (ctx.s[si].parity + dat.a_parity[bi]) % 2, ctx.s[si].weight,
                           dat.a_degree[bi],
                           ctx.s[si].label + "(" + dat.a_labels[bi] + ")"});
      }
    for (int f = 0; f < nd; ++f)
      for (int ci = 0; ci < cd; ++ci) {
        g.basis.push_back({Sector::U, f, ci,
                           (ctx.dims.parity_of(f) + dat.c_parity[ci]) % 2,
                           ctx.weight_of_index(f), dat.c_degree[ci],
                           "u[" + ctx.dims.index_of(f).label() + "](" +
                               dat.c_labels[ci] + ")"});
      }
    for (int di = 0; di < dd; ++di)
      g.basis.push_back({Sector::D, -1, di, dat.d_parity[di], Weight(),
                         dat.d_degree[di], "d[" + dat.d_labels[di] + "]"});
  }

  SpMat osp_circ(const SpMat& x, int px, const SpMat& y, int py) const {
    SpMat z = x.mul(y);
    Scalar st = supertrace(ctx.dims, z);
    SpMat w = y.mul(x);
    if (px && py)
      z -= w;
    else
      z += w;
    if (st != 0) z -= (2 * st / N) * SpMat::identity(nd);
    return z;
  }

  SVec<int> nat_column(const SpMat& mat, int f) const {
    SVec<int> out;
    for (const auto& [r, cols] : mat.rows()) {
      auto it = cols.find(f);
      if (it != cols.end()) out[r] = it->second;
    }
    return out;
  }

  void precompute() {
    gg_brk.resize(static_cast<size_t>(gd) * gd);
    gg_circ.resize(static_cast<size_t>(gd) * gd);
    gg_str.resize(static_cast<size_t>(gd) * gd, Scalar(0));
    for (int i = 0; i < gd; ++i)
      for (int j = 0; j < gd; ++j) {
        gg_brk[i * gd + j] = ctx.bracket_g(i, j);
        SpMat prod = ctx.g[i].mat.mul(ctx.g[j].mat);
        gg_str[i * gd + j] = supertrace(ctx.dims, prod);
        gg_circ[i * gd + j] =
            ctx.s_coords(osp_circ(ctx.g[i].mat, ctx.g[i].parity, ctx.g[j].mat,
                                  ctx.g[j].parity));
      }
    if (need_s()) {
      gs_circ.resize(static_cast<size_t>(gd) * sd);
      gs_brk.resize(static_cast<size_t>(gd) * sd);
      for (int i = 0; i < gd; ++i)
        for (int j = 0; j < sd; ++j) {
          gs_circ[i * sd + j] =
              ctx.g_coords(osp_circ(ctx.g[i].mat, ctx.g[i].parity, ctx.s[j].mat,
                                    ctx.s[j].parity));
          gs_brk[i * sd + j] = ctx.s_coords(supercommutator(
              ctx.g[i].mat, ctx.g[i].parity, ctx.s[j].mat, ctx.s[j].parity));
        }
      ss_brk.resize(static_cast<size_t>(sd) * sd);
      ss_circ.resize(static_cast<size_t>(sd) * sd);
      ss_str.resize(static_cast<size_t>(sd) * sd, Scalar(0));
      for (int i = 0; i < sd; ++i)
        for (int j = 0; j < sd; ++j) {
          ss_brk[i * sd + j] = ctx.g_coords(supercommutator(
              ctx.s[i].mat, ctx.s[i].parity, ctx.s[j].mat, ctx.s[j].parity));
          ss_circ[i * sd + j] =
              ctx.s_coords(osp_circ(ctx.s[i].mat, ctx.s[i].parity, ctx.s[j].mat,
                                    ctx.s[j].parity));
          ss_str[i * sd + j] = supertrace(ctx.dims, ctx.s[i].mat.mul(ctx.s[j].mat));
        }
    }
    if (cd > 0) {
      uu_circ.resize(static_cast<size_t>(nd) * nd);
      uu_brk.resize(static_cast<size_t>(nd) * nd);
      for (int i = 0; i < nd; ++i)
        for (int j = 0; j < nd; ++j) {
          int sg = (ctx.dims.parity_of(i) && ctx.dims.parity_of(j)) ? -1 : 1;
          SpMat mc(nd), mb(nd);
          for (int k = 0; k < nd; ++k) {
            Scalar fjk = ctx.F.at(j, k), fik = ctx.F.at(i, k);
            if (fjk != 0) {
              mc.add(i, k, fjk);
              mb.add(i, k, fjk);
            }
            if (fik != 0) {
              mc.add(j, k, -sg * fik);
              mb.add(j, k, sg * fik);
            }
          }
          Scalar fij = ctx.F.at(i, j);
          if (fij != 0) mb -= (2 * fij / N) * SpMat::identity(nd);
          uu_circ[i * nd + j] = ctx.g_coords(mc);
          uu_brk[i * nd + j] = ctx.s_coords(mb);
        }
      g_col.resize(static_cast<size_t>(gd) * nd);
      for (int i = 0; i < gd; ++i)
        for (int f = 0; f < nd; ++f) g_col[i * nd + f] = nat_column(ctx.g[i].mat, f);
      s_col.resize(static_cast<size_t>(sd) * nd);
      for (int i = 0; i < sd; ++i)
        for (int f = 0; f < nd; ++f) s_col[i * nd + f] = nat_column(ctx.s[i].mat, f);
    }
  }

  int target(Sector sec, int alg, int coord, int want_eta) const {
    if (want_eta != 0 && dat.a_eta[coord] != want_eta)
      throw std::logic_error("bracket component lands in the wrong eta sector");
    int t = g.find_basis(sec, alg, coord);
    if (t < 0) throw std::logic_error("bracket component escapes the basis");
    return t;
  }

  // combine an osp-side coordinate vector with a coordinate-side vector
  void outer(SVec<int>& acc, const SVec<int>& alg_part, const SVec<int>& coord_part,
             Sector sec, int want_eta, const Scalar& scale) const {
    for (const auto& [ak, ca] : alg_part)
      for (const auto& [ck, cc] : coord_part)
        acc_add(acc, target(sec, ak, ck, want_eta), scale * ca * cc);
  }

  std::optional<SVec<int>> pair_GG(const BElem& x, const BElem& y) const {
    Scalar s0 = (dat.a_parity[x.coord_i] && ctx.g[y.alg_i].parity) ? -1 : 1;
    SVec<int> acc;
    const SVec<int>& brk = gg_brk[x.alg_i * gd + y.alg_i];
    if (!brk.empty()) {
      auto ca = dat.circ_a(x.coord_i, y.coord_i);
      if (!ca) return std::nullopt;
      outer(acc, brk, *ca, Sector::G, +1, s0 / 2);
    }
    const SVec<int>& cir = gg_circ[x.alg_i * gd + y.alg_i];
    if (!cir.empty()) {
      auto br = dat.brk_a(x.coord_i, y.coord_i);
      if (!br) return std::nullopt;
      outer(acc, cir, *br, Sector::S, -1, s0 / 2);
    }
    const Scalar& st = gg_str[x.alg_i * gd + y.alg_i];
    if (st != 0)
      for (const auto& [dk, c] : dat.pair_b(x.coord_i, y.coord_i))
        acc_add(acc, target(Sector::D, -1, dk, 0), s0 * st * c);
    return acc;
  }

  std::optional<SVec<int>> pair_GS(const BElem& x, const BElem& e) const {
    Scalar s0 = (dat.a_parity[x.coord_i] && ctx.s[e.alg_i].parity) ? -1 : 1;
    SVec<int> acc;
    const SVec<int>& cir = gs_circ[x.alg_i * sd + e.alg_i];
    if (!cir.empty()) {
      auto br = dat.brk_a(x.coord_i, e.coord_i);
      if (!br) return std::nullopt;
      outer(acc, cir, *br, Sector::G, +1, s0 / 2);
    }
    const SVec<int>& brk = gs_brk[x.alg_i * sd + e.alg_i];
    if (!brk.empty()) {
      auto ca = dat.circ_a(x.coord_i, e.coord_i);
      if (!ca) return std::nullopt;
      outer(acc, brk, *ca, Sector::S, -1, s0 / 2);
    }
    return acc;
  }

  std::optional<SVec<int>> pair_SS(const BElem& e, const BElem& f) const {
    Scalar s0 = (dat.a_parity[e.coord_i] && ctx.s[f.alg_i].parity) ? -1 : 1;
    SVec<int> acc;
    const SVec<int>& brk = ss_brk[e.alg_i * sd + f.alg_i];
    if (!brk.empty()) {
      auto ca = dat.circ_a(e.coord_i, f.coord_i);
      if (!ca) return std::nullopt;
      outer(acc, brk, *ca, Sector::G, +1, s0 / 2);
    }
    const SVec<int>& cir = ss_circ[e.alg_i * sd + f.alg_i];
    if (!cir.empty()) {
      auto br = dat.brk_a(e.coord_i, f.coord_i);
      if (!br) return std::nullopt;
      outer(acc, cir, *br, Sector::S, -1, s0 / 2);
    }
    const Scalar& st = ss_str[e.alg_i * sd + f.alg_i];
    if (st != 0)
      for (const auto& [dk, c] : dat.pair_b(e.coord_i, f.coord_i))
        acc_add(acc, target(Sector::D, -1, dk, 0), s0 * st * c);
    return acc;
  }

  std::optional<SVec<int>> pair_GU(const BElem& x, const BElem& u) const {
    Scalar s0 = (dat.a_parity[x.coord_i] && ctx.dims.parity_of(u.alg_i)) ? -1 : 1;
    SVec<int> acc;
    const SVec<int>& col = g_col[x.alg_i * nd + u.alg_i];
    if (!col.empty()) {
      auto ac = dat.act_ac(x.coord_i, u.coord_i);
      if (!ac) return std::nullopt;
      outer(acc, col, *ac, Sector::U, 0, s0);
    }
    return acc;
  }

  std::optional<SVec<int>> pair_SU(const BElem& e, const BElem& u) const {
    Scalar s0 = (dat.a_parity[e.coord_i] && ctx.dims.parity_of(u.alg_i)) ? -1 : 1;
    SVec<int> acc;
    const SVec<int>& col = s_col[e.alg_i * nd + u.alg_i];
    if (!col.empty()) {
      auto ac = dat.act_ac(e.coord_i, u.coord_i);
      if (!ac) return std::nullopt;
      outer(acc, col, *ac, Sector::U, 0, s0);
    }
    return acc;
  }

  std::optional<SVec<int>> pair_UU(const BElem& u, const BElem& v) const {
    Scalar s0 = (dat.c_parity[u.coord_i] && ctx.dims.parity_of(v.alg_i)) ? -1 : 1;
    SVec<int> acc;
    const SVec<int>& cir = uu_circ[u.alg_i * nd + v.alg_i];
    if (!cir.empty()) {
      auto dm = dat.diamond(u.coord_i, v.coord_i);
      if (!dm) return std::nullopt;
      outer(acc, cir, *dm, Sector::G, +1, s0);
    }
    const SVec<int>& brk = uu_brk[u.alg_i * nd + v.alg_i];
    if (!brk.empty()) {
      auto ht = dat.heart(u.coord_i, v.coord_i);
      if (!ht) return std::nullopt;
      outer(acc, brk, *ht, Sector::S, -1, s0);
    }
    Scalar fuv = ctx.F.at(u.alg_i, v.alg_i);
    if (fuv != 0)
      for (const auto& [dk, c] : dat.pair_b(ad + u.coord_i, ad + v.coord_i))
        acc_add(acc, target(Sector::D, -1, dk, 0), s0 * fuv * c);
    return acc;
  }

  std::optional<SVec<int>> pair_DD(const BElem& a, const BElem& b) const {
    SVec<int> acc;
    for (const auto& [dk, c] : dat.dd(a.coord_i, b.coord_i))
      acc_add(acc, target(Sector::D, -1, dk, 0), c);
    return acc;
  }

  std::optional<SVec<int>> pair_DG(const BElem& d, const BElem& x) const {
    Scalar s0 = (dat.d_parity[d.coord_i] && ctx.g[x.alg_i].parity) ? -1 : 1;
    SVec<int> acc;
    for (const auto& [ak, c] : dat.d_on_a(d.coord_i, x.coord_i))
      acc_add(acc, target(Sector::G, x.alg_i, ak, +1), s0 * c);
    return acc;
  }

  std::optional<SVec<int>> pair_DS(const BElem& d, const BElem& e) const {
    Scalar s0 = (dat.d_parity[d.coord_i] && ctx.s[e.alg_i].parity) ? -1 : 1;
    SVec<int> acc;
    for (const auto& [ak, c] : dat.d_on_a(d.coord_i, e.coord_i))
      acc_add(acc, target(Sector::S, e.alg_i, ak, -1), s0 * c);
    return acc;
  }

  std::optional<SVec<int>> pair_DU(const BElem& d, const BElem& u) const {
    Scalar s0 = (dat.d_parity[d.coord_i] && ctx.dims.parity_of(u.alg_i)) ? -1 : 1;
    SVec<int> acc;
    for (const auto& [ck, c] : dat.d_on_c(d.coord_i, u.coord_i))
      acc_add(acc, target(Sector::U, u.alg_i, ck, 0), s0 * c);
    return acc;
  }

  // true when (si, sj) is an order this builder computes directly
  static bool canonical(Sector si, Sector sj) {
    if (si == sj) return true;
    if (si == Sector::D) return true;
    return si != Sector::D && sj != Sector::D && static_cast<int>(si) < static_cast<int>(sj);
  }

  std::optional<SVec<int>> compute(int i, int j) const {
    const BElem& a = g.basis[i];
    const BElem& b = g.basis[j];
    switch (a.sector) {
      case Sector::G:
        if (b.sector == Sector::G) return pair_GG(a, b);
        if (b.sector == Sector::S) return pair_GS(a, b);
        if (b.sector == Sector::U) return pair_GU(a, b);
        break;
      case Sector::S:
        if (b.sector == Sector::S) return pair_SS(a, b);
        if (b.sector == Sector::U) return pair_SU(a, b);
        break;
      case Sector::U:
        if (b.sector == Sector::U) return pair_UU(a, b);
        break;
      case Sector::D:
        if (b.sector == Sector::D) return pair_DD(a, b);
        if (b.sector == Sector::G) return pair_DG(a, b);
        if (b.sector == Sector::S) return pair_DS(a, b);
        if (b.sector == Sector::U) return pair_DU(a, b);
        break;
    }
    throw std::logic_error("non-canonical pair reached compute()");
  }

  void fill_table() {
    const int D = g.dim();
    auto& table = g.mutable_table();
    auto& rejected = g.mutable_rejected();
    auto put = [&](int i, int j, std::optional<SVec<int>> v) {
      long f = static_cast<long>(i) * D + j;
      if (!v) {
        rejected[f] = 1;
        return;
      }
      const BElem& a = g.basis[i];
      const BElem& b = g.basis[j];
      Weight w = a.weight + b.weight;
      int deg = a.degree + b.degree;
      for (const auto& [t, c] : *v) {
        (void)c;
        if (!(g.basis[t].weight == w) || g.basis[t].degree != deg)
          throw std::logic_error("bracket component breaks the grading");
      }
      table[f] = std::move(*v);
    };
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        if (canonical(g.basis[i].sector, g.basis[j].sector)) put(i, j, compute(i, j));
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        if (canonical(g.basis[i].sector, g.basis[j].sector)) continue;
        long f = static_cast<long>(i) * D + j, fr = static_cast<long>(j) * D + i;
        if (rejected[fr]) {
          rejected[f] = 1;
          continue;
        }
        Scalar sg = (g.basis[i].parity && g.basis[j].parity) ? 1 : -1;
        table[f] = scaled(table[fr], sg);
      }
    // super-antisymmetry audit over directly computed mirror pairs
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        if (!canonical(g.basis[i].sector, g.basis[j].sector) ||
            !canonical(g.basis[j].sector, g.basis[i].sector))
          continue;
        long f = static_cast<long>(i) * D + j, fr = static_cast<long>(j) * D + i;
        if (rejected[f] != rejected[fr])
          throw std::logic_error("asymmetric window rejection");
        if (rejected[f]) continue;
        Scalar sg = (g.basis[i].parity && g.basis[j].parity) ? 1 : -1;
        if (!(table[f] == scaled(table[fr], sg)))
          throw std::logic_error("bracket table is not super-antisymmetric");
      }
  }
};

}  // namespace

GradedAlgebra build_graded(const OspContext& ctx, const CoordinateData& data) {
  DataCheck chk = verify_data(data, ctx.dims.m, ctx.dims.n);
  if (!chk.passed()) {
    std::string why = chk.failures.empty() ? "unspecified axiom" : chk.failures.front();
    throw std::invalid_argument("coordinate data fails verification: " + why);
  }
  GradedAlgebra g;
  g.m = ctx.dims.m;
  g.n = ctx.dims.n;
  g.data = data;
  Builder b(ctx, g.data, g);
  b.fill_basis();
  g.finalize();
  b.precompute();
  b.fill_table();
  g.finalize();
  return g;
}

JacobiReport verify_super_jacobi(const GradedAlgebra& g, bool exhaustive, long samples,
                                 std::uint64_t seed, bool parallel) {
  const long D = g.dim();
  const long count = exhaustive ? D * D * D : samples;
  auto decode = [&](long idx, int& i, int& j, int& k) {
    if (exhaustive) {
      i = static_cast<int>(idx / (D * D));
      j = static_cast<int>((idx / D) % D);
      k = static_cast<int>(idx % D);
    } else {
      std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(idx)));
      i = static_cast<int>(h % D);
      h = mix64(h);
      j = static_cast<int>(h % D);
      h = mix64(h);
      k = static_cast<int>(h % D);
    }
  };
  // one cyclic term (-1)^{|a||c|} [E_a, [E_b, E_c]]
  auto term = [&](int a, int b, int c, SVec<int>& acc) -> bool {
    auto inner = g.bracket(b, c);
    if (!inner) return false;
    Scalar sg = (g.basis[a].parity && g.basis[c].parity) ? -1 : 1;
    for (const auto& [l, cl] : *inner) {
      auto out = g.bracket(a, l);
      if (!out) return false;
      for (const auto& [t, ct] : *out) acc_add(acc, t, sg * cl * ct);
    }
    return true;
  };
  auto check = [&](long idx) -> int {
    int i, j, k;
    decode(idx, i, j, k);
    SVec<int> acc;
    if (!term(i, j, k, acc)) return kSweepSkip;
    if (!term(j, k, i, acc)) return kSweepSkip;
    if (!term(k, i, j, acc)) return kSweepSkip;
    return acc.empty() ? kSweepOk : kSweepFail;
  };
  auto describe = [&](long idx) -> std::string {
    int i, j, k;
    decode(idx, i, j, k);
    return "(" + g.basis[i].label + ", " + g.basis[j].label + ", " + g.basis[k].label +
           ")";
  };
  SweepResult r = run_sweep(count, check, describe, parallel);
  JacobiReport rep;
  rep.exhaustive = exhaustive;
  rep.triples = r.total;
  rep.checked = r.ok + r.failed;
  rep.skipped = r.skipped;
  rep.failed = r.failed;
  rep.witness = r.witness;
  return rep;
}

RootGradedCheck verify_root_graded(const GradedAlgebra& g) {
  RootGradedCheck out;
  OspContext ctx(g.m, g.n);
  RootSet psi = gen_super("BC", g.m, g.n);
  out.support_tag = psi.name;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (out.failures.size() < 12) out.failures.push_back(msg);
  };
  const int D = g.dim();

  // weight support lies in the BC-type set
  out.support_ok = true;
  std::set<Weight> support;
  for (const auto& b : g.basis)
    if (!b.weight.is_zero()) support.insert(b.weight);
  for (const auto& w : support) {
    ++out.checked;
    if (!psi.contains(w)) fail(out.support_ok, "weight " + w.to_string() + " not in " + psi.name);
  }

  // weight and degree additivity of every defined bracket
  out.grading_ok = true;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      auto br = g.bracket(i, j);
      if (!br) {
        ++out.skipped;
        continue;
      }
      ++out.checked;
      Weight w = g.basis[i].weight + g.basis[j].weight;
      int deg = g.basis[i].degree + g.basis[j].degree;
      for (const auto& [t, c] : *br) {
        (void)c;
        if (!(g.basis[t].weight == w) || g.basis[t].degree != deg)
          fail(out.grading_ok, "bracket grading breaks at (" + g.basis[i].label + ", " +
                                   g.basis[j].label + ")");
      }
    }

  // zero-weight piece spanned by brackets of opposite weight spaces
  long zdim = 0;
  for (const auto& b : g.basis)
    if (b.weight.is_zero()) ++zdim;
  RowBasis<int> zspan;
  for (int i = 0; i < D; ++i) {
    if (g.basis[i].weight.is_zero()) continue;
    for (int j = 0; j < D; ++j) {
      if (!(g.basis[j].weight == -g.basis[i].weight)) continue;
      auto br = g.bracket(i, j);
      if (br && !br->empty()) zspan.insert(*br);
    }
  }
  out.zero_piece_ok = (zspan.rank() == zdim);
  if (!out.zero_piece_ok)
    out.failures.push_back("zero-weight piece not spanned by opposite brackets (" +
                           std::to_string(zspan.rank()) + " of " + std::to_string(zdim) +
                           ")");

  // toral grading: Cartan eigenvalues, and sl2 triples over non-isotropic roots
  out.toral_ok = true;
  std::vector<int> cartan;
  for (int i = 0; i < D; ++i) {
    const BElem& b = g.basis[i];
    if (b.sector == Sector::G && b.coord_i == g.data.unit && b.weight.is_zero())
      cartan.push_back(i);
  }
  if (cartan.empty()) fail(out.toral_ok, "no Cartan part over the unit coordinate");
  for (int ch : cartan) {
    const std::string& lab = ctx.g[g.basis[ch].alg_i].label;
    for (int b = 0; b < D; ++b) {
      auto br = g.bracket(ch, b);
      ++out.checked;
      if (!br) {
        fail(out.toral_ok, "Cartan bracket rejected at " + g.basis[b].label);
        continue;
      }
      Scalar lam = OspContext::eval_weight(g.basis[b].weight, lab);
      SVec<int> want;
      if (lam != 0) want[b] = lam;
      if (!(*br == want))
        fail(out.toral_ok, "Cartan eigenvalue breaks at [" + g.basis[ch].label + ", " +
                               g.basis[b].label + "]");
    }
  }
  RootSet phi = ctx.root_set();
  for (const Weight& alpha : phi.roots) {
    if (alpha.is_zero() || phi.norm(alpha) == 0) continue;
    int e_alg = ctx.g_by_weight.at(alpha).front();
    int f_alg = ctx.g_by_weight.at(-alpha).front();
    int e = g.find_basis(Sector::G, e_alg, g.data.unit);
    int f = g.find_basis(Sector::G, f_alg, g.data.unit);
    auto h = g.bracket(e, f);
    ++out.checked;
    if (!h || h->empty()) {
      fail(out.toral_ok, "no coroot for " + alpha.to_string());
      continue;
    }
    SVec<int> ev{{e, Scalar(1)}};
    auto he = g.bracket_vv(*h, ev);
    if (!he || he->size() != 1 || !he->count(e) || he->at(e) == 0) {
      fail(out.toral_ok, "coroot action degenerate for " + alpha.to_string());
      continue;
    }
    Scalar lam = he->at(e);
    SVec<int> hs = scaled(*h, 2 / lam);
    SVec<int> fv{{f, 2 / lam}};
    auto he2 = g.bracket_vv(hs, ev);
    auto hf2 = g.bracket_vv(hs, fv);
    SVec<int> want_e = scaled(ev, Scalar(2));
    SVec<int> want_f = scaled(fv, Scalar(-2));
    if (!he2 || !hf2 || !(*he2 == want_e) || !(*hf2 == want_f))
      fail(out.toral_ok, "sl2 relations break for " + alpha.to_string());
  }

  // fine grading: single parity per weight space, matching the even/odd split
  out.fine = true;
  RootSet rsup;
  rsup.name = "support";
  rsup.symbols = psi.symbols;
  rsup.gram = psi.gram;
  rsup.roots = support;
  rsup.roots.insert(Weight());
  Partition01 p01 = partition_r01(rsup);
  for (const Weight& w : support) {
    int p = -1;
    bool mixed = false;
    for (int i : g.by_weight.at(w)) {
      if (p < 0)
        p = g.basis[i].parity;
      else if (p != g.basis[i].parity)
        mixed = true;
    }
    ++out.checked;
    if (mixed) {
      fail(out.fine, "mixed parity at weight " + w.to_string());
      continue;
    }
    bool in0 = p01.r0.count(w) != 0, in1 = p01.r1.count(w) != 0;
    if ((p == 0 && !in0) || (p == 1 && !in1))
      fail(out.fine, "parity disagrees with the even/odd partition at " + w.to_string());
  }

  // predivision: an invertible-like pair in every nonzero (weight, degree) sector
  out.predivision = true;
  std::map<std::pair<Weight, int>, std::vector<int>> sectors;
  for (int i = 0; i < D; ++i)
    if (!g.basis[i].weight.is_zero())
      sectors[{g.basis[i].weight, g.basis[i].degree}].push_back(i);
  for (const auto& [key, elems] : sectors) {
    auto opp = sectors.find({-key.first, -key.second});
    bool found = false;
    if (opp != sectors.end()) {
      for (int e : elems) {
        for (int f : opp->second) {
          auto h = g.bracket(e, f);
          if (!h || h->empty()) continue;
          if (g.parity_of_vec(*h) != 0) continue;
          // h must act on every nonzero weight space as a nonzero multiple
          // of the form value (beta, alpha)
          bool ok = true;
          bool cset = false;
          Scalar c(0);
          for (int b = 0; b < D && ok; ++b) {
            if (g.basis[b].weight.is_zero()) continue;
            auto res = g.bracket_vv(*h, SVec<int>{{b, Scalar(1)}});
            if (!res) {
              ok = false;
              break;
            }
            Scalar want = psi.form(g.basis[b].weight, key.first);
            Scalar r(0);
            if (!res->empty()) {
              if (res->size() != 1 || !res->count(b)) {
                ok = false;
                break;
              }
              r = res->at(b);
            }
            if (want == 0) {
              if (r != 0) ok = false;
            } else {
              Scalar cand = r / want;
              if (!cset) {
                c = cand;
                cset = true;
              } else if (c != cand) {
                ok = false;
              }
            }
          }
          if (ok && cset && c != 0) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
    ++out.checked;
    if (!found)
      fail(out.predivision, "no invertible pair in sector (" + key.first.to_string() +
                                ", deg " + std::to_string(key.second) + ")");
  }

  return out;
}

}  // namespace superroot
