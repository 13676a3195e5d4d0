#include "superroot/coords.hpp"

#include <sstream>
#include <stdexcept>

namespace superroot {

namespace {

std::optional<SVec<int>> table_get(const std::map<std::pair<int, int>, SVec<int>>& tbl,
                                   const std::set<std::pair<int, int>>& rej, int i, int j) {
  if (rej.count({i, j})) return std::nullopt;
  auto it = tbl.find({i, j});
  if (it == tbl.end()) return SVec<int>{};
  return it->second;
}

SVec<int> plain_get(const std::map<std::pair<int, int>, SVec<int>>& tbl, int i, int j) {
  auto it = tbl.find({i, j});
  return it == tbl.end() ? SVec<int>{} : it->second;
}

}  // namespace

std::optional<SVec<int>> CoordinateData::mul_a(int i, int j) const {
  return table_get(a_product, a_reject, i, j);
}

std::optional<SVec<int>> CoordinateData::brk_a(int i, int j) const {
  auto xy = mul_a(i, j), yx = mul_a(j, i);
  if (!xy || !yx) return std::nullopt;
  SVec<int> out = *xy;
  Scalar s = (a_parity[i] && a_parity[j]) ? 1 : -1;
  axpy(out, s, *yx);
  return out;
}

std::optional<SVec<int>> CoordinateData::circ_a(int i, int j) const {
  auto xy = mul_a(i, j), yx = mul_a(j, i);
  if (!xy || !yx) return std::nullopt;
  SVec<int> out = *xy;
  Scalar s = (a_parity[i] && a_parity[j]) ? -1 : 1;
  axpy(out, s, *yx);
  return out;
}

std::optional<SVec<int>> CoordinateData::act_ac(int i, int j) const {
  return table_get(act, act_reject, i, j);
}

std::optional<SVec<int>> CoordinateData::chi_cc(int i, int j) const {
  return table_get(chi, chi_reject, i, j);
}

std::optional<SVec<int>> CoordinateData::diamond(int i, int j) const {
  auto xy = chi_cc(i, j), yx = chi_cc(j, i);
  if (!xy || !yx) return std::nullopt;
  SVec<int> out = *xy;
  Scalar s = (c_parity[i] && c_parity[j]) ? -1 : 1;
  axpy(out, s, *yx);
  for (auto& [k, v] : out) v /= 2;
  return out;
}

std::optional<SVec<int>> CoordinateData::heart(int i, int j) const {
  auto xy = chi_cc(i, j), yx = chi_cc(j, i);
  if (!xy || !yx) return std::nullopt;
  SVec<int> out = *xy;
  Scalar s = (c_parity[i] && c_parity[j]) ? 1 : -1;
  axpy(out, s, *yx);
  for (auto& [k, v] : out) v /= 2;
  return out;
}

SVec<int> CoordinateData::dd(int i, int j) const { return plain_get(d_bracket, i, j); }
SVec<int> CoordinateData::d_on_a(int i, int j) const { return plain_get(d_act_a, i, j); }
SVec<int> CoordinateData::d_on_c(int i, int j) const { return plain_get(d_act_c, i, j); }
SVec<int> CoordinateData::pair_b(int i, int j) const { return plain_get(pairing, i, j); }

SVec<int> CoordinateData::eta_of(const SVec<int>& x) const {
  SVec<int> out;
  for (const auto& [i, v] : x)
    if (a_eta[i] == 1)
      out[i] = v;
    else
      out[i] = -v;
  return out;
}

std::optional<SVec<int>> CoordinateData::prod_av(const SVec<int>& x, const SVec<int>& y) const {
  SVec<int> out;
  for (const auto& [i, xv] : x)
    for (const auto& [j, yv] : y) {
      auto p = mul_a(i, j);
      if (!p) return std::nullopt;
      axpy(out, xv * yv, *p);
    }
  return out;
}

std::optional<SVec<int>> CoordinateData::act_av(const SVec<int>& x, const SVec<int>& c) const {
  SVec<int> out;
  for (const auto& [i, xv] : x)
    for (const auto& [j, cv] : c) {
      auto p = act_ac(i, j);
      if (!p) return std::nullopt;
      axpy(out, xv * cv, *p);
    }
  return out;
}

SVec<int> CoordinateData::d_act_av(const SVec<int>& dv, const SVec<int>& x) const {
  SVec<int> out;
  for (const auto& [i, dvv] : dv)
    for (const auto& [j, xv] : x) axpy(out, dvv * xv, d_on_a(i, j));
  return out;
}

SVec<int> CoordinateData::d_act_cv(const SVec<int>& dv, const SVec<int>& c) const {
  SVec<int> out;
  for (const auto& [i, dvv] : dv)
    for (const auto& [j, cv] : c) axpy(out, dvv * cv, d_on_c(i, j));
  return out;
}

void CoordinateData::split_eta(const SVec<int>& x, SVec<int>& a_part, SVec<int>& b_part) const {
  a_part.clear();
  b_part.clear();
  for (const auto& [i, v] : x)
    if (a_eta[i] == 1)
      a_part[i] = v;
    else
      b_part[i] = v;
}

// ---------------------------------------------------------------------------

namespace {

// vector in b = a (+) c, kept as separate coordinate vectors
struct BVec {
  SVec<int> a, c;
  bool operator==(const BVec& o) const { return a == o.a && c == o.c; }
};

struct Verifier {
  const CoordinateData& x;
  DataCheck& out;
  Scalar N;

  void fail(bool& flag, const std::string& msg) {
    flag = false;
    if (out.failures.size() < 12) out.failures.push_back(msg);
  }

  // b-product of basis elements: (alpha + c)(alpha' + c') componentwise
  std::optional<BVec> bprod(int i, int j) {
    const int ad = x.adim();
    BVec out_v;
    if (i < ad && j < ad) {
      auto p = x.mul_a(i, j);
      if (!p) return std::nullopt;
      out_v.a = *p;
    } else if (i < ad && j >= ad) {
      auto p = x.act_ac(i, j - ad);
      if (!p) return std::nullopt;
      out_v.c = *p;
    } else if (i >= ad && j < ad) {
      // c . alpha' = (-1)^{|alpha'||c|} eta(alpha') . c
      auto p = x.act_ac(j, i - ad);
      if (!p) return std::nullopt;
      Scalar s = x.a_eta[j];
      if (x.a_parity[j] && x.c_parity[i - ad]) s = -s;
      out_v.c = scaled(*p, s);
    } else {
      auto p = x.chi_cc(i - ad, j - ad);
      if (!p) return std::nullopt;
      out_v.a = scaled(*p, Scalar(2));
    }
    return out_v;
  }

  BVec d_on_b(int di, int bi) {
    BVec v;
    if (bi < x.adim())
      v.a = x.d_on_a(di, bi);
    else
      v.c = x.d_on_c(di, bi - x.adim());
    return v;
  }

  BVec d_on_bv(int di, const BVec& v) {
    BVec out_v;
    SVec<int> dv{{di, Scalar(1)}};
    out_v.a = x.d_act_av(dv, v.a);
    out_v.c = x.d_act_cv(dv, v.c);
    return out_v;
  }

  SVec<int> pair_basis_bv(int i, const BVec& v) {
    SVec<int> out_v;
    for (const auto& [j, coef] : v.a) axpy(out_v, coef, x.pair_b(i, j));
    for (const auto& [j, coef] : v.c) axpy(out_v, coef, x.pair_b(i, j + x.adim()));
    return out_v;
  }

  SVec<int> pair_bv_basis(const BVec& v, int j) {
    SVec<int> out_v;
    for (const auto& [i, coef] : v.a) axpy(out_v, coef, x.pair_b(i, j));
    for (const auto& [i, coef] : v.c) axpy(out_v, coef, x.pair_b(i + x.adim(), j));
    return out_v;
  }

  // commutator [w, a_k] for an a-coordinate vector w
  std::optional<SVec<int>> brk_vb(const SVec<int>& w, int k) {
    SVec<int> out_v;
    for (const auto& [l, coef] : w) {
      auto p = x.brk_a(l, k);
      if (!p) return std::nullopt;
      axpy(out_v, coef, *p);
    }
    return out_v;
  }

  std::optional<SVec<int>> mul_vb(const SVec<int>& w, int k) {
    SVec<int> out_v;
    for (const auto& [l, coef] : w) {
      auto p = x.mul_a(l, k);
      if (!p) return std::nullopt;
      axpy(out_v, coef, *p);
    }
    return out_v;
  }

  std::optional<SVec<int>> mul_bv(int k, const SVec<int>& w) {
    SVec<int> out_v;
    for (const auto& [l, coef] : w) {
      auto p = x.mul_a(k, l);
      if (!p) return std::nullopt;
      axpy(out_v, coef, *p);
    }
    return out_v;
  }

  std::optional<SVec<int>> act_vb(const SVec<int>& w, int k) {
    SVec<int> out_v;
    for (const auto& [l, coef] : w) {
      auto p = x.act_ac(l, k);
      if (!p) return std::nullopt;
      axpy(out_v, coef, *p);
    }
    return out_v;
  }

  template <typename T>
  bool cmp(bool& flag, const std::optional<T>& lhs, const std::optional<T>& rhs,
           const char* what, int i, int j, int k) {
    if (!lhs || !rhs) {
      ++out.skipped;
      return true;
    }
    ++out.checked;
    if (*lhs == *rhs) return true;
    std::ostringstream os;
    os << what << " fails at (" << i << "," << j << "," << k << ")";
    fail(flag, os.str());
    return false;
  }

  void run();
};

void Verifier::run() {
  const int ad = x.adim(), cd = x.cdim(), dd_ = x.ddim(), bd = x.bdim();

  // unit
  out.unital = true;
  if (x.unit < 0 || x.unit >= ad) {
    fail(out.unital, "missing unit");
  } else {
    if (x.a_eta[x.unit] != 1 || x.a_parity[x.unit] != 0 || x.a_degree[x.unit] != 0)
      fail(out.unital, "unit must be even, eta-fixed, degree 0");
    SVec<int> e{{x.unit, Scalar(1)}};
    (void)e;
    for (int i = 0; i < ad; ++i) {
      SVec<int> want{{i, Scalar(1)}};
      auto l = x.mul_a(x.unit, i), r = x.mul_a(i, x.unit);
      if (!l || !r || !(*l == want) || !(*r == want)) fail(out.unital, "unit law fails in a");
    }
    for (int j = 0; j < cd; ++j) {
      SVec<int> want{{j, Scalar(1)}};
      auto l = x.act_ac(x.unit, j);
      if (!l || !(*l == want)) fail(out.unital, "unit law fails on c");
    }
  }

  // associativity
  out.assoc = true;
  for (int i = 0; i < ad; ++i)
    for (int j = 0; j < ad; ++j)
      for (int k = 0; k < ad; ++k) {
        auto ij = x.mul_a(i, j), jk = x.mul_a(j, k);
        std::optional<SVec<int>> lhs = ij ? mul_vb(*ij, k) : std::nullopt;
        std::optional<SVec<int>> rhs = jk ? mul_bv(i, *jk) : std::nullopt;
        cmp(out.assoc, lhs, rhs, "associativity", i, j, k);
      }

  // eta anti-homomorphism
  out.eta_antihom = true;
  for (int i = 0; i < ad; ++i)
    for (int j = 0; j < ad; ++j) {
      auto ij = x.mul_a(i, j), ji = x.mul_a(j, i);
      std::optional<SVec<int>> lhs, rhs;
      if (ij) lhs = x.eta_of(*ij);
      if (ji) {
        Scalar s = Scalar(x.a_eta[i]) * Scalar(x.a_eta[j]);
        if (x.a_parity[i] && x.a_parity[j]) s = -s;
        rhs = scaled(*ji, s);
      }
      cmp(out.eta_antihom, lhs, rhs, "eta reversal", i, j, -1);
    }

  // module law
  out.module_ok = true;
  for (int i = 0; i < ad; ++i)
    for (int j = 0; j < ad; ++j)
      for (int k = 0; k < cd; ++k) {
        auto ij = x.mul_a(i, j);
        auto jk = x.act_ac(j, k);
        std::optional<SVec<int>> lhs = ij ? act_vb(*ij, k) : std::nullopt;
        std::optional<SVec<int>> rhs;
        if (jk) {
          SVec<int> acc;
          bool ok = true;
          for (const auto& [l, coef] : *jk) {
            auto p = x.act_ac(i, l);
            if (!p) {
              ok = false;
              break;
            }
            axpy(acc, coef, *p);
          }
          if (ok) rhs = acc;
        }
        cmp(out.module_ok, lhs, rhs, "module law", i, j, k);
      }

  // chi: parity, hermitian rule, bilinearity over a
  out.chi_ok = true;
  for (int i = 0; i < cd; ++i)
    for (int j = 0; j < cd; ++j) {
      auto ij = x.chi_cc(i, j), ji = x.chi_cc(j, i);
      if (ij) {
        int want_par = (x.c_parity[i] + x.c_parity[j]) % 2;
        for (const auto& [l, v] : *ij) {
          (void)v;
          if (x.a_parity[l] != want_par) fail(out.chi_ok, "chi parity breaks");
        }
      }
      std::optional<SVec<int>> lhs, rhs;
      if (ij) lhs = x.eta_of(*ij);
      if (ji) {
        Scalar s = (x.c_parity[i] && x.c_parity[j]) ? -1 : 1;
        rhs = scaled(*ji, s);
      }
      cmp(out.chi_ok, lhs, rhs, "chi hermitian rule", i, j, -1);
    }
  for (int a = 0; a < ad; ++a)
    for (int i = 0; i < cd; ++i)
      for (int j = 0; j < cd; ++j) {
        auto ax = x.act_ac(a, i);
        std::optional<SVec<int>> lhs;
        if (ax) {
          SVec<int> acc;
          bool ok = true;
          for (const auto& [l, coef] : *ax) {
            auto p = x.chi_cc(l, j);
            if (!p) {
              ok = false;
              break;
            }
            axpy(acc, coef, *p);
          }
          if (ok) lhs = acc;
        }
        auto cij = x.chi_cc(i, j);
        std::optional<SVec<int>> rhs = cij ? mul_bv(a, *cij) : std::nullopt;
        cmp(out.chi_ok, lhs, rhs, "chi a-bilinearity", a, i, j);
      }

  // diamond into A, heart into B
  out.diamond_heart_ok = true;
  for (int i = 0; i < cd; ++i)
    for (int j = 0; j < cd; ++j) {
      auto dm = x.diamond(i, j), ht = x.heart(i, j);
      if (!dm || !ht) {
        ++out.skipped;
        continue;
      }
      ++out.checked;
      for (const auto& [l, v] : *dm) {
        (void)v;
        if (x.a_eta[l] != 1) fail(out.diamond_heart_ok, "diamond leaves A");
      }
      for (const auto& [l, v] : *ht) {
        (void)v;
        if (x.a_eta[l] != -1) fail(out.diamond_heart_ok, "heart leaves B");
      }
    }

  // pairing sector support, parity, super-skew symmetry
  out.pairing_sectors = true;
  auto sector = [&](int b) {
    if (b >= ad) return 2;           // c
    return x.a_eta[b] == 1 ? 0 : 1;  // A / B
  };
  for (const auto& [key, val] : x.pairing) {
    if (val.empty()) continue;
    if (sector(key.first) != sector(key.second))
      fail(out.pairing_sectors, "pairing couples different sectors");
    int want_par = (x.b_parity(key.first) + x.b_parity(key.second)) % 2;
    for (const auto& [l, v] : val) {
      (void)v;
      if (x.d_parity[l] != want_par) fail(out.pairing_sectors, "pairing parity breaks");
    }
  }
  for (int i = 0; i < bd; ++i)
    for (int j = 0; j < bd; ++j) {
      ++out.checked;
      Scalar s = (x.b_parity(i) && x.b_parity(j)) ? 1 : -1;
      if (!(x.pair_b(i, j) == scaled(x.pair_b(j, i), s)))
        fail(out.pairing_sectors, "pairing skew symmetry breaks");
    }

  // phi(d) is a superderivation of the b-product
  out.derivation_ok = true;
  for (int di = 0; di < dd_; ++di)
    for (int i = 0; i < bd; ++i)
      for (int j = 0; j < bd; ++j) {
        auto pij = bprod(i, j);
        std::optional<BVec> lhs, rhs;
        if (pij) lhs = d_on_bv(di, *pij);
        // (d b_i) b_j + (-1)^{|d||b_i|} b_i (d b_j)
        BVec dbi = d_on_b(di, i), dbj = d_on_b(di, j);
        BVec acc;
        bool ok = true;
        auto fold = [&](const BVec& v, bool second, Scalar outer) {
          for (const auto& [l, coef] : v.a) {
            auto p = second ? bprod(i, l) : bprod(l, j);
            if (!p) {
              ok = false;
              return;
            }
            axpy(acc.a, outer * coef, p->a);
            axpy(acc.c, outer * coef, p->c);
          }
          for (const auto& [l, coef] : v.c) {
            auto p = second ? bprod(i, l + ad) : bprod(l + ad, j);
            if (!p) {
              ok = false;
              return;
            }
            axpy(acc.a, outer * coef, p->a);
            axpy(acc.c, outer * coef, p->c);
          }
        };
        fold(dbi, false, 1);
        if (ok) {
          Scalar s = (x.d_parity[di] && x.b_parity(i)) ? -1 : 1;
          fold(dbj, true, s);
        }
        if (ok) rhs = acc;
        cmp(out.derivation_ok, lhs, rhs, "derivation law", di, i, j);
      }

  // derivations preserve A, B, c and parity
  out.derivation_sectors = true;
  for (const auto& [key, val] : x.d_act_a) {
    int want_eta = x.a_eta[key.second];
    int want_par = (x.d_parity[key.first] + x.a_parity[key.second]) % 2;
    for (const auto& [l, v] : val) {
      (void)v;
      if (x.a_eta[l] != want_eta) fail(out.derivation_sectors, "derivation mixes A and B");
      if (x.a_parity[l] != want_par) fail(out.derivation_sectors, "derivation parity breaks");
    }
  }
  for (const auto& [key, val] : x.d_act_c) {
    int want_par = (x.d_parity[key.first] + x.c_parity[key.second]) % 2;
    for (const auto& [l, v] : val) {
      (void)v;
      if (x.c_parity[l] != want_par) fail(out.derivation_sectors, "derivation parity breaks on c");
    }
  }

  // [d, <b_i, b_j>] = <d b_i, b_j> + (-1)^{|d||b_i|} <b_i, d b_j>
  out.derivation_pairing = true;
  for (int di = 0; di < dd_; ++di)
    for (int i = 0; i < bd; ++i)
      for (int j = 0; j < bd; ++j) {
        SVec<int> lhs;
        for (const auto& [l, coef] : x.pair_b(i, j)) axpy(lhs, coef, x.dd(di, l));
        SVec<int> rhs = pair_bv_basis(d_on_b(di, i), j);
        Scalar s = (x.d_parity[di] && x.b_parity(i)) ? -1 : 1;
        axpy(rhs, s, pair_basis_bv(i, d_on_b(di, j)));
        ++out.checked;
        if (!(lhs == rhs)) fail(out.derivation_pairing, "derivation vs pairing breaks");
      }

  // cyclic pairing identity
  out.cyclic_ok = true;
  for (int i = 0; i < bd; ++i)
    for (int j = 0; j < bd; ++j)
      for (int k = 0; k < bd; ++k) {
        auto p1 = bprod(j, k), p2 = bprod(k, i), p3 = bprod(i, j);
        if (!p1 || !p2 || !p3) {
          ++out.skipped;
          continue;
        }
        SVec<int> acc;
        Scalar s1 = (x.b_parity(i) && x.b_parity(k)) ? -1 : 1;
        axpy(acc, s1, pair_basis_bv(i, *p1));
        Scalar s2 = (x.b_parity(j) && x.b_parity(i)) ? -1 : 1;
        axpy(acc, s2, pair_basis_bv(j, *p2));
        Scalar s3 = (x.b_parity(k) && x.b_parity(j)) ? -1 : 1;
        axpy(acc, s3, pair_basis_bv(k, *p3));
        ++out.checked;
        if (!acc.empty()) fail(out.cyclic_ok, "cyclic pairing identity breaks");
      }

  // pairing actions: bullets on <a,a'>, <c,c'> acting on a and c
  out.action_a_on_a = true;
  out.action_a_on_c = true;
  for (int i = 0; i < ad; ++i)
    for (int j = 0; j < ad; ++j) {
      auto z = x.brk_a(i, j);
      std::optional<SVec<int>> w;
      if (z) {
        SVec<int> v = *z;
        axpy(v, Scalar(-1), x.eta_of(*z));
        w = v;
      }
      SVec<int> dv = x.pair_b(i, j);
      for (int k = 0; k < ad; ++k) {
        std::optional<SVec<int>> lhs = x.d_act_av(dv, SVec<int>{{k, Scalar(1)}});
        std::optional<SVec<int>> rhs;
        if (w) {
          auto b = brk_vb(*w, k);
          if (b) rhs = scaled(*b, Scalar(1) / (2 * N));
        }
        cmp(out.action_a_on_a, lhs, rhs, "pairing action on a", i, j, k);
      }
      for (int k = 0; k < cd; ++k) {
        std::optional<SVec<int>> lhs = x.d_act_cv(dv, SVec<int>{{k, Scalar(1)}});
        std::optional<SVec<int>> rhs;
        if (w) {
          auto b = act_vb(scaled(*w, Scalar(1) / (2 * N)), k);
          if (b) rhs = b;
        }
        cmp(out.action_a_on_c, lhs, rhs, "pairing action on c", i, j, k);
      }
    }

  out.action_c_on_a = true;
  out.action_c_on_c = true;
  for (int i = 0; i < cd; ++i)
    for (int j = 0; j < cd; ++j) {
      SVec<int> dv = x.pair_b(ad + i, ad + j);
      auto y = x.chi_cc(i, j);
      std::optional<SVec<int>> w;
      if (y) {
        SVec<int> v = *y;
        axpy(v, Scalar(-1), x.eta_of(*y));
        w = v;
      }
      for (int k = 0; k < ad; ++k) {
        std::optional<SVec<int>> lhs = x.d_act_av(dv, SVec<int>{{k, Scalar(1)}});
        std::optional<SVec<int>> rhs;
        if (w) {
          auto b = brk_vb(*w, k);
          if (b) rhs = scaled(*b, Scalar(1) / N);
        }
        cmp(out.action_c_on_a, lhs, rhs, "c-pairing action on a", i, j, k);
      }
      for (int k = 0; k < cd; ++k) {
        std::optional<SVec<int>> lhs = x.d_act_cv(dv, SVec<int>{{k, Scalar(1)}});
        std::optional<SVec<int>> rhs;
        auto cjk = x.chi_cc(j, k);
        auto cik = x.chi_cc(i, k);
        if (w && cjk && cik) {
          auto term1 = act_vb(scaled(*w, Scalar(1) / N), k);
          Scalar s2 = (x.c_parity[i] && ((x.c_parity[j] + x.c_parity[k]) % 2)) ? -1 : 1;
          auto t2v = x.eta_of(*cjk);
          auto term2 = x.act_av(scaled(t2v, s2), SVec<int>{{i, Scalar(1)}});
          Scalar s3 = (x.c_parity[j] && x.c_parity[k]) ? 1 : -1;
          auto t3v = x.eta_of(*cik);
          auto term3 = x.act_av(scaled(t3v, s3), SVec<int>{{j, Scalar(1)}});
          if (term1 && term2 && term3) {
            SVec<int> acc = *term1;
            axpy(acc, 1, *term2);
            axpy(acc, 1, *term3);
            rhs = acc;
          }
        }
        cmp(out.action_c_on_c, lhs, rhs, "c-pairing action on c", i, j, k);
      }
    }

  // surjectivity of the pairing onto d
  RowBasis<int> span;
  for (const auto& [key, val] : x.pairing) {
    (void)key;
    span.insert(val);
  }
  out.surjective = (span.rank() == dd_);
  if (!out.surjective) out.failures.push_back("pairing does not span the derivation space");
}

}  // namespace

DataCheck verify_data(const CoordinateData& data, int m, int n) {
  DataCheck out;
  Verifier v{data, out, Scalar(2 * m + 1 - 2 * n)};
  v.run();
  return out;
}

// ---------------------------------------------------------------------------

CoordinateData data_trivial() {
  CoordinateData d;
  d.name = "trivial";
  d.a_labels = {"1"};
  d.a_parity = {0};
  d.a_eta = {1};
  d.a_degree = {0};
  d.unit = 0;
  d.a_product[{0, 0}] = {{0, Scalar(1)}};
  return d;
}

CoordinateData data_laurent(int window) {
  if (window < 1) throw std::invalid_argument("laurent data needs window >= 1");
  CoordinateData d;
  d.name = "laurent";
  d.window = window;
  for (int k = -window; k <= window; ++k) {
    std::string lab = "t^" + std::to_string(k);
    d.a_labels.push_back(lab);
    d.a_parity.push_back(0);
    d.a_eta.push_back(1);
    d.a_degree.push_back(k);
  }
  d.unit = window;  // t^0
  for (int i = -window; i <= window; ++i)
    for (int j = -window; j <= window; ++j) {
      int k = i + j;
      if (k < -window || k > window)
        d.a_reject.insert({i + window, j + window});
      else
        d.a_product[{i + window, j + window}] = {{k + window, Scalar(1)}};
    }
  return d;
}

CoordinateData data_hermitian() {
  CoordinateData d;
  d.name = "hermitian";
  d.a_labels = {"1"};
  d.a_parity = {0};
  d.a_eta = {1};
  d.a_degree = {0};
  d.unit = 0;
  d.a_product[{0, 0}] = {{0, Scalar(1)}};
  d.c_labels = {"c1"};
  d.c_parity = {0};
  d.c_degree = {0};
  d.act[{0, 0}] = {{0, Scalar(1)}};
  d.chi[{0, 0}] = {{0, Scalar(1)}};
  return d;
}

CoordinateData data_m2() {
  CoordinateData d;
  d.name = "m2";
  d.a_labels = {"1", "h", "e", "f"};
  d.a_parity = {0, 0, 0, 0};
  d.a_eta = {1, -1, -1, -1};
  d.a_degree = {0, 0, 0, 0};
  d.unit = 0;
  auto put = [&](int i, int j, std::initializer_list<std::pair<int, Scalar>> terms) {
    SVec<int> v;
    for (const auto& [k, c] : terms) v[k] = c;
    d.a_product[{i, j}] = std::move(v);
  };
  const int one = 0, H = 1, E = 2, Fi = 3;
  for (int i = 0; i < 4; ++i) {
    put(one, i, {{i, 1}});
    if (i != one) put(i, one, {{i, 1}});
  }
  put(H, H, {{one, 1}});
  put(H, E, {{E, 1}});
  put(E, H, {{E, -1}});
  put(H, Fi, {{Fi, -1}});
  put(Fi, H, {{Fi, 1}});
  put(E, Fi, {{one, Scalar(1) / 2}, {H, Scalar(1) / 2}});
  put(Fi, E, {{one, Scalar(1) / 2}, {H, Scalar(-1) / 2}});
  // E*E = F*F = 0: absent keys
  d.a_product[{E, E}] = {};
  d.a_product[{Fi, Fi}] = {};
  d.a_product.erase({E, E});
  d.a_product.erase({Fi, Fi});

  d.d_labels = {"ad_h", "ad_e", "ad_f"};
  d.d_parity = {0, 0, 0};
  d.d_degree = {0, 0, 0};
  const int AH = 0, AE = 1, AF = 2;
  auto putd = [&](std::map<std::pair<int, int>, SVec<int>>& tbl, int i, int j,
                  std::initializer_list<std::pair<int, Scalar>> terms) {
    SVec<int> v;
    for (const auto& [k, c] : terms) v[k] = c;
    if (!v.empty()) tbl[{i, j}] = std::move(v);
  };
  putd(d.d_bracket, AH, AE, {{AE, 2}});
  putd(d.d_bracket, AE, AH, {{AE, -2}});
  putd(d.d_bracket, AH, AF, {{AF, -2}});
  putd(d.d_bracket, AF, AH, {{AF, 2}});
  putd(d.d_bracket, AE, AF, {{AH, 1}});
  putd(d.d_bracket, AF, AE, {{AH, -1}});
  // adjoint action on the matrix algebra
  putd(d.d_act_a, AH, E, {{E, 2}});
  putd(d.d_act_a, AH, Fi, {{Fi, -2}});
  putd(d.d_act_a, AE, H, {{E, -2}});
  putd(d.d_act_a, AE, Fi, {{H, 1}});
  putd(d.d_act_a, AF, H, {{Fi, 2}});
  putd(d.d_act_a, AF, E, {{H, -1}});
  // pairing <x, y> = ad([x, y]) on the eta = -1 part (N = 1 at size (1,1))
  putd(d.pairing, H, E, {{AE, 2}});
  putd(d.pairing, E, H, {{AE, -2}});
  putd(d.pairing, H, Fi, {{AF, -2}});
  putd(d.pairing, Fi, H, {{AF, 2}});
  putd(d.pairing, E, Fi, {{AH, 1}});
  putd(d.pairing, Fi, E, {{AH, -1}});
  return d;
}

std::optional<CoordinateData> builtin_data(const std::string& name, int window) {
  if (name == "trivial") return data_trivial();
  if (name == "laurent") return data_laurent(window > 0 ? window : 2);
  if (name == "hermitian") return data_hermitian();
  if (name == "m2") return data_m2();
  return std::nullopt;
}

}  // namespace superroot
