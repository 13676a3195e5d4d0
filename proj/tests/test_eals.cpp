#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superroot/eals.hpp"
#include "superroot/report.hpp"

using namespace superroot;

namespace {

Eals make_small() {
  OspContext ctx(2, 2);
  return affinize(build_graded(ctx, data_laurent(2)));
}

}  // namespace

TEST_CASE("affinization appends exactly two even central-direction lines") {
  OspContext ctx(2, 2);
  GradedAlgebra loop = build_graded(ctx, data_laurent(2));
  Eals v = affinize(loop);
  CHECK(v.dim() == 202);
  CHECK(v.labels[v.lam1] == "Lam1");
  CHECK(v.labels[v.d1] == "d1");
  CHECK(v.parity[v.lam1] == 0);
  CHECK(v.parity[v.d1] == 0);
  CHECK(v.roots[v.lam1].is_zero());
  CHECK(v.roots[v.d1].is_zero());
  CHECK(v.cartan.size() == 6);  // four loop Cartans plus the two new lines
  // every loop line keeps its index, label, and degree
  for (int i = 0; i < loop.dim(); ++i) {
    CHECK(v.labels[i] == loop.basis[i].label);
    CHECK(v.degree[i] == loop.basis[i].degree);
    CHECK(v.roots[i].coeff(sym_L(1)) == loop.basis[i].degree);
  }
}

TEST_CASE("affinization refuses input that is not a pure loop algebra") {
  OspContext ctx(2, 2);
  CHECK_THROWS_AS(affinize(build_graded(ctx, data_trivial())), std::invalid_argument);
  CHECK_THROWS_AS(affinize(build_graded(ctx, data_hermitian())), std::invalid_argument);
}

TEST_CASE("the degree derivation and the central line act as designed") {
  Eals v = make_small();
  for (int j = 0; j < v.dim(); ++j) {
    auto dj = v.bracket(v.d1, j);
    REQUIRE(dj.has_value());
    if (v.degree[j] == 0)
      CHECK(dj->empty());
    else
      CHECK(*dj == SVec<int>{{j, Scalar(v.degree[j])}});
    auto lj = v.bracket(v.lam1, j);
    REQUIRE(lj.has_value());
    CHECK(lj->empty());
  }
}

TEST_CASE("opposite-degree pairing reproduces the loop form with two new duals") {
  Eals v = make_small();
  CHECK(v.form(v.lam1, v.d1) == 1);
  CHECK(v.form(v.d1, v.lam1) == 1);
  CHECK(v.form(v.lam1, v.lam1) == 0);
  CHECK(v.form(v.d1, v.d1) == 0);
  // degrees must cancel for loop lines to pair
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j)
      if (v.form(i, j) != 0 && i != v.lam1 && i != v.d1 && j != v.lam1 && j != v.d1)
        CHECK(v.degree[i] + v.degree[j] == 0);
}

TEST_CASE("dual Cartan vectors solve the defining equations") {
  Eals v = make_small();
  Weight r1 = Weight::of(sym_e(1)) - Weight::of(sym_e(2));
  CHECK(v.t_root(r1) == SVec<int>{{v.cartan[0], Scalar(1)}, {v.cartan[1], Scalar(-1)}});
  // a null root is dual to a multiple of the central line
  Weight null2 = Weight::of(sym_L(1)) * 2;
  CHECK(v.t_root(null2) == SVec<int>{{v.lam1, Scalar(2)}});
  // mixed root: finite part plus central correction
  Weight mixed = Weight::of(sym_d(1)) + Weight::of(sym_L(1));
  SVec<int> t = v.t_root(mixed);
  CHECK(t.count(v.lam1) == 1);
  CHECK(t.at(v.lam1) == 1);
  CHECK(t.count(v.cartan[2]) == 1);
}

TEST_CASE("the full certificate passes on the affinized algebra") {
  Eals v = make_small();
  EalsCheck c = check_eals(v, 20000, 0);
  CHECK(c.form_even);
  CHECK(c.form_supersymmetric);
  CHECK(c.form_invariant);
  CHECK(c.form_nondegenerate);
  CHECK(c.cartan_ok);
  CHECK(c.axiom1);
  CHECK(c.coroot_identity);
  CHECK(c.axiom2);
  CHECK(c.axiom2_tight);
  CHECK(c.cube_witness);
  CHECK(c.center_is_lam1);
  CHECK(c.passed());
  CHECK(c.failures.empty());
}

TEST_CASE("a misweighted central term breaks invariance and the certificate sees it") {
  Eals v = make_small();
  // find a paired loop couple with a central coefficient and corrupt it
  bool planted = false;
  for (int i = 0; i < v.dim() && !planted; ++i)
    for (int j = 0; j < v.dim() && !planted; ++j) {
      if (v.rejected[v.flat(i, j)]) continue;
      SVec<int>& t = v.table[v.flat(i, j)];
      auto it = t.find(v.lam1);
      if (it != t.end()) {
        it->second *= 3;
        planted = true;
      }
    }
  REQUIRE(planted);
  EalsCheck c = check_eals(v, 20000, 0);
  CHECK_FALSE(c.passed());
}

TEST_CASE("the triple step through the degree derivation dies exactly at the cube") {
  Eals v = make_small();
  Weight rho = Weight::of(sym_d(1));
  rho.add(sym_L(1), 1);
  int x = -1;
  for (int i = 0; i < v.dim(); ++i)
    if (v.roots[i] == rho) x = i;
  REQUIRE(x >= 0);
  SVec<int> xv{{x, Scalar(1)}};
  auto s1 = v.bracket_vv(xv, SVec<int>{{v.d1, Scalar(1)}});
  REQUIRE(s1.has_value());
  CHECK_FALSE(s1->empty());
  auto s2 = v.bracket_vv(xv, *s1);
  REQUIRE(s2.has_value());
  CHECK_FALSE(s2->empty());  // the doubled root keeps the square alive
  auto s3 = v.bracket_vv(xv, *s2);
  REQUIRE(s3.has_value());
  CHECK(s3->empty());  // the cube vanishes identically, inside the window
}

TEST_CASE("core, center, and quotient constants match the input loop algebra") {
  OspContext ctx(2, 2);
  GradedAlgebra loop = build_graded(ctx, data_laurent(2));
  Eals v = affinize(loop);
  CoreReport c = analyze_core(v, loop);
  CHECK(c.core_matches);
  CHECK(c.core_dim == 201);
  CHECK(c.center_is_lam1);
  CHECK(c.center_dim == 1);
  CHECK(c.quotient_matches);
  CHECK(c.compared == 36352);
  CHECK(c.skipped == 3648);
  CHECK(c.passed());
}

TEST_CASE("a corrupted quotient constant is caught against the loop table") {
  OspContext ctx(2, 2);
  GradedAlgebra loop = build_graded(ctx, data_laurent(2));
  Eals v = affinize(loop);
  // scale one loop-visible structure constant
  bool planted = false;
  for (int i = 0; i < loop.dim() && !planted; ++i)
    for (int j = 0; j < loop.dim() && !planted; ++j) {
      if (v.rejected[v.flat(i, j)]) continue;
      SVec<int>& t = v.table[v.flat(i, j)];
      for (auto& [k, val] : t) {
        if (k != v.lam1) {
          val *= 2;
          planted = true;
          break;
        }
      }
    }
  REQUIRE(planted);
  CoreReport c = analyze_core(v, loop);
  CHECK_FALSE(c.quotient_matches);
}

TEST_CASE("the affinized algebra round-trips through its report form") {
  Eals v = make_small();
  Eals back = eals_from_json(eals_to_json(v));
  CHECK(back.dim() == v.dim());
  CHECK(back.labels == v.labels);
  CHECK(back.parity == v.parity);
  CHECK(back.degree == v.degree);
  CHECK(back.roots == v.roots);
  CHECK(back.cartan == v.cartan);
  CHECK(back.table == v.table);
  CHECK(back.rejected == v.rejected);
  CHECK(back.form_entries == v.form_entries);
}

TEST_CASE("the affine root set extends the finite one by the null string") {
  Eals v = make_small();
  RootSet aff = v.root_set();
  RootSet fin = gen_super("B", 2, 2);
  Weight L1 = Weight::of(sym_L(1));
  CHECK(aff.norm(L1) == 0);
  for (const Weight& w : fin.roots)
    for (int k = -2; k <= 2; ++k)
      if (!(w.is_zero() && k == 0)) CHECK(aff.contains(w + L1 * k));
  // null roots exist at every nonzero window degree
  for (int k = 1; k <= 2; ++k) {
    CHECK(aff.contains(L1 * k));
    CHECK(aff.contains(-(L1 * k)));
  }
}
