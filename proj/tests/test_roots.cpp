#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "superroot/eals.hpp"
#include "superroot/rootsys.hpp"

using namespace superroot;

namespace {

// Brute-force string bounds: scan memberships of beta + k*alpha directly.
void brute_string(const RootSet& rs, const Weight& a, const Weight& b, int& p, int& q) {
  p = 0;
  q = 0;
  while (rs.contains(b - a * (p + 1))) ++p;
  while (rs.contains(b + a * (q + 1))) ++q;
}

}  // namespace

TEST_CASE("finite generators produce the classical counts") {
  CHECK(gen_finite("A", 2).roots.size() == 7);    // 6 + zero
  CHECK(gen_finite("B", 2).roots.size() == 9);    // 8 + zero
  CHECK(gen_finite("C", 2).roots.size() == 9);
  CHECK(gen_finite("BC", 2).roots.size() == 13);  // 12 + zero
  CHECK(gen_finite("D", 3).roots.size() == 13);   // 12 + zero
}

TEST_CASE("super generators produce the mixed counts") {
  // B(2,2): 8 even e-side, 8 even d-side, 4 + 16 odd, plus zero
  CHECK(gen_super("B", 2, 2).roots.size() == 37);
  // BC(2,2) adds the doubled odd pairs +-2d_p on top of B's doubling
  RootSet bc = gen_super("BC", 2, 2);
  CHECK(bc.contains(Weight::of(sym_e(1), 2)));
  CHECK(gen_super("B", 2, 2).contains(Weight::of(sym_e(1), 2)) == false);
}

TEST_CASE("the small imaginary family has seven roots around one real pair") {
  RootSet a02 = gen_imaginary("A0T", 2);
  CHECK(a02.roots.size() == 7);
  int real = 0, isotropic = 0;
  for (const Weight& w : a02.roots) {
    if (w.is_zero()) continue;
    (a02.norm(w) == 0 ? isotropic : real) += 1;
  }
  CHECK(real == 2);
  CHECK(isotropic == 4);
  // the isotropic generator is linked to the real pair, not orthogonal to it
  Weight star = Weight::of(sym_star());
  REQUIRE(a02.contains(star));
  CHECK(a02.form(star, Weight::of(sym_e(1)) - Weight::of(sym_e(2))) == 1);
  CHECK(check_ears(a02).passed());
}

TEST_CASE("axioms hold on the certification suite") {
  CHECK(check_ears(gen_finite("B", 2)).passed());
  CHECK(check_ears(gen_finite("C", 2)).passed());
  CHECK(check_ears(gen_finite("BC", 2)).passed());
  CHECK(check_ears(gen_finite("D", 3)).passed());
  CHECK(check_ears(gen_finite("A", 2)).passed());
  CHECK(check_ears(gen_super("B", 2, 2)).passed());
  CHECK(check_ears(gen_super("BC", 2, 2)).passed());
}

TEST_CASE("deleting one root from a finite system breaks the axioms") {
  RootSet bc = gen_finite("BC", 2);
  Weight gone = Weight::of(sym_e(1)) + Weight::of(sym_e(2));
  REQUIRE(bc.contains(gone));
  bc.roots.erase(gone);
  CHECK_FALSE(check_ears(bc).passed());
}

TEST_CASE("root strings match brute force on every pair of the doubled plane") {
  RootSet bc = gen_finite("BC", 2);
  for (const Weight& a : bc.roots) {
    if (!bc.is_real(a)) continue;
    for (const Weight& b : bc.roots) {
      RootString s = root_string(bc, a, b);
      int p = 0, q = 0;
      brute_string(bc, a, b, p, q);
      CHECK(s.p == p);
      CHECK(s.q == q);
      CHECK(s.unbroken);
      // the Cartan integer matches the walk on every real direction
      Scalar cartan = Scalar(2) * bc.form(b, a) / bc.form(a, a);
      CHECK(cartan == Scalar(p - q));
      CHECK(s.cartan_matches);
    }
  }
}

TEST_CASE("reflections preserve the set and orbits close") {
  RootSet b2 = gen_finite("B", 2);
  Weight e1 = Weight::of(sym_e(1));
  Weight e2 = Weight::of(sym_e(2));
  CHECK(reflect(b2, e1, e1 + e2) == -e1 + e2);
  std::set<Weight> orbit = weyl_orbit(b2, {e1 + e2, e1 - e2, e2}, {e1});
  CHECK(orbit.size() == 4);
  CHECK(orbit.count(e2) == 1);
  CHECK(orbit.count(-e1) == 1);
}

TEST_CASE("the parity partition of the doubled plane") {
  Partition01 p = partition_r01(gen_finite("BC", 2));
  CHECK(p.r0.size() == 9);  // zero, the long diagonals, and the doubled axes
  CHECK(p.r1.size() == 4);  // the four halved axis roots
  for (const Weight& w : p.r1) CHECK(p.r0.count(w) == 0);
}

TEST_CASE("the parity partition of the mixed system matches weight parities") {
  RootSet b22 = gen_super("B", 2, 2);
  Partition01 p = partition_r01(b22);
  CHECK(p.r0.size() == 17);
  CHECK(p.r1.size() == 20);
  // odd part: the short negative-norm axes and all isotropic mixed roots
  CHECK(p.r1.count(Weight::of(sym_d(1))) == 1);
  CHECK(p.r1.count(Weight::of(sym_e(1)) - Weight::of(sym_d(2))) == 1);
  CHECK(p.r0.count(Weight::of(sym_d(1), 2)) == 1);
  CHECK(p.r0.count(Weight::of(sym_e(1))) == 1);
}

TEST_CASE("projecting the affine set along its radical recovers the finite part") {
  OspContext ctx(2, 2);
  GradedAlgebra loop = build_graded(ctx, data_laurent(2));
  RootSet aff = affinize(loop).root_set();
  RadicalProjection proj = project_radical(aff);
  CHECK(proj.radical_basis.size() == 1);
  CHECK(proj.projected.roots == gen_super("B", 2, 2).roots);

  FiberConditionCheck f = check_fiber_conditions(proj, 2);
  CHECK(f.passed());
  CHECK(f.checked > 0);
  CHECK(f.skipped_out_of_window > 0);
}

TEST_CASE("fiber conditions reject a corrupted fiber") {
  OspContext ctx(2, 2);
  GradedAlgebra loop = build_graded(ctx, data_laurent(2));
  RootSet aff = affinize(loop).root_set();
  RadicalProjection proj = project_radical(aff);
  // drop one offset from a nonzero fiber: closure under S + F must now fail
  Weight e1 = Weight::of(sym_e(1));
  REQUIRE(proj.fibers.count(e1) == 1);
  Weight offset = Weight::of(sym_L(1));
  REQUIRE(proj.fibers[e1].count(offset) == 1);
  proj.fibers[e1].erase(offset);
  CHECK_FALSE(check_fiber_conditions(proj, 2).passed());
}
