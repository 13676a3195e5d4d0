#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superroot/graded.hpp"
#include "superroot/report.hpp"

using namespace superroot;

TEST_CASE("the four built-in coordinate packages satisfy every axiom") {
  CHECK(verify_data(data_trivial(), 2, 2).passed());
  CHECK(verify_data(data_laurent(2), 2, 2).passed());
  CHECK(verify_data(data_hermitian(), 2, 2).passed());
  CHECK(verify_data(data_m2(), 1, 1).passed());
}

TEST_CASE("a broken involution is caught by the axiom checks") {
  CoordinateData bad = data_m2();
  bad.a_eta[1] = +1;  // the split of a no longer respects the product
  CHECK_FALSE(verify_data(bad, 1, 1).passed());
}

TEST_CASE("a corrupted product table is caught by associativity") {
  CoordinateData bad = data_laurent(2);
  bad.a_product[{1, 1}] = SVec<int>{{3, Scalar(2)}};  // t^-1 * t^-1 must be t^-2
  DataCheck c = verify_data(bad, 2, 2);
  CHECK_FALSE(c.passed());
  CHECK_FALSE(c.assoc);
}

TEST_CASE("assembled dimensions follow the coordinate split") {
  OspContext ctx22(2, 2);
  OspContext ctx11(1, 1);
  CHECK(build_graded(ctx22, data_trivial()).dim() == 40);
  GradedAlgebra lau = build_graded(ctx22, data_laurent(2));
  CHECK(lau.dim() == 200);
  CHECK(lau.rejected_count() == 3648);
  CHECK(build_graded(ctx22, data_hermitian()).dim() == 49);
  CHECK(build_graded(ctx11, data_m2()).dim() == 51);
}

TEST_CASE("building on top of failing data is refused") {
  CoordinateData bad = data_m2();
  bad.a_eta[1] = +1;
  OspContext ctx(1, 1);
  CHECK_THROWS_AS(build_graded(ctx, bad), std::invalid_argument);
}

TEST_CASE("window rejection applies only when the algebra factor survives") {
  OspContext ctx(2, 2);
  GradedAlgebra g = build_graded(ctx, data_laurent(2));
  // every rejected pair would overflow the degree window
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (g.is_rejected(i, j))
        CHECK(std::abs(g.basis[i].degree + g.basis[j].degree) > 2);
  int e = -1, h = -1;
  for (int i = 0; i < g.dim(); ++i) {
    if (g.basis[i].label == "g[e1-e2](t^2)") e = i;
    if (g.basis[i].label == "h1(t^2)") h = i;
  }
  REQUIRE(e >= 0);
  REQUIRE(h >= 0);
  // the root vector squares to zero on the algebra side, so its self-bracket
  // is exactly zero even though t^4 leaves the window
  CHECK_FALSE(g.is_rejected(e, e));
  CHECK(g.bracket(e, e)->empty());
  // the Cartan square keeps a surviving symmetric factor, so it must consult
  // the out-of-window coordinate product and stay undefined
  CHECK(g.is_rejected(h, h));
}

TEST_CASE("the graded identity holds exhaustively on the compact datasets") {
  OspContext ctx11(1, 1);
  GradedAlgebra m2 = build_graded(ctx11, data_m2());
  JacobiReport r = verify_super_jacobi(m2, true, 0, 0);
  CHECK(r.exhaustive);
  CHECK(r.triples == 51L * 51 * 51);
  CHECK(r.failed == 0);
  CHECK(r.checked == r.triples);
  CHECK(r.passed());

  OspContext ctx22(2, 2);
  GradedAlgebra herm = build_graded(ctx22, data_hermitian());
  JacobiReport h = verify_super_jacobi(herm, true, 0, 0);
  CHECK(h.triples == 49L * 49 * 49);
  CHECK(h.passed());
}

TEST_CASE("the sampled identity stream is deterministic and clean") {
  OspContext ctx(2, 2);
  GradedAlgebra g = build_graded(ctx, data_laurent(2));
  JacobiReport r = verify_super_jacobi(g, false, 100000, 0);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.checked == 74362);
  CHECK(r.skipped == 25638);
  CHECK(r.failed == 0);

  // the serial reference path aggregates to the same counts
  JacobiReport s = verify_super_jacobi(g, false, 100000, 0, false);
  CHECK(s.checked == r.checked);
  CHECK(s.skipped == r.skipped);
  CHECK(s.failed == r.failed);
}

TEST_CASE("a planted table error is found with its witness") {
  OspContext ctx(1, 1);
  GradedAlgebra g = build_graded(ctx, data_m2());
  int i = g.find_basis(Sector::D, -1, 0);  // a derivation line
  REQUIRE(i >= 0);
  // corrupt one entry after the build; the identity sweep must object
  g.mutable_table()[static_cast<long>(i) * g.dim() + (i + 1)] = SVec<int>{{0, Scalar(7)}};
  g.finalize();
  JacobiReport r = verify_super_jacobi(g, true, 0, 0);
  CHECK(r.failed > 0);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("the root-graded certificate passes on all built-in data") {
  OspContext ctx22(2, 2);
  OspContext ctx11(1, 1);
  for (const auto& [dat, mm, nn] :
       {std::tuple{data_trivial(), 2, 2}, std::tuple{data_laurent(2), 2, 2},
        std::tuple{data_hermitian(), 2, 2}, std::tuple{data_m2(), 1, 1}}) {
    OspContext ctx(mm, nn);
    GradedAlgebra g = build_graded(ctx, dat);
    RootGradedCheck c = verify_root_graded(g);
    CAPTURE(dat.name);
    CHECK(c.passed());
    CHECK(c.fine);
    CHECK(c.predivision);
  }
}

TEST_CASE("certificate work counts are stable") {
  OspContext ctx(2, 2);
  RootGradedCheck t = verify_root_graded(build_graded(ctx, data_trivial()));
  CHECK(t.checked == 1888);
  RootGradedCheck l = verify_root_graded(build_graded(ctx, data_laurent(2)));
  CHECK(l.checked == 37424);
}

TEST_CASE("coordinate packages round-trip through their report form") {
  CoordinateData d = data_m2();
  CoordinateData back = coordinate_data_from_json(coordinate_data_to_json(d));
  CHECK(back.name == d.name);
  CHECK(back.a_labels == d.a_labels);
  CHECK(back.a_eta == d.a_eta);
  CHECK(back.a_product == d.a_product);
  CHECK(back.act == d.act);
  CHECK(back.chi == d.chi);
  CHECK(back.d_bracket == d.d_bracket);
  CHECK(back.pairing == d.pairing);
  // the round-tripped package builds the same algebra
  OspContext ctx(1, 1);
  GradedAlgebra a = build_graded(ctx, d);
  GradedAlgebra b = build_graded(ctx, back);
  REQUIRE(a.dim() == b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      CHECK(a.is_rejected(i, j) == b.is_rejected(i, j));
      if (!a.is_rejected(i, j)) CHECK(*a.bracket(i, j) == *b.bracket(i, j));
    }
}

TEST_CASE("basis labels identify sector, root, and coordinate") {
  OspContext ctx(2, 2);
  GradedAlgebra g = build_graded(ctx, data_laurent(2));
  bool saw_cartan = false, saw_root = false;
  for (const BElem& b : g.basis) {
    if (b.label == "h1(t^0)") saw_cartan = true;
    if (b.label.rfind("g[", 0) == 0 && b.label.find("(t^") != std::string::npos)
      saw_root = true;
  }
  CHECK(saw_cartan);
  CHECK(saw_root);
}
