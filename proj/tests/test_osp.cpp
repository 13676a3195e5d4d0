#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "superroot/osp.hpp"
#include "superroot/rootsys.hpp"

using namespace superroot;

TEST_CASE("the closed dimension formula matches the built algebra") {
  CHECK(osp_dim_formula(1, 1) == 12);
  CHECK(osp_dim_formula(2, 2) == 40);
  CHECK(osp_dim_formula(4, 2) == 82);
  CHECK(osp_dim_formula(4, 4) == 144);
  CHECK(OspContext(1, 1).gdim() == 12);
  CHECK(OspContext(2, 2).gdim() == 40);
}

TEST_CASE("every nonzero weight space is one-dimensional") {
  OspContext ctx(2, 2);
  std::set<Weight> weights;
  for (const auto& [w, idxs] : ctx.g_by_weight) {
    weights.insert(w);
    if (!w.is_zero()) CHECK(idxs.size() == 1);
  }
  weights.insert(Weight());
  CHECK(weights == gen_super("B", 2, 2).roots);
}

TEST_CASE("the invariant form and the grading agree on basis brackets") {
  OspContext ctx(2, 2);
  // [x, y] lands in the weight space of the weight sum, and the form pairs
  // only opposite weights
  for (int i = 0; i < ctx.gdim(); i += 7)
    for (int j = 0; j < ctx.gdim(); j += 5) {
      SVec<int> br = ctx.bracket_g(i, j);
      Weight want = ctx.g[i].weight + ctx.g[j].weight;
      for (const auto& [t, c] : br) {
        (void)c;
        CHECK(ctx.g[t].weight == want);
      }
      if (!(ctx.g[i].weight + ctx.g[j].weight).is_zero())
        CHECK(ctx.str_form(ctx.g[i].mat, ctx.g[j].mat) == 0);
    }
}

TEST_CASE("the twisted complement has trace zero and the claimed size") {
  OspContext ctx(2, 2);
  CHECK(ctx.sdim_alg() == 40);
  for (const AlgElem& e : ctx.s) CHECK(supertrace(ctx.dims, e.mat) == 0);
}

TEST_CASE("the spanning table detects exactly three misprinted rows") {
  for (int gamma : {-1, 1}) {
    TableReport t = verify_span_table(2, 2, gamma);
    CHECK(t.span_complete);
    std::set<int> flagged;
    for (const TableRow& r : t.rows) {
      if (r.flagged) {
        flagged.insert(r.row);
        CHECK_FALSE(r.derived.empty());
      }
    }
    CHECK(flagged == std::set<int>{10, 13, 14});
  }
  CHECK(verify_span_table(2, 2, -1).solved_dim == 40);
  CHECK(verify_span_table(2, 2, 1).solved_dim == 41);
}

TEST_CASE("the flagged rows report the solved spanning vectors") {
  std::map<int, TableRow> minus, plus;
  for (const TableRow& r : verify_span_table(2, 2, -1).rows) minus[r.row] = r;
  for (const TableRow& r : verify_span_table(2, 2, 1).rows) plus[r.row] = r;

  CHECK(minus[10].weight == "d1+d2");
  CHECK(minus[10].printed == "2*e(1p,2pb)");
  CHECK(minus[10].derived == "e(1p,2pb)+e(2p,1pb)");
  CHECK(minus[13].weight == "d1");
  CHECK(minus[13].printed == "e(0,1pb)+e(1p,0)");
  CHECK(minus[13].derived == "-e(0,1pb)+e(1p,0)");
  CHECK(minus[14].weight == "-d1");
  CHECK(minus[14].printed == "e(0,1p)-e(1pb,0)");
  CHECK(minus[14].derived == "e(0,1p)+e(1pb,0)");

  // with the positive sign the doubled-negative row degenerates to zero
  CHECK(plus[10].printed == "0");
  CHECK(plus[10].flagged);  // a collapsed vector cannot span the solved slice
  CHECK(plus[10].derived == "-e(1p,2pb)+e(2p,1pb)");
  CHECK(plus[13].printed == "e(0,1pb)-e(1p,0)");
  CHECK(plus[13].derived == "e(0,1pb)+e(1p,0)");
  CHECK(plus[14].printed == "e(0,1p)+e(1pb,0)");
  CHECK(plus[14].derived == "-e(0,1p)+e(1pb,0)");
}

TEST_CASE("unflagged rows span their solved slices") {
  for (int gamma : {-1, 1}) {
    TableReport t = verify_span_table(2, 2, gamma);
    for (const TableRow& r : t.rows)
      if (r.applicable && !r.flagged) CHECK(r.printed_ok);
  }
}

TEST_CASE("weight evaluation matches the Cartan labels") {
  Weight w = Weight::of(sym_e(1)) - Weight::of(sym_d(2)) * 2;
  CHECK(OspContext::eval_weight(w, "h1") == 1);
  CHECK(OspContext::eval_weight(w, "h2") == 0);
  CHECK(OspContext::eval_weight(w, "d2") == -2);
}

TEST_CASE("the root set of the algebra carries the signed product") {
  OspContext ctx(2, 2);
  RootSet rs = ctx.root_set();
  CHECK(rs.form(Weight::of(sym_e(1)), Weight::of(sym_e(1))) == 1);
  CHECK(rs.form(Weight::of(sym_d(1)), Weight::of(sym_d(1))) == -1);
  CHECK(rs.form(Weight::of(sym_e(1)), Weight::of(sym_d(1))) == 0);
  CHECK(rs.contains(Weight()));
}
