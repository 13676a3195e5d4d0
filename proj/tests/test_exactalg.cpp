#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superroot/linalg.hpp"
#include "superroot/report.hpp"
#include "superroot/supermatrix.hpp"

using namespace superroot;

TEST_CASE("rational arithmetic is exact") {
  Scalar a(1, 3), b(1, 6);
  CHECK(a + b == Scalar(1, 2));
  CHECK(a * b == Scalar(1, 18));
  Scalar half(2, 4);
  half.canonicalize();  // mpq keeps the given numerator/denominator until told
  CHECK(half == Scalar(1, 2));
  CHECK(Scalar(-3) / Scalar(7) == Scalar(-3, 7));
}

TEST_CASE("sparse vectors never store explicit zeros") {
  SVec<int> v{{0, Scalar(1)}, {2, Scalar(-1)}};
  SVec<int> w{{2, Scalar(1)}, {5, Scalar(4)}};
  axpy(v, Scalar(1), w);
  CHECK(v.count(2) == 0);  // cancellation erases the key
  CHECK(v.size() == 2);
  CHECK(v.at(5) == 4);
  CHECK(scaled(v, Scalar(0)).empty());
}

TEST_CASE("row basis computes rank with full reduction") {
  RowBasis<int> rb;
  CHECK(rb.insert(SVec<int>{{0, Scalar(1)}, {1, Scalar(2)}}));
  CHECK(rb.insert(SVec<int>{{1, Scalar(1)}, {2, Scalar(1)}}));
  // dependent: 1*first - 2*second
  CHECK_FALSE(rb.insert(SVec<int>{{0, Scalar(1)}, {2, Scalar(-2)}}));
  CHECK(rb.rank() == 2);
  CHECK(rb.contains(SVec<int>{{0, Scalar(3)}, {1, Scalar(6)}}));
  CHECK_FALSE(rb.contains(SVec<int>{{2, Scalar(1)}}));
}

TEST_CASE("nullspace solver returns a canonical free-variable basis") {
  // x + y - z = 0 and its double: kernel has dimension 2
  std::vector<SVec<int>> eqs{{{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(-1)}},
                             {{0, Scalar(2)}, {1, Scalar(2)}, {2, Scalar(-2)}}};
  auto ker = solve_nullspace(eqs, std::vector<int>{0, 1, 2});
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    Scalar sum(0);
    sum += (v.count(0) ? v.at(0) : Scalar(0));
    sum += (v.count(1) ? v.at(1) : Scalar(0));
    sum -= (v.count(2) ? v.at(2) : Scalar(0));
    CHECK(sum == 0);
  }
}

TEST_CASE("affine solver distinguishes consistent from inconsistent systems") {
  std::vector<std::pair<SVec<int>, Scalar>> eqs{
      {{{0, Scalar(1)}, {1, Scalar(1)}}, Scalar(3)},
      {{{0, Scalar(1)}, {1, Scalar(-1)}}, Scalar(1)}};
  auto sol = solve_affine(eqs, std::vector<int>{0, 1});
  REQUIRE(sol.has_value());
  CHECK(sol->particular.at(0) == 2);
  CHECK(sol->particular.at(1) == 1);
  CHECK(sol->nullspace.empty());

  eqs.push_back({{{0, Scalar(1)}, {1, Scalar(1)}}, Scalar(4)});
  CHECK_FALSE(solve_affine(eqs, std::vector<int>{0, 1}).has_value());
}

TEST_CASE("span membership produces exact coordinates") {
  std::vector<SVec<int>> vecs{{{0, Scalar(1)}, {1, Scalar(1)}},
                              {{1, Scalar(1)}, {2, Scalar(1)}}};
  SVec<int> target{{0, Scalar(2)}, {1, Scalar(1)}, {2, Scalar(-1)}};
  auto co = coordinates_in_span(vecs, target);
  REQUIRE(co.has_value());
  CHECK((*co)[0] == 2);
  CHECK((*co)[1] == -1);
  CHECK_FALSE(coordinates_in_span(vecs, SVec<int>{{3, Scalar(1)}}).has_value());
}

TEST_CASE("supermatrices multiply and supertrace with the parity sign") {
  // 3x3 space at m=1, n=1 collapses to dim 5; use dims (1,1): dim = 5
  SpaceDims d{1, 1};
  SpMat id = SpMat::identity(d.dim());
  CHECK(supertrace(d, id) == d.sdim());
  SpMat a(d.dim()), b(d.dim());
  a.set(0, 1, Scalar(2));
  b.set(1, 0, Scalar(3));
  SpMat ab = a.mul(b);
  CHECK(ab.at(0, 0) == 6);
  CHECK(ab.at(1, 1) == 0);
}

TEST_CASE("supercommutator of odd elements symmetrizes") {
  SpaceDims d{1, 1};
  SpMat x(d.dim()), y(d.dim());
  // block layout puts odd rows after the even ones; a single odd-odd entry
  // pair is enough to distinguish xy + yx from xy - yx
  int e = 0, o = 2 * d.m + 1;
  x.set(e, o, Scalar(1));
  y.set(o, e, Scalar(1));
  SpMat anti = supercommutator(x, 1, y, 1);
  SpMat xy = x.mul(y), yx = y.mul(x);
  SpMat sum = xy;
  sum += yx;
  CHECK(anti == sum);
}

TEST_CASE("hash of the report head is stable") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("rationals round-trip through their report form") {
  CHECK(scalar_str(Scalar(-7, 3)) == "-7/3");
  CHECK(scalar_parse("-7/3") == Scalar(-7, 3));
  CHECK(scalar_parse("4/2") == Scalar(2));
  CHECK(scalar_str(Scalar(5)) == "5");
  CHECK(scalar_parse(scalar_str(Scalar(22, 7))) == Scalar(22, 7));
}

TEST_CASE("weights and root sets round-trip through reports") {
  Weight w = Weight::of(sym_e(1)) - Weight::of(sym_d(2)) * 3;
  CHECK(weight_from_json(weight_to_json(w)) == w);
  CHECK(sym_from_label("e3") == sym_e(3));
  CHECK(sym_from_label("L1") == sym_L(1));
  CHECK(sym_from_label("a*") == sym_star());

  RootSet rs = gen_super("BC", 1, 1);
  RootSet back = rootset_from_json(rootset_to_json(rs));
  CHECK(back.roots == rs.roots);
  CHECK(back.name == rs.name);
  CHECK(back.gram == rs.gram);
}

TEST_CASE("canonical reports order keys and carry no timing") {
  nlohmann::json j = make_envelope("demo", {{"b", "2"}, {"a", "1"}});
  std::string text = canonical_dump(j);
  CHECK(text.find("\"a\"") < text.find("\"b\""));
  CHECK(text.find("time") == std::string::npos);
  CHECK(text.back() == '\n');
  // the envelope hash folds the sorted key=value lines
  CHECK(j["input_hash"] == fnv1a64_hex("a=1\nb=2\n"));
}

TEST_CASE("sparse matrices round-trip through reports") {
  SpMat a(4);
  a.set(0, 3, Scalar(1, 2));
  a.set(2, 1, Scalar(-5));
  SpMat b = spmat_from_json(spmat_to_json(a));
  CHECK(a == b);
}
