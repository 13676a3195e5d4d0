#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "superroot/repn.hpp"
#include "superroot/report.hpp"

using namespace superroot;

TEST_CASE("Casimir scalars on the three small modules") {
  OspContext ctx(2, 2);
  CasimirResult g = casimir_on(ctx, adjoint_module(ctx));
  CasimirResult s = casimir_on(ctx, second_module(ctx));
  CasimirResult u = casimir_on(ctx, natural_module(ctx));
  CHECK(g.value == -2);
  CHECK(s.value == 2);
  CHECK(u.value == 0);
  for (const CasimirResult& c : {g, s, u}) {
    CHECK(c.is_scalar);
    CHECK(c.commutes);
    CHECK(c.odd_flip);  // the contraction needs the parity sign to be central
  }
}

TEST_CASE("Casimir scalars separate the modules at the larger size") {
  OspContext ctx(4, 2);
  CHECK(casimir_on(ctx, adjoint_module(ctx)).value == 6);
  CHECK(casimir_on(ctx, second_module(ctx)).value == 10);
  CHECK(casimir_on(ctx, natural_module(ctx)).value == 4);
}

TEST_CASE("module constructors expose the expected shapes") {
  OspContext ctx(2, 2);
  Module g = adjoint_module(ctx);
  Module s = second_module(ctx);
  Module u = natural_module(ctx);
  Module t = trivial_module(ctx);
  CHECK(g.dim == 40);
  CHECK(s.dim == 40);
  CHECK(u.dim == 9);
  CHECK(t.dim == 1);
  CHECK(tensor_module(g, u).dim == 360);
  Module sum = direct_sum({&g, &u});
  CHECK(sum.dim == 49);
  CHECK(sum.parity.size() == 49);
}

TEST_CASE("decomposition reads the constituents off a clean sum") {
  OspContext ctx(2, 2);
  Module g = adjoint_module(ctx);
  Module s = second_module(ctx);
  Module u = natural_module(ctx);
  Module sum = direct_sum({&g, &s, &u});
  DecomposeResult d = decompose_full(sum, ctx);
  CHECK(d.complete);
  CHECK(d.tags == std::map<std::string, int>{{"g", 1}, {"s", 1}, {"u", 1}});
}

TEST_CASE("decomposition is invariant under hidden basis changes") {
  OspContext ctx(2, 2);
  Module g = adjoint_module(ctx);
  Module s = second_module(ctx);
  Module u = natural_module(ctx);
  Module t = trivial_module(ctx);
  Module sum = direct_sum({&u, &t, &g, &u, &s});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::mt19937_64 rng(seed);
    Module mixed = shuffled(sum, rng);
    CHECK(mixed.weights.empty());  // the stored weights are no longer valid
    DecomposeResult d = decompose_full(mixed, ctx);
    CHECK(d.complete);
    CHECK(d.tags == std::map<std::string, int>{
                        {"g", 1}, {"s", 1}, {"trivial", 1}, {"u", 2}});
  }
}

TEST_CASE("the fast multiplicity count agrees with full generation") {
  OspContext ctx(2, 2);
  Module g = adjoint_module(ctx);
  Module s = second_module(ctx);
  Module t = trivial_module(ctx);
  Module sum = direct_sum({&s, &s, &t, &g});
  std::mt19937_64 rng(11);
  Module mixed = shuffled(sum, rng);
  DecomposeResult fast = decompose_tags(mixed, ctx);
  DecomposeResult full = decompose_full(mixed, ctx);
  CHECK(fast.tags == full.tags);
  CHECK(fast.dims_match);
  CHECK(full.complete);
}

TEST_CASE("intertwiner spaces over the even part") {
  OspContext ctx(2, 2);
  std::vector<std::string> gens = even_part_generators(ctx);
  Module g1 = parity_component(adjoint_module(ctx), 1, gens);
  Module s0 = parity_component(second_module(ctx), 0, gens);
  Module u0 = parity_component(natural_module(ctx), 0, gens);
  Module u1 = parity_component(natural_module(ctx), 1, gens);
  CHECK(g1.dim == 20);
  CHECK(s0.dim == 20);
  CHECK(u0.dim == 5);
  CHECK(u1.dim == 4);

  // the two tensor products stay disjoint from the twisted even piece
  CHECK(hom_space(tensor_module(g1, u0), s0, gens).empty());
  CHECK(hom_space(tensor_module(g1, u1), s0, gens).empty());

  // positive controls: self-intertwiners count the simple summands
  Module g0 = parity_component(adjoint_module(ctx), 0, gens);
  CHECK(hom_space(g0, g0, gens).size() == 2);
  CHECK(hom_space(u0, u0, gens).size() == 1);
  CHECK(hom_space(g1, g1, gens).size() == 1);
}

TEST_CASE("weight spaces follow the Cartan action") {
  OspContext ctx(2, 2);
  Module u = natural_module(ctx);
  CHECK(weight_space(u, ctx, Weight::of(sym_e(1))).size() == 1);
  CHECK(weight_space(u, ctx, Weight()).size() == 1);
  CHECK(weight_space(u, ctx, Weight::of(sym_e(1), 2)).empty());
}

TEST_CASE("modules round-trip through their report form") {
  OspContext ctx(2, 2);
  Module u = natural_module(ctx);
  int m = 0, n = 0;
  Module back = module_from_json(module_to_json(u, 2, 2), m, n);
  CHECK(m == 2);
  CHECK(n == 2);
  CHECK(back.dim == u.dim);
  CHECK(back.parity == u.parity);
  CHECK(back.labels == u.labels);
  CHECK(back.weights == u.weights);
  CHECK(back.gen_parity == u.gen_parity);
  REQUIRE(back.action.size() == u.action.size());
  for (const auto& [gname, mat] : u.action) CHECK(back.action.at(gname) == mat);
  // a decomposition of the round-tripped module still works
  DecomposeResult d = decompose_full(back, ctx);
  CHECK(d.complete);
  CHECK(d.tags == std::map<std::string, int>{{"u", 1}});
}
