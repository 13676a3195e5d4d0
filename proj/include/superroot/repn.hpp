#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "superroot/linalg.hpp"
#include "superroot/osp.hpp"

namespace superroot {

// A finite-dimensional module given by its action matrices.  `weights` is
// only meaningful while the basis is a weight basis; basis changes clear it.
struct Module {
  int dim = 0;
  std::vector<int> parity;
  std::vector<Weight> weights;
  std::vector<std::string> labels;
  std::map<std::string, SpMat> action;     // generator label -> matrix
  std::map<std::string, int> gen_parity;   // generator label -> parity
};

// The adjoint module: every basis element of g acts on g itself.
Module adjoint_module(const OspContext& ctx);
// The natural module on the underlying graded space.
Module natural_module(const OspContext& ctx);
// The twisted complement s as a g-module under the supercommutator.
Module second_module(const OspContext& ctx);
// The one-dimensional module with zero action.
Module trivial_module(const OspContext& ctx);

Module direct_sum(const std::vector<const Module*>& parts);
Module tensor_module(const Module& a, const Module& b);

// Restriction to the basis vectors of one parity, keeping only the listed
// generators (which must preserve parity).
Module parity_component(const Module& m, int par, const std::vector<std::string>& gens);

// Random basis change: a permutation within each parity block followed by
// integer shears.  The result has the same action up to conjugation; its
// stored weights are cleared because the basis is no longer a weight basis.
Module shuffled(const Module& m, std::mt19937_64& rng);

// Apply a sparse matrix to a sparse coordinate vector.
SVec<int> apply_mat(const SpMat& a, const SVec<int>& v);

// Basis of the mu-weight space computed from the Cartan action matrices.
std::vector<SVec<int>> weight_space(const Module& m, const OspContext& ctx, const Weight& mu);

struct DecomposeResult {
  std::map<std::string, int> tags;  // "g", "s", "u", "trivial" -> multiplicity
  long primitive_total = 0;         // dim of the joint kernel of the raising ops
  bool dims_match = false;          // multiplicities account for dim exactly
  bool generated_ok = true;         // full path: lowering closures fill the module
  bool complete = false;
};

// Multiset of irreducible constituents among {g, s, u, trivial}, read off
// from highest-weight multiplicities.  Uses only the action matrices, never
// the stored weight list.  Requires n >= 2.
DecomposeResult decompose_tags(const Module& m, const OspContext& ctx);
// Same, plus explicit generation of every constituent from its primitive
// vector and a check that the pieces exhaust the module.
DecomposeResult decompose_full(const Module& m, const OspContext& ctx);

// Solution space of intertwiner equations Phi rho_X(x) = rho_Y(x) Phi for the
// given generators; unknowns are weight-compatible matrix entries.
std::vector<SVec<std::pair<int, int>>> hom_space(const Module& x, const Module& y,
                                                 const std::vector<std::string>& gens);

// Generator labels of the even part: simple raising/lowering vectors of the
// even-root base (two-index even roots plus the doubled/short tails).
std::vector<std::string> even_part_generators(const OspContext& ctx);

struct CasimirResult {
  Scalar value;
  bool is_scalar = false;
  bool commutes = false;
  bool odd_flip = false;  // parity signs were needed in the contraction
};

// Quadratic Casimir action on a module, contracted with dual bases of the
// invariant form (1/2) str(xy); verifies scalarness and centrality.
CasimirResult casimir_on(const OspContext& ctx, const Module& m);

}  // namespace superroot
