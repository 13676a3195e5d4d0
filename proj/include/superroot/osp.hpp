#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superroot/index.hpp"
#include "superroot/linalg.hpp"
#include "superroot/rootsys.hpp"
#include "superroot/supermatrix.hpp"
#include "superroot/weight.hpp"

namespace superroot {

// One basis element of a matrix superalgebra realized on the natural space.
struct AlgElem {
  std::string label;
  Weight weight;
  int parity = 0;  // block parity of the matrix
  SpMat mat{1};
};

// Basis of the gamma-twisted subspace of gl, sliced by Cartan weight.
// Each slice is solved from the defining linear condition
//   (s v_a, v_b) = gamma (-1)^{|s||a|} (v_a, s v_b)
// rather than transcribed from a table; slices are keyed by weight and each
// basis vector is the canonical nullspace solution for its slice.
struct GammaSlices {
  std::map<Weight, std::vector<SVec<std::pair<int, int>>>> slices;
  int total_dim = 0;
};
GammaSlices solve_gamma_slices(const SpaceDims& d, int gamma);

// The orthosymplectic algebra g together with the complementary twisted
// module s and the natural module u, all with weight-indexed bases.
class OspContext {
public:
  OspContext(int m, int n);

  SpaceDims dims;
  SpMat F{1};  // matrix of the invariant bilinear form on the natural space

  // g: Cartan basis h1..hm, d1..dn first, then one vector per nonzero weight,
  // labels "g[<weight>]".  Matrices satisfy the gamma = -1 condition.
  std::vector<AlgElem> g;
  // s: traceless diagonal part "s0[1]".."s0[m+n]" first, then "s[<weight>]".
  // Matrices satisfy the gamma = +1 condition and have supertrace zero.
  std::vector<AlgElem> s;

  std::map<std::string, int> g_index;
  std::map<std::string, int> s_index;
  std::map<Weight, std::vector<int>> g_by_weight;
  std::map<Weight, std::vector<int>> s_by_weight;

  int gdim() const { return static_cast<int>(g.size()); }
  int sdim_alg() const { return static_cast<int>(s.size()); }

  // Weight of the natural-space basis vector with the given flat index.
  Weight weight_of_index(int flat) const;

  // Value of a weight on a Cartan element identified by label ("h2", "d1").
  static Scalar eval_weight(const Weight& w, const std::string& cartan_label);

  // Set of weights of g, as a root set over e/d symbols with the standard
  // form (e_i, e_j) = delta, (d_p, d_q) = -delta.  Includes 0.
  RootSet root_set() const;
  // Weight support of the full decomposition g + s + u (the BC-type set).
  RootSet support_set() const;

  // Exact coordinates of a matrix in the g basis; throws if x is not in g.
  SVec<int> g_coords(const SpMat& x) const;
  // Same for the s basis.
  SVec<int> s_coords(const SpMat& x) const;

  // Structure constants [g_i, g_j] expressed in the g basis.
  SVec<int> bracket_g(int i, int j) const;

  // Invariant form (1/2) str(xy).
  Scalar str_form(const SpMat& x, const SpMat& y) const;

  // Simple raising labels for the distinguished base
  //   d1-d2, ..., d(n-1)-dn, dn-e1, e1-e2, ..., e(m-1)-em, em
  // (requires n >= 1; used by the module layer).
  std::vector<std::string> simple_raising_labels() const;
  std::vector<std::string> simple_lowering_labels() const;
  std::vector<std::string> cartan_labels() const;

private:
  void build_g();
  void build_s();
  SVec<int> coords_in(const std::vector<AlgElem>& basis,
                      const std::map<Weight, std::vector<int>>& by_weight,
                      const SpMat& x, const char* who) const;
};

// Certification of one displayed spanning-table row against the solved basis.
struct TableRow {
  int row = 0;                // 1..18 in display order
  std::string weight;
  bool applicable = true;     // false when the row needs more index room
  bool zero_claim = false;    // the row asserts the slice vanishes for this gamma
  bool printed_ok = false;    // the printed vector spans the solved slice
  bool flagged = false;       // discrepancy detected
  std::string printed;        // printed vector, rendered
  std::string derived;        // canonical solved spanning vector (when flagged)
};

struct TableReport {
  int gamma = 0;
  std::vector<TableRow> rows;
  int solved_dim = 0;      // total dimension of all solved slices
  int expected_dim = 0;    // dimension the slice solver must account for
  bool span_complete = false;
};

// Verify the displayed spanning table for a_gamma at the given size, flagging
// any row whose printed vector fails the defining condition and reporting the
// solved replacement vector.
TableReport verify_span_table(int m, int n, int gamma);

// Dimension of g predicted by the closed formula.
long osp_dim_formula(int m, int n);

}  // namespace superroot
