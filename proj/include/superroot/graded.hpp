#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superroot/coords.hpp"
#include "superroot/osp.hpp"

namespace superroot {

// Sector of a basis element of the assembled graded algebra:
//   G = g (x) A,  S = s (x) B,  U = u (x) c,  D = derivations.
enum class Sector : int { G = 0, S = 1, U = 2, D = 3 };

struct BElem {
  Sector sector = Sector::G;
  int alg_i = -1;    // index into the osp g / s / natural basis (-1 for D)
  int coord_i = -1;  // coordinate basis index (a, a, c, or d by sector)
  int parity = 0;
  Weight weight;     // osp-side weight (zero for D)
  int degree = 0;    // coordinate-side degree
  std::string label;
};

// A Lie superalgebra assembled from an orthosymplectic core and a coordinate
// package, with an eager basis-pair bracket table.  Brackets that a degree
// window makes undefined are listed in `rejected`; a table entry exists for
// every other ordered pair (possibly zero).
class GradedAlgebra {
public:
  int m = 0, n = 0;
  CoordinateData data;
  std::vector<BElem> basis;
  std::map<Weight, std::vector<int>> by_weight;

  int dim() const { return static_cast<int>(basis.size()); }

  // Bracket of basis elements; nullopt when the pair is window-rejected.
  std::optional<SVec<int>> bracket(int i, int j) const;
  bool is_rejected(int i, int j) const { return rejected_[flat(i, j)] != 0; }
  long rejected_count() const { return rejected_pairs_; }

  // Bilinear extension; nullopt if any contributing basis pair is rejected.
  std::optional<SVec<int>> bracket_vv(const SVec<int>& x, const SVec<int>& y) const;

  // Parity of a homogeneous coordinate vector; -1 if mixed or zero.
  int parity_of_vec(const SVec<int>& x) const;

  // Basis index with the given sector coordinates, or -1.
  int find_basis(Sector sec, int alg_i, int coord_i) const;

  // internal: used by the builder only
  std::vector<SVec<int>>& mutable_table() { return table_; }
  std::vector<char>& mutable_rejected() { return rejected_; }
  void finalize();

private:
  long flat(int i, int j) const { return static_cast<long>(i) * dim() + j; }
  std::vector<SVec<int>> table_;
  std::vector<char> rejected_;
  std::map<std::tuple<int, int, int>, int> index_;
  long rejected_pairs_ = 0;
};

// Assemble the graded algebra over the given coordinate package.  The data is
// re-verified first and the build refuses (std::invalid_argument) when any
// coordinate axiom fails; sector, weight, and degree additivity of every
// computed bracket component are asserted during the fill.
GradedAlgebra build_graded(const OspContext& ctx, const CoordinateData& data);

struct JacobiReport {
  bool exhaustive = true;
  long triples = 0;
  long checked = 0;
  long skipped = 0;   // triples with a window-rejected sub-bracket
  long failed = 0;
  std::string witness;
  bool passed() const { return failed == 0 && checked > 0; }
};

// Graded super-Jacobi sweep over basis triples: exhaustive over dim^3, or
// `samples` pseudo-random triples drawn deterministically from `seed`.
JacobiReport verify_super_jacobi(const GradedAlgebra& g, bool exhaustive, long samples,
                                 std::uint64_t seed, bool parallel = true);

struct RootGradedCheck {
  bool support_ok = false;    // weight support inside the BC-type set
  bool grading_ok = false;    // weight and degree additivity of the table
  bool zero_piece_ok = false; // zero space spanned by opposite-weight brackets
  bool toral_ok = false;      // Cartan eigenvalues + sl2 triples over the core roots
  bool fine = false;          // per-weight parity matches the even/odd partition
  bool predivision = false;   // invertible pair in every nonzero weight sector
  std::string support_tag;
  long checked = 0;
  long skipped = 0;
  std::vector<std::string> failures;

  bool passed() const { return support_ok && grading_ok && zero_piece_ok && toral_ok; }
};

RootGradedCheck verify_root_graded(const GradedAlgebra& g);

}  // namespace superroot
