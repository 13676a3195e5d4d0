#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superroot/graded.hpp"

namespace superroot {

// Affinization of a Laurent-window loop algebra: the loop space extended by a
// central element Lam1 and a degree derivation d1, carrying the induced even
// supersymmetric invariant form.  Basis order: loop basis unchanged, then
// Lam1, then d1.  Roots live over the osp symbols plus the isotropic L1.
class Eals {
public:
  int m = 0, n = 0, window = 0;
  std::vector<std::string> labels;
  std::vector<int> parity;
  std::vector<Weight> roots;  // osp weight + degree * L1 per basis element
  std::vector<int> degree;
  int lam1 = -1, d1 = -1;
  std::vector<int> cartan;                 // basis indices of the Cartan
  std::vector<std::string> cartan_names;   // "h1".."dn", "Lam1", "d1"

  std::vector<SVec<int>> table;
  std::vector<char> rejected;
  std::map<std::pair<int, int>, Scalar> form_entries;

  int dim() const { return static_cast<int>(labels.size()); }
  long flat(int i, int j) const { return static_cast<long>(i) * dim() + j; }

  std::optional<SVec<int>> bracket(int i, int j) const;
  std::optional<SVec<int>> bracket_vv(const SVec<int>& x, const SVec<int>& y) const;
  int parity_of_vec(const SVec<int>& x) const;  // -1 if mixed or zero

  Scalar form(int i, int j) const;
  Scalar form_vv(const SVec<int>& x, const SVec<int>& y) const;

  // Support of the basis over e/d/L1 symbols, with L1 in the form radical.
  RootSet root_set() const;

  // Value of a root on the Cartan element at cartan[idx].
  Scalar eval_on_cartan(const Weight& rho, int idx) const;
  // The Cartan element representing rho through the form: (t_rho, h) = rho(h).
  SVec<int> t_root(const Weight& rho) const;
};

// Build the affinization.  The input must be a pure loop algebra: every basis
// element in the G sector over an eta-fixed Laurent coordinate with a degree
// window; anything else is refused with std::invalid_argument.
Eals affinize(const GradedAlgebra& loop);

struct EalsCheck {
  bool form_even = false;
  bool form_supersymmetric = false;
  bool form_invariant = false;      // sampled triple sweep
  bool form_nondegenerate = false;
  bool cartan_ok = false;           // ad-diagonal action with root eigenvalues
  bool axiom1 = false;              // nonzero pairing into the Cartan per root/parity
  bool coroot_identity = false;     // [e,f] = (e,f) t_rho over opposite root pairs
  bool axiom2 = false;              // ad-nilpotency within the string bound
  bool axiom2_tight = false;        // some chain attains its bound exactly
  bool cube_witness = false;        // (ad x)^3 d1 = 0 through a doubled odd root
  bool center_is_lam1 = false;      // center of the full space = F Lam1
  long checked = 0;
  long skipped = 0;
  std::vector<std::string> failures;

  bool passed() const {
    return form_even && form_supersymmetric && form_invariant && form_nondegenerate &&
           cartan_ok && axiom1 && coroot_identity && axiom2 && axiom2_tight &&
           cube_witness && center_is_lam1;
  }
};

EalsCheck check_eals(const Eals& v, long samples, std::uint64_t seed);

struct CoreReport {
  bool core_matches = false;      // closure of the nonzero sectors = loop + F Lam1
  bool center_is_lam1 = false;    // Z(core) = F Lam1
  bool quotient_matches = false;  // core/Z structure constants = loop table
  int core_dim = 0;
  int center_dim = 0;
  long compared = 0;
  long skipped = 0;
  std::vector<std::string> failures;

  bool passed() const { return core_matches && center_is_lam1 && quotient_matches; }
};

// Core extraction and the round trip back to the input loop algebra.
CoreReport analyze_core(const Eals& v, const GradedAlgebra& loop);

}  // namespace superroot
