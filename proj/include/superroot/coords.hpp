#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superroot/linalg.hpp"

namespace superroot {

// Coordinate package for a graded build: a unital associative superalgebra
// a = A (+) B split by an involution eta (+1 on A, -1 on B), an a-module c
// with a hermitian map chi : c x c -> a, a space d of derivations, and a
// pairing <.,.> : b x b -> d on b = a (+) c.  Tables are sparse over basis
// indices; an absent key means the product is zero, while a key in the
// matching reject set means the product leaves the degree window and is
// undefined there.
struct CoordinateData {
  std::string name;
  int window = 0;  // 0 = no degree window

  std::vector<std::string> a_labels;
  std::vector<int> a_parity;
  std::vector<int> a_eta;    // +1 or -1 per basis element
  std::vector<int> a_degree;
  int unit = -1;
  std::map<std::pair<int, int>, SVec<int>> a_product;
  std::set<std::pair<int, int>> a_reject;

  std::vector<std::string> c_labels;
  std::vector<int> c_parity;
  std::vector<int> c_degree;
  std::map<std::pair<int, int>, SVec<int>> act;  // a x c -> c
  std::set<std::pair<int, int>> act_reject;
  std::map<std::pair<int, int>, SVec<int>> chi;  // c x c -> a
  std::set<std::pair<int, int>> chi_reject;

  std::vector<std::string> d_labels;
  std::vector<int> d_parity;
  std::vector<int> d_degree;
  std::map<std::pair<int, int>, SVec<int>> d_bracket;  // d x d -> d
  std::map<std::pair<int, int>, SVec<int>> d_act_a;    // d x a -> a
  std::map<std::pair<int, int>, SVec<int>> d_act_c;    // d x c -> c

  // pairing on b = a (+) c; b-indices list a first, then c offset by adim
  std::map<std::pair<int, int>, SVec<int>> pairing;

  int adim() const { return static_cast<int>(a_labels.size()); }
  int cdim() const { return static_cast<int>(c_labels.size()); }
  int ddim() const { return static_cast<int>(d_labels.size()); }
  int bdim() const { return adim() + cdim(); }

  int b_parity(int b) const { return b < adim() ? a_parity[b] : c_parity[b - adim()]; }
  int b_degree(int b) const { return b < adim() ? a_degree[b] : c_degree[b - adim()]; }

  // ---- basis-level products (nullopt = undefined at this window) ----
  std::optional<SVec<int>> mul_a(int i, int j) const;
  std::optional<SVec<int>> brk_a(int i, int j) const;   // xy - (-1)^{|x||y|} yx
  std::optional<SVec<int>> circ_a(int i, int j) const;  // xy + (-1)^{|x||y|} yx
  std::optional<SVec<int>> act_ac(int i, int j) const;  // a_i . c_j
  std::optional<SVec<int>> chi_cc(int i, int j) const;
  std::optional<SVec<int>> diamond(int i, int j) const;  // symmetrized chi, in A
  std::optional<SVec<int>> heart(int i, int j) const;    // skewed chi, in B
  SVec<int> dd(int i, int j) const;
  SVec<int> d_on_a(int i, int j) const;
  SVec<int> d_on_c(int i, int j) const;
  SVec<int> pair_b(int i, int j) const;

  // ---- linear extensions over the a / c coordinates ----
  SVec<int> eta_of(const SVec<int>& x) const;  // apply eta coefficientwise
  std::optional<SVec<int>> prod_av(const SVec<int>& x, const SVec<int>& y) const;
  std::optional<SVec<int>> act_av(const SVec<int>& x, const SVec<int>& c) const;
  SVec<int> d_act_av(const SVec<int>& dv, const SVec<int>& x) const;
  SVec<int> d_act_cv(const SVec<int>& dv, const SVec<int>& c) const;

  // split an a-coordinate vector into its A and B parts
  void split_eta(const SVec<int>& x, SVec<int>& a_part, SVec<int>& b_part) const;
};

struct DataCheck {
  bool unital = false;
  bool assoc = false;
  bool eta_antihom = false;   // eta(xy) = (-1)^{|x||y|} eta(y) eta(x)
  bool module_ok = false;     // (xy).c = x.(y.c), 1.c = c
  bool chi_ok = false;        // parity, hermitian symmetry, A-bilinearity
  bool diamond_heart_ok = false;
  bool pairing_sectors = false;  // bullet on supports and super-skew symmetry
  bool derivation_ok = false;    // phi(d) is a superderivation of the b-product
  bool derivation_sectors = false;
  bool derivation_pairing = false;  // compatibility of d with <.,.>
  bool cyclic_ok = false;           // cyclic pairing identity on b
  bool action_a_on_a = false;       // <a,a'> acting on a
  bool action_a_on_c = false;
  bool action_c_on_a = false;
  bool action_c_on_c = false;
  bool surjective = false;          // pairing values span d
  long checked = 0;
  long skipped = 0;
  std::vector<std::string> failures;

  bool passed() const {
    return unital && assoc && eta_antihom && module_ok && chi_ok &&
           diamond_heart_ok && pairing_sectors && derivation_ok &&
           derivation_sectors && derivation_pairing && cyclic_ok &&
           action_a_on_a && action_a_on_c && action_c_on_a && action_c_on_c &&
           surjective;
  }
};

// Verify every defining identity of the coordinate package against the
// target size (m, n); the scalar N = 2m+1-2n enters the pairing identities.
DataCheck verify_data(const CoordinateData& data, int m, int n);

// ---- shipped datasets ----
CoordinateData data_trivial();
CoordinateData data_laurent(int window);
CoordinateData data_hermitian();
CoordinateData data_m2();

// Look up a shipped dataset by name ("trivial", "laurent", "hermitian", "m2").
std::optional<CoordinateData> builtin_data(const std::string& name, int window);

}  // namespace superroot
