#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superroot/index.hpp"
#include "superroot/scalar.hpp"

namespace superroot {

// Sparse square matrix over the rationals, rows/cols keyed by flat indices of
// the natural superspace. Entries are kept canonical: zeros are erased.
class SpMat {
 public:
  SpMat() = default;
  explicit SpMat(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool is_zero() const { return rows_.empty(); }

  Scalar at(int r, int c) const;
  void set(int r, int c, Scalar v);
  void add(int r, int c, const Scalar& v);

  static SpMat unit(int dim, int r, int c);  // elementary matrix e_{r,c}
  static SpMat identity(int dim);

  SpMat& operator+=(const SpMat& o);
  SpMat& operator-=(const SpMat& o);
  SpMat& operator*=(const Scalar& s);
  friend SpMat operator+(SpMat a, const SpMat& b) { return a += b; }
  friend SpMat operator-(SpMat a, const SpMat& b) { return a -= b; }
  friend SpMat operator*(const Scalar& s, SpMat a) { return a *= s; }

  SpMat mul(const SpMat& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool operator==(const SpMat& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }

  const std::map<int, std::map<int, Scalar>>& rows() const { return rows_; }

 private:
  int dim_ = 0;
  std::map<int, std::map<int, Scalar>> rows_;
};

Scalar supertrace(const SpaceDims& d, const SpMat& x);

// Block parity of a matrix: p if every nonzero entry (r,c) has
// parity(r)+parity(c) = p mod 2; nullopt for non-homogeneous or zero input
// (zero is reported as parity 0).
std::optional<int> block_parity(const SpaceDims& d, const SpMat& x);

SpMat even_part(const SpaceDims& d, const SpMat& x);
SpMat odd_part(const SpaceDims& d, const SpMat& x);

// Supercommutator xy - (-1)^{px py} yx of homogeneous operators.
SpMat supercommutator(const SpMat& x, int px, const SpMat& y, int py);

// Supercommutator of possibly non-homogeneous operators via the explicit
// (even part, odd part) split. Throws nothing; distributes over the split.
SpMat superbracket_split(const SpaceDims& d, const SpMat& x, const SpMat& y);

// Supercommutator that insists on homogeneous input (throws otherwise).
SpMat superbracket_homogeneous(const SpaceDims& d, const SpMat& x, const SpMat& y);

// Gram matrix of the invariant even bilinear form of the natural superspace:
// (v_0,v_0)=1, (v_i,v_ib)=1 and (v_ib,v_i)=1 on the even range,
// (v_p,v_pb)=1 and (v_pb,v_p)=-1 on the odd range, all else 0.
SpMat form_matrix(const SpaceDims& d);

// Value of the form on coordinate vectors.
Scalar form_value(const SpaceDims& d, const std::vector<Scalar>& u,
                  const std::vector<Scalar>& v);

// Canonical serialization: "row,col,value;..." over label pairs, sorted.
std::string spmat_to_string(const SpaceDims& d, const SpMat& x);

}  // namespace superroot
