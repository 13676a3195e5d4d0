#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superroot/scalar.hpp"
#include "superroot/supermatrix.hpp"

namespace superroot {

// Sparse vector over an ordered key type. Invariant: no explicit zeros.
template <typename K>
using SVec = std::map<K, Scalar>;

template <typename K>
void axpy(SVec<K>& y, const Scalar& a, const SVec<K>& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

template <typename K>
SVec<K> scaled(const SVec<K>& x, const Scalar& a) {
  SVec<K> y;
  if (a == 0) return y;
  for (const auto& [k, v] : x) y.emplace(k, a * v);
  return y;
}

// Reduced row-echelon span with canonical rows: each stored row has leading
// coefficient 1 at its pivot (the smallest key), and no row contains another
// row's pivot key.
template <typename K>
class RowBasis {
 public:
  // Returns true if v enlarged the span.
  bool insert(SVec<K> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    K pivot = v.begin()->first;
    Scalar lead = v.begin()->second;
    if (lead != 1) {
      Scalar inv = Scalar(1) / lead;
      for (auto& [k, val] : v) val *= inv;
    }
    for (auto& row : rows_) {
      auto it = row.find(pivot);
      if (it != row.end()) {
        Scalar c = -it->second;
        axpy(row, c, v);
      }
    }
    pivots_.emplace(pivot, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(v));
    return true;
  }

  SVec<K> reduce(SVec<K> v) const {
    for (const auto& [p, idx] : pivots_) {
      auto it = v.find(p);
      if (it == v.end()) continue;
      Scalar c = -it->second;
      axpy(v, c, rows_[idx]);
    }
    return v;
  }

  bool contains(const SVec<K>& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Rows sorted by pivot key: a canonical description of the span.
  std::vector<SVec<K>> sorted_rows() const {
    std::vector<SVec<K>> out;
    out.reserve(rows_.size());
    for (const auto& [p, idx] : pivots_) out.push_back(rows_[idx]);
    return out;
  }

 private:
  std::vector<SVec<K>> rows_;
  std::map<K, int> pivots_;
};

template <typename K>
int rank_of(const std::vector<SVec<K>>& vecs) {
  RowBasis<K> b;
  for (const auto& v : vecs) b.insert(v);
  return b.rank();
}

template <typename K>
bool span_equal(const std::vector<SVec<K>>& a, const std::vector<SVec<K>>& b) {
  RowBasis<K> ba, bb;
  for (const auto& v : a) ba.insert(v);
  for (const auto& v : b) bb.insert(v);
  return ba.sorted_rows() == bb.sorted_rows();
}

// Solve the homogeneous system (each equation: sum over unknowns = 0).
// Unknowns are identified by their position in `unknowns`; the canonical
// nullspace basis has, for each free unknown f in order, the solution with
// x_f = 1 and all other free unknowns 0.
template <typename U>
std::vector<SVec<U>> solve_nullspace(const std::vector<SVec<U>>& equations,
                                     const std::vector<U>& unknowns) {
  std::map<U, int> pos;
  for (size_t i = 0; i < unknowns.size(); ++i) pos.emplace(unknowns[i], static_cast<int>(i));
  RowBasis<int> rb;
  for (const auto& eq : equations) {
    SVec<int> row;
    for (const auto& [u, c] : eq) {
      auto it = pos.find(u);
      if (it == pos.end()) throw std::invalid_argument("equation mentions unknown not in list");
      row.emplace(it->second, c);
    }
    rb.insert(std::move(row));
  }
  auto rows = rb.sorted_rows();
  std::vector<bool> is_pivot(unknowns.size(), false);
  for (const auto& r : rows) is_pivot[r.begin()->first] = true;
  std::vector<SVec<U>> basis;
  for (size_t f = 0; f < unknowns.size(); ++f) {
    if (is_pivot[f]) continue;
    SVec<U> sol;
    sol.emplace(unknowns[f], Scalar(1));
    for (const auto& r : rows) {
      auto it = r.find(static_cast<int>(f));
      if (it != r.end()) sol.emplace(unknowns[r.begin()->first], -it->second);
    }
    // re-canonicalize (erase zeros, though none should appear)
    for (auto it = sol.begin(); it != sol.end();) {
      if (it->second == 0) it = sol.erase(it); else ++it;
    }
    basis.push_back(std::move(sol));
  }
  return basis;
}

template <typename U>
struct AffineSolution {
  SVec<U> particular;              // free unknowns set to 0
  std::vector<SVec<U>> nullspace;  // canonical basis as in solve_nullspace
};

// Solve equations sum_i c_i x_i = rhs. Returns nullopt if inconsistent.
template <typename U>
std::optional<AffineSolution<U>> solve_affine(
    const std::vector<std::pair<SVec<U>, Scalar>>& eqs,
    const std::vector<U>& unknowns) {
  std::map<U, int> pos;
  for (size_t i = 0; i < unknowns.size(); ++i) pos.emplace(unknowns[i], static_cast<int>(i));
  const int sentinel = static_cast<int>(unknowns.size());
  RowBasis<int> rb;
  for (const auto& [eq, rhs] : eqs) {
    SVec<int> row;
    for (const auto& [u, c] : eq) {
      auto it = pos.find(u);
      if (it == pos.end()) throw std::invalid_argument("equation mentions unknown not in list");
      row.emplace(it->second, c);
    }
    if (rhs != 0) row.emplace(sentinel, -rhs);
    rb.insert(std::move(row));
  }
  auto rows = rb.sorted_rows();
  std::vector<bool> is_pivot(unknowns.size(), false);
  AffineSolution<U> out;
  for (const auto& r : rows) {
    int p = r.begin()->first;
    if (p == sentinel) return std::nullopt;  // 0 = nonzero
    is_pivot[p] = true;
    auto it = r.find(sentinel);
    if (it != r.end()) {
      // x_p - rhs_p = 0 once free unknowns vanish; stored coefficient is -rhs
      out.particular.emplace(unknowns[p], -it->second);
    }
  }
  for (size_t f = 0; f < unknowns.size(); ++f) {
    if (is_pivot[f]) continue;
    SVec<U> sol;
    sol.emplace(unknowns[f], Scalar(1));
    for (const auto& r : rows) {
      auto it = r.find(static_cast<int>(f));
      if (it != r.end() && r.begin()->first != static_cast<int>(f))
        sol.emplace(unknowns[r.begin()->first], -it->second);
    }
    out.nullspace.push_back(std::move(sol));
  }
  return out;
}

// Coordinates of `target` in the span of `vecs` (coefficients follow the
// given order; dependent spanning sets get the canonical free-vars-zero
// solution). nullopt if target is outside the span.
template <typename K>
std::optional<std::vector<Scalar>> coordinates_in_span(
    const std::vector<SVec<K>>& vecs, const SVec<K>& target) {
  std::map<K, SVec<int>> by_key;  // key -> (vector index -> coefficient)
  for (size_t i = 0; i < vecs.size(); ++i)
    for (const auto& [k, v] : vecs[i]) by_key[k].emplace(static_cast<int>(i), v);
  for (const auto& [k, v] : target) by_key[k];  // ensure key present
  std::vector<std::pair<SVec<int>, Scalar>> eqs;
  for (const auto& [k, row] : by_key) {
    auto it = target.find(k);
    eqs.emplace_back(row, it == target.end() ? Scalar(0) : it->second);
  }
  std::vector<int> unknowns(vecs.size());
  for (size_t i = 0; i < vecs.size(); ++i) unknowns[i] = static_cast<int>(i);
  auto sol = solve_affine(eqs, unknowns);
  if (!sol) return std::nullopt;
  std::vector<Scalar> out(vecs.size(), Scalar(0));
  for (const auto& [i, c] : sol->particular) out[i] = c;
  return out;
}

// Flatten a sparse matrix to a vector keyed by (row, col).
SVec<std::pair<int, int>> flatten_mat(const SpMat& x);
SpMat unflatten_mat(int dim, const SVec<std::pair<int, int>>& v);

// Kernel of a square sparse matrix acting on column vectors, as the canonical
// nullspace basis over unknowns 0..dim-1.
std::vector<SVec<int>> kernel_of(const SpMat& a);

// Kernel of several operators at once (intersection of kernels).
std::vector<SVec<int>> kernel_of_stack(const std::vector<const SpMat*>& ops, int dim);

}  // namespace superroot
