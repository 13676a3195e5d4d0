#include "superroot/linalg.hpp"

namespace superroot {

SVec<std::pair<int, int>> flatten_mat(const SpMat& x) {
  SVec<std::pair<int, int>> v;
  for (const auto& [r, row] : x.rows())
    for (const auto& [c, val] : row) v.emplace(std::make_pair(r, c), val);
  return v;
}

SpMat unflatten_mat(int dim, const SVec<std::pair<int, int>>& v) {
  SpMat x(dim);
  for (const auto& [rc, val] : v) x.set(rc.first, rc.second, val);
  return x;
}

std::vector<SVec<int>> kernel_of(const SpMat& a) {
  return kernel_of_stack({&a}, a.dim());
}

std::vector<SVec<int>> kernel_of_stack(const std::vector<const SpMat*>& ops, int dim) {
  std::vector<SVec<int>> eqs;
  for (const SpMat* op : ops)
    for (const auto& [r, row] : op->rows()) {
      (void)r;
      SVec<int> eq;
      for (const auto& [c, v] : row) eq.emplace(c, v);
      eqs.push_back(std::move(eq));
    }
  std::vector<int> unknowns(dim);
  for (int i = 0; i < dim; ++i) unknowns[i] = i;
  return solve_nullspace(eqs, unknowns);
}

}  // namespace superroot
