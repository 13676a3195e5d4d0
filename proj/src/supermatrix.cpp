#include "superroot/supermatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace superroot {

Scalar SpMat::at(int r, int c) const {
  auto it = rows_.find(r);
  if (it == rows_.end()) return Scalar(0);
  auto jt = it->second.find(c);
  return jt == it->second.end() ? Scalar(0) : jt->second;
}

void SpMat::set(int r, int c, Scalar v) {
  if (v == 0) {
    auto it = rows_.find(r);
    if (it != rows_.end()) {
      it->second.erase(c);
      if (it->second.empty()) rows_.erase(it);
    }
    return;
  }
  rows_[r][c] = std::move(v);
}

void SpMat::add(int r, int c, const Scalar& v) {
  if (v == 0) return;
  Scalar& slot = rows_[r][c];
  slot += v;
  if (slot == 0) {
    rows_[r].erase(c);
    if (rows_[r].empty()) rows_.erase(r);
  }
}

SpMat SpMat::unit(int dim, int r, int c) {
  SpMat x(dim);
  x.set(r, c, Scalar(1));
  return x;
}

SpMat SpMat::identity(int dim) {
  SpMat x(dim);
  for (int i = 0; i < dim; ++i) x.set(i, i, Scalar(1));
  return x;
}

SpMat& SpMat::operator+=(const SpMat& o) {
  for (const auto& [r, row] : o.rows_)
    for (const auto& [c, v] : row) add(r, c, v);
  return *this;
}

SpMat& SpMat::operator-=(const SpMat& o) {
  for (const auto& [r, row] : o.rows_)
    for (const auto& [c, v] : row) add(r, c, -v);
  return *this;
}

SpMat& SpMat::operator*=(const Scalar& s) {
  if (s == 0) {
    rows_.clear();
    return *this;
  }
  for (auto& [r, row] : rows_)
    for (auto& [c, v] : row) v *= s;
  return *this;
}

SpMat SpMat::mul(const SpMat& o) const {
  SpMat out(dim_);
  for (const auto& [i, row] : rows_) {
    for (const auto& [k, a] : row) {
      auto it = o.rows_.find(k);
      if (it == o.rows_.end()) continue;
      for (const auto& [j, b] : it->second) out.add(i, j, a * b);
    }
  }
  return out;
}

std::vector<Scalar> SpMat::apply(const std::vector<Scalar>& v) const {
  std::vector<Scalar> out(dim_, Scalar(0));
  for (const auto& [i, row] : rows_)
    for (const auto& [j, a] : row)
      if (v[j] != 0) out[i] += a * v[j];
  return out;
}

Scalar supertrace(const SpaceDims& d, const SpMat& x) {
  Scalar t(0);
  for (const auto& [r, row] : x.rows()) {
    auto it = row.find(r);
    if (it == row.end()) continue;
    if (d.parity_of(r) == 0)
      t += it->second;
    else
      t -= it->second;
  }
  return t;
}

std::optional<int> block_parity(const SpaceDims& d, const SpMat& x) {
  if (x.is_zero()) return 0;
  std::optional<int> p;
  for (const auto& [r, row] : x.rows()) {
    int pr = d.parity_of(r);
    for (const auto& [c, v] : row) {
      (void)v;
      int q = (pr + d.parity_of(c)) % 2;
      if (!p)
        p = q;
      else if (*p != q)
        return std::nullopt;
    }
  }
  return p;
}

SpMat even_part(const SpaceDims& d, const SpMat& x) {
  SpMat out(x.dim());
  for (const auto& [r, row] : x.rows())
    for (const auto& [c, v] : row)
      if ((d.parity_of(r) + d.parity_of(c)) % 2 == 0) out.set(r, c, v);
  return out;
}

SpMat odd_part(const SpaceDims& d, const SpMat& x) {
  SpMat out(x.dim());
  for (const auto& [r, row] : x.rows())
    for (const auto& [c, v] : row)
      if ((d.parity_of(r) + d.parity_of(c)) % 2 == 1) out.set(r, c, v);
  return out;
}

SpMat supercommutator(const SpMat& x, int px, const SpMat& y, int py) {
  SpMat out = x.mul(y);
  SpMat yx = y.mul(x);
  if ((px & 1) && (py & 1))
    out += yx;
  else
    out -= yx;
  return out;
}

SpMat superbracket_split(const SpaceDims& d, const SpMat& x, const SpMat& y) {
  SpMat x0 = even_part(d, x), x1 = odd_part(d, x);
  SpMat y0 = even_part(d, y), y1 = odd_part(d, y);
  SpMat out(x.dim());
  out += supercommutator(x0, 0, y0, 0);
  out += supercommutator(x0, 0, y1, 1);
  out += supercommutator(x1, 1, y0, 0);
  out += supercommutator(x1, 1, y1, 1);
  return out;
}

SpMat superbracket_homogeneous(const SpaceDims& d, const SpMat& x, const SpMat& y) {
  auto px = block_parity(d, x);
  auto py = block_parity(d, y);
  if (!px || !py)
    throw std::invalid_argument(
        "supercommutator needs homogeneous operators; use the explicit even/odd split");
  return supercommutator(x, *px, y, *py);
}

SpMat form_matrix(const SpaceDims& d) {
  SpMat f(d.dim());
  f.set(0, 0, Scalar(1));
  for (int i = 1; i <= d.m; ++i) {
    int a = d.flat({SuperIndex::Even, i});
    int ab = d.flat({SuperIndex::EvenBar, i});
    f.set(a, ab, Scalar(1));
    f.set(ab, a, Scalar(1));
  }
  for (int p = 1; p <= d.n; ++p) {
    int a = d.flat({SuperIndex::Odd, p});
    int ab = d.flat({SuperIndex::OddBar, p});
    f.set(a, ab, Scalar(1));
    f.set(ab, a, Scalar(-1));
  }
  return f;
}

Scalar form_value(const SpaceDims& d, const std::vector<Scalar>& u,
                  const std::vector<Scalar>& v) {
  SpMat f = form_matrix(d);
  Scalar out(0);
  for (const auto& [r, row] : f.rows())
    for (const auto& [c, g] : row)
      if (u[r] != 0 && v[c] != 0) out += u[r] * g * v[c];
  return out;
}

std::string spmat_to_string(const SpaceDims& d, const SpMat& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, row] : x.rows()) {
    for (const auto& [c, v] : row) {
      if (!first) os << ";";
      first = false;
      os << d.index_of(r).label() << "," << d.index_of(c).label() << ","
         << scalar_to_string(v);
    }
  }
  return os.str();
}

}  // namespace superroot
