#pragma once

#include <compare>
#include <map>
#include <string>

#include "superroot/linalg.hpp"
#include "superroot/scalar.hpp"

namespace superroot {

// Symbol of a weight lattice. Canonical order: a* < e_i < d_p < L_k.
// e-symbols carry positive norm, d-symbols negative norm, L-symbols label
// the grading directions added by affinization, a* the distinguished
// isotropic generator of the imaginary-type families.
struct Sym {
  enum Kind : int { Star = 0, E = 1, D = 2, L = 3 };
  Kind kind = E;
  int ord = 0;

  auto operator<=>(const Sym&) const = default;

  std::string label() const {
    switch (kind) {
      case Star: return "a*";
      case E: return "e" + std::to_string(ord);
      case D: return "d" + std::to_string(ord);
      case L: return "L" + std::to_string(ord);
    }
    return "?";
  }
};

inline Sym sym_e(int i) { return {Sym::E, i}; }
inline Sym sym_d(int p) { return {Sym::D, p}; }
inline Sym sym_L(int k) { return {Sym::L, k}; }
inline Sym sym_star() { return {Sym::Star, 0}; }

// Integer vector over symbols; zero coefficients are never stored, so
// equality and ordering are canonical.
class Weight {
 public:
  Weight() = default;

  static Weight of(Sym s, int c = 1) {
    Weight w;
    w.add(s, c);
    return w;
  }

  int coeff(Sym s) const {
    auto it = c_.find(s);
    return it == c_.end() ? 0 : it->second;
  }

  void add(Sym s, int c) {
    if (c == 0) return;
    auto [it, fresh] = c_.emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }

  bool is_zero() const { return c_.empty(); }

  Weight operator+(const Weight& o) const {
    Weight w = *this;
    for (const auto& [s, c] : o.c_) w.add(s, c);
    return w;
  }
  Weight operator-(const Weight& o) const {
    Weight w = *this;
    for (const auto& [s, c] : o.c_) w.add(s, -c);
    return w;
  }
  Weight operator-() const {
    Weight w;
    for (const auto& [s, c] : c_) w.c_.emplace(s, -c);
    return w;
  }
  Weight operator*(int k) const {
    Weight w;
    if (k != 0)
      for (const auto& [s, c] : c_) w.c_.emplace(s, k * c);
    return w;
  }

  auto operator<=>(const Weight&) const = default;

  const std::map<Sym, int>& coeffs() const { return c_; }

  SVec<Sym> to_svec() const {
    SVec<Sym> v;
    for (const auto& [s, c] : c_) v.emplace(s, Scalar(c));
    return v;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : c_) {
      if (c > 0 && !out.empty()) out += "+";
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += std::to_string(c);
      out += s.label();
    }
    return out;
  }

 private:
  std::map<Sym, int> c_;
};

// Symmetric rational form on symbols, extended bilinearly.
class GramForm {
 public:
  void set(Sym a, Sym b, Scalar v) {
    if (b < a) std::swap(a, b);
    if (v == 0)
      g_.erase({a, b});
    else
      g_[{a, b}] = std::move(v);
  }

  Scalar value(Sym a, Sym b) const {
    if (b < a) std::swap(a, b);
    auto it = g_.find({a, b});
    return it == g_.end() ? Scalar(0) : it->second;
  }

  Scalar form(const Weight& x, const Weight& y) const {
    Scalar out(0);
    for (const auto& [a, ca] : x.coeffs())
      for (const auto& [b, cb] : y.coeffs()) out += Scalar(ca) * value(a, b) * Scalar(cb);
    return out;
  }

  Scalar form(const SVec<Sym>& x, const SVec<Sym>& y) const {
    Scalar out(0);
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) out += ca * value(a, b) * cb;
    return out;
  }

  // Rescaling every value by a nonzero rational (used by invariance tests).
  void rescale(const Scalar& r) {
    for (auto& [k, v] : g_) v *= r;
  }

  const std::map<std::pair<Sym, Sym>, Scalar>& entries() const { return g_; }
  bool operator==(const GramForm&) const = default;

 private:
  std::map<std::pair<Sym, Sym>, Scalar> g_;
};

}  // namespace superroot
