#pragma once

#include <compare>
#include <optional>
#include <string>

namespace superroot {

// Basis index of the natural (2m+1 | 2n)-dimensional superspace.
// The fixed total order is 0 < 1 < ... < m < 1b < ... < mb
//                            < 1p < ... < np < 1pb < ... < npb,
// where the plain/b families are even and the p/pb families are odd.
struct SuperIndex {
  enum Kind : int { Zero = 0, Even = 1, EvenBar = 2, Odd = 3, OddBar = 4 };

  Kind kind = Zero;
  int ord = 0;  // 1-based within its family; 0 for Zero

  int parity() const { return (kind == Odd || kind == OddBar) ? 1 : 0; }

  // Bar-partner pairing the index under the bilinear form; 0 is self-paired.
  SuperIndex conj() const {
    switch (kind) {
      case Even:    return {EvenBar, ord};
      case EvenBar: return {Even, ord};
      case Odd:     return {OddBar, ord};
      case OddBar:  return {Odd, ord};
      default:      return {Zero, 0};
    }
  }

  std::string label() const;
  static std::optional<SuperIndex> parse(const std::string& s);

  auto operator<=>(const SuperIndex&) const = default;
};

// Dimensions of the natural superspace and flat-index bookkeeping.
struct SpaceDims {
  int m = 0;
  int n = 0;

  int dim() const { return 2 * m + 2 * n + 1; }

  // supertrace of the identity = (2m+1) - 2n
  int sdim() const { return 2 * m + 1 - 2 * n; }

  bool valid(const SuperIndex& s) const {
    if (s.kind == SuperIndex::Zero) return s.ord == 0;
    int bound = (s.kind == SuperIndex::Even || s.kind == SuperIndex::EvenBar) ? m : n;
    return s.ord >= 1 && s.ord <= bound;
  }

  int flat(const SuperIndex& s) const;
  SuperIndex index_of(int flat) const;
  int parity_of(int flat) const { return index_of(flat).parity(); }
};

}  // namespace superroot
