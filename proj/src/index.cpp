#include "superroot/index.hpp"

#include <stdexcept>

namespace superroot {

std::string SuperIndex::label() const {
  switch (kind) {
    case Zero:    return "0";
    case Even:    return std::to_string(ord);
    case EvenBar: return std::to_string(ord) + "b";
    case Odd:     return std::to_string(ord) + "p";
    case OddBar:  return std::to_string(ord) + "pb";
  }
  return "?";
}

std::optional<SuperIndex> SuperIndex::parse(const std::string& s) {
  if (s == "0") return SuperIndex{Zero, 0};
  size_t i = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == 0) return std::nullopt;
  int ord = 0;
  try {
    ord = std::stoi(s.substr(0, i));
  } catch (...) {
    return std::nullopt;
  }
  if (ord < 1) return std::nullopt;
  std::string suf = s.substr(i);
  if (suf.empty()) return SuperIndex{Even, ord};
  if (suf == "b") return SuperIndex{EvenBar, ord};
  if (suf == "p") return SuperIndex{Odd, ord};
  if (suf == "pb") return SuperIndex{OddBar, ord};
  return std::nullopt;
}

int SpaceDims::flat(const SuperIndex& s) const {
  if (!valid(s)) throw std::out_of_range("index " + s.label() + " out of range");
  switch (s.kind) {
    case SuperIndex::Zero:    return 0;
    case SuperIndex::Even:    return s.ord;
    case SuperIndex::EvenBar: return m + s.ord;
    case SuperIndex::Odd:     return 2 * m + s.ord;
    case SuperIndex::OddBar:  return 2 * m + n + s.ord;
  }
  return -1;
}

SuperIndex SpaceDims::index_of(int flat) const {
  if (flat < 0 || flat >= dim()) throw std::out_of_range("flat index out of range");
  if (flat == 0) return {SuperIndex::Zero, 0};
  if (flat <= m) return {SuperIndex::Even, flat};
  if (flat <= 2 * m) return {SuperIndex::EvenBar, flat - m};
  if (flat <= 2 * m + n) return {SuperIndex::Odd, flat - 2 * m};
  return {SuperIndex::OddBar, flat - 2 * m - n};
}

}  // namespace superroot
