#ifndef LALG_BITS_HPP
#define LALG_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace lalg {

// Subsets of a carrier are flat bit vectors. Carriers are capped at
// kMaxCarrier elements so one machine word always suffices.
using Mask = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool contains(Mask s, int i) { return (s >> i) & 1u; }

constexpr Mask full_mask(int n) {
  return n >= kMaxCarrier ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask s) { return std::popcount(s); }

// Calls fn(i) for each set bit, in increasing order.
template <typename Fn>
void for_each_bit(Mask s, Fn&& fn) {
  while (s != 0) {
    int i = std::countr_zero(s);
    fn(i);
    s &= s - 1;
  }
}

inline std::vector<int> mask_to_indices(Mask s) {
  std::vector<int> out;
  for_each_bit(s, [&](int i) { out.push_back(i); });
  return out;
}

inline Mask mask_from_indices(const std::vector<int>& idx) {
  Mask s = 0;
  for (int i : idx) s |= bit(i);
  return s;
}

// Order used whenever subsets are listed: cardinality first, then the
// bit pattern as an integer.
inline bool mask_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

}  // namespace lalg

#endif
