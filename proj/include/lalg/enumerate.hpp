#ifndef LALG_ENUMERATE_HPP
#define LALG_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lalg/algebra.hpp"

namespace lalg {

enum class AlgebraKind { pre_l, l };

const char* kind_name(AlgebraKind k);

// Enumeration bounds; past these the search-tree and canonicalization
// costs stop being desk-scale.
inline constexpr int kEnumBoundPreL = 6;
inline constexpr int kEnumBoundL = 7;

// Factorial bound for canonicalization and bijection search.
inline constexpr int kCanonicalBound = 8;

// The lexicographically least transported table over all carrier
// permutations, together with the unit index that relabeling produces.
// Two tables are isomorphic (by a unit-preserving bijection) iff their
// canonical forms compare equal.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;  // flattened table
  int unit = 0;

  bool operator==(const CanonicalForm& o) const = default;
  bool operator<(const CanonicalForm& o) const {
    return bytes != o.bytes ? bytes < o.bytes : unit < o.unit;
  }
};

CanonicalForm canonical_form(const MagmaTable& m);

MagmaTable table_from_canonical(const CanonicalForm& c);

// Brute-force search over all bijections mapping unit to unit; returns
// the images on success.
std::optional<std::vector<int>> are_isomorphic(const MagmaTable& a, const MagmaTable& b);

// One representative per isomorphism class, emitted as canonical tables
// in increasing canonical-form order. Backtracks over the free cells in
// row-major order with the unit row/column and the diagonal pre-filled;
// the cycloid law is checked incrementally on the decided prefix and
// antisymmetry only at leaves. The parallel version splits the tree at
// the first two free cells and merges the per-subtree seen-sets after
// joining, so the output never depends on scheduling.
std::vector<MagmaTable> enumerate_algebras(int n, AlgebraKind kind);
std::vector<MagmaTable> enumerate_algebras_serial(int n, AlgebraKind kind);

}  // namespace lalg

#endif
