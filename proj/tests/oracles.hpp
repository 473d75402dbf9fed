// Test-only oracles, kept independent of the library code paths they
// cross-check: a naive all-tables enumerator with its own axiom filter
// and its own bijection search, plus memoized enumerated universes for
// the property suites.

#ifndef LALG_TESTS_ORACLES_HPP
#define LALG_TESTS_ORACLES_HPP

#include <vector>

#include "lalg/algebra.hpp"
#include "lalg/enumerate.hpp"

namespace lalg::oracle {

bool oracle_unital(const MagmaTable& m);
bool oracle_cycloid(const MagmaTable& m);
bool oracle_antisymmetric(const MagmaTable& m);
bool oracle_is_kind(const MagmaTable& m, AlgebraKind kind);

// All bijections, unit to unit, direct transport check.
bool oracle_isomorphic(const MagmaTable& a, const MagmaTable& b);

// Every n^(n*n) table with every unit position, filtered by the oracle
// axiom checks and deduplicated with oracle_isomorphic. Only feasible
// for n <= 3.
std::vector<MagmaTable> naive_enumerate(int n, AlgebraKind kind);

// Memoized enumerate_algebras results shared across test cases.
const std::vector<MagmaTable>& universe(int n, AlgebraKind kind);

// All algebras of order 1..n of the kind, concatenated.
std::vector<const MagmaTable*> universe_up_to(int n, AlgebraKind kind);

}  // namespace lalg::oracle

#endif
