#ifndef LALG_PAPER_SUITE_HPP
#define LALG_PAPER_SUITE_HPP

#include <string>

#include "lalg/io.hpp"

namespace lalg {

// The three golden tables shipped under fixtures/.
struct PaperFixtures {
  AlgebraDocument table1;       // 4-element L-algebra {x,y,z,1}
  AlgebraDocument table2;       // 3-element pre-L-algebra {a,b,1}, not an L-algebra
  AlgebraDocument two_element;  // 2-element L-algebra {0,1}
};

// Throws lalg_error when a fixture file is missing or unreadable.
PaperFixtures load_paper_fixtures(const std::string& fixture_dir);

// The surjection from table1 onto table2: x,1 -> 1, y -> a, z -> b.
ElementMap witness_morphism(const PaperFixtures& fx);

// The relation R = {(0,1),(1,0),(1,1)} inside the square of the
// two-element algebra, extracted as a 3-element algebra, plus its two
// projections back onto the factor.
struct RelationAlgebra {
  MagmaTable square;    // the product algebra, flattened (a,b) -> 2a+b
  Subalgebra r;         // the subalgebra R
  ElementMap p1, p2;    // projections R -> two-element algebra
};

RelationAlgebra section_relation_algebra(const PaperFixtures& fx);

struct PaperSuiteOptions {
  std::string fixture_dir = "fixtures";
  int max_order = 4;  // bounds every exhaustive sweep; capped at 5
};

inline constexpr int kMaxSuiteOrder = 5;

// Re-derives every golden fact from the fixtures and the enumerated
// universes: axiom verdicts for the fixture tables, the non-L quotient,
// the term and regularity checks, the kernel-pair composition
// counterexample, permutability at the unit, the Galois laws, the
// commutator theorem, distributivity, and sobriety. Deterministic up to
// the timing field.
VerdictReport run_paper_suite(const PaperSuiteOptions& opts);

}  // namespace lalg

#endif
