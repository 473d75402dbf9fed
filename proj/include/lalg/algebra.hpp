#ifndef LALG_ALGEBRA_HPP
#define LALG_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lalg/bits.hpp"
#include "lalg/errors.hpp"

namespace lalg {

// A finite magma with a designated unit: carrier {0..size-1}, operation
// table in row-major order (table[size*a + b] = a*b), optional display
// names. Immutable by convention after construction; all operations in
// this library take it by const reference and never mutate it.
struct MagmaTable {
  int size = 0;
  int unit = 0;
  std::vector<std::uint8_t> table;        // size*size entries
  std::vector<std::string> names;         // empty or size entries

  int op(int a, int b) const { return table[static_cast<std::size_t>(size) * a + b]; }

  // Display name of element i ("3" when no name map is present).
  std::string name(int i) const;

  bool operator==(const MagmaTable& o) const {
    return size == o.size && unit == o.unit && table == o.table;
  }
};

// Builds a table from rows; validates structure.
MagmaTable make_magma(int size, int unit, const std::vector<std::vector<int>>& rows,
                      std::vector<std::string> names = {});

// Throws structural_error if size/unit/entries are out of range.
void check_structure(const MagmaTable& m);

enum class Axiom { unital, cycloid, antisymmetric };

const char* axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::array<int, 3> witness;  // unused trailing slots are -1
};

// Verdict of the three defining laws. A flag is false exactly when at
// least one violation for that axiom is recorded; per axiom the list is
// truncated to the first kMaxViolationsPerAxiom witnesses in scan order.
struct AxiomReport {
  bool unital = false;
  bool cycloid = false;
  bool antisymmetric = false;
  std::vector<AxiomViolation> violations;

  bool is_pre_l() const { return unital && cycloid; }
  bool is_l() const { return unital && cycloid && antisymmetric; }
};

inline constexpr int kMaxViolationsPerAxiom = 32;

// Exhaustive scan of all triples; no early exit, so the report lists
// every violating witness up to the per-axiom cap. The unqualified
// version parallelizes over the first index with a deterministic merge;
// _serial is the reference implementation.
AxiomReport check_axioms(const MagmaTable& m);
AxiomReport check_axioms_serial(const MagmaTable& m);

bool is_pre_l_algebra(const MagmaTable& m);
bool is_l_algebra(const MagmaTable& m);

// A set of ordered pairs over [0,n)^2, one bit row per left component.
// Relations over product carriers use the flattened index (a,b) -> a*n+b
// of the product table, so the same representation covers squares.
struct PairRelation {
  int n = 0;
  std::vector<Mask> rows;  // rows[a] = mask of b with (a,b) in the relation

  explicit PairRelation(int carrier = 0) : n(carrier), rows(carrier, 0) {}

  bool contains(int a, int b) const { return lalg::contains(rows[a], b); }
  void add(int a, int b) { rows[a] |= bit(b); }

  bool operator==(const PairRelation& o) const { return n == o.n && rows == o.rows; }

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  // Containment as sets of pairs; requires equal carriers.
  bool subset_of(const PairRelation& o) const;

  std::vector<std::pair<int, int>> pairs() const;
};

PairRelation diagonal_relation(int n);

// The relation {(x,y) : x*y = 1}. Reflexive and transitive on every
// pre-L-algebra; a partial order exactly when the table is an L-algebra.
// Rejects tables failing the unital or cycloid law.
PairRelation natural_preorder(const MagmaTable& m);

// A total map between carriers of two tables.
struct ElementMap {
  MagmaTable domain;
  MagmaTable codomain;
  std::vector<std::uint8_t> images;  // length domain.size

  int apply(int a) const { return images[a]; }
  bool is_surjective() const;
};

ElementMap identity_map(const MagmaTable& m);

struct MorphismCheck {
  bool ok = true;
  int a = -1, b = -1;  // first violating pair in row-major order
};

// f(a*b) == f(a)*f(b) for all a,b. Unit preservation is implied and is
// not checked separately.
MorphismCheck is_morphism(const ElementMap& f);

// Componentwise product with unit (1,1); element (a,b) is flattened to
// a*|b_table|+b. Throws capacity_error when the product exceeds the
// carrier width.
MagmaTable product(const MagmaTable& a, const MagmaTable& b);

// true iff the unit is in s and s is closed under the operation.
bool is_subalgebra(const MagmaTable& m, Mask s);

// Restriction of the table to a subalgebra, re-indexed by increasing
// element order. elements[i] is the original index of the i-th element.
struct Subalgebra {
  MagmaTable table;
  std::vector<int> elements;
};

Subalgebra subalgebra_table(const MagmaTable& m, Mask s);

// Eq(f) = {(a,a') : f(a) = f(a')}. Always an equivalence relation;
// compatible with the operation whenever f is a morphism.
PairRelation kernel_pair(const ElementMap& f);

// Inverse image of the codomain unit.
Mask kernel_subset(const ElementMap& f);

}  // namespace lalg

#endif
