#ifndef LALG_IDEALS_HPP
#define LALG_IDEALS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lalg/algebra.hpp"

namespace lalg {

// An equivalence relation given by class labels, normalized by first
// occurrence (label[0] == 0 and every new label is the smallest unused
// one). Equal partitions therefore have identical label arrays.
struct Partition {
  std::vector<std::uint8_t> label;

  int size() const { return static_cast<int>(label.size()); }
  int num_classes() const;
  bool same(int a, int b) const { return label[a] == label[b]; }
  Mask class_of(int a) const;

  void normalize();
  bool is_normalized() const;

  // Containment as relations: every block of this partition lies inside
  // a block of o.
  bool refines(const PairRelation& o) const;
  bool refines(const Partition& o) const;

  PairRelation to_relation() const;

  bool operator==(const Partition& o) const { return label == o.label; }
  bool operator<(const Partition& o) const { return label < o.label; }
};

Partition diagonal_partition(int n);
Partition total_partition(int n);

// Requires an equivalence relation.
Partition partition_from_relation(const PairRelation& r);

// Common refinement (meet in the congruence lattice).
Partition partition_meet(const Partition& a, const Partition& b);

// Transitive closure of the union; for congruences this is again a
// congruence, and it is the join in the congruence lattice.
Partition partition_join(const Partition& a, const Partition& b);

// The five membership rules an ideal must satisfy, in the order they
// are checked. Rule 0 is 1 in I; the rest are quantified over all x in I
// and all y.
enum class IdealRule {
  unit_member,      // 1 in I
  detachment,       // x in I and x*y in I  =>  y in I
  double_division,  // x in I  =>  (x*y)*y in I
  left_product,     // x in I  =>  y*x in I
  wrap,             // x in I  =>  y*(x*y) in I
};

const char* ideal_rule_name(IdealRule r);

struct IdealCheck {
  bool ok = true;
  IdealRule rule = IdealRule::unit_member;  // violated rule when !ok
  int x = -1, y = -1;                       // witness (y unused for unit_member)
};

IdealCheck is_ideal(const MagmaTable& m, Mask s);

// Least ideal containing gens: seed gens + {1}, then a monotone fixpoint
// of the four generation rules. The detachment rule is re-run over the
// whole current set each round since it reads two members.
Mask ideal_closure(const MagmaTable& m, Mask gens);

enum class IdealEnumMode { exhaustive, closure };

// Carrier bound for the exhaustive 2^n subset filter.
inline constexpr int kExhaustiveSubsetBound = 20;

// Every ideal exactly once, sorted by (popcount, bit pattern). The
// exhaustive mode filters all subsets and refuses carriers above the
// bound; closure mode grows ideals one generator at a time and works up
// to the carrier width.
std::vector<Mask> all_ideals(const MagmaTable& m,
                             IdealEnumMode mode = IdealEnumMode::exhaustive);

// Partition enumeration bound: Bell(9) = 21147 is the largest carrier
// worth scanning exhaustively.
inline constexpr int kCongruenceEnumBound = 9;

// All congruences (partitions compatible with the operation) in
// canonical label form, sorted. The parallel version checks candidate
// partitions across threads and merges deterministically; _serial is
// the reference and uses the definitional four-variable compatibility
// condition.
std::vector<Partition> all_congruences(const MagmaTable& m);
std::vector<Partition> all_congruences_serial(const MagmaTable& m);

bool is_congruence(const MagmaTable& m, const Partition& p);

// phi: the class of the unit. Verifies that c is a congruence.
Mask phi(const MagmaTable& m, const Partition& c);

// psi: x ~ y iff x*y and y*x both lie in i. Verifies that i is an ideal.
Partition psi(const MagmaTable& m, Mask i);

struct Quotient {
  MagmaTable table;
  ElementMap projection;  // domain m -> codomain table
};

// Carrier = classes of c, operation on representatives, unit = class of
// the unit. Verifies that c is a congruence.
Quotient quotient(const MagmaTable& m, const Partition& c);

// psi(phi(c)): the least congruence containing c whose quotient is an
// L-algebra.
Partition smallest_l_congruence(const MagmaTable& m, const Partition& c);

// Universal L-algebra quotient of a pre-L-algebra: collapse x,y whenever
// x*y = y*x = 1. Rejects tables that are not pre-L-algebras.
Quotient reflect(const MagmaTable& m);

}  // namespace lalg

#endif
