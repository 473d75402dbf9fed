#ifndef LALG_LATTICE_HPP
#define LALG_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lalg/algebra.hpp"
#include "lalg/ideals.hpp"

namespace lalg {

// An explicit finite lattice: the containment order as a boolean matrix
// plus meet/join index tables over the element list.
struct FiniteLattice {
  int size = 0;
  std::vector<std::uint8_t> leq;    // size*size, leq[a*size+b] = (a <= b)
  std::vector<std::int16_t> meet;   // size*size index tables
  std::vector<std::int16_t> join;
  std::vector<std::string> labels;  // display only

  bool le(int a, int b) const { return leq[static_cast<std::size_t>(size) * a + b] != 0; }
  int meet_of(int a, int b) const { return meet[static_cast<std::size_t>(size) * a + b]; }
  int join_of(int a, int b) const { return join[static_cast<std::size_t>(size) * a + b]; }

  int bottom() const;
  int top() const;

  // Cover pairs (a,b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
};

// Builds meet/join tables from an order matrix by locating the glb/lub
// of every pair; throws contract_error when some pair has none (the
// order is not a lattice) or the order axioms fail.
FiniteLattice lattice_from_order(const std::vector<std::vector<bool>>& leq,
                                 std::vector<std::string> labels = {});

// Checks the partial-order and lattice axioms plus bottom/top presence.
// Returns an empty string when valid, else a description of the failure.
std::string validate_lattice(const FiniteLattice& l);

struct IdealLattice {
  std::vector<Mask> ideals;  // aligned with lattice indices
  FiniteLattice lat;
};

struct CongruenceLattice {
  std::vector<Partition> congruences;
  FiniteLattice lat;
};

// Elements = all ideals; meet = intersection, join = ideal closure of
// the union.
IdealLattice ideal_lattice(const MagmaTable& m);

// Elements = all congruences; meet = common refinement, join =
// transitive closure of the union.
CongruenceLattice congruence_lattice(const MagmaTable& m);

struct DistributivityCheck {
  bool ok = true;
  int a = -1, b = -1, c = -1;  // least violating triple when !ok
};

// a /\ (b \/ c) == (a /\ b) \/ (a /\ c) over all triples. The parallel
// scan reduces to the least violating triple so the witness does not
// depend on scheduling.
DistributivityCheck is_distributive(const FiniteLattice& l);
DistributivityCheck is_distributive_serial(const FiniteLattice& l);

// Least ideal K such that (a,b) -> [a*b] is a morphism from the product
// algebra i x j to m/psi(K). Found by searching ideals in increasing
// (popcount, pattern) order, first among ideals inside i&j, then among
// all ideals. The search asserts that the minimal-size success is
// unique and throws lalg_error otherwise.
Mask commutator(const MagmaTable& m, Mask i, Mask j);

// For every ideal j: commutator(j,j) inside i implies j inside i.
bool is_semiprime(const MagmaTable& m, Mask i);

// Proper meet-irreducible elements of the ideal lattice, sorted by
// (popcount, pattern).
std::vector<Mask> prime_ideals(const MagmaTable& m);

// Points are prime ideals; the open attached to an ideal I is the set
// of points not containing I. Opens are deduplicated and sorted; the
// expected lattice isomorphism onto the ideal lattice is verified and
// any failure is recorded in `anomalies` rather than assumed.
struct SpectrumSpace {
  std::vector<Mask> points;         // prime ideals, as carrier subsets
  std::vector<Mask> ideals;         // all ideals, index base for open_of_ideal
  std::vector<Mask> opens;          // subsets of the point set, sorted
  std::vector<int> open_of_ideal;   // ideal index -> index into opens
  std::vector<std::string> anomalies;
};

SpectrumSpace spectrum(const MagmaTable& m);

// Every nonempty irreducible closed set is the closure of exactly one
// point. Closed sets are complements of opens.
bool is_sober(const SpectrumSpace& s);

}  // namespace lalg

#endif
