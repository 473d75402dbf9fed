#ifndef LALG_CATCHECK_HPP
#define LALG_CATCHECK_HPP

#include <vector>

#include "lalg/algebra.hpp"
#include "lalg/ideals.hpp"

namespace lalg {

// The three binary terms used by the instance-level category checks:
// s(x,y) = y*x, t1(x,y) = x*y, t2(x,y) = y*x.
enum class Term { s, t1, t2 };

int eval_term(const MagmaTable& m, Term t, int x, int y);

struct TermCheck {
  bool ok = true;
  int x = -1;  // witness element on failure
};

// s(x,x) = 1 and s(x,1) = x for all x. Holds in every pre-L-algebra.
TermCheck check_subtractive_terms(const MagmaTable& m);

struct RegularityCheck {
  bool ok = true;
  int a = -1, b = -1;
};

// (t1(a,b) = 1 and t2(a,b) = 1) iff a = b. Holds exactly on L-algebras.
RegularityCheck check_one_regularity(const MagmaTable& m);

// Eq(f) equals psi(f^{-1}(1)) as relations, for a surjective morphism
// between L-algebras; throws contract_error when f is not surjective,
// not a morphism, or the codomain fails the L-algebra axioms.
bool check_cokernel_factorization(const ElementMap& f);

// S after R: {(a,c) : exists b with (a,b) in r and (b,c) in s}.
PairRelation compose_relations(const PairRelation& r, const PairRelation& s);

struct PermutabilityCheck {
  bool ok = true;
  int r = -1, s = -1;  // indices into all_congruences(m) witnessing failure
};

// Whether every pair of congruences R,S satisfies S o R = R o S. The
// witness is the least failing index pair; the parallel scan reduces to
// it deterministically.
PermutabilityCheck check_permutability(const MagmaTable& m);
PermutabilityCheck check_permutability_serial(const MagmaTable& m);

// The weaker law: (x,1) in S o R iff (x,1) in R o S, for all congruence
// pairs and all x. Holds in every pre-L-algebra.
PermutabilityCheck check_permutability_at_one(const MagmaTable& m);

}  // namespace lalg

#endif
