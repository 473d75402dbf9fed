#include <doctest.h>

#include <algorithm>
#include <map>

#include "lalg/lattice.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace lalg;
using fixtures::table1;
using fixtures::two_elt;

namespace {

// The diamond M3: bottom, three incomparable atoms, top.
FiniteLattice m3() {
  auto le = [](int a, int b) { return a == b || a == 0 || b == 4; };
  std::vector<std::vector<bool>> leq(5, std::vector<bool>(5));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) leq[a][b] = le(a, b);
  return lattice_from_order(leq, {"0", "a", "b", "c", "1"});
}

// Two points, only trivial opens: the standard non-sober space.
SpectrumSpace indiscrete_two_points() {
  SpectrumSpace s;
  s.points = {bit(0), bit(1)};  // placeholder point identities
  s.opens = {0, full_mask(2)};
  return s;
}

}  // namespace

TEST_CASE("ideal lattices of the golden tables") {
  MagmaTable one = make_magma(1, 0, {{0}});
  IdealLattice l1 = ideal_lattice(one);
  CHECK(l1.lat.size == 1);
  CHECK(validate_lattice(l1.lat).empty());

  IdealLattice l2 = ideal_lattice(two_elt());
  CHECK(l2.lat.size == 2);
  CHECK(l2.lat.le(0, 1));
  CHECK(l2.lat.bottom() == 0);
  CHECK(l2.lat.top() == 1);
  CHECK(l2.lat.covers() == std::vector<std::pair<int, int>>{{0, 1}});

  IdealLattice lt1 = ideal_lattice(table1());
  CHECK(lt1.lat.size == 3);
  CHECK(validate_lattice(lt1.lat).empty());
  CHECK(is_distributive(lt1.lat).ok);
}

TEST_CASE("congruence lattices validate") {
  for (const MagmaTable* m : oracle::universe_up_to(4, AlgebraKind::pre_l)) {
    CongruenceLattice cl = congruence_lattice(*m);
    CHECK(validate_lattice(cl.lat).empty());
    CHECK(cl.lat.bottom() >= 0);
    CHECK(cl.lat.top() >= 0);
  }
}

TEST_CASE("distributivity") {
  CHECK(is_distributive(ideal_lattice(two_elt()).lat).ok);  // chains are distributive

  FiniteLattice diamond = m3();
  DistributivityCheck dc = is_distributive(diamond);
  CHECK_FALSE(dc.ok);
  // a /\ (b \/ c) = a, (a /\ b) \/ (a /\ c) = 0 for distinct atoms
  CHECK(diamond.meet_of(dc.a, diamond.join_of(dc.b, dc.c)) !=
        diamond.join_of(diamond.meet_of(dc.a, dc.b), diamond.meet_of(dc.a, dc.c)));

  DistributivityCheck ds = is_distributive_serial(diamond);
  CHECK_FALSE(ds.ok);
  CHECK(dc.a == ds.a);
  CHECK(dc.b == ds.b);
  CHECK(dc.c == ds.c);
}

TEST_CASE("serial and parallel distributivity agree across the universe") {
  for (const MagmaTable* m : oracle::universe_up_to(4, AlgebraKind::l)) {
    FiniteLattice lat = ideal_lattice(*m).lat;
    DistributivityCheck a = is_distributive(lat);
    DistributivityCheck b = is_distributive_serial(lat);
    CHECK(a.ok == b.ok);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
    CHECK(a.c == b.c);
  }
}

TEST_CASE("commutator on the golden tables") {
  MagmaTable t1 = table1();
  Mask x1 = bit(0) | bit(3);
  Mask full = full_mask(4);
  CHECK(commutator(t1, bit(3), full) == bit(3));   // [{1}, X] = {1}
  CHECK(commutator(t1, x1, full) == x1);           // [{x,1}, X] = {x,1}
  CHECK(commutator(t1, full, full) == full);
  CHECK(commutator(t1, x1, x1) == x1);

  CHECK_THROWS_AS(commutator(t1, bit(1), full), contract_error);       // {y} not an ideal
  CHECK_THROWS_AS(commutator(fixtures::table2(), bit(2), bit(2)),
                  contract_error);                                      // not an L-algebra
}

TEST_CASE("commutator theorem across the universe") {
  for (const MagmaTable* mp : oracle::universe_up_to(5, AlgebraKind::l)) {
    const MagmaTable& m = *mp;
    std::vector<Mask> ideals = all_ideals(m);
    std::map<std::pair<Mask, Mask>, Mask> val;
    for (Mask i : ideals)
      for (Mask j : ideals) {
        Mask k = commutator(m, i, j);
        val[{i, j}] = k;
        CHECK(k == (i & j));          // the commutator theorem, via the search
        CHECK((k & ~(i & j)) == 0);   // always inside the intersection
      }
    for (Mask i : ideals)
      for (Mask j : ideals) {
        CHECK(val[{i, j}] == val[{j, i}]);  // commutative
        for (Mask i2 : ideals)              // monotone in the first argument
          if ((i & ~i2) == 0) CHECK((val[{i, j}] & ~val[{i2, j}]) == 0);
      }
    Mask full = full_mask(m.size);
    CHECK((val[{full, full}] == bit(m.unit)) == (m.size == 1));  // abelian iff trivial
  }
}

TEST_CASE("semiprime ideals") {
  MagmaTable t1 = table1();
  for (Mask i : all_ideals(t1)) CHECK(is_semiprime(t1, i));
  CHECK(is_semiprime(two_elt(), bit(1)));          // [J,J]=J forces J={1}
  CHECK(is_semiprime(two_elt(), full_mask(2)));
  CHECK_THROWS_AS(is_semiprime(t1, bit(1)), contract_error);
}

TEST_CASE("prime ideals") {
  CHECK(prime_ideals(two_elt()) == std::vector<Mask>{bit(1)});
  MagmaTable one = make_magma(1, 0, {{0}});
  CHECK(prime_ideals(one).empty());  // empty spectrum iff one element

  MagmaTable t1 = table1();
  std::vector<Mask> primes = prime_ideals(t1);
  CHECK(primes == std::vector<Mask>{bit(3), bit(0) | bit(3)});  // the chain below the top

  // maximal ideals are prime: the coatoms of the ideal lattice appear
  IdealLattice il = ideal_lattice(t1);
  int top = il.lat.top();
  for (auto [a, b] : il.lat.covers())
    if (b == top) CHECK(std::count(primes.begin(), primes.end(), il.ideals[a]) == 1);
}

TEST_CASE("every ideal is an intersection of primes") {
  for (const MagmaTable* mp : oracle::universe_up_to(5, AlgebraKind::l)) {
    const MagmaTable& m = *mp;
    std::vector<Mask> primes = prime_ideals(m);
    for (Mask i : all_ideals(m)) {
      Mask inter = full_mask(m.size);
      for (Mask p : primes)
        if ((i & ~p) == 0) inter &= p;
      CHECK(inter == i);
    }
    // primes are semiprime
    for (Mask p : primes) CHECK(is_semiprime(m, p));
  }
}

TEST_CASE("spectrum of the golden tables") {
  MagmaTable t1 = table1();
  SpectrumSpace sp = spectrum(t1);
  CHECK(sp.points.size() == 2);
  CHECK(sp.anomalies.empty());
  // U_{1} is empty, U_X is everything
  CHECK(sp.opens.front() == 0);
  CHECK(sp.opens.back() == full_mask(2));
  CHECK(sp.opens.size() == sp.ideals.size());
  CHECK(is_sober(sp));

  SpectrumSpace s2 = spectrum(two_elt());  // one point: Sierpinski-degenerate
  CHECK(s2.points.size() == 1);
  CHECK(s2.opens == std::vector<Mask>{0, bit(0)});
  CHECK(is_sober(s2));

  MagmaTable one = make_magma(1, 0, {{0}});
  SpectrumSpace s1 = spectrum(one);
  CHECK(s1.points.empty());
  CHECK(is_sober(s1));
}

TEST_CASE("spectrum is iso to the ideal lattice and sober across the universe") {
  for (const MagmaTable* m : oracle::universe_up_to(5, AlgebraKind::l)) {
    SpectrumSpace sp = spectrum(*m);
    CHECK(sp.anomalies.empty());
    CHECK(sp.opens.size() == sp.ideals.size());
    CHECK(is_sober(sp));
  }
}

TEST_CASE("the indiscrete two-point space is not sober") {
  CHECK_FALSE(is_sober(indiscrete_two_points()));
}
