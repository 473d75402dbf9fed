#include <doctest.h>

#include "lalg/catcheck.hpp"
#include "lalg/paper_suite.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace lalg;
using fixtures::table1;
using fixtures::table2;
using fixtures::two_elt;
using fixtures::witness_f;

namespace {

// R = {(0,1),(1,0),(1,1)} inside the square of the two-element algebra,
// as a 3-element algebra with projections.
struct RFixture {
  MagmaTable r;
  PairRelation eq1{3}, eq2{3};
};

RFixture r_fixture() {
  MagmaTable sq = product(two_elt(), two_elt());
  Subalgebra sub = subalgebra_table(sq, bit(1) | bit(2) | bit(3));
  RFixture fx;
  fx.r = sub.table;
  ElementMap p1{sub.table, two_elt(), {}}, p2{sub.table, two_elt(), {}};
  for (int e : sub.elements) {
    p1.images.push_back(static_cast<std::uint8_t>(e / 2));
    p2.images.push_back(static_cast<std::uint8_t>(e % 2));
  }
  fx.eq1 = kernel_pair(p1);
  fx.eq2 = kernel_pair(p2);
  return fx;
}

}  // namespace

TEST_CASE("term evaluators agree with their defining expressions") {
  for (const MagmaTable* m : oracle::universe_up_to(3, AlgebraKind::pre_l))
    for (int x = 0; x < m->size; ++x)
      for (int y = 0; y < m->size; ++y) {
        CHECK(eval_term(*m, Term::s, x, y) == m->op(y, x));
        CHECK(eval_term(*m, Term::t1, x, y) == m->op(x, y));
        CHECK(eval_term(*m, Term::t2, x, y) == m->op(y, x));
      }
}

TEST_CASE("subtractive terms") {
  CHECK(check_subtractive_terms(table1()).ok);
  CHECK(check_subtractive_terms(table2()).ok);  // pre-L suffices

  // corrupt 1*a so s(a,1) != a
  MagmaTable bad = table2();
  bad.table[2 * 3 + 0] = 2;
  TermCheck tc = check_subtractive_terms(bad);
  CHECK_FALSE(tc.ok);
  CHECK(tc.x == 0);

  for (const MagmaTable* m : oracle::universe_up_to(4, AlgebraKind::pre_l))
    CHECK(check_subtractive_terms(*m).ok);
}

TEST_CASE("one-regularity holds exactly on L-algebras") {
  CHECK(check_one_regularity(table1()).ok);
  CHECK(check_one_regularity(make_magma(1, 0, {{0}})).ok);

  RegularityCheck rc = check_one_regularity(table2());
  CHECK_FALSE(rc.ok);
  CHECK(rc.a == 0);
  CHECK(rc.b == 1);

  for (const MagmaTable* m : oracle::universe_up_to(4, AlgebraKind::pre_l))
    CHECK(check_one_regularity(*m).ok == check_axioms(*m).antisymmetric);
}

TEST_CASE("cokernel factorization") {
  MagmaTable t1 = table1();
  Quotient q = quotient(t1, psi(t1, bit(0) | bit(3)));
  CHECK(check_cokernel_factorization(q.projection));
  CHECK(check_cokernel_factorization(identity_map(t1)));

  // the witness morphism lands outside the L-algebras
  CHECK_THROWS_AS(check_cokernel_factorization(witness_f()), contract_error);

  ElementMap not_surjective{two_elt(), table1(), {0, 3}};
  CHECK_THROWS_AS(check_cokernel_factorization(not_surjective), contract_error);
}

TEST_CASE("every surjective morphism between enumerated L-algebras is a cokernel") {
  auto l4 = oracle::universe_up_to(4, AlgebraKind::l);
  for (const MagmaTable* a : l4)
    for (const MagmaTable* b : l4) {
      if (b->size > a->size) continue;
      ElementMap f;
      f.domain = *a;
      f.codomain = *b;
      f.images.assign(a->size, 0);
      for (;;) {
        if (is_morphism(f).ok && f.is_surjective())
          CHECK(check_cokernel_factorization(f));
        int i = 0;
        while (i < a->size && f.images[i] == b->size - 1) f.images[i++] = 0;
        if (i == a->size) break;
        ++f.images[i];
      }
    }
}

TEST_CASE("relation composition reproduces the counterexample") {
  RFixture fx = r_fixture();
  // extracted order: 0 = (0,1), 1 = (1,0), 2 = (1,1)
  PairRelation p2_after_p1 = compose_relations(fx.eq1, fx.eq2);
  PairRelation p1_after_p2 = compose_relations(fx.eq2, fx.eq1);
  CHECK(p2_after_p1.contains(1, 0));        // ((1,0),(0,1)) via (1,1)
  CHECK_FALSE(p1_after_p2.contains(1, 0));
  CHECK_FALSE(p2_after_p1 == p1_after_p2);

  PairRelation diag = diagonal_relation(3);
  CHECK(compose_relations(fx.eq1, diag) == fx.eq1);
  CHECK(compose_relations(diag, fx.eq1) == fx.eq1);

  PairRelation other(4);
  CHECK_THROWS_AS(compose_relations(fx.eq1, other), contract_error);
}

TEST_CASE("permutability fails on the relation algebra") {
  RFixture fx = r_fixture();
  PermutabilityCheck pc = check_permutability(fx.r);
  CHECK_FALSE(pc.ok);
  // the witnessing congruences genuinely fail to permute
  std::vector<Partition> congs = all_congruences(fx.r);
  PairRelation r = congs[pc.r].to_relation();
  PairRelation s = congs[pc.s].to_relation();
  CHECK_FALSE(compose_relations(r, s) == compose_relations(s, r));

  CHECK(check_permutability(two_elt()).ok);
  CHECK(check_permutability_serial(fx.r).r == pc.r);
  CHECK(check_permutability_serial(fx.r).s == pc.s);
}

TEST_CASE("permutability verdicts match the serial reference") {
  for (const MagmaTable* m : oracle::universe_up_to(4, AlgebraKind::pre_l)) {
    PermutabilityCheck a = check_permutability(*m);
    PermutabilityCheck b = check_permutability_serial(*m);
    CHECK(a.ok == b.ok);
    CHECK(a.r == b.r);
    CHECK(a.s == b.s);
  }
}

TEST_CASE("permutability at the unit holds across the pre-L universe") {
  RFixture fx = r_fixture();
  CHECK(check_permutability_at_one(fx.r).ok);  // weaker than full permutability
  CHECK(check_permutability_at_one(table2()).ok);
  for (const MagmaTable* m : oracle::universe_up_to(4, AlgebraKind::pre_l))
    CHECK(check_permutability_at_one(*m).ok);

  MagmaTable not_pre_l = make_magma(2, 0, {{1, 1}, {0, 1}});
  CHECK_THROWS_AS(check_permutability_at_one(not_pre_l), contract_error);
}
