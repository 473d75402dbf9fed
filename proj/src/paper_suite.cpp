#include "lalg/paper_suite.hpp"

#include <chrono>

#include "lalg/catcheck.hpp"
#include "lalg/enumerate.hpp"
#include "lalg/ideals.hpp"
#include "lalg/lattice.hpp"

namespace lalg {

using nlohmann::json;

PaperFixtures load_paper_fixtures(const std::string& dir) {
  PaperFixtures fx;
  fx.table1 = load_algebra_file(dir + "/table1.json");
  fx.table2 = load_algebra_file(dir + "/table2.json");
  fx.two_element = load_algebra_file(dir + "/two_element.json");
  return fx;
}

ElementMap witness_morphism(const PaperFixtures& fx) {
  ElementMap f;
  f.domain = fx.table1.algebra;
  f.codomain = fx.table2.algebra;
  f.images = {2, 0, 1, 2};  // x -> 1, y -> a, z -> b, 1 -> 1
  return f;
}

RelationAlgebra section_relation_algebra(const PaperFixtures& fx) {
  RelationAlgebra ra;
  const MagmaTable& x = fx.two_element.algebra;
  ra.square = product(x, x);
  // R = {(0,1), (1,0), (1,1)}, flattened over the square's carrier
  Mask r = bit(0 * 2 + 1) | bit(1 * 2 + 0) | bit(1 * 2 + 1);
  ra.r = subalgebra_table(ra.square, r);
  ra.p1.domain = ra.r.table;
  ra.p1.codomain = x;
  ra.p2.domain = ra.r.table;
  ra.p2.codomain = x;
  for (int e : ra.r.elements) {
    ra.p1.images.push_back(static_cast<std::uint8_t>(e / 2));
    ra.p2.images.push_back(static_cast<std::uint8_t>(e % 2));
  }
  return ra;
}

namespace {

json table_json(const MagmaTable& m) {
  return emit_algebra({m, ""});
}

json axiom_report_json(const AxiomReport& r) {
  json j;
  j["unital"] = r.unital;
  j["cycloid"] = r.cycloid;
  j["antisymmetric"] = r.antisymmetric;
  json v = json::array();
  for (const auto& viol : r.violations) {
    json w = json::array();
    for (int e : viol.witness)
      if (e >= 0) w.push_back(e);
    v.push_back({{"axiom", axiom_name(viol.axiom)}, {"witness", w}});
  }
  j["violations"] = v;
  return j;
}

struct SuiteBuilder {
  const PaperSuiteOptions& opts;
  PaperFixtures fx;
  std::vector<MagmaTable> pre_l_universe;  // all orders up to max_order
  std::vector<MagmaTable> l_universe;
  VerdictReport report;

  explicit SuiteBuilder(const PaperSuiteOptions& o) : opts(o) {
    fx = load_paper_fixtures(opts.fixture_dir);
    for (int n = 1; n <= opts.max_order; ++n) {
      for (auto& m : enumerate_algebras(n, AlgebraKind::pre_l)) pre_l_universe.push_back(m);
      for (auto& m : enumerate_algebras(n, AlgebraKind::l)) l_universe.push_back(m);
    }
  }

  void add(const std::string& name, bool ok, json witness = {}) {
    report.checks.push_back({name, ok, ok ? json{} : std::move(witness)});
  }

  void fixture_axioms() {
    AxiomReport t1 = check_axioms(fx.table1.algebra);
    add("table1-axioms", t1.is_l(), axiom_report_json(t1));

    AxiomReport t2 = check_axioms(fx.table2.algebra);
    bool expected = t2.unital && t2.cycloid && !t2.antisymmetric;
    bool witness_ab = false;
    for (const auto& v : t2.violations)
      if (v.axiom == Axiom::antisymmetric && v.witness[0] == 0 && v.witness[1] == 1)
        witness_ab = true;
    add("table2-axioms", expected && witness_ab, axiom_report_json(t2));
  }

  void non_variety_witness() {
    ElementMap f = witness_morphism(fx);
    MorphismCheck mc = is_morphism(f);
    bool ok = mc.ok && f.is_surjective() && is_l_algebra(f.domain) &&
              !is_l_algebra(f.codomain);
    add("witness-morphism-onto-non-l", ok,
        {{"morphism", mc.ok}, {"surjective", f.is_surjective()}});

    Partition eqf = partition_from_relation(kernel_pair(f));
    Quotient q = quotient(fx.table1.algebra, eqf);
    bool iso = are_isomorphic(q.table, fx.table2.algebra).has_value();
    add("quotient-by-kernel-matches-table2", iso, table_json(q.table));
  }

  void term_checks() {
    RelationAlgebra ra = section_relation_algebra(fx);
    bool terms_ok = true;
    json witness = json::array();
    for (const MagmaTable* m :
         {&fx.table1.algebra, &fx.table2.algebra, &fx.two_element.algebra, &ra.r.table}) {
      TermCheck tc = check_subtractive_terms(*m);
      if (!tc.ok) {
        terms_ok = false;
        witness.push_back({{"x", tc.x}, {"table", table_json(*m)}});
      }
    }
    add("subtractive-terms", terms_ok, witness);

    RegularityCheck r1 = check_one_regularity(fx.table1.algebra);
    RegularityCheck r2 = check_one_regularity(fx.table2.algebra);
    bool ok = r1.ok && !r2.ok && r2.a == 0 && r2.b == 1 &&
              check_one_regularity(fx.two_element.algebra).ok;
    add("one-regularity", ok, {{"table2_witness", {r2.a, r2.b}}});
  }

  void composition_counterexample() {
    RelationAlgebra ra = section_relation_algebra(fx);
    PairRelation eq1 = kernel_pair(ra.p1);
    PairRelation eq2 = kernel_pair(ra.p2);

    // Extracted element order: 0 = (0,1), 1 = (1,0), 2 = (1,1). The
    // tabulated listing of Eq(p1) has four pairs and omits the mirror
    // ((1,1),(1,0)); kernel pairs are symmetric, so it is included here.
    PairRelation want1(3), want2(3);
    for (int e = 0; e < 3; ++e) { want1.add(e, e); want2.add(e, e); }
    want1.add(1, 2); want1.add(2, 1);
    want2.add(0, 2); want2.add(2, 0);
    add("kernel-pair-projections", eq1 == want1 && eq2 == want2,
        {{"eq_p1", json(eq1.pairs())}, {"eq_p2", json(eq2.pairs())}});

    PairRelation p2_after_p1 = compose_relations(eq1, eq2);
    PairRelation p1_after_p2 = compose_relations(eq2, eq1);
    // ((1,0),(0,1)) lives at extracted indices (1,0)
    bool ok = p2_after_p1.contains(1, 0) && !p1_after_p2.contains(1, 0) &&
              !(p2_after_p1 == p1_after_p2);
    add("composition-counterexample", ok,
        {{"in_p2_after_p1", p2_after_p1.contains(1, 0)},
         {"in_p1_after_p2", p1_after_p2.contains(1, 0)}});

    PermutabilityCheck perm = check_permutability(ra.r.table);
    add("relation-algebra-not-permutable", !perm.ok, {{"note", "expected a failing pair"}});
  }

  void permutability_at_unit() {
    RelationAlgebra ra = section_relation_algebra(fx);
    bool ok = check_permutability_at_one(ra.r.table).ok &&
              check_permutability_at_one(fx.table2.algebra).ok;
    json witness = json::array();
    for (const auto& m : pre_l_universe) {
      PermutabilityCheck pc = check_permutability_at_one(m);
      if (!pc.ok) {
        ok = false;
        witness.push_back({{"table", table_json(m)}, {"pair", {pc.r, pc.s}}});
      }
    }
    add("permutability-at-unit", ok, witness);
  }

  void galois_laws() {
    bool ok = true;
    json witness = json::array();
    auto fail = [&](const MagmaTable& m, const std::string& law) {
      ok = false;
      if (witness.size() < 8) witness.push_back({{"law", law}, {"table", table_json(m)}});
    };
    for (const auto& m : pre_l_universe) {
      std::vector<Partition> congs = all_congruences(m);
      std::vector<Mask> ideals = all_ideals(m);

      for (const auto& c : congs)
        if (!is_ideal(m, phi(m, c)).ok) fail(m, "phi lands in ideals");
      for (Mask i : ideals)
        if (phi(m, psi(m, i)) != i) fail(m, "phi(psi(i)) = i");
      for (const auto& c : congs) {
        Mask pc = phi(m, c);
        for (Mask i : ideals) {
          bool left = (pc & ~i) == 0;
          bool right = c.refines(psi(m, i));
          if (left != right) fail(m, "adjunction");
        }
      }
      for (const auto& c : congs) {
        Partition cl = smallest_l_congruence(m, c);
        if (!c.refines(cl)) fail(m, "closure extensive");
        if (!(smallest_l_congruence(m, cl) == cl)) fail(m, "closure idempotent");
        for (const auto& d : congs)
          if (c.refines(d) && !cl.refines(smallest_l_congruence(m, d)))
            fail(m, "closure monotone");
        bool quotient_is_l = is_l_algebra(quotient(m, c).table);
        if (quotient_is_l != (c == cl)) fail(m, "image characterization");
        // minimality against the full congruence list
        if (!is_l_algebra(quotient(m, cl).table)) fail(m, "closure quotient is L");
        for (const auto& d : congs)
          if (c.refines(d) && is_l_algebra(quotient(m, d).table) && !cl.refines(d))
            fail(m, "minimality");
      }
      std::size_t l_quotients = 0;
      for (const auto& c : congs)
        if (is_l_algebra(quotient(m, c).table)) ++l_quotients;
      if (l_quotients != ideals.size()) fail(m, "ideal/congruence bijection");
    }
    add("galois-laws", ok, witness);
  }

  void commutator_theorem() {
    bool ok = true;
    json witness = json::array();
    auto fail = [&](const MagmaTable& m, const std::string& law) {
      ok = false;
      if (witness.size() < 8) witness.push_back({{"law", law}, {"table", table_json(m)}});
    };
    for (const auto& m : l_universe) {
      std::vector<Mask> ideals = all_ideals(m);
      for (Mask i : ideals)
        for (Mask j : ideals) {
          Mask k = commutator(m, i, j);
          if (k != (i & j)) fail(m, "[i,j] = i&j");
          if ((k & ~(i & j)) != 0) fail(m, "[i,j] inside i&j");
        }
      Mask full = full_mask(m.size);
      bool abelian = commutator(m, full, full) == bit(m.unit);
      if (abelian != (m.size == 1)) fail(m, "abelian iff trivial");
    }
    add("commutator-intersection", ok, witness);
  }

  void lattice_and_spectrum() {
    bool dist_ok = true, semi_ok = true, spec_ok = true;
    json dist_w = json::array(), semi_w = json::array(), spec_w = json::array();
    for (const auto& m : l_universe) {
      IdealLattice il = ideal_lattice(m);
      DistributivityCheck dc = is_distributive(il.lat);
      if (!dc.ok) {
        dist_ok = false;
        dist_w.push_back({{"table", table_json(m)}, {"triple", {dc.a, dc.b, dc.c}}});
      }

      std::vector<Mask> primes = prime_ideals(m);
      for (Mask i : il.ideals) {
        if (!is_semiprime(m, i)) {
          semi_ok = false;
          semi_w.push_back({{"table", table_json(m)}, {"ideal", subset_to_json(m, i)}});
        }
        Mask inter = full_mask(m.size);
        for (Mask p : primes)
          if ((i & ~p) == 0) inter &= p;
        if (inter != i) {
          semi_ok = false;
          semi_w.push_back({{"table", table_json(m)},
                            {"ideal", subset_to_json(m, i)},
                            {"law", "intersection of primes"}});
        }
      }

      SpectrumSpace sp = spectrum(m);
      if (!sp.anomalies.empty() || !is_sober(sp)) {
        spec_ok = false;
        spec_w.push_back({{"table", table_json(m)}, {"anomalies", sp.anomalies}});
      }
    }
    add("ideal-lattice-distributive", dist_ok, dist_w);
    add("semiprime-and-prime-intersections", semi_ok, semi_w);
    add("spectrum-iso-and-sober", spec_ok, spec_w);
  }
};

}  // namespace

VerdictReport run_paper_suite(const PaperSuiteOptions& opts) {
  if (opts.max_order < 1 || opts.max_order > kMaxSuiteOrder)
    throw contract_error("max order must be in [1," + std::to_string(kMaxSuiteOrder) + "]");
  auto start = std::chrono::steady_clock::now();
  SuiteBuilder b(opts);
  b.report.command = "paper-suite";
  b.report.algebra = opts.fixture_dir;
  b.fixture_axioms();
  b.non_variety_witness();
  b.term_checks();
  b.composition_counterexample();
  b.permutability_at_unit();
  b.galois_laws();
  b.commutator_theorem();
  b.lattice_and_spectrum();
  b.report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return b.report;
}

}  // namespace lalg
