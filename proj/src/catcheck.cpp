#include "lalg/catcheck.hpp"

namespace lalg {

int eval_term(const MagmaTable& m, Term t, int x, int y) {
  switch (t) {
    case Term::s: return m.op(y, x);
    case Term::t1: return m.op(x, y);
    case Term::t2: return m.op(y, x);
  }
  return -1;
}

TermCheck check_subtractive_terms(const MagmaTable& m) {
  const int u = m.unit;
  for (int x = 0; x < m.size; ++x) {
    if (eval_term(m, Term::s, x, x) != u) return {false, x};
    if (eval_term(m, Term::s, x, u) != x) return {false, x};
  }
  return {};
}

RegularityCheck check_one_regularity(const MagmaTable& m) {
  const int u = m.unit;
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b) {
      bool both_unit =
          eval_term(m, Term::t1, a, b) == u && eval_term(m, Term::t2, a, b) == u;
      if (both_unit != (a == b)) return {false, a, b};
    }
  return {};
}

bool check_cokernel_factorization(const ElementMap& f) {
  if (!is_morphism(f).ok) throw contract_error("cokernel check requires a morphism");
  if (!f.is_surjective()) throw contract_error("cokernel check requires a surjection");
  if (!is_l_algebra(f.domain) || !is_l_algebra(f.codomain))
    throw contract_error("cokernel check requires L-algebras on both ends");
  PairRelation eq = kernel_pair(f);
  Partition by_kernel = psi(f.domain, kernel_subset(f));
  return partition_from_relation(eq) == by_kernel;
}

PairRelation compose_relations(const PairRelation& r, const PairRelation& s) {
  if (r.n != s.n) throw contract_error("relation carriers differ");
  PairRelation out(r.n);
  for (int a = 0; a < r.n; ++a)
    for_each_bit(r.rows[a], [&](int b) { out.rows[a] |= s.rows[b]; });
  return out;
}

namespace {

bool pair_permutes(const PairRelation& r, const PairRelation& s) {
  return compose_relations(r, s) == compose_relations(s, r);
}

bool pair_permutes_at_unit(const PairRelation& r, const PairRelation& s, int unit) {
  PairRelation sr = compose_relations(r, s);  // s after r
  PairRelation rs = compose_relations(s, r);
  for (int x = 0; x < r.n; ++x)
    if (sr.contains(x, unit) != rs.contains(x, unit)) return false;
  return true;
}

// Scans all congruence pairs with the given predicate and returns the
// least failing (r,s) index pair. Shared by the full and at-unit checks
// so both verdicts come from the same machinery.
template <typename Pred>
PermutabilityCheck scan_congruence_pairs(const MagmaTable& m, Pred ok, bool parallel) {
  std::vector<Partition> cong = all_congruences(m);
  std::vector<PairRelation> rel;
  rel.reserve(cong.size());
  for (const auto& c : cong) rel.push_back(c.to_relation());
  const int k = static_cast<int>(rel.size());
  const int total = k * k;
  int best = total;
  if (parallel) {
#pragma omp parallel for schedule(static) reduction(min : best)
    for (int idx = 0; idx < total; ++idx)
      if (!ok(rel[idx / k], rel[idx % k]) && idx < best) best = idx;
  } else {
    for (int idx = 0; idx < total; ++idx)
      if (!ok(rel[idx / k], rel[idx % k])) { best = idx; break; }
  }
  if (best == total) return {};
  return {false, best / k, best % k};
}

}  // namespace

PermutabilityCheck check_permutability(const MagmaTable& m) {
  return scan_congruence_pairs(m, pair_permutes, true);
}

PermutabilityCheck check_permutability_serial(const MagmaTable& m) {
  return scan_congruence_pairs(m, pair_permutes, false);
}

PermutabilityCheck check_permutability_at_one(const MagmaTable& m) {
  if (!is_pre_l_algebra(m))
    throw contract_error("permutability at 1 is stated for pre-L-algebras");
  return scan_congruence_pairs(
      m, [&](const PairRelation& r, const PairRelation& s) {
        return pair_permutes_at_unit(r, s, m.unit);
      },
      true);
}

}  // namespace lalg
