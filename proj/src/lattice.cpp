#include "lalg/lattice.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace lalg {

int FiniteLattice::bottom() const {
  for (int a = 0; a < size; ++a) {
    bool below_all = true;
    for (int b = 0; b < size && below_all; ++b) below_all = le(a, b);
    if (below_all) return a;
  }
  return -1;
}

int FiniteLattice::top() const {
  for (int a = 0; a < size; ++a) {
    bool above_all = true;
    for (int b = 0; b < size && above_all; ++b) above_all = le(b, a);
    if (above_all) return a;
  }
  return -1;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (a == b || !le(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < size && covered; ++c)
        if (c != a && c != b && le(a, c) && le(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

namespace {

FiniteLattice build_from_matrix(std::vector<std::uint8_t> leq, int n,
                                std::vector<std::string> labels) {
  FiniteLattice l;
  l.size = n;
  l.leq = std::move(leq);
  l.labels = std::move(labels);
  l.meet.assign(static_cast<std::size_t>(n) * n, -1);
  l.join.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int glb = -1, lub = -1;
      for (int c = 0; c < n; ++c) {
        if (l.le(c, a) && l.le(c, b) && (glb < 0 || l.le(glb, c))) glb = c;
        if (l.le(a, c) && l.le(b, c) && (lub < 0 || l.le(c, lub))) lub = c;
      }
      // the candidate must actually dominate every lower/upper bound
      for (int c = 0; c < n; ++c) {
        if (l.le(c, a) && l.le(c, b) && (glb < 0 || !l.le(c, glb))) glb = -2;
        if (l.le(a, c) && l.le(b, c) && (lub < 0 || !l.le(lub, c))) lub = -2;
      }
      if (glb < 0 || lub < 0)
        throw contract_error("order is not a lattice: pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ") lacks a meet or join");
      l.meet[static_cast<std::size_t>(n) * a + b] = static_cast<std::int16_t>(glb);
      l.join[static_cast<std::size_t>(n) * a + b] = static_cast<std::int16_t>(lub);
    }
  return l;
}

}  // namespace

FiniteLattice lattice_from_order(const std::vector<std::vector<bool>>& leq,
                                 std::vector<std::string> labels) {
  int n = static_cast<int>(leq.size());
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(leq[a].size()) != n) throw contract_error("ragged order matrix");
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(n) * a + b] = leq[a][b] ? 1 : 0;
  }
  FiniteLattice l = build_from_matrix(std::move(flat), n, std::move(labels));
  std::string err = validate_lattice(l);
  if (!err.empty()) throw contract_error(err);
  return l;
}

std::string validate_lattice(const FiniteLattice& l) {
  const int n = l.size;
  if (n == 0) return "empty lattice";
  for (int a = 0; a < n; ++a)
    if (!l.le(a, a)) return "order not reflexive";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && l.le(a, b) && l.le(b, a)) return "order not antisymmetric";
      for (int c = 0; c < n; ++c)
        if (l.le(a, b) && l.le(b, c) && !l.le(a, c)) return "order not transitive";
    }
  for (int a = 0; a < n; ++a) {
    if (l.meet_of(a, a) != a || l.join_of(a, a) != a) return "meet/join not idempotent";
    for (int b = 0; b < n; ++b) {
      if (l.meet_of(a, b) != l.meet_of(b, a) || l.join_of(a, b) != l.join_of(b, a))
        return "meet/join not commutative";
      if (l.meet_of(a, l.join_of(a, b)) != a || l.join_of(a, l.meet_of(a, b)) != a)
        return "absorption fails";
      int m = l.meet_of(a, b), j = l.join_of(a, b);
      if (!l.le(m, a) || !l.le(m, b) || !l.le(a, j) || !l.le(b, j))
        return "meet/join not bounds";
    }
  }
  if (l.bottom() < 0 || l.top() < 0) return "missing bottom or top";
  return {};
}

namespace {

std::string subset_label(const MagmaTable& m, Mask s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int e) {
    if (!first) out += ",";
    out += m.name(e);
    first = false;
  });
  return out + "}";
}

template <typename Elem, typename Le, typename Meet, typename Join>
FiniteLattice lattice_over(const std::vector<Elem>& elems, Le le_fn, Meet meet_fn,
                           Join join_fn, std::vector<std::string> labels) {
  int n = static_cast<int>(elems.size());
  FiniteLattice l;
  l.size = n;
  l.labels = std::move(labels);
  l.leq.assign(static_cast<std::size_t>(n) * n, 0);
  l.meet.assign(static_cast<std::size_t>(n) * n, -1);
  l.join.assign(static_cast<std::size_t>(n) * n, -1);
  auto index_of = [&](const Elem& e) {
    auto it = std::find(elems.begin(), elems.end(), e);
    if (it == elems.end()) throw contract_error("meet/join left the element list");
    return static_cast<std::int16_t>(it - elems.begin());
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      l.leq[static_cast<std::size_t>(n) * a + b] = le_fn(elems[a], elems[b]) ? 1 : 0;
      l.meet[static_cast<std::size_t>(n) * a + b] = index_of(meet_fn(elems[a], elems[b]));
      l.join[static_cast<std::size_t>(n) * a + b] = index_of(join_fn(elems[a], elems[b]));
    }
  std::string err = validate_lattice(l);
  if (!err.empty()) throw contract_error(err);
  return l;
}

}  // namespace

IdealLattice ideal_lattice(const MagmaTable& m) {
  IdealLattice il;
  il.ideals = all_ideals(m, m.size <= kExhaustiveSubsetBound ? IdealEnumMode::exhaustive
                                                             : IdealEnumMode::closure);
  std::vector<std::string> labels;
  labels.reserve(il.ideals.size());
  for (Mask s : il.ideals) labels.push_back(subset_label(m, s));
  il.lat = lattice_over(
      il.ideals, [](Mask a, Mask b) { return (a & ~b) == 0; },
      [](Mask a, Mask b) { return a & b; },
      [&](Mask a, Mask b) { return ideal_closure(m, a | b); }, std::move(labels));
  return il;
}

CongruenceLattice congruence_lattice(const MagmaTable& m) {
  CongruenceLattice cl;
  cl.congruences = all_congruences(m);
  std::vector<std::string> labels;
  labels.reserve(cl.congruences.size());
  for (const auto& p : cl.congruences) {
    std::string s;
    for (int a = 0; a < p.size(); ++a) s += (a ? "," : "") + std::to_string(p.label[a]);
    labels.push_back(s);
  }
  cl.lat = lattice_over(
      cl.congruences, [](const Partition& a, const Partition& b) { return a.refines(b); },
      partition_meet, partition_join, std::move(labels));
  return cl;
}

DistributivityCheck is_distributive_serial(const FiniteLattice& l) {
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      for (int c = 0; c < l.size; ++c)
        if (l.meet_of(a, l.join_of(b, c)) != l.join_of(l.meet_of(a, b), l.meet_of(a, c)))
          return {false, a, b, c};
  return {};
}

DistributivityCheck is_distributive(const FiniteLattice& l) {
  const int n = l.size;
  long long best = -1;
#pragma omp parallel
  {
    long long local = -1;
#pragma omp for schedule(static) nowait
    for (int ab = 0; ab < n * n; ++ab) {
      int a = ab / n, b = ab % n;
      for (int c = 0; c < n; ++c) {
        if (l.meet_of(a, l.join_of(b, c)) != l.join_of(l.meet_of(a, b), l.meet_of(a, c))) {
          long long code = (static_cast<long long>(ab) * n) + c;
          if (local < 0 || code < local) local = code;
          break;  // later c for this (a,b) cannot beat this code
        }
      }
    }
#pragma omp critical
    if (local >= 0 && (best < 0 || local < best)) best = local;
  }
  if (best < 0) return {};
  int c = static_cast<int>(best % n);
  int b = static_cast<int>((best / n) % n);
  int a = static_cast<int>(best / (static_cast<long long>(n) * n));
  return {false, a, b, c};
}

namespace {

// Morphism test for mu: i x j -> m / psi(k).
bool multiplication_descends(const MagmaTable& m, const MagmaTable& prod,
                             const std::vector<int>& ielems, const std::vector<int>& jelems,
                             Mask k) {
  Partition pk = psi(m, k);
  Quotient q = quotient(m, pk);
  ElementMap mu;
  mu.domain = prod;
  mu.codomain = q.table;
  mu.images.resize(prod.size);
  const int jn = static_cast<int>(jelems.size());
  for (int a = 0; a < static_cast<int>(ielems.size()); ++a)
    for (int b = 0; b < jn; ++b)
      mu.images[a * jn + b] = pk.label[m.op(ielems[a], jelems[b])];
  return is_morphism(mu).ok;
}

}  // namespace

Mask commutator(const MagmaTable& m, Mask i, Mask j) {
  if (!is_l_algebra(m)) throw contract_error("commutator requires an L-algebra");
  if (!is_ideal(m, i).ok || !is_ideal(m, j).ok)
    throw contract_error("commutator requires two ideals");

  Subalgebra si = subalgebra_table(m, i);  // ideals are subalgebras
  Subalgebra sj = subalgebra_table(m, j);
  MagmaTable prod = product(si.table, sj.table);

  std::vector<Mask> ideals = all_ideals(
      m, m.size <= kExhaustiveSubsetBound ? IdealEnumMode::exhaustive : IdealEnumMode::closure);

  auto search = [&](const std::vector<Mask>& candidates) -> std::optional<Mask> {
    std::vector<std::uint8_t> good(candidates.size(), 0);
    const int total = static_cast<int>(candidates.size());
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < total; ++t)
      good[t] = multiplication_descends(m, prod, si.elements, sj.elements, candidates[t]) ? 1 : 0;
    int first = -1;
    for (int t = 0; t < total; ++t)
      if (good[t]) { first = t; break; }
    if (first < 0) return std::nullopt;
    // minimal-size success must be unique
    for (int t = first + 1; t < total; ++t)
      if (good[t] && popcount(candidates[t]) == popcount(candidates[first]))
        throw lalg_error("commutator: minimal ideal is not unique");
    return candidates[first];
  };

  std::vector<Mask> inside;
  for (Mask k : ideals)
    if ((k & ~(i & j)) == 0) inside.push_back(k);
  std::optional<Mask> found = search(inside);
  if (!found) found = search(ideals);
  if (!found) throw lalg_error("commutator: no ideal admits the morphism");
  return *found;
}

bool is_semiprime(const MagmaTable& m, Mask i) {
  if (!is_ideal(m, i).ok) throw contract_error("is_semiprime requires an ideal");
  std::vector<Mask> ideals = all_ideals(
      m, m.size <= kExhaustiveSubsetBound ? IdealEnumMode::exhaustive : IdealEnumMode::closure);
  for (Mask j : ideals) {
    Mask jj = commutator(m, j, j);
    if ((jj & ~i) == 0 && (j & ~i) != 0) return false;
  }
  return true;
}

std::vector<Mask> prime_ideals(const MagmaTable& m) {
  IdealLattice il = ideal_lattice(m);
  const FiniteLattice& l = il.lat;
  int top = l.top();
  std::vector<Mask> out;
  for (int p = 0; p < l.size; ++p) {
    if (p == top) continue;
    bool irreducible = true;
    for (int a = 0; a < l.size && irreducible; ++a)
      for (int b = 0; b < l.size && irreducible; ++b)
        if (l.meet_of(a, b) == p && a != p && b != p) irreducible = false;
    if (irreducible) out.push_back(il.ideals[p]);
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

SpectrumSpace spectrum(const MagmaTable& m) {
  SpectrumSpace sp;
  sp.points = prime_ideals(m);
  IdealLattice il = ideal_lattice(m);
  sp.ideals = il.ideals;
  const int np = static_cast<int>(sp.points.size());
  if (np > kMaxCarrier) throw capacity_error("too many spectrum points");

  std::vector<Mask> open_by_ideal(sp.ideals.size(), 0);
  for (std::size_t i = 0; i < sp.ideals.size(); ++i)
    for (int p = 0; p < np; ++p)
      if ((sp.ideals[i] & ~sp.points[p]) != 0) open_by_ideal[i] |= bit(p);  // I not inside P

  sp.opens = open_by_ideal;
  std::sort(sp.opens.begin(), sp.opens.end(), mask_less);
  sp.opens.erase(std::unique(sp.opens.begin(), sp.opens.end()), sp.opens.end());
  sp.open_of_ideal.resize(sp.ideals.size());
  for (std::size_t i = 0; i < sp.ideals.size(); ++i)
    sp.open_of_ideal[i] = static_cast<int>(
        std::lower_bound(sp.opens.begin(), sp.opens.end(), open_by_ideal[i], mask_less) -
        sp.opens.begin());

  // The map I -> U_I should be a lattice isomorphism onto the opens.
  if (sp.opens.size() != sp.ideals.size()) sp.anomalies.push_back("I -> U_I is not injective");
  const FiniteLattice& l = il.lat;
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b) {
      bool sub = (open_by_ideal[a] & ~open_by_ideal[b]) == 0;
      if (l.le(a, b) != sub) {
        sp.anomalies.push_back("order not preserved at ideals " + std::to_string(a) + "," +
                               std::to_string(b));
      }
      if ((open_by_ideal[a] & open_by_ideal[b]) != open_by_ideal[l.meet_of(a, b)])
        sp.anomalies.push_back("meet not preserved at ideals " + std::to_string(a) + "," +
                               std::to_string(b));
      if ((open_by_ideal[a] | open_by_ideal[b]) != open_by_ideal[l.join_of(a, b)])
        sp.anomalies.push_back("join not preserved at ideals " + std::to_string(a) + "," +
                               std::to_string(b));
    }
  Mask none = 0, all = full_mask(np);
  if (!std::binary_search(sp.opens.begin(), sp.opens.end(), none, mask_less))
    sp.anomalies.push_back("empty open missing");
  if (!std::binary_search(sp.opens.begin(), sp.opens.end(), all, mask_less))
    sp.anomalies.push_back("full open missing");
  return sp;
}

bool is_sober(const SpectrumSpace& s) {
  const int np = static_cast<int>(s.points.size());
  const Mask all = full_mask(np);
  std::vector<Mask> closed;
  closed.reserve(s.opens.size());
  for (Mask o : s.opens) closed.push_back(all & ~o);
  std::sort(closed.begin(), closed.end(), mask_less);
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());

  auto closure_of_point = [&](int p) {
    Mask c = all;
    for (Mask k : closed)
      if (contains(k, p)) c &= k;
    return c;
  };

  for (Mask c : closed) {
    if (c == 0) continue;
    bool irreducible = true;
    for (Mask a : closed) {
      if (a == c || (a & ~c) != 0) continue;
      for (Mask b : closed) {
        if (b == c || (b & ~c) != 0) continue;
        if ((a | b) == c) { irreducible = false; break; }
      }
      if (!irreducible) break;
    }
    if (!irreducible) continue;
    int generic = 0;
    for_each_bit(c, [&](int p) {
      if (closure_of_point(p) == c) ++generic;
    });
    if (generic != 1) return false;
  }
  return true;
}

}  // namespace lalg
