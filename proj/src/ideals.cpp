#include "lalg/ideals.hpp"

#include <algorithm>
#include <set>

namespace lalg {

int Partition::num_classes() const {
  int k = 0;
  for (auto l : label) k = std::max(k, static_cast<int>(l) + 1);
  return k;
}

Mask Partition::class_of(int a) const {
  Mask s = 0;
  for (int b = 0; b < size(); ++b)
    if (label[b] == label[a]) s |= bit(b);
  return s;
}

void Partition::normalize() {
  std::vector<int> remap(label.size(), -1);
  int next = 0;
  for (auto& l : label) {
    if (remap[l] < 0) remap[l] = next++;
    l = static_cast<std::uint8_t>(remap[l]);
  }
}

bool Partition::is_normalized() const {
  int next = 0;
  for (auto l : label) {
    if (l > next) return false;
    if (l == next) ++next;
  }
  return true;
}

bool Partition::refines(const PairRelation& o) const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (same(a, b) && !o.contains(a, b)) return false;
  return true;
}

bool Partition::refines(const Partition& o) const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (same(a, b) && !o.same(a, b)) return false;
  return true;
}

PairRelation Partition::to_relation() const {
  PairRelation r(size());
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (same(a, b)) r.add(a, b);
  return r;
}

Partition diagonal_partition(int n) {
  Partition p;
  p.label.resize(n);
  for (int a = 0; a < n; ++a) p.label[a] = static_cast<std::uint8_t>(a);
  return p;
}

Partition total_partition(int n) {
  Partition p;
  p.label.assign(n, 0);
  return p;
}

Partition partition_from_relation(const PairRelation& r) {
  if (!r.is_reflexive() || !r.is_symmetric() || !r.is_transitive())
    throw contract_error("relation is not an equivalence");
  Partition p;
  p.label.assign(r.n, 0);
  std::vector<int> rep;
  for (int a = 0; a < r.n; ++a) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(rep.size()); ++i)
      if (r.contains(rep[i], a)) { found = i; break; }
    if (found < 0) {
      found = static_cast<int>(rep.size());
      rep.push_back(a);
    }
    p.label[a] = static_cast<std::uint8_t>(found);
  }
  return p;
}

Partition partition_meet(const Partition& a, const Partition& b) {
  Partition p;
  p.label.resize(a.label.size());
  int n = a.size();
  std::vector<int> seen(n * n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int key = a.label[i] * n + b.label[i];
    if (seen[key] < 0) seen[key] = next++;
    p.label[i] = static_cast<std::uint8_t>(seen[key]);
  }
  return p;
}

Partition partition_join(const Partition& a, const Partition& b) {
  // union-find over the blocks of both partitions
  int n = a.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.same(i, j) || b.same(i, j)) unite(i, j);
  Partition p;
  p.label.resize(n);
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (remap[r] < 0) remap[r] = next++;
    p.label[i] = static_cast<std::uint8_t>(remap[r]);
  }
  return p;
}

const char* ideal_rule_name(IdealRule r) {
  switch (r) {
    case IdealRule::unit_member: return "1 in I";
    case IdealRule::detachment: return "x,x*y in I => y in I";
    case IdealRule::double_division: return "x in I => (x*y)*y in I";
    case IdealRule::left_product: return "x in I => y*x in I";
    case IdealRule::wrap: return "x in I => y*(x*y) in I";
  }
  return "?";
}

IdealCheck is_ideal(const MagmaTable& m, Mask s) {
  if ((s & ~full_mask(m.size)) != 0) throw structural_error("subset outside carrier");
  if (!contains(s, m.unit)) return {false, IdealRule::unit_member, m.unit, -1};
  for (int x = 0; x < m.size; ++x) {
    if (!contains(s, x)) continue;
    for (int y = 0; y < m.size; ++y) {
      if (contains(s, m.op(x, y)) && !contains(s, y))
        return {false, IdealRule::detachment, x, y};
      if (!contains(s, m.op(m.op(x, y), y)))
        return {false, IdealRule::double_division, x, y};
      if (!contains(s, m.op(y, x)))
        return {false, IdealRule::left_product, x, y};
      if (!contains(s, m.op(y, m.op(x, y))))
        return {false, IdealRule::wrap, x, y};
    }
  }
  return {};
}

Mask ideal_closure(const MagmaTable& m, Mask gens) {
  Mask s = gens | bit(m.unit);
  for (;;) {
    Mask prev = s;
    for (int x = 0; x < m.size; ++x) {
      if (!contains(s, x)) continue;
      for (int y = 0; y < m.size; ++y) {
        if (contains(s, m.op(x, y))) s |= bit(y);
        s |= bit(m.op(m.op(x, y), y));
        s |= bit(m.op(y, x));
        s |= bit(m.op(y, m.op(x, y)));
      }
    }
    if (s == prev) return s;
  }
}

namespace {

std::vector<Mask> all_ideals_exhaustive(const MagmaTable& m) {
  std::vector<Mask> out;
  const Mask unit_bit = bit(m.unit);
  for (Mask s = 0; s <= full_mask(m.size); ++s) {
    if ((s & unit_bit) == 0) continue;
    if (is_ideal(m, s).ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::vector<Mask> all_ideals_closure(const MagmaTable& m) {
  std::set<Mask> seen;
  std::vector<Mask> work{ideal_closure(m, 0)};
  seen.insert(work[0]);
  while (!work.empty()) {
    Mask i = work.back();
    work.pop_back();
    for (int x = 0; x < m.size; ++x) {
      if (contains(i, x)) continue;
      Mask j = ideal_closure(m, i | bit(x));
      if (seen.insert(j).second) work.push_back(j);
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

}  // namespace

std::vector<Mask> all_ideals(const MagmaTable& m, IdealEnumMode mode) {
  if (mode == IdealEnumMode::exhaustive) {
    if (m.size > kExhaustiveSubsetBound)
      throw capacity_error("carrier size " + std::to_string(m.size) +
                           " exceeds the exhaustive-subset bound of " +
                           std::to_string(kExhaustiveSubsetBound) +
                           "; use closure mode");
    return all_ideals_exhaustive(m);
  }
  return all_ideals_closure(m);
}

namespace {

// Restricted growth strings enumerate every partition exactly once and
// are already in canonical first-occurrence form.
std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition p;
  p.label.assign(n, 0);
  std::vector<std::uint8_t> maxi(n, 0);  // maxi[i] = max label among 0..i
  int i = n - 1;
  for (;;) {
    out.push_back(p);
    // next restricted growth string
    while (i > 0 && p.label[i] > maxi[i - 1]) --i;
    if (i == 0) break;
    p.label[i] = static_cast<std::uint8_t>(p.label[i] + 1);
    maxi[i] = std::max(maxi[i - 1], p.label[i]);
    for (int j = i + 1; j < n; ++j) {
      p.label[j] = 0;
      maxi[j] = maxi[i];
    }
    i = n - 1;
  }
  return out;
}

// Definitional compatibility: x~x' and y~y' imply x*y ~ x'*y'.
bool compatible_definitional(const MagmaTable& m, const Partition& p) {
  for (int x = 0; x < m.size; ++x)
    for (int x2 = 0; x2 < m.size; ++x2) {
      if (!p.same(x, x2)) continue;
      for (int y = 0; y < m.size; ++y)
        for (int y2 = 0; y2 < m.size; ++y2)
          if (p.same(y, y2) && !p.same(m.op(x, y), m.op(x2, y2))) return false;
    }
  return true;
}

// One-side-at-a-time translation check, equivalent by chaining.
bool compatible_translations(const MagmaTable& m, const Partition& p) {
  for (int x = 0; x < m.size; ++x)
    for (int x2 = x + 1; x2 < m.size; ++x2) {
      if (!p.same(x, x2)) continue;
      for (int y = 0; y < m.size; ++y) {
        if (!p.same(m.op(x, y), m.op(x2, y))) return false;
        if (!p.same(m.op(y, x), m.op(y, x2))) return false;
      }
    }
  return true;
}

void require_congruence_bound(const MagmaTable& m) {
  if (m.size > kCongruenceEnumBound)
    throw capacity_error("carrier size " + std::to_string(m.size) +
                         " exceeds the partition-enumeration bound of " +
                         std::to_string(kCongruenceEnumBound));
}

}  // namespace

bool is_congruence(const MagmaTable& m, const Partition& p) {
  if (p.size() != m.size) throw contract_error("partition carrier mismatch");
  return compatible_translations(m, p);
}

std::vector<Partition> all_congruences_serial(const MagmaTable& m) {
  require_congruence_bound(m);
  std::vector<Partition> out;
  for (const auto& p : all_partitions(m.size))
    if (compatible_definitional(m, p)) out.push_back(p);
  return out;  // RGS order is already sorted canonical order
}

std::vector<Partition> all_congruences(const MagmaTable& m) {
  require_congruence_bound(m);
  std::vector<Partition> cand = all_partitions(m.size);
  std::vector<std::uint8_t> keep(cand.size(), 0);
  const int total = static_cast<int>(cand.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < total; ++i) keep[i] = compatible_translations(m, cand[i]) ? 1 : 0;
  std::vector<Partition> out;
  for (int i = 0; i < total; ++i)
    if (keep[i]) out.push_back(std::move(cand[i]));
  return out;
}

Mask phi(const MagmaTable& m, const Partition& c) {
  if (!is_congruence(m, c)) throw contract_error("phi requires a congruence");
  return c.class_of(m.unit);
}

Partition psi(const MagmaTable& m, Mask i) {
  if (!is_ideal(m, i).ok) throw contract_error("psi requires an ideal");
  PairRelation r(m.size);
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y)
      if (contains(i, m.op(x, y)) && contains(i, m.op(y, x))) r.add(x, y);
  return partition_from_relation(r);
}

Quotient quotient(const MagmaTable& m, const Partition& c) {
  if (!is_congruence(m, c)) throw contract_error("quotient requires a congruence");
  int k = c.num_classes();
  std::vector<int> rep(k, -1);
  for (int a = 0; a < m.size; ++a)
    if (rep[c.label[a]] < 0) rep[c.label[a]] = a;
  Quotient q;
  q.table.size = k;
  q.table.unit = c.label[m.unit];
  q.table.table.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      q.table.table[static_cast<std::size_t>(k) * i + j] = c.label[m.op(rep[i], rep[j])];
  if (!m.names.empty()) {
    q.table.names.resize(k);
    for (int a = 0; a < m.size; ++a) {
      std::string& s = q.table.names[c.label[a]];
      s += (s.empty() ? "" : "|") + m.name(a);
    }
  }
  q.projection.domain = m;
  q.projection.codomain = q.table;
  q.projection.images.assign(c.label.begin(), c.label.end());
  return q;
}

Partition smallest_l_congruence(const MagmaTable& m, const Partition& c) {
  return psi(m, phi(m, c));
}

Quotient reflect(const MagmaTable& m) {
  if (!is_pre_l_algebra(m)) throw contract_error("reflect requires a pre-L-algebra");
  return quotient(m, psi(m, bit(m.unit)));
}

}  // namespace lalg
