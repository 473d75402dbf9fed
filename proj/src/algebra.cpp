#include "lalg/algebra.hpp"

#include <algorithm>

namespace lalg {

std::string MagmaTable::name(int i) const {
  if (i >= 0 && i < static_cast<int>(names.size()) && !names[i].empty()) return names[i];
  return std::to_string(i);
}

MagmaTable make_magma(int size, int unit, const std::vector<std::vector<int>>& rows,
                      std::vector<std::string> names) {
  MagmaTable m;
  m.size = size;
  m.unit = unit;
  if (static_cast<int>(rows.size()) != size)
    throw structural_error("table has " + std::to_string(rows.size()) + " rows, expected " +
                           std::to_string(size));
  m.table.reserve(static_cast<std::size_t>(size) * size);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != size)
      throw structural_error("ragged table row");
    for (int v : row) m.table.push_back(static_cast<std::uint8_t>(v));
  }
  m.names = std::move(names);
  check_structure(m);
  return m;
}

void check_structure(const MagmaTable& m) {
  if (m.size < 1) throw structural_error("carrier must be nonempty");
  if (m.size > kMaxCarrier)
    throw capacity_error("carrier size " + std::to_string(m.size) + " exceeds the limit of " +
                         std::to_string(kMaxCarrier));
  if (m.unit < 0 || m.unit >= m.size)
    throw structural_error("unit index " + std::to_string(m.unit) + " out of range");
  if (static_cast<int>(m.table.size()) != m.size * m.size)
    throw structural_error("table has " + std::to_string(m.table.size()) +
                           " entries, expected " + std::to_string(m.size * m.size));
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      if (m.op(a, b) < 0 || m.op(a, b) >= m.size)
        throw structural_error("entry (" + std::to_string(a) + "," + std::to_string(b) +
                               ") = " + std::to_string(m.op(a, b)) + " out of range");
  if (!m.names.empty() && static_cast<int>(m.names.size()) != m.size)
    throw structural_error("names list does not match carrier size");
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::unital: return "unital";
    case Axiom::cycloid: return "cycloid";
    case Axiom::antisymmetric: return "antisymmetric";
  }
  return "?";
}

namespace {

// Violations for one fixed first index x, in scan order.
void scan_row(const MagmaTable& m, int x, std::vector<AxiomViolation>& out) {
  const int u = m.unit;
  if (!(m.op(x, x) == u && m.op(x, u) == u && m.op(u, x) == x))
    out.push_back({Axiom::unital, {x, -1, -1}});
  for (int y = 0; y < m.size; ++y) {
    for (int z = 0; z < m.size; ++z) {
      if (m.op(m.op(x, y), m.op(x, z)) != m.op(m.op(y, x), m.op(y, z)))
        out.push_back({Axiom::cycloid, {x, y, z}});
    }
    // each unordered pair once, first component smaller
    if (x < y && m.op(x, y) == u && m.op(y, x) == u)
      out.push_back({Axiom::antisymmetric, {x, y, -1}});
  }
}

AxiomReport merge_report(std::vector<std::vector<AxiomViolation>>& per_row) {
  AxiomReport r;
  r.unital = r.cycloid = r.antisymmetric = true;
  int counts[3] = {0, 0, 0};
  for (auto& vs : per_row) {
    for (const auto& v : vs) {
      int k = static_cast<int>(v.axiom);
      switch (v.axiom) {
        case Axiom::unital: r.unital = false; break;
        case Axiom::cycloid: r.cycloid = false; break;
        case Axiom::antisymmetric: r.antisymmetric = false; break;
      }
      if (counts[k] < kMaxViolationsPerAxiom) {
        r.violations.push_back(v);
        ++counts[k];
      }
    }
  }
  return r;
}

}  // namespace

AxiomReport check_axioms_serial(const MagmaTable& m) {
  check_structure(m);
  std::vector<std::vector<AxiomViolation>> per_row(m.size);
  for (int x = 0; x < m.size; ++x) scan_row(m, x, per_row[x]);
  return merge_report(per_row);
}

AxiomReport check_axioms(const MagmaTable& m) {
  check_structure(m);
  std::vector<std::vector<AxiomViolation>> per_row(m.size);
#pragma omp parallel for schedule(static)
  for (int x = 0; x < m.size; ++x) scan_row(m, x, per_row[x]);
  return merge_report(per_row);
}

bool is_pre_l_algebra(const MagmaTable& m) { return check_axioms(m).is_pre_l(); }
bool is_l_algebra(const MagmaTable& m) { return check_axioms(m).is_l(); }

bool PairRelation::is_reflexive() const {
  for (int a = 0; a < n; ++a)
    if (!contains(a, a)) return false;
  return true;
}

bool PairRelation::is_symmetric() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (contains(a, b) != contains(b, a)) return false;
  return true;
}

bool PairRelation::is_transitive() const {
  for (int a = 0; a < n; ++a) {
    Mask reach = 0;
    for_each_bit(rows[a], [&](int b) { reach |= rows[b]; });
    if ((reach & ~rows[a]) != 0) return false;
  }
  return true;
}

bool PairRelation::is_antisymmetric() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (contains(a, b) && contains(b, a)) return false;
  return true;
}

bool PairRelation::subset_of(const PairRelation& o) const {
  if (n != o.n) throw contract_error("relation carriers differ");
  for (int a = 0; a < n; ++a)
    if ((rows[a] & ~o.rows[a]) != 0) return false;
  return true;
}

std::vector<std::pair<int, int>> PairRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for_each_bit(rows[a], [&](int b) { out.emplace_back(a, b); });
  return out;
}

PairRelation diagonal_relation(int n) {
  PairRelation r(n);
  for (int a = 0; a < n; ++a) r.add(a, a);
  return r;
}

PairRelation natural_preorder(const MagmaTable& m) {
  if (!is_pre_l_algebra(m))
    throw contract_error("natural preorder is only defined on pre-L-algebras");
  PairRelation r(m.size);
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      if (m.op(a, b) == m.unit) r.add(a, b);
  return r;
}

bool ElementMap::is_surjective() const {
  Mask hit = 0;
  for (int a = 0; a < domain.size; ++a) hit |= bit(images[a]);
  return hit == full_mask(codomain.size);
}

ElementMap identity_map(const MagmaTable& m) {
  ElementMap f{m, m, {}};
  f.images.resize(m.size);
  for (int a = 0; a < m.size; ++a) f.images[a] = static_cast<std::uint8_t>(a);
  return f;
}

MorphismCheck is_morphism(const ElementMap& f) {
  const MagmaTable& d = f.domain;
  const MagmaTable& c = f.codomain;
  for (int a = 0; a < d.size; ++a)
    for (int b = 0; b < d.size; ++b)
      if (f.apply(d.op(a, b)) != c.op(f.apply(a), f.apply(b))) return {false, a, b};
  return {};
}

MagmaTable product(const MagmaTable& a, const MagmaTable& b) {
  check_structure(a);
  check_structure(b);
  if (a.size * b.size > kMaxCarrier)
    throw capacity_error("product carrier " + std::to_string(a.size * b.size) +
                         " exceeds the limit of " + std::to_string(kMaxCarrier));
  MagmaTable p;
  p.size = a.size * b.size;
  p.unit = a.unit * b.size + b.unit;
  p.table.resize(static_cast<std::size_t>(p.size) * p.size);
  for (int a1 = 0; a1 < a.size; ++a1)
    for (int b1 = 0; b1 < b.size; ++b1)
      for (int a2 = 0; a2 < a.size; ++a2)
        for (int b2 = 0; b2 < b.size; ++b2) {
          int lhs = a1 * b.size + b1;
          int rhs = a2 * b.size + b2;
          p.table[static_cast<std::size_t>(p.size) * lhs + rhs] =
              static_cast<std::uint8_t>(a.op(a1, a2) * b.size + b.op(b1, b2));
        }
  if (!a.names.empty() || !b.names.empty()) {
    p.names.reserve(p.size);
    for (int a1 = 0; a1 < a.size; ++a1)
      for (int b1 = 0; b1 < b.size; ++b1)
        p.names.push_back("(" + a.name(a1) + "," + b.name(b1) + ")");
  }
  return p;
}

bool is_subalgebra(const MagmaTable& m, Mask s) {
  if ((s & ~full_mask(m.size)) != 0) throw structural_error("subset outside carrier");
  if (!contains(s, m.unit)) return false;
  bool closed = true;
  for_each_bit(s, [&](int a) {
    for_each_bit(s, [&](int b) {
      if (!contains(s, m.op(a, b))) closed = false;
    });
  });
  return closed;
}

Subalgebra subalgebra_table(const MagmaTable& m, Mask s) {
  if (!is_subalgebra(m, s)) throw contract_error("subset is not a subalgebra");
  Subalgebra sub;
  sub.elements = mask_to_indices(s);
  std::vector<int> pos(m.size, -1);
  for (int i = 0; i < static_cast<int>(sub.elements.size()); ++i) pos[sub.elements[i]] = i;
  MagmaTable& t = sub.table;
  t.size = static_cast<int>(sub.elements.size());
  t.unit = pos[m.unit];
  t.table.resize(static_cast<std::size_t>(t.size) * t.size);
  for (int i = 0; i < t.size; ++i)
    for (int j = 0; j < t.size; ++j)
      t.table[static_cast<std::size_t>(t.size) * i + j] =
          static_cast<std::uint8_t>(pos[m.op(sub.elements[i], sub.elements[j])]);
  if (!m.names.empty()) {
    for (int e : sub.elements) t.names.push_back(m.name(e));
  }
  return sub;
}

PairRelation kernel_pair(const ElementMap& f) {
  PairRelation r(f.domain.size);
  for (int a = 0; a < f.domain.size; ++a)
    for (int b = 0; b < f.domain.size; ++b)
      if (f.apply(a) == f.apply(b)) r.add(a, b);
  return r;
}

Mask kernel_subset(const ElementMap& f) {
  Mask k = 0;
  for (int a = 0; a < f.domain.size; ++a)
    if (f.apply(a) == f.codomain.unit) k |= bit(a);
  return k;
}

}  // namespace lalg
