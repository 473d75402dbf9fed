#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lalg::oracle {

bool oracle_unital(const MagmaTable& m) {
  for (int x = 0; x < m.size; ++x)
    if (m.op(x, x) != m.unit || m.op(x, m.unit) != m.unit || m.op(m.unit, x) != x)
      return false;
  return true;
}

bool oracle_cycloid(const MagmaTable& m) {
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y)
      for (int z = 0; z < m.size; ++z)
        if (m.op(m.op(x, y), m.op(x, z)) != m.op(m.op(y, x), m.op(y, z))) return false;
  return true;
}

bool oracle_antisymmetric(const MagmaTable& m) {
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y)
      if (x != y && m.op(x, y) == m.unit && m.op(y, x) == m.unit) return false;
  return true;
}

bool oracle_is_kind(const MagmaTable& m, AlgebraKind kind) {
  if (!oracle_unital(m) || !oracle_cycloid(m)) return false;
  return kind == AlgebraKind::pre_l || oracle_antisymmetric(m);
}

bool oracle_isomorphic(const MagmaTable& a, const MagmaTable& b) {
  if (a.size != b.size) return false;
  std::vector<int> perm(a.size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.unit] != b.unit) continue;
    bool ok = true;
    for (int x = 0; x < a.size && ok; ++x)
      for (int y = 0; y < a.size && ok; ++y)
        if (perm[a.op(x, y)] != b.op(perm[x], perm[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<MagmaTable> naive_enumerate(int n, AlgebraKind kind) {
  std::vector<MagmaTable> reps;
  MagmaTable m;
  m.size = n;
  m.table.assign(static_cast<std::size_t>(n) * n, 0);
  const std::size_t cells = m.table.size();
  for (int unit = 0; unit < n; ++unit) {
    m.unit = unit;
    std::fill(m.table.begin(), m.table.end(), 0);
    for (;;) {
      if (oracle_is_kind(m, kind)) {
        bool fresh = true;
        for (const auto& r : reps)
          if (oracle_isomorphic(m, r)) { fresh = false; break; }
        if (fresh) reps.push_back(m);
      }
      // odometer over all tables
      std::size_t i = 0;
      while (i < cells && m.table[i] == n - 1) m.table[i++] = 0;
      if (i == cells) break;
      ++m.table[i];
    }
  }
  return reps;
}

const std::vector<MagmaTable>& universe(int n, AlgebraKind kind) {
  static std::map<std::pair<int, int>, std::vector<MagmaTable>> cache;
  auto key = std::make_pair(n, static_cast<int>(kind));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_algebras(n, kind)).first;
  return it->second;
}

std::vector<const MagmaTable*> universe_up_to(int n, AlgebraKind kind) {
  std::vector<const MagmaTable*> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& m : universe(k, kind)) out.push_back(&m);
  return out;
}

}  // namespace lalg::oracle
