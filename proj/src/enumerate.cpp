#include "lalg/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lalg {

const char* kind_name(AlgebraKind k) { return k == AlgebraKind::pre_l ? "pre-l" : "l"; }

namespace {

void require_canonical_bound(int n) {
  if (n > kCanonicalBound)
    throw capacity_error("carrier size " + std::to_string(n) +
                         " exceeds the canonicalization bound of " +
                         std::to_string(kCanonicalBound));
}

std::vector<std::uint8_t> transport(const MagmaTable& m, const std::vector<int>& perm) {
  const int n = m.size;
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<std::size_t>(n) * perm[a] + perm[b]] =
          static_cast<std::uint8_t>(perm[m.op(a, b)]);
  return out;
}

}  // namespace

CanonicalForm canonical_form(const MagmaTable& m) {
  check_structure(m);
  require_canonical_bound(m.size);
  std::vector<int> perm(m.size);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{transport(m, perm), perm[m.unit]};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint8_t> bytes = transport(m, perm);
    if (bytes < best.bytes) {
      best.bytes = std::move(bytes);
      best.unit = perm[m.unit];
    } else if (bytes == best.bytes && perm[m.unit] < best.unit) {
      best.unit = perm[m.unit];
    }
  }
  return best;
}

MagmaTable table_from_canonical(const CanonicalForm& c) {
  MagmaTable m;
  m.size = 1;
  while (m.size * m.size < static_cast<int>(c.bytes.size())) ++m.size;
  m.unit = c.unit;
  m.table = c.bytes;
  check_structure(m);
  return m;
}

std::optional<std::vector<int>> are_isomorphic(const MagmaTable& a, const MagmaTable& b) {
  check_structure(a);
  check_structure(b);
  if (a.size != b.size) return std::nullopt;
  require_canonical_bound(a.size);
  std::vector<int> perm(a.size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.unit] != b.unit) continue;
    bool ok = true;
    for (int x = 0; x < a.size && ok; ++x)
      for (int y = 0; y < a.size && ok; ++y)
        if (perm[a.op(x, y)] != b.op(perm[x], perm[y])) ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

constexpr std::uint8_t kUnset = 0xFF;

// Backtracking state: the unit is fixed at index n-1 (relabeling cannot
// lose classes since the unit is preserved by every isomorphism), the
// unit row/column and the diagonal are forced, and only cells (a,b)
// with a != b and neither equal to the unit remain free.
struct Search {
  int n;
  int unit;
  AlgebraKind kind;
  std::vector<std::uint8_t> cells;
  std::vector<int> free_cells;                    // flattened indices, row-major
  std::vector<std::array<int, 3>> triples;        // pairwise distinct, non-unit
  std::set<CanonicalForm>* sink = nullptr;

  explicit Search(int n_, AlgebraKind kind_) : n(n_), unit(n_ - 1), kind(kind_) {
    cells.assign(static_cast<std::size_t>(n) * n, kUnset);
    for (int x = 0; x < n; ++x) {
      cells[static_cast<std::size_t>(n) * x + x] = static_cast<std::uint8_t>(unit);
      cells[static_cast<std::size_t>(n) * x + unit] = static_cast<std::uint8_t>(unit);
      cells[static_cast<std::size_t>(n) * unit + x] = static_cast<std::uint8_t>(x);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && a != unit && b != unit) free_cells.push_back(n * a + b);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (x != y && y != z && x != z && x != unit && y != unit && z != unit)
            triples.push_back({x, y, z});
  }

  int at(int a, int b) const { return cells[static_cast<std::size_t>(n) * a + b]; }

  // The cycloid law on every triple whose lookups are all decided.
  // Triples mixing in the unit or repeating a variable hold in any
  // extension of the forced cells, so only the stored ones are scanned.
  bool decided_prefix_ok() const {
    for (const auto& t : triples) {
      int xy = at(t[0], t[1]);
      int xz = at(t[0], t[2]);
      int yx = at(t[1], t[0]);
      int yz = at(t[1], t[2]);
      if (xy == kUnset || xz == kUnset || yx == kUnset || yz == kUnset) continue;
      int lhs = at(xy, xz);
      int rhs = at(yx, yz);
      if (lhs == kUnset || rhs == kUnset) continue;
      if (lhs != rhs) return false;
    }
    return true;
  }

  bool antisymmetric_leaf() const {
    for (int a = 0; a < unit; ++a)
      for (int b = a + 1; b < unit; ++b)
        if (at(a, b) == unit && at(b, a) == unit) return false;
    return true;
  }

  void emit_leaf() {
    if (kind == AlgebraKind::l && !antisymmetric_leaf()) return;
    MagmaTable m;
    m.size = n;
    m.unit = unit;
    m.table = cells;
    sink->insert(canonical_form(m));
  }

  void run(std::size_t depth) {
    if (depth == free_cells.size()) {
      emit_leaf();
      return;
    }
    int cell = free_cells[depth];
    for (int v = 0; v < n; ++v) {
      cells[cell] = static_cast<std::uint8_t>(v);
      if (decided_prefix_ok()) run(depth + 1);
    }
    cells[cell] = kUnset;
  }
};

void require_enum_bound(int n, AlgebraKind kind) {
  int bound = kind == AlgebraKind::pre_l ? kEnumBoundPreL : kEnumBoundL;
  if (n < 1) throw capacity_error("order must be positive");
  if (n > bound)
    throw capacity_error("order " + std::to_string(n) + " exceeds the " +
                         kind_name(kind) + " enumeration bound of " + std::to_string(bound));
}

std::vector<MagmaTable> emit_sorted(const std::set<CanonicalForm>& seen) {
  std::vector<MagmaTable> out;
  out.reserve(seen.size());
  for (const auto& c : seen) out.push_back(table_from_canonical(c));
  return out;
}

}  // namespace

std::vector<MagmaTable> enumerate_algebras_serial(int n, AlgebraKind kind) {
  require_enum_bound(n, kind);
  std::set<CanonicalForm> seen;
  Search s(n, kind);
  s.sink = &seen;
  s.run(0);
  return emit_sorted(seen);
}

std::vector<MagmaTable> enumerate_algebras(int n, AlgebraKind kind) {
  require_enum_bound(n, kind);
  Search proto(n, kind);
  if (proto.free_cells.size() < 2) return enumerate_algebras_serial(n, kind);

  // Split at the first two free cells into independent subtrees.
  std::vector<std::pair<int, int>> prefixes;
  for (int v0 = 0; v0 < n; ++v0) {
    proto.cells[proto.free_cells[0]] = static_cast<std::uint8_t>(v0);
    if (!proto.decided_prefix_ok()) continue;
    for (int v1 = 0; v1 < n; ++v1) {
      proto.cells[proto.free_cells[1]] = static_cast<std::uint8_t>(v1);
      if (proto.decided_prefix_ok()) prefixes.emplace_back(v0, v1);
    }
    proto.cells[proto.free_cells[1]] = kUnset;
  }
  proto.cells[proto.free_cells[0]] = kUnset;

  std::set<CanonicalForm> seen;
  const int total = static_cast<int>(prefixes.size());
#pragma omp parallel
  {
    std::set<CanonicalForm> local;
#pragma omp for schedule(dynamic) nowait
    for (int t = 0; t < total; ++t) {
      Search s(n, kind);
      s.sink = &local;
      s.cells[s.free_cells[0]] = static_cast<std::uint8_t>(prefixes[t].first);
      s.cells[s.free_cells[1]] = static_cast<std::uint8_t>(prefixes[t].second);
      s.run(2);
    }
#pragma omp critical
    seen.merge(local);
  }
  return emit_sorted(seen);
}

}  // namespace lalg
