#ifndef LALG_IO_HPP
#define LALG_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lalg/algebra.hpp"
#include "lalg/lattice.hpp"

namespace lalg {

// The on-disk form of an algebra: the table plus optional display names
// and a free-form source tag.
struct AlgebraDocument {
  MagmaTable algebra;
  std::string source;

  bool operator==(const AlgebraDocument& o) const {
    return algebra == o.algebra && algebra.names == o.algebra.names && source == o.source;
  }
};

// Parses {"size": n, "unit": u, "table": [[...],...], "names": [...],
// "source": "..."}; throws parse_error with a distinct code per defect.
AlgebraDocument parse_algebra(const std::string& text);
AlgebraDocument load_algebra_file(const std::string& path);

nlohmann::ordered_json emit_algebra(const AlgebraDocument& doc);

nlohmann::json subset_to_json(const MagmaTable& m, Mask s);
Mask subset_from_json(const MagmaTable& m, const nlohmann::json& j);

// DOT digraph of the Hasse diagram (cover edges, bottom to top).
std::string emit_dot(const FiniteLattice& l, const std::string& graph_name = "lattice");

// DOT digraph of the specialization order on spectrum points (cover
// edges of containment, labeled by the owning algebra's names).
std::string emit_dot(const SpectrumSpace& s, const MagmaTable& m);

struct CheckResult {
  std::string name;
  bool ok = false;
  nlohmann::json witness;  // at least one witness whenever !ok
};

struct VerdictReport {
  std::string command;
  std::string algebra;  // source reference
  std::vector<CheckResult> checks;
  double timing_ms = 0.0;

  bool all_ok() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace lalg

#endif
