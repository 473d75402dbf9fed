// Command-line workbench for finite pre-L- and L-algebras: axiom checks,
// ideals, congruences, quotients, the Galois connection between them,
// commutators, spectra, instance-level category checks, and enumeration
// of all algebras of a given order up to isomorphism.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lalg/catcheck.hpp"
#include "lalg/enumerate.hpp"
#include "lalg/ideals.hpp"
#include "lalg/io.hpp"
#include "lalg/lattice.hpp"
#include "lalg/paper_suite.hpp"

#ifndef LALG_FIXTURE_DIR
#define LALG_FIXTURE_DIR "fixtures"
#endif

namespace {

using lalg::Mask;
using nlohmann::json;

bool g_pretty = false;

void print_json(const json& j) { std::cout << j.dump(g_pretty ? 2 : -1) << "\n"; }

int default_max_order() {
  if (const char* env = std::getenv("LALG_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v >= 1 && v <= lalg::kMaxSuiteOrder) return v;
  }
  return 4;
}

// Accepts element names (when the table has them) or indices.
int parse_element(const lalg::MagmaTable& m, const std::string& tok) {
  for (int i = 0; i < static_cast<int>(m.names.size()); ++i)
    if (m.names[i] == tok) return i;
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos == tok.size() && v >= 0 && v < m.size) return v;
  } catch (...) {
  }
  throw lalg::lalg_error("unknown element '" + tok + "'");
}

Mask parse_subset(const lalg::MagmaTable& m, const std::string& csv) {
  Mask s = 0;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) s |= lalg::bit(parse_element(m, tok));
  return s;
}

json partition_json(const lalg::Partition& p) {
  json arr = json::array();
  for (auto l : p.label) arr.push_back(static_cast<int>(l));
  return arr;
}

lalg::Partition partition_from_csv(const lalg::MagmaTable& m, const std::string& csv) {
  lalg::Partition p;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) p.label.push_back(static_cast<std::uint8_t>(std::stoi(tok)));
  if (p.size() != m.size) throw lalg::lalg_error("class labels do not match the carrier");
  p.normalize();
  return p;
}

json axioms_json(const lalg::AxiomReport& r) {
  json j;
  j["unital"] = r.unital;
  j["cycloid"] = r.cycloid;
  j["antisymmetric"] = r.antisymmetric;
  j["pre_l_algebra"] = r.is_pre_l();
  j["l_algebra"] = r.is_l();
  json v = json::array();
  for (const auto& viol : r.violations) {
    json w = json::array();
    for (int e : viol.witness)
      if (e >= 0) w.push_back(e);
    v.push_back({{"axiom", lalg::axiom_name(viol.axiom)}, {"witness", w}});
  }
  j["violations"] = v;
  return j;
}

int cmd_check(const std::string& file) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  print_json(axioms_json(lalg::check_axioms(doc.algebra)));
  return 0;
}

int cmd_ideals(const std::string& file, const std::string& mode) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  auto ideals = lalg::all_ideals(doc.algebra, mode == "closure"
                                                  ? lalg::IdealEnumMode::closure
                                                  : lalg::IdealEnumMode::exhaustive);
  json out;
  out["count"] = ideals.size();
  json list = json::array();
  for (Mask s : ideals) list.push_back(lalg::subset_to_json(doc.algebra, s));
  out["ideals"] = list;
  print_json(out);
  return 0;
}

int cmd_congruences(const std::string& file) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  auto congs = lalg::all_congruences(doc.algebra);
  json out;
  out["count"] = congs.size();
  json list = json::array();
  for (const auto& c : congs) list.push_back(partition_json(c));
  out["congruences"] = list;
  print_json(out);
  return 0;
}

json quotient_json(const lalg::Quotient& q, const std::string& source) {
  json out;
  out["algebra"] = lalg::emit_algebra({q.table, source});
  json proj = json::array();
  for (auto v : q.projection.images) proj.push_back(static_cast<int>(v));
  out["projection"] = proj;
  return out;
}

int cmd_quotient(const std::string& file, const std::string& ideal_csv,
                 const std::string& classes_csv) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  lalg::Partition c;
  if (!ideal_csv.empty())
    c = lalg::psi(doc.algebra, parse_subset(doc.algebra, ideal_csv));
  else
    c = partition_from_csv(doc.algebra, classes_csv);
  print_json(quotient_json(lalg::quotient(doc.algebra, c), "quotient of " + doc.source));
  return 0;
}

int cmd_reflect(const std::string& file) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  print_json(quotient_json(lalg::reflect(doc.algebra), "reflection of " + doc.source));
  return 0;
}

int cmd_galois(const std::string& file) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  const lalg::MagmaTable& m = doc.algebra;
  auto ideals = lalg::all_ideals(m);
  auto congs = lalg::all_congruences(m);
  json out;
  json ideal_side = json::array();
  for (Mask i : ideals) {
    lalg::Partition c = lalg::psi(m, i);
    ideal_side.push_back({{"ideal", lalg::subset_to_json(m, i)},
                          {"psi", partition_json(c)},
                          {"phi_of_psi", lalg::subset_to_json(m, lalg::phi(m, c))}});
  }
  json cong_side = json::array();
  for (const auto& c : congs) {
    cong_side.push_back({{"congruence", partition_json(c)},
                         {"phi", lalg::subset_to_json(m, lalg::phi(m, c))},
                         {"smallest_l_congruence",
                          partition_json(lalg::smallest_l_congruence(m, c))}});
  }
  bool adjunction = true, phi_psi_id = true;
  for (const auto& c : congs) {
    Mask pc = lalg::phi(m, c);
    for (Mask i : ideals)
      if (((pc & ~i) == 0) != c.refines(lalg::psi(m, i))) adjunction = false;
  }
  for (Mask i : ideals)
    if (lalg::phi(m, lalg::psi(m, i)) != i) phi_psi_id = false;
  out["ideals"] = ideal_side;
  out["congruences"] = cong_side;
  out["laws"] = {{"adjunction", adjunction}, {"phi_psi_identity", phi_psi_id}};
  print_json(out);
  return 0;
}

int cmd_lattice(const std::string& file, bool congruences, bool dot) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  lalg::FiniteLattice lat;
  json elements = json::array();
  if (congruences) {
    lalg::CongruenceLattice cl = lalg::congruence_lattice(doc.algebra);
    lat = std::move(cl.lat);
    for (const auto& c : cl.congruences) elements.push_back(partition_json(c));
  } else {
    lalg::IdealLattice il = lalg::ideal_lattice(doc.algebra);
    lat = std::move(il.lat);
    for (Mask s : il.ideals) elements.push_back(lalg::subset_to_json(doc.algebra, s));
  }
  if (dot) {
    std::cout << lalg::emit_dot(lat, congruences ? "congruence_lattice" : "ideal_lattice");
    return 0;
  }
  lalg::DistributivityCheck dc = lalg::is_distributive(lat);
  json out;
  out["elements"] = elements;
  json covers = json::array();
  for (auto [a, b] : lat.covers()) covers.push_back({a, b});
  out["covers"] = covers;
  out["bottom"] = lat.bottom();
  out["top"] = lat.top();
  out["distributive"] = dc.ok;
  if (!dc.ok) out["violating_triple"] = {dc.a, dc.b, dc.c};
  print_json(out);
  return 0;
}

int cmd_commutator(const std::string& file, const std::string& i_csv, const std::string& j_csv) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  Mask i = parse_subset(doc.algebra, i_csv);
  Mask j = parse_subset(doc.algebra, j_csv);
  Mask k = lalg::commutator(doc.algebra, i, j);
  json out;
  out["i"] = lalg::subset_to_json(doc.algebra, i);
  out["j"] = lalg::subset_to_json(doc.algebra, j);
  out["commutator"] = lalg::subset_to_json(doc.algebra, k);
  out["equals_intersection"] = (k == (i & j));
  print_json(out);
  return 0;
}

int cmd_spectrum(const std::string& file, bool dot) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  lalg::SpectrumSpace sp = lalg::spectrum(doc.algebra);
  if (dot) {
    std::cout << lalg::emit_dot(sp, doc.algebra);
    return 0;
  }
  json out;
  json points = json::array();
  for (Mask p : sp.points) points.push_back(lalg::subset_to_json(doc.algebra, p));
  out["points"] = points;
  json opens = json::array();
  for (Mask o : sp.opens) {
    json pts = json::array();
    lalg::for_each_bit(o, [&](int p) { pts.push_back(p); });
    opens.push_back(pts);
  }
  out["opens"] = opens;
  out["open_of_ideal"] = sp.open_of_ideal;
  out["sober"] = lalg::is_sober(sp);
  out["anomalies"] = sp.anomalies;
  print_json(out);
  return 0;
}

int cmd_cat_check(const std::string& file, bool all, bool permutability, bool at_one,
                  bool cokernel, bool terms) {
  lalg::AlgebraDocument doc = lalg::load_algebra_file(file);
  const lalg::MagmaTable& m = doc.algebra;
  lalg::VerdictReport report;
  report.command = "cat-check";
  report.algebra = doc.source.empty() ? file : doc.source;
  auto t0 = std::chrono::steady_clock::now();

  if (all || terms) {
    lalg::TermCheck tc = lalg::check_subtractive_terms(m);
    report.checks.push_back({"subtractive-terms", tc.ok, tc.ok ? json{} : json{{"x", tc.x}}});
    lalg::RegularityCheck rc = lalg::check_one_regularity(m);
    report.checks.push_back(
        {"one-regularity", rc.ok, rc.ok ? json{} : json{{"pair", {rc.a, rc.b}}}});
  }
  if (all || permutability) {
    lalg::PermutabilityCheck pc = lalg::check_permutability(m);
    report.checks.push_back(
        {"permutability", pc.ok, pc.ok ? json{} : json{{"congruence_pair", {pc.r, pc.s}}}});
  }
  if (all || at_one) {
    lalg::PermutabilityCheck pc = lalg::check_permutability_at_one(m);
    report.checks.push_back(
        {"permutability-at-1", pc.ok, pc.ok ? json{} : json{{"congruence_pair", {pc.r, pc.s}}}});
  }
  if (all || cokernel) {
    // every projection onto an L-algebra quotient must be a cokernel
    bool ok = true;
    json witness = json::array();
    for (const auto& c : lalg::all_congruences(m)) {
      lalg::Quotient q = lalg::quotient(m, c);
      if (!lalg::is_l_algebra(q.table) || !lalg::is_l_algebra(m)) continue;
      if (!lalg::check_cokernel_factorization(q.projection)) {
        ok = false;
        witness.push_back(partition_json(c));
      }
    }
    report.checks.push_back({"cokernel-factorization", ok, ok ? json{} : witness});
  }
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  print_json(report.to_json());
  return report.all_ok() ? 0 : 1;
}

int cmd_enumerate(int n, const std::string& kind_str, const std::string& out_dir) {
  lalg::AlgebraKind kind =
      kind_str == "l" ? lalg::AlgebraKind::l : lalg::AlgebraKind::pre_l;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<lalg::MagmaTable> algebras = lalg::enumerate_algebras(n, kind);
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json manifest;
  manifest["order"] = n;
  manifest["kind"] = lalg::kind_name(kind);
  manifest["count"] = algebras.size();
  manifest["wall_ms"] = ms;
  manifest["note"] = "class counts are derived by this tool; the test suite cross-checks "
                     "them against a naive all-tables oracle for order <= 3";
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    json files = json::array();
    for (std::size_t i = 0; i < algebras.size(); ++i) {
      char name[64];
      std::snprintf(name, sizeof(name), "%s-%d-%03zu.json", lalg::kind_name(kind), n, i);
      std::ofstream out(std::filesystem::path(out_dir) / name);
      std::string source = std::string(lalg::kind_name(kind)) + ":" + std::to_string(n) + ":" +
                           std::to_string(i);
      out << lalg::emit_algebra({algebras[i], source}).dump(2) << "\n";
      files.push_back(name);
    }
    std::ofstream mf(std::filesystem::path(out_dir) / "manifest.json");
    json full = manifest;
    full["files"] = files;
    mf << full.dump(2) << "\n";
  }
  print_json(manifest);
  return 0;
}

int cmd_paper_suite(const std::string& fixtures, int max_order) {
  lalg::PaperSuiteOptions opts;
  opts.fixture_dir = fixtures;
  opts.max_order = max_order;
  lalg::VerdictReport report = lalg::run_paper_suite(opts);
  print_json(report.to_json());
  return report.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite pre-L-algebras and L-algebras"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent JSON output");

  std::string file, mode = "exhaustive", ideal_csv, classes_csv, i_csv, j_csv;
  std::string kind = "pre-l", out_dir, fixtures = LALG_FIXTURE_DIR;
  bool lat_congruences = false, lat_ideals = false, dot = false;
  bool cc_all = false, cc_perm = false, cc_at1 = false, cc_cok = false, cc_terms = false;
  int enum_n = 1, max_order = default_max_order();

  auto* check = app.add_subcommand("check", "axiom verdict for an algebra document");
  check->add_option("file", file)->required();

  auto* ideals = app.add_subcommand("ideals", "list every ideal");
  ideals->add_option("file", file)->required();
  ideals->add_option("--mode", mode, "exhaustive|closure")
      ->check(CLI::IsMember({"exhaustive", "closure"}));

  auto* congruences = app.add_subcommand("congruences", "list every congruence");
  congruences->add_option("file", file)->required();

  auto* quot = app.add_subcommand("quotient", "quotient by a congruence");
  quot->add_option("file", file)->required();
  auto* by_ideal = quot->add_option("--ideal", ideal_csv, "quotient by psi(ideal)");
  quot->add_option("--classes", classes_csv, "explicit class labels")->excludes(by_ideal);

  auto* refl = app.add_subcommand("reflect", "universal L-algebra quotient");
  refl->add_option("file", file)->required();

  auto* galois = app.add_subcommand("galois", "the ideal/congruence Galois connection");
  galois->add_option("file", file)->required();

  auto* lattice = app.add_subcommand("lattice", "ideal or congruence lattice");
  lattice->add_option("file", file)->required();
  lattice->add_flag("--ideals", lat_ideals, "ideal lattice (default)");
  lattice->add_flag("--congruences", lat_congruences, "congruence lattice");
  lattice->add_flag("--dot", dot, "emit a DOT Hasse diagram");

  auto* comm = app.add_subcommand("commutator", "commutator of two ideals");
  comm->add_option("file", file)->required();
  comm->add_option("-i", i_csv, "first ideal, comma-separated elements")->required();
  comm->add_option("-j", j_csv, "second ideal, comma-separated elements")->required();

  auto* spec = app.add_subcommand("spectrum", "prime spectrum and its opens");
  spec->add_option("file", file)->required();
  spec->add_flag("--dot", dot, "emit the specialization order as DOT");

  auto* cat = app.add_subcommand("cat-check", "instance-level category checks");
  cat->add_option("file", file)->required();
  cat->add_flag("--all", cc_all);
  cat->add_flag("--permutability", cc_perm);
  cat->add_flag("--at-one", cc_at1);
  cat->add_flag("--cokernel", cc_cok);
  cat->add_flag("--terms", cc_terms);

  auto* enumerate = app.add_subcommand("enumerate", "all algebras of an order, one per class");
  enumerate->add_option("-n", enum_n, "carrier size")->required();
  enumerate->add_option("--kind", kind, "pre-l|l")->check(CLI::IsMember({"pre-l", "l"}));
  enumerate->add_option("--out", out_dir, "write one document per class plus a manifest");

  auto* suite = app.add_subcommand("paper-suite", "re-derive every golden fixture fact");
  suite->add_option("--fixtures", fixtures, "fixture directory");
  suite->add_option("--max-order", max_order, "bound for exhaustive sweeps (1..5)")
      ->check(CLI::Range(1, lalg::kMaxSuiteOrder));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(file);
    if (*ideals) return cmd_ideals(file, mode);
    if (*congruences) return cmd_congruences(file);
    if (*quot) {
      if (ideal_csv.empty() && classes_csv.empty())
        throw lalg::lalg_error("quotient needs --ideal or --classes");
      return cmd_quotient(file, ideal_csv, classes_csv);
    }
    if (*refl) return cmd_reflect(file);
    if (*galois) return cmd_galois(file);
    if (*lattice) return cmd_lattice(file, lat_congruences && !lat_ideals, dot);
    if (*comm) return cmd_commutator(file, i_csv, j_csv);
    if (*spec) return cmd_spectrum(file, dot);
    if (*cat) {
      if (!(cc_all || cc_perm || cc_at1 || cc_cok || cc_terms)) cc_all = true;
      return cmd_cat_check(file, cc_all, cc_perm, cc_at1, cc_cok, cc_terms);
    }
    if (*enumerate) return cmd_enumerate(enum_n, kind, out_dir);
    if (*suite) return cmd_paper_suite(fixtures, max_order);
  } catch (const lalg::parse_error& e) {
    std::cerr << json{{"error", "parse"}, {"code", lalg::parse_code_name(e.code)},
                      {"message", e.what()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const lalg::lalg_error& e) {
    std::cerr << json{{"error", "failure"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
