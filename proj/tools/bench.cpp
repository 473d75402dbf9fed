// Times each OpenMP kernel against its serial reference on fixed
// workloads and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lalg/catcheck.hpp"
#include "lalg/enumerate.hpp"
#include "lalg/ideals.hpp"
#include "lalg/lattice.hpp"

using namespace lalg;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock_type::now();
    fn();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-22s %10.2f ms %10.2f ms %8.2fx   %s\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "results equal" : "RESULTS DIFFER");
}

MagmaTable golden_table1() {
  return make_magma(4, 3,
                    {{3, 1, 2, 3}, {3, 3, 0, 3}, {3, 0, 3, 3}, {0, 1, 2, 3}},
                    {"x", "y", "z", "1"});
}

MagmaTable golden_table2() {
  return make_magma(3, 2, {{2, 2, 2}, {2, 2, 2}, {0, 1, 2}}, {"a", "b", "1"});
}

// Boolean lattice on k atoms, built directly as an order matrix.
FiniteLattice boolean_lattice(int k) {
  int n = 1 << k;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = (a & ~b) == 0;
  return lattice_from_order(leq);
}

}  // namespace

int main(int argc, char** argv) {
  int enum_order = 5;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--enum-order" && i + 1 < argc) enum_order = std::atoi(argv[++i]);
  }

#ifdef _OPENMP
  std::printf("openmp enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("openmp disabled; both columns run serially\n");
#endif
  std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    // 64-element product algebra, repeated full triple scans
    MagmaTable cube = product(product(golden_table1(), golden_table1()), golden_table1());
    AxiomReport a, b;
    double s = time_best_of(3, [&] {
      for (int r = 0; r < 40; ++r) a = check_axioms_serial(cube);
    });
    double p = time_best_of(3, [&] {
      for (int r = 0; r < 40; ++r) b = check_axioms(cube);
    });
    report("axiom scan (n=64)", s, p,
           a.unital == b.unital && a.cycloid == b.cycloid &&
               a.antisymmetric == b.antisymmetric && a.violations.size() == b.violations.size());
  }

  {
    // 9-element pre-L-algebra: Bell(9) = 21147 candidate partitions
    MagmaTable nine = product(golden_table2(), golden_table2());
    std::vector<Partition> a, b;
    double s = time_best_of(3, [&] { a = all_congruences_serial(nine); });
    double p = time_best_of(3, [&] { b = all_congruences(nine); });
    report("congruences (n=9)", s, p, a == b);
  }

  {
    std::vector<MagmaTable> a, b;
    double s = time_best_of(1, [&] { a = enumerate_algebras_serial(enum_order, AlgebraKind::pre_l); });
    double p = time_best_of(1, [&] { b = enumerate_algebras(enum_order, AlgebraKind::pre_l); });
    char label[64];
    std::snprintf(label, sizeof(label), "enumerate pre-L n=%d", enum_order);
    report(label, s, p, a == b);
  }

  {
    FiniteLattice big = boolean_lattice(8);  // 256 elements, 16.7M triples
    DistributivityCheck a, b;
    double s = time_best_of(3, [&] { a = is_distributive_serial(big); });
    double p = time_best_of(3, [&] { b = is_distributive(big); });
    report("distributivity (2^8)", s, p, a.ok == b.ok && a.a == b.a);
  }

  {
    MagmaTable nine = product(golden_table2(), golden_table2());
    PermutabilityCheck a, b;
    double s = time_best_of(3, [&] {
      for (int r = 0; r < 20; ++r) a = check_permutability_serial(nine);
    });
    double p = time_best_of(3, [&] {
      for (int r = 0; r < 20; ++r) b = check_permutability(nine);
    });
    report("permutability (n=9)", s, p, a.ok == b.ok && a.r == b.r && a.s == b.s);
  }

  return 0;
}
