// Serial against OpenMP enumeration of ideals and subcoalgebras.
// Usage: enumeration_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "dorroh/gallery.hpp"
#include "dorroh/ideals.hpp"
#include "dorroh/parallel.hpp"
#include "dorroh/subcoalgebras.hpp"

using namespace dorroh;

namespace {

constexpr std::uint64_t kBudget = ~std::uint64_t{0};

// k ⋉ k^n with the diagonal product e_i e_i = e_i, and its dual coalgebra pair.
AlgebraPair diagonal_unitization(FieldSpec f, std::size_t n) {
  Algebra i(f, default_labels("x", n));
  for (std::size_t k = 0; k < n; ++k) i.mult(k, k * n + k) = f.one();
  return AlgebraPair{ground_field_hopf(f, "1").alg, i, scalar_action(f, n)};
}

CoalgebraPair grouplike_counitization(FieldSpec f, std::size_t n) {
  Coalgebra p = dual(diagonal_unitization(f, n).i);
  return CoalgebraPair{ground_field_hopf(f, "1").coalg, p, scalar_coaction(f, n)};
}

double seconds(int repeats, const std::function<std::size_t()>& run, std::size_t& count) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) count = run();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / repeats;
}

void row(const std::string& label, int repeats, const std::function<std::size_t(bool)>& run) {
  std::size_t serial_count = 0, parallel_count = 0;
  double serial = seconds(repeats, [&] { return run(false); }, serial_count);
  double parallel = seconds(repeats, [&] { return run(true); }, parallel_count);
  std::printf("%-34s %8zu %10.4f %10.4f %7.2fx %s\n", label.c_str(), serial_count, serial, parallel,
              serial / parallel, serial_count == parallel_count ? "" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3);
  std::printf("threads: %d, repeats: %d\n", worker_threads(), repeats);
  std::printf("%-34s %8s %10s %10s %8s\n", "case", "found", "serial s", "omp s", "speedup");

  AlgebraExtension sw = extend_algebra(gallery("sweedler", f3).algebra_pair());
  row("ideals, sweedler split, GF(3)^4", repeats,
      [&](bool par) { return enumerate_ideals(sw, kBudget, par).size(); });
  CoalgebraExtension swc = extend_coalgebra(gallery("sweedler", f3).coalgebra_pair());
  row("subcoalgebras, sweedler, GF(3)^4", repeats,
      [&](bool par) { return enumerate_subcoalgebras(swc, kBudget, par).size(); });

  for (std::size_t n : {4, 5}) {
    AlgebraExtension a = extend_algebra(diagonal_unitization(f2, n));
    row("ideals, unitization of k^" + std::to_string(n) + ", GF(2)^" + std::to_string(n + 1), repeats,
        [&](bool par) { return enumerate_ideals(a, kBudget, par).size(); });
    CoalgebraExtension c = extend_coalgebra(grouplike_counitization(f2, n));
    row("subcoalgebras, dual, GF(2)^" + std::to_string(n + 1), repeats,
        [&](bool par) { return enumerate_subcoalgebras(c, kBudget, par).size(); });
  }
  return 0;
}
