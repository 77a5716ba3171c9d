// Benchmark comparing the serial reference implementations against the
// OpenMP kernels on generated corpora.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lgg/gabriel.hpp"
#include "lgg/generators.hpp"
#include "lgg/verifier.hpp"

using namespace lgg;

namespace {

double seconds(auto fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

double median3(auto fn) {
  double a = seconds(fn), b = seconds(fn), c = seconds(fn);
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_n = 65536;
  if (argc > 1) max_n = std::stoull(argv[1]);
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  std::printf("%-22s %10s %12s %12s %8s\n", "case", "n", "serial[s]", "parallel[s]", "speedup");
  for (std::size_t n = 4096; n <= max_n; n *= 4) {
    PointSet pts = gen_random_points(n, 42);

    GeometricGraph fast_g = gabriel_graph_fast(pts);
    double t_fast = median3([&] { gabriel_graph_fast(pts); });
    if (n <= 4096) {
      double t_ref = median3([&] { gabriel_graph(pts); });
      std::printf("%-22s %10zu %12.4f %12.4f %8.2f\n", "gabriel build", n, t_ref, t_fast, t_ref / t_fast);
    } else {
      std::printf("%-22s %10zu %12s %12.4f %8s\n", "gabriel build", n, "-", t_fast, "-");
    }

    double t_ser = median3([&] { verify_lgg_serial(fast_g); });
    double t_par = median3([&] { verify_lgg(fast_g); });
    std::printf("%-22s %10zu %12.4f %12.4f %8.2f\n", "verify gabriel", n, t_ser, t_par, t_ser / t_par);

    std::size_t side = 1;
    while ((side + 1) * (side + 1) <= n) ++side;
    GeometricGraph grid = gen_unit_distance_grid(side, side);
    double g_ser = median3([&] { verify_lgg_serial(grid); });
    double g_par = median3([&] { verify_lgg(grid); });
    std::printf("%-22s %10zu %12.4f %12.4f %8.2f\n", "verify unit grid", side * side, g_ser, g_par, g_ser / g_par);
  }
  return 0;
}
