// Serial reference vs OpenMP kernel timings.
//   bench [--quick] [--threads N]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>

#include "alphawidth/base_params.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/kernels.hpp"
#include "alphawidth/modulators.hpp"
#include "alphawidth/mwis.hpp"

using namespace alphawidth;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* kernel, const char* size, double serial, double parallel, bool agree) {
  std::printf("%-22s %-14s %10.4f %10.4f %8.2fx  %s\n", kernel, size, serial, parallel, serial / parallel,
              agree ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  int threads = omp_get_max_threads();
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--quick")) {
      quick = true;
    } else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: bench [--quick] [--threads N]\n");
      return 2;
    }
  }
  const int reps = quick ? 1 : 3;
  bool all_agree = true;
  std::printf("threads: %d\n", threads);
  std::printf("%-22s %-14s %10s %10s %9s  %s\n", "kernel", "size", "serial s", "omp s", "speedup", "result");

  for (int n : quick ? std::vector<int>{16} : std::vector<int>{20, 22, 24}) {
    auto g = random_graph(n, 0.3, 7);
    SubsetAlphaTable a, b;
    double ts = seconds([&] { a = SubsetAlphaTable::build_serial(g); }, reps);
    double tp = seconds([&] { b = SubsetAlphaTable::build_parallel(g, threads); }, reps);
    bool same = a.values() == b.values();
    all_agree = all_agree && same;
    row("subset alpha table", ("n=" + std::to_string(n)).c_str(), ts, tp, same);
  }

  for (auto [n, a, b] : quick ? std::vector<std::tuple<int, int, int>>{{5, 3, 3}}
                              : std::vector<std::tuple<int, int, int>>{{6, 3, 3}, {7, 3, 4}, {7, 4, 3}}) {
    bool x = false, y = false;
    double ts = seconds([&] { x = ramsey_property_check(n, a, b); }, reps);
    double tp = seconds([&] { y = ramsey_property_check_parallel(n, a, b, threads); }, reps);
    all_agree = all_agree && x == y;
    char size[32];
    std::snprintf(size, sizeof size, "R(%d,%d) n=%d", a, b, n);
    row("ramsey property", size, ts, tp, x == y);
  }

  for (int n : quick ? std::vector<int>{12} : std::vector<int>{16, 18, 20}) {
    auto g = random_graph(n, 0.35, 11);
    std::vector<std::int64_t> w(n);
    for (int v = 0; v < n; ++v) w[v] = (v * 37 + 11) % 101;
    WeightedGraph wg(g, w);
    auto oct = find_oct_with_bounded_alpha(g, n);
    const int k = independence_number(g.induced(*oct));
    MwisResult x, y;
    double ts = seconds([&] { x = mwis_via_oct(wg, k); }, reps);
    double tp = seconds([&] { y = mwis_via_oct_parallel(wg, k, threads); }, reps);
    bool same = x.weight == y.weight && x.set == y.set;
    all_agree = all_agree && same;
    row("mwis via oct", ("n=" + std::to_string(n)).c_str(), ts, tp, same);
  }
  return all_agree ? 0 : 1;
}
