// Compares the serial reference counter with the partitioned OpenMP kernel
// on progressively larger enumerations and reports the speedup.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "weilbounds/counter.hpp"

using namespace weilbounds;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

VarietySpec fermat_cubic(std::uint64_t p) {
  VarietySpec v;
  v.field = make_field(p, 1);
  v.ambient = Ambient::projective;
  v.ambient_dim = 2;
  v.forms.push_back(MPoly::parse("x0^3 + x1^3 + x2^3", 3, p));
  v.declared_dim = 1;
  v.flags.irreducible = true;
  v.flags.nonsingular = true;
  v.flags.complete_intersection = true;
  return v;
}

void run_case(const char* label, const VarietySpec& v, unsigned r,
              unsigned partitions) {
  Caps caps;
  caps.point_cap = 2'000'000'000ull;
  caps.field_cap = std::uint64_t{1} << 24;

  auto t0 = std::chrono::steady_clock::now();
  const mpz_class serial = count_points_serial(v, r, caps);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const mpz_class parallel = count_points(v, r, partitions, caps);
  const double t_parallel = seconds_since(t0);

  std::printf("%-28s N=%-10s serial %8.3fs  parallel(%u) %8.3fs  speedup %.2fx  %s\n",
              label, serial.get_str().c_str(), t_serial, partitions,
              t_parallel, t_serial / (t_parallel > 0 ? t_parallel : 1e-9),
              serial == parallel ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  unsigned partitions = 4;
#ifdef _OPENMP
  partitions = static_cast<unsigned>(omp_get_max_threads()) * 4;
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; partitions run on one thread\n");
#endif

  run_case("fermat cubic / F_7, r=2", fermat_cubic(7), 2, partitions);
  run_case("fermat cubic / F_7, r=3", fermat_cubic(7), 3, partitions);
  run_case("fermat cubic / F_127, r=1", fermat_cubic(127), 1, partitions);
  run_case("fermat cubic / F_1009, r=1", fermat_cubic(1009), 1, partitions);
  run_case("fermat cubic / F_4093, r=1", fermat_cubic(4093), 1, partitions);
  return 0;
}
