// Compares the serial reference enumeration against the OpenMP-sharded
// one on a larger public project instance, and checks they agree.

#include <chrono>
#include <iostream>

#include "seqvcg/oracle.hpp"
#include "seqvcg/scenarios.hpp"

using namespace seqvcg;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int points = argc > 1 ? std::atoi(argv[1]) : 24;
  PublicProjectParams params;
  params.n = 4;
  params.cost = 300;
  const Mechanism mech = Mechanism::clarke(build_public_project(params));

  std::vector<TypeValue> grid_points;
  for (int k = 0; k < points; ++k)
    grid_points.push_back(TypeValue::scalar(
        Rational(300) * Rational(k) / Rational(points - 1)));
  const GridSpec grid{Grids(4, grid_points)};
  const SequentialStrategy strategy = public_project_strategy(params);
  const Ordering ordering = Ordering::identity(4);
  const unsigned long long cap = 1'000'000'000ULL;

  std::cout << "profiles: " << grid.profile_count(cap)
            << ", deviations per profile: " << points << "\n";

  auto t0 = std::chrono::steady_clock::now();
  const DominanceVerdict serial = exhaustive_dominance(
      mech, strategy, 1, ordering, grid, cap, ExecMode::Serial);
  const double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const DominanceVerdict parallel = exhaustive_dominance(
      mech, strategy, 1, ordering, grid, cap, ExecMode::Parallel);
  const double parallel_s = seconds_since(t0);

  std::cout << "serial:   " << serial_s << " s\n";
  std::cout << "parallel: " << parallel_s << " s\n";
  if (parallel_s > 0)
    std::cout << "speedup:  " << serial_s / parallel_s << "x\n";

  if (serial.kind != parallel.kind) {
    std::cerr << "verdicts disagree\n";
    return 1;
  }
  std::cout << "verdicts agree: "
            << (serial.dominant() ? "dominant" : "not dominant") << "\n";
  return 0;
}
