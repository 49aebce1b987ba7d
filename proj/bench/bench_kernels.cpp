// Times the OpenMP kernels against their serial references and checks that
// both produce identical results.

#include "polarcut/lp.hpp"
#include "polarcut/pivot.hpp"
#include "polarcut/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <omp.h>
#include <random>

using namespace polarcut;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(22) << name << std::right << std::fixed << std::setprecision(4)
            << " serial=" << serial << "s parallel=" << parallel << "s speedup=" << std::setprecision(2)
            << serial / parallel << (same ? "" : " MISMATCH") << std::endl;
}

std::vector<Rational> random_tableau(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> cells(rows * cols);
  for (auto& c : cells) c = Rational(num(rng)) / den(rng);
  return cells;
}

// Runs `steps` pivots along the diagonal, skipping zero pivots.
void pivot_sequence(std::vector<Rational>& cells, std::size_t rows, std::size_t cols, std::size_t steps,
                    void (*kernel)(kernels::TableauView, std::size_t, std::size_t)) {
  kernels::TableauView t{cells, rows, cols};
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t r = s % rows;
    for (std::size_t c = s % cols; c < cols; ++c)
      if (t.at(r, c) != 0) {
        kernel(t, r, c);
        break;
      }
  }
}

LinearProgram random_program(std::mt19937& rng, std::size_t vars, std::size_t rows) {
  std::uniform_int_distribution<int> coef(-5, 5);
  LinearProgram lp(vars, Sense::Maximize);
  Vector obj(vars);
  for (auto& v : obj) v = coef(rng);
  lp.set_objective(obj);
  for (std::size_t i = 0; i < rows; ++i) {
    Vector a(vars);
    for (auto& v : a) v = coef(rng);
    lp.add_row(a, Relation::LessEqual, 10 + coef(rng));
  }
  lp.set_nonnegative(0, vars);
  return lp;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 60;
  std::cout << "threads=" << omp_get_max_threads() << " tableau=" << size << "x" << 2 * size << std::endl;
  std::mt19937 rng(42);
  bool all_same = true;

  {
    const auto base = random_tableau(rng, size, 2 * size);
    auto a = base, b = base;
    const std::size_t steps = size / 4;
    const double ts = seconds([&] { pivot_sequence(a, size, 2 * size, steps, kernels::pivot_serial); });
    const double tp = seconds([&] { pivot_sequence(b, size, 2 * size, steps, kernels::pivot_parallel); });
    all_same &= a == b;
    report("pivot", ts, tp, a == b);
  }
  {
    const LinearProgram lp = random_program(rng, size / 3, size / 2);
    LpOutcome a, b;
    const double ts = seconds([&] { a = solve(lp, {.kernel = kernels::PivotKernel::Serial}); });
    const double tp = seconds([&] { b = solve(lp, {.kernel = kernels::PivotKernel::Parallel}); });
    const bool same = a.status == b.status && a.primal == b.primal && a.dual == b.dual;
    all_same &= same;
    report("simplex", ts, tp, same);
  }
  {
    const LinearProgram lp = random_program(rng, 10, 8);
    std::vector<Vector> a, b;
    const double ts = seconds([&] { a = enumerate_vertices_serial(lp); });
    const double tp = seconds([&] { b = enumerate_vertices(lp); });
    all_same &= a == b;
    report("vertex enumeration", ts, tp, a == b);
    std::cout << "vertices=" << a.size() << std::endl;
  }
  return all_same ? 0 : 1;
}
