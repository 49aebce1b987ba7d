#include "polarcut/pivot.hpp"

#include <cstdint>

namespace polarcut::kernels {

namespace {

void normalize_pivot_row(TableauView t, std::size_t row, std::size_t col) {
  const Rational inv = 1 / t.at(row, col);
  for (std::size_t c = 0; c < t.cols; ++c) {
    if (t.at(row, c) != 0) t.at(row, c) *= inv;
  }
  t.at(row, col) = 1;
}

void eliminate_row(TableauView t, std::size_t target, std::size_t row, std::size_t col) {
  if (target == row || t.at(target, col) == 0) return;
  const Rational factor = t.at(target, col);
  for (std::size_t c = 0; c < t.cols; ++c) {
    const Rational& p = t.at(row, c);
    if (p != 0) t.at(target, c) -= factor * p;
  }
}

}  // namespace

void pivot_serial(TableauView t, std::size_t row, std::size_t col) {
  normalize_pivot_row(t, row, col);
  for (std::size_t r = 0; r < t.rows; ++r) eliminate_row(t, r, row, col);
}

void pivot_parallel(TableauView t, std::size_t row, std::size_t col) {
  normalize_pivot_row(t, row, col);
  const auto rows = static_cast<std::int64_t>(t.rows);
  // Rows are disjoint; the pivot row is only read.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t r = 0; r < rows; ++r) eliminate_row(t, static_cast<std::size_t>(r), row, col);
}

void pivot(TableauView t, std::size_t row, std::size_t col, PivotKernel kernel) {
  switch (kernel) {
    case PivotKernel::Serial:
      pivot_serial(t, row, col);
      return;
    case PivotKernel::Parallel:
      pivot_parallel(t, row, col);
      return;
    case PivotKernel::Auto:
      if (t.rows * t.cols >= kParallelThreshold)
        pivot_parallel(t, row, col);
      else
        pivot_serial(t, row, col);
      return;
  }
}

}  // namespace polarcut::kernels
