#pragma once

#include "polarcut/rational.hpp"

#include <cstddef>
#include <span>

namespace polarcut::kernels {

/// Non-owning view of a dense row-major tableau.
struct TableauView {
  std::span<Rational> cells;
  std::size_t rows = 0;
  std::size_t cols = 0;

  Rational& at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
};

enum class PivotKernel {
  Auto,      ///< parallel above kParallelThreshold cells, serial below
  Serial,    ///< reference implementation
  Parallel,  ///< OpenMP over eliminated rows
};

/// Tableaux smaller than this stay serial under PivotKernel::Auto; thread
/// startup dominates below it.
inline constexpr std::size_t kParallelThreshold = 4096;

/// Gauss-Jordan pivot on (row, col): scales the pivot row to a unit pivot and
/// eliminates the column from every other row. Exact, so both kernels
/// produce identical tableaux.
void pivot_serial(TableauView t, std::size_t row, std::size_t col);
void pivot_parallel(TableauView t, std::size_t row, std::size_t col);

void pivot(TableauView t, std::size_t row, std::size_t col, PivotKernel kernel);

}  // namespace polarcut::kernels
