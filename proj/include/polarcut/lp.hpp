#pragma once

#include "polarcut/linalg.hpp"
#include "polarcut/pivot.hpp"
#include "polarcut/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polarcut {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  Vector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// A linear program over free variables unless bounds are set.
///
/// Built incrementally, then treated as an immutable value: `solve` only
/// reads it, so one program may be solved from several threads at once.
class LinearProgram {
 public:
  /// Error{InvalidArgument} when num_vars == 0.
  explicit LinearProgram(std::size_t num_vars, Sense sense = Sense::Minimize);

  std::size_t num_vars() const noexcept { return objective_.size(); }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  Sense sense() const noexcept { return sense_; }

  void set_sense(Sense sense) noexcept { sense_ = sense; }
  void set_objective(Vector objective);
  /// Returns the index of the new row.
  std::size_t add_row(Vector coeffs, Relation relation, Rational rhs);
  void set_lower_bound(std::size_t var, Rational bound);
  void set_upper_bound(std::size_t var, Rational bound);
  /// Sets a lower bound of zero on every variable in [first, last).
  void set_nonnegative(std::size_t first, std::size_t last);

  const Vector& objective() const noexcept { return objective_; }
  const std::vector<Constraint>& rows() const noexcept { return rows_; }
  const std::optional<Rational>& lower_bound(std::size_t var) const { return lower_.at(var); }
  const std::optional<Rational>& upper_bound(std::size_t var) const { return upper_.at(var); }

  /// True iff x satisfies every row and bound.
  bool is_feasible(std::span<const Rational> x) const;
  Rational evaluate(std::span<const Rational> x) const { return dot(objective_, x); }

 private:
  Sense sense_;
  Vector objective_;
  std::vector<Constraint> rows_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Column indices of the internal standard form, one per standard-form row.
using Basis = std::vector<std::size_t>;

/// Result of an exact solve.
///
/// Sign conventions: every row is read in <=-form for the minimization of
/// sense*objective (a >=-row a x >= b becomes -a x <= -b; a maximization is
/// turned into minimizing the negated objective). In that form
///  * `dual` holds one multiplier per row, nonpositive for inequality rows
///    and free for equality rows, together with `lower_dual`/`upper_dual`
///    for the bound rows -x_j <= -l_j and x_j <= u_j (zero when absent);
///    they satisfy sum_k y_k g_k = sense*c and sum_k y_k h_k = sense*value;
///  * `farkas` (and `farkas_lower`/`farkas_upper`) are nonnegative on
///    inequality rows, aggregate the <=-rows to 0^T x <= -1 exactly.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;

  Vector primal;
  Rational objective_value;
  Vector dual;
  Vector lower_dual;
  Vector upper_dual;

  Vector farkas;
  Vector farkas_lower;
  Vector farkas_upper;

  Vector ray;

  Basis basis;
  std::size_t pivots = 0;
};

struct SolveOptions {
  kernels::PivotKernel kernel = kernels::PivotKernel::Auto;
  /// Basis from an earlier solve of the same program. Ignored if singular or
  /// primal infeasible.
  const Basis* warm_start = nullptr;
};

/// Two-phase primal simplex on a dense tableau with Bland's rule (lowest
/// entering column, lowest leaving basic index). Never throws for a well
/// formed program; every outcome is a status.
LpOutcome solve(const LinearProgram& lp, const SolveOptions& options = {});

}  // namespace polarcut
