#pragma once

#include "polarcut/lp.hpp"
#include "polarcut/model.hpp"

#include <variant>

namespace polarcut {

/// P(x*, eta*) over (gamma, gamma0):
///   gamma >= 0, gamma0 >= 0,
///   gamma^T A + gamma0 d^T = 0,
///   gamma^T (b - H x*) + gamma0 eta* = -1   (<= -1 when relaxed).
/// Empty iff the point lies in epi(z).
struct AltPolyhedron {
  EpiPoint point;
  bool relaxed = false;
  std::size_t m = 0;
  Matrix A;              ///< copy of the instance's A
  Vector d;
  Vector normalization;  ///< (b - H x*, eta*), length m + 1

  /// Number of variables, m + 1; gamma0 is the last one.
  std::size_t dimension() const noexcept { return m + 1; }

  /// The constraint system with objective max w^T gamma + w0 gamma0.
  LinearProgram to_lp(const Vector& w, const Rational& w0) const;
  /// Same system with a zero objective.
  LinearProgram to_lp() const;

  /// Exact membership of a vector (gamma, gamma0) of length m + 1.
  bool contains(const Vector& gamma_gamma0) const;
};

AltPolyhedron build_alt_polyhedron(const Instance& instance, const EpiPoint& point, bool relaxed);

/// Objective selection for the cut-generating LP.
struct MisOnes {};
/// Master-space direction (omega, omega0).
struct Directional {
  Vector omega;
  Rational omega0;
};
/// Lifted-space objective (omega~, omega~0) used directly.
struct Custom {
  Vector omega_tilde;
  Rational omega_tilde0;
};
using ObjectiveSpec = std::variant<MisOnes, Directional, Custom>;

/// Objective over (gamma, gamma0).
struct LiftedObjective {
  Vector w;
  Rational w0;
  friend bool operator==(const LiftedObjective&, const LiftedObjective&) = default;
};

/// (H omega, -omega0). Error{DimensionMismatch} unless omega has length n.
LiftedObjective lift_objective(const Instance& instance, const Vector& omega, const Rational& omega0);

/// -1 for every row of H with a nonzero entry, 0 for zero rows, and -1 for
/// gamma0. Maximizing it minimizes the weighted 1-norm of the certificate.
LiftedObjective mis_objective(const Instance& instance);

/// Resolves any strategy to its lifted objective.
/// Error{DimensionMismatch} for wrongly sized Directional/Custom data.
LiftedObjective lifted_objective(const Instance& instance, const ObjectiveSpec& spec);

/// Extended formulation of the reverse polar set with objective
/// max omega^T pi + omega0 pi0. Variables: pi (n, free), pi0 (<= 0),
/// gamma (m, >= 0). Rows, in order:
///   pi^T x* + pi0 eta* - gamma^T b >= 1,
///   A^T gamma - pi0 d = 0   (k rows),
///   H^T gamma - pi = 0      (n rows).
LinearProgram build_reverse_polar_lp(const Instance& instance, const EpiPoint& point, const Vector& omega,
                                     const Rational& omega0);

/// max gamma^T (H x* - b) - gamma0 eta* over gamma, gamma0 >= 0 with
/// gamma^T A + gamma0 d^T = 0 (k rows) and w^T gamma + w0 gamma0 = -1.
LinearProgram build_cglp_normalized(const Instance& instance, const EpiPoint& point, const LiftedObjective& objective);

/// min lambda over (y, lambda), y free and lambda >= 0, with rows
///   A_i y + lambda w_i <= b_i - H_i x*   (m rows),
///   d^T y + lambda w0 <= eta*.
/// When lambda* > 0 the row duals, negated and divided by lambda*, are an
/// optimal vertex of the relaxed alternative polyhedron with value -1/lambda*.
LinearProgram build_cglp_relaxed_subproblem(const Instance& instance, const EpiPoint& point,
                                            const LiftedObjective& objective);

/// (gamma, gamma0) = -(row duals) of an optimal solve of the relaxed
/// subproblem program, before scaling.
Vector relaxed_subproblem_multipliers(const LpOutcome& outcome);

}  // namespace polarcut
