#pragma once

#include "polarcut/linalg.hpp"
#include "polarcut/lp.hpp"
#include "polarcut/rational.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace polarcut {

/// S = {x : G x <= g}. No rows means S is all of R^n.
struct PolyhedralDomain {
  Matrix G;
  Vector g;
  friend bool operator==(const PolyhedralDomain&, const PolyhedralDomain&) = default;
};

/// S is a finite list of points.
struct FiniteDomain {
  std::vector<Vector> points;
  friend bool operator==(const FiniteDomain&, const FiniteDomain&) = default;
};

using MasterDomain = std::variant<PolyhedralDomain, FiniteDomain>;

/// min c^T x + d^T y  s.t.  H x + A y <= b,  x in S.
///
/// Construct through `Instance::make`, which checks dimensions; the fields
/// are read-only afterwards.
struct Instance {
  std::size_t n = 0;  ///< master dimension
  std::size_t k = 0;  ///< subproblem dimension
  std::size_t m = 0;  ///< linking rows
  Vector c;
  Vector d;
  Matrix H;  ///< m x n interaction matrix
  Matrix A;  ///< m x k
  Vector b;
  MasterDomain master;
  Rational eta_lower_bound;

  /// Error{DimensionMismatch} when sizes disagree, m == 0, n == 0, k == 0,
  /// polyhedral rows have the wrong width or a finite domain is empty.
  static Instance make(Vector c, Vector d, Matrix H, Matrix A, Vector b, MasterDomain master,
                       Rational eta_lower_bound);

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// A point (x, eta) of master space.
struct EpiPoint {
  Vector x;
  Rational eta;

  /// (x, eta) as one vector of length n + 1.
  Vector stacked() const;
  static EpiPoint unstack(const Vector& v);
  friend bool operator==(const EpiPoint&, const EpiPoint&) = default;
};

/// z(x) = min { d^T y : A y <= b - H x }, +inf when infeasible and -inf when
/// unbounded.
ExtendedRational subproblem_value(const Instance& instance, const Vector& x);

/// True iff some y has A y <= b - H x and d^T y <= eta.
bool epi_contains(const Instance& instance, const EpiPoint& point);

/// True iff H x + A y <= b has a solution, i.e. epi(z) is not empty.
bool epi_nonempty(const Instance& instance);

/// sup { pi^T x + pi0 eta : (x, eta) in epi(z) } through the dual program
/// min { gamma^T b : A^T gamma = pi0 d, H^T gamma = pi, gamma >= 0 }.
/// Returns +inf when that program is infeasible (always when pi0 > 0).
/// Error{EmptyEpigraph} when epi(z) is empty.
ExtendedRational support_function(const Instance& instance, const Vector& pi, const Rational& pi0);

/// Affine dimension of epi(z) in R^{n+1}. Error{EmptyEpigraph}.
int epi_dimension(const Instance& instance);

/// Affine dimension of epi(z) intersected with the hyperplane
/// pi^T x + pi0 eta = alpha; -1 when that intersection is empty.
/// Error{EmptyEpigraph}.
int epi_face_dimension(const Instance& instance, const Vector& pi, const Rational& pi0, const Rational& alpha);

namespace detail {

/// Program over (x, y, eta) describing epi(z): H x + A y <= b, d^T y - eta <= 0.
/// Objective zero, sense minimize.
LinearProgram epigraph_program(const Instance& instance);

}  // namespace detail

}  // namespace polarcut
