#pragma once

#include "polarcut/cglp.hpp"
#include "polarcut/model.hpp"

#include <string>
#include <variant>

namespace polarcut {

/// Multipliers (gamma, gamma0) >= 0 with gamma^T A + gamma0 d^T = 0.
struct Certificate {
  Vector gamma;
  Rational gamma0;

  /// (gamma, gamma0) as one vector of length m + 1.
  Vector stacked() const;
  static Certificate unstack(const Vector& v);
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// pi^T x + pi0 eta <= alpha.
struct Cut {
  Vector pi;
  Rational pi0;
  Rational alpha;

  /// pi^T x + pi0 eta - alpha; positive means the point is cut off.
  Rational violation(const EpiPoint& point) const;
  /// Scaled by 1/|first nonzero of (pi, pi0)|; the zero cut is returned as is.
  Cut canonical() const;
  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Renders the >=-form with variables x (or x1..xn) and eta, scaled so that
/// eta has coefficient 1 (or the first x otherwise),
/// e.g. "x + eta >= 7/2" or "1/2*x1 - x2 + eta >= 3".
std::string to_string(const Cut& cut);

struct InEpigraph {};

struct Separated {
  Cut cut;
  Certificate certificate;
  /// Optimal value over the relaxed alternative polyhedron: -1/lambda*, or
  /// 0 when the optimum is zero and the subproblem form has no solution.
  Rational cglp_value;
  /// h_epi(pi, pi0) == alpha, computed independently.
  bool supporting = false;
  /// Optimal relaxation level of the subproblem form (0 in the zero case).
  Rational lambda;
};

using SeparationResult = std::variant<InEpigraph, Separated>;

/// pi = H^T gamma, pi0 = -gamma0, alpha = gamma^T b.
/// Error{ZeroCertificate} when (gamma, gamma0) = 0; Error{DimensionMismatch}.
Cut certificate_to_cut(const Instance& instance, const Certificate& certificate);

/// Solves the strategy's CGLP through the relaxed subproblem form, falling
/// back to the relaxed alternative polyhedron when its optimum is zero.
/// Error{EmptyEpigraph}, Error{StrategyUnbounded} when the CGLP is unbounded.
SeparationResult separate(const Instance& instance, const EpiPoint& point, const ObjectiveSpec& strategy,
                          const SolveOptions& options = {});

/// h_epi(pi, pi0). Error{Unbounded} when it is +inf.
Rational tighten_rhs(const Instance& instance, const Vector& pi, const Rational& pi0);

enum class Boundedness { InSet, InClosedCone, Outside };
std::string to_string(Boundedness b);

/// Where (omega, omega0) sits relative to epi(z) - point.
/// Error{PreconditionViolated} when the point lies in epi(z).
Boundedness boundedness_check(const Instance& instance, const EpiPoint& point, const Vector& omega,
                              const Rational& omega0);

/// (omega, omega0) / (-h_Q) + point, where h_Q < 0 is the Directional CGLP
/// optimum. Error{PreconditionViolated} when h_Q is not finite and negative.
EpiPoint exposed_point(const Instance& instance, const EpiPoint& point, const Vector& omega, const Rational& omega0);

}  // namespace polarcut
