#pragma once

#include "polarcut/cglp.hpp"
#include "polarcut/model.hpp"
#include "polarcut/separation.hpp"
#include "polarcut/verify.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polarcut {

/// Core point p kept fixed; the objective is p - master point.
struct FixedCore {
  EpiPoint point;
};
/// The same master-space objective every iteration.
struct FromPoint {
  Vector omega;
  Rational omega0;
};
/// Core point moved towards each incumbent: blend*previous + (1-blend)*incumbent.
struct UpdateOnIncumbent {
  Rational blend;
};
using CorePointMode = std::variant<FixedCore, FromPoint, UpdateOnIncumbent>;

struct SolverConfig {
  ObjectiveSpec strategy = MisOnes{};
  std::size_t max_iterations = 100;
  /// When set, every iteration separates with the Directional objective it
  /// produces instead of `strategy`.
  std::optional<CorePointMode> core_point_mode;
  /// Attach a FaceReport to every added cut.
  bool verify_each_cut = false;
  SolveOptions lp_options;

  /// Error{InvalidArgument} for max_iterations == 0 or blend outside (0, 1).
  void validate() const;
};

struct CoreObjective {
  Vector omega;
  Rational omega0;
  /// Core point the objective points to (the stored pair for FromPoint).
  std::optional<EpiPoint> core;
};

/// Objective for the next separation under `mode`.
/// Error{NoIncumbent} for UpdateOnIncumbent without incumbent and previous core.
CoreObjective next_core_objective(const CorePointMode& mode, const std::optional<EpiPoint>& incumbent,
                                  const EpiPoint& current_master, const std::optional<EpiPoint>& previous_core);

struct SubproblemFeasible {
  /// Minimizer of d^T y at x* (any feasible y when z(x*) = -inf).
  Vector y;
  ExtendedRational value;
};
struct SubproblemInfeasible {
  /// Farkas multipliers of A y <= b - H x*, d^T y <= eta*, scaled into P(x*, eta*).
  Certificate farkas;
};
using SubproblemCheck = std::variant<SubproblemFeasible, SubproblemInfeasible>;

SubproblemCheck subproblem_check(const Instance& instance, const EpiPoint& point);

enum class MasterStatus { Solved, Infeasible, Unbounded };

struct MasterSolution {
  MasterStatus status = MasterStatus::Infeasible;
  EpiPoint point;
  Rational value;
};

/// min c^T x + eta over x in S, eta >= eta_lower_bound and the cuts. Finite S
/// is enumerated in order; the first point wins ties.
MasterSolution solve_master(const Instance& instance, const std::vector<Cut>& cuts, const SolveOptions& options = {});

struct CutAdded {
  Cut cut;
  Certificate certificate;
  Rational cglp_value;
  bool supporting = false;
  /// Directional objective actually used, when one was.
  std::optional<std::pair<Vector, Rational>> direction;
  /// Empty unless the configured strategy was replaced this iteration.
  std::string fallback;
  std::optional<FaceReport> face_report;
};
struct Converged {};

struct IterationRecord {
  std::size_t index = 0;
  EpiPoint master_point;
  Rational master_value;
  std::variant<Converged, CutAdded> outcome;
};

enum class SolveStatus { Optimal, IterationLimit, Infeasible, IllPosed };
std::string to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::IterationLimit;
  Vector x;
  Vector y;
  std::optional<Rational> value;
  std::string reason;
  std::vector<IterationRecord> trace;

  std::vector<Cut> cuts() const;
};

/// Cutting-plane loop over the master problem.
/// Error{InvalidArgument} from SolverConfig::validate.
SolveResult solve(const Instance& instance, const SolverConfig& config);

}  // namespace polarcut
