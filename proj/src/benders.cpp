#include "polarcut/benders.hpp"

#include "polarcut/error.hpp"

namespace polarcut {

void SolverConfig::validate() const {
  if (max_iterations == 0) throw Error(Errc::InvalidArgument, "max_iterations must be at least 1");
  if (core_point_mode) {
    if (const auto* u = std::get_if<UpdateOnIncumbent>(&*core_point_mode)) {
      if (u->blend <= 0 || u->blend >= 1) throw Error(Errc::InvalidArgument, "blend must lie strictly in (0, 1)");
    }
  }
}

CoreObjective next_core_objective(const CorePointMode& mode, const std::optional<EpiPoint>& incumbent,
                                  const EpiPoint& master, const std::optional<EpiPoint>& previous_core) {
  auto towards = [&](const EpiPoint& core) {
    if (core.x.size() != master.x.size()) throw Error(Errc::DimensionMismatch, "core point must have length n");
    return CoreObjective{subtract(core.x, master.x), core.eta - master.eta, core};
  };
  if (const auto* fixed = std::get_if<FixedCore>(&mode)) return towards(fixed->point);
  if (const auto* from = std::get_if<FromPoint>(&mode)) return {from->omega, from->omega0, std::nullopt};

  const Rational& blend = std::get<UpdateOnIncumbent>(mode).blend;
  if (!incumbent) {
    if (!previous_core) throw Error(Errc::NoIncumbent, "no incumbent to build a core point from");
    return towards(*previous_core);
  }
  if (!previous_core) return towards(*incumbent);
  const Rational rest = 1 - blend;
  return towards({add(scaled(previous_core->x, blend), scaled(incumbent->x, rest)),
                  blend * previous_core->eta + rest * incumbent->eta});
}

SubproblemCheck subproblem_check(const Instance& inst, const EpiPoint& point) {
  if (point.x.size() != inst.n) throw Error(Errc::DimensionMismatch, "point x must have length n");
  const Vector rhs = subtract(inst.b, inst.H * point.x);
  LinearProgram lp(inst.k);
  for (std::size_t i = 0; i < inst.m; ++i) lp.add_row(inst.A.row_vector(i), Relation::LessEqual, rhs[i]);
  lp.set_objective(inst.d);
  const auto opt = solve(lp);
  if (opt.status == LpStatus::Optimal && opt.objective_value <= point.eta)
    return SubproblemFeasible{opt.primal, opt.objective_value};

  // Infeasible, or the minimum exceeds eta: certify with the eta row included.
  lp.add_row(inst.d, Relation::LessEqual, point.eta);
  const auto feas = solve(lp);
  if (feas.status != LpStatus::Infeasible) return SubproblemFeasible{feas.primal, ExtendedRational::minus_infinity()};
  return SubproblemInfeasible{Certificate::unstack(feas.farkas)};
}

MasterSolution solve_master(const Instance& inst, const std::vector<Cut>& cuts, const SolveOptions& options) {
  for (const auto& cut : cuts)
    if (cut.pi.size() != inst.n) throw Error(Errc::DimensionMismatch, "cut pi must have length n");

  if (const auto* fin = std::get_if<FiniteDomain>(&inst.master)) {
    MasterSolution best;
    for (const auto& s : fin->points) {
      Rational eta = inst.eta_lower_bound;
      bool feasible = true;
      for (const auto& cut : cuts) {
        const Rational lhs = dot(cut.pi, s);
        if (cut.pi0 == 0) {
          if (lhs > cut.alpha) feasible = false;
        } else if (cut.pi0 < 0) {
          eta = std::max(eta, (lhs - cut.alpha) / -cut.pi0);
        } else {
          throw Error(Errc::PreconditionViolated, "cut with pi0 > 0");
        }
      }
      if (!feasible) continue;
      const Rational value = dot(inst.c, s) + eta;
      if (best.status != MasterStatus::Solved || value < best.value) best = {MasterStatus::Solved, {s, eta}, value};
    }
    return best;
  }

  const auto& poly = std::get<PolyhedralDomain>(inst.master);
  const std::size_t n = inst.n, vars = n + 1;
  LinearProgram lp(vars);
  Vector obj = inst.c;
  obj.push_back(1);
  lp.set_objective(std::move(obj));
  lp.set_lower_bound(n, inst.eta_lower_bound);
  for (std::size_t i = 0; i < poly.G.rows(); ++i) {
    Vector row = poly.G.row_vector(i);
    row.push_back(0);
    lp.add_row(std::move(row), Relation::LessEqual, poly.g[i]);
  }
  for (const auto& cut : cuts) {
    Vector row = cut.pi;
    row.push_back(cut.pi0);
    lp.add_row(std::move(row), Relation::LessEqual, cut.alpha);
  }
  const auto out = solve(lp, options);
  switch (out.status) {
    case LpStatus::Optimal: return {MasterStatus::Solved, EpiPoint::unstack(out.primal), out.objective_value};
    case LpStatus::Infeasible: return {MasterStatus::Infeasible, {}, 0};
    case LpStatus::Unbounded: return {MasterStatus::Unbounded, {}, 0};
  }
  return {};
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::IterationLimit: return "iteration_limit";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::IllPosed: return "ill_posed";
  }
  return "?";
}

std::vector<Cut> SolveResult::cuts() const {
  std::vector<Cut> out;
  for (const auto& rec : trace)
    if (const auto* added = std::get_if<CutAdded>(&rec.outcome)) out.push_back(added->cut);
  return out;
}

namespace {

SolveResult finish(SolveResult r, SolveStatus status, std::string reason = {}) {
  r.status = status;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

SolveResult solve(const Instance& inst, const SolverConfig& config) {
  config.validate();
  SolveResult result;
  std::vector<Cut> cuts;
  std::optional<EpiPoint> incumbent;
  std::optional<Rational> incumbent_value;
  std::optional<EpiPoint> core;

  for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
    const MasterSolution master = solve_master(inst, cuts, config.lp_options);
    if (master.status == MasterStatus::Infeasible) return finish(std::move(result), SolveStatus::Infeasible);
    if (master.status == MasterStatus::Unbounded)
      return finish(std::move(result), SolveStatus::IllPosed, "master problem is unbounded");

    IterationRecord rec{iter, master.point, master.value, Converged{}};
    const SubproblemCheck check = subproblem_check(inst, master.point);
    if (const auto* ok = std::get_if<SubproblemFeasible>(&check)) {
      result.trace.push_back(std::move(rec));
      if (!ok->value.is_finite()) return finish(std::move(result), SolveStatus::IllPosed, "subproblem is unbounded");
      if (master.point.eta == inst.eta_lower_bound)
        return finish(std::move(result), SolveStatus::IllPosed, "eta is at its lower bound at the optimum");
      result.x = master.point.x;
      result.y = ok->y;
      result.value = dot(inst.c, result.x) + dot(inst.d, result.y);
      return finish(std::move(result), SolveStatus::Optimal);
    }

    ObjectiveSpec spec = config.strategy;
    CutAdded added;
    if (config.core_point_mode) {
      const ExtendedRational z = subproblem_value(inst, master.point.x);
      if (z.is_finite()) {
        const Rational total = dot(inst.c, master.point.x) + z.value();
        if (!incumbent_value || total < *incumbent_value) {
          incumbent = EpiPoint{master.point.x, z.value()};
          incumbent_value = total;
        }
      }
      try {
        const CoreObjective next = next_core_objective(*config.core_point_mode, incumbent, master.point, core);
        if (next.core) core = next.core;
        spec = Directional{next.omega, next.omega0};
      } catch (const Error& e) {
        if (e.code() != Errc::NoIncumbent) throw;
        spec = MisOnes{};
        added.fallback = "no_incumbent";
      }
    }
    if (const auto* dir = std::get_if<Directional>(&spec)) added.direction = std::make_pair(dir->omega, dir->omega0);

    SeparationResult sep;
    try {
      sep = separate(inst, master.point, spec, config.lp_options);
    } catch (const Error& e) {
      if (e.code() == Errc::EmptyEpigraph) return finish(std::move(result), SolveStatus::Infeasible);
      if (e.code() != Errc::StrategyUnbounded) throw;
      if (std::holds_alternative<MisOnes>(spec))
        return finish(std::move(result), SolveStatus::IllPosed, "cut-generating LP is unbounded");
      added.fallback = "strategy_unbounded";
      added.direction.reset();
      try {
        sep = separate(inst, master.point, MisOnes{}, config.lp_options);
      } catch (const Error& again) {
        if (again.code() != Errc::StrategyUnbounded) throw;
        return finish(std::move(result), SolveStatus::IllPosed, "cut-generating LP is unbounded");
      }
    }
    // The subproblem check already showed the point lies outside epi(z).
    const auto& cut = std::get<Separated>(sep);
    added.cut = cut.cut;
    added.certificate = cut.certificate;
    added.cglp_value = cut.cglp_value;
    added.supporting = cut.supporting;
    if (config.verify_each_cut) added.face_report = face_report(inst, cut.cut);
    cuts.push_back(cut.cut);
    rec.outcome = std::move(added);
    result.trace.push_back(std::move(rec));
  }
  return finish(std::move(result), SolveStatus::IterationLimit);
}

}  // namespace polarcut
