#include "polarcut/cglp.hpp"

#include "polarcut/error.hpp"

namespace polarcut {

namespace {

void require_point(const Instance& inst, const EpiPoint& point) {
  if (point.x.size() != inst.n) throw Error(Errc::DimensionMismatch, "point x must have length n");
}

void require_lifted(const Instance& inst, const LiftedObjective& obj) {
  if (obj.w.size() != inst.m) throw Error(Errc::DimensionMismatch, "lifted objective must have length m");
}

// Rows gamma^T A + gamma0 d^T = 0 over (gamma, gamma0), one per column of A.
void add_homogeneous_rows(LinearProgram& lp, const Matrix& A, const Vector& d, std::size_t m) {
  for (std::size_t j = 0; j < A.cols(); ++j) {
    Vector row = A.column(j);
    row.resize(m + 1);
    row[m] = d[j];
    lp.add_row(std::move(row), Relation::Equal, 0);
  }
}

}  // namespace

LinearProgram AltPolyhedron::to_lp(const Vector& w, const Rational& w0) const {
  if (w.size() != m) throw Error(Errc::DimensionMismatch, "alternative polyhedron objective must have length m");
  LinearProgram lp(m + 1, Sense::Maximize);
  Vector obj = w;
  obj.push_back(w0);
  lp.set_objective(std::move(obj));
  lp.set_nonnegative(0, m + 1);
  add_homogeneous_rows(lp, A, d, m);
  lp.add_row(normalization, relaxed ? Relation::LessEqual : Relation::Equal, -1);
  return lp;
}

LinearProgram AltPolyhedron::to_lp() const { return to_lp(zeros(m), 0); }

bool AltPolyhedron::contains(const Vector& gamma_gamma0) const {
  if (gamma_gamma0.size() != m + 1) return false;
  return to_lp().is_feasible(gamma_gamma0);
}

AltPolyhedron build_alt_polyhedron(const Instance& inst, const EpiPoint& point, bool relaxed) {
  require_point(inst, point);
  AltPolyhedron alt;
  alt.point = point;
  alt.relaxed = relaxed;
  alt.m = inst.m;
  alt.A = inst.A;
  alt.d = inst.d;
  alt.normalization = subtract(inst.b, inst.H * point.x);
  alt.normalization.push_back(point.eta);
  return alt;
}

LiftedObjective lift_objective(const Instance& inst, const Vector& omega, const Rational& omega0) {
  if (omega.size() != inst.n) throw Error(Errc::DimensionMismatch, "omega must have length n");
  return {inst.H * omega, -omega0};
}

LiftedObjective mis_objective(const Instance& inst) {
  LiftedObjective obj{zeros(inst.m), -1};
  for (std::size_t i = 0; i < inst.m; ++i)
    if (!is_zero(inst.H.row(i))) obj.w[i] = -1;
  return obj;
}

LiftedObjective lifted_objective(const Instance& inst, const ObjectiveSpec& spec) {
  if (std::holds_alternative<MisOnes>(spec)) return mis_objective(inst);
  if (const auto* dir = std::get_if<Directional>(&spec)) return lift_objective(inst, dir->omega, dir->omega0);
  const auto& custom = std::get<Custom>(spec);
  LiftedObjective obj{custom.omega_tilde, custom.omega_tilde0};
  require_lifted(inst, obj);
  return obj;
}

LinearProgram build_reverse_polar_lp(const Instance& inst, const EpiPoint& point, const Vector& omega,
                                     const Rational& omega0) {
  require_point(inst, point);
  if (omega.size() != inst.n) throw Error(Errc::DimensionMismatch, "omega must have length n");
  const std::size_t n = inst.n, m = inst.m;
  const std::size_t pi0 = n, gamma = n + 1, vars = n + 1 + m;

  LinearProgram lp(vars, Sense::Maximize);
  Vector obj = zeros(vars);
  for (std::size_t j = 0; j < n; ++j) obj[j] = omega[j];
  obj[pi0] = omega0;
  lp.set_objective(std::move(obj));
  lp.set_upper_bound(pi0, 0);
  lp.set_nonnegative(gamma, vars);

  Vector sep = zeros(vars);
  for (std::size_t j = 0; j < n; ++j) sep[j] = point.x[j];
  sep[pi0] = point.eta;
  for (std::size_t i = 0; i < m; ++i) sep[gamma + i] = -inst.b[i];
  lp.add_row(std::move(sep), Relation::GreaterEqual, 1);

  for (std::size_t j = 0; j < inst.k; ++j) {
    Vector row = zeros(vars);
    for (std::size_t i = 0; i < m; ++i) row[gamma + i] = inst.A(i, j);
    row[pi0] = -inst.d[j];
    lp.add_row(std::move(row), Relation::Equal, 0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector row = zeros(vars);
    for (std::size_t i = 0; i < m; ++i) row[gamma + i] = inst.H(i, j);
    row[j] = -1;
    lp.add_row(std::move(row), Relation::Equal, 0);
  }
  return lp;
}

LinearProgram build_cglp_normalized(const Instance& inst, const EpiPoint& point, const LiftedObjective& objective) {
  require_point(inst, point);
  require_lifted(inst, objective);
  const std::size_t m = inst.m;
  LinearProgram lp(m + 1, Sense::Maximize);
  Vector obj = subtract(inst.H * point.x, inst.b);
  obj.push_back(-point.eta);
  lp.set_objective(std::move(obj));
  lp.set_nonnegative(0, m + 1);
  add_homogeneous_rows(lp, inst.A, inst.d, m);
  Vector norm = objective.w;
  norm.push_back(objective.w0);
  lp.add_row(std::move(norm), Relation::Equal, -1);
  return lp;
}

LinearProgram build_cglp_relaxed_subproblem(const Instance& inst, const EpiPoint& point,
                                            const LiftedObjective& objective) {
  require_point(inst, point);
  require_lifted(inst, objective);
  const std::size_t k = inst.k, lambda = k;
  LinearProgram lp(k + 1);
  Vector obj = zeros(k + 1);
  obj[lambda] = 1;
  lp.set_objective(std::move(obj));
  lp.set_lower_bound(lambda, 0);

  const Vector rhs = subtract(inst.b, inst.H * point.x);
  for (std::size_t i = 0; i < inst.m; ++i) {
    Vector row = inst.A.row_vector(i);
    row.push_back(objective.w[i]);
    lp.add_row(std::move(row), Relation::LessEqual, rhs[i]);
  }
  Vector last = inst.d;
  last.push_back(objective.w0);
  lp.add_row(std::move(last), Relation::LessEqual, point.eta);
  return lp;
}

Vector relaxed_subproblem_multipliers(const LpOutcome& outcome) {
  if (outcome.status != LpStatus::Optimal)
    throw Error(Errc::PreconditionViolated, "multipliers need an optimal relaxed subproblem");
  Vector out(outcome.dual.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -outcome.dual[i];
  return out;
}

}  // namespace polarcut
