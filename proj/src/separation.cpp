#include "polarcut/separation.hpp"

#include "polarcut/error.hpp"

#include <sstream>

namespace polarcut {

Vector Certificate::stacked() const {
  Vector v = gamma;
  v.push_back(gamma0);
  return v;
}

Certificate Certificate::unstack(const Vector& v) {
  if (v.empty()) throw Error(Errc::DimensionMismatch, "empty certificate vector");
  return {Vector(v.begin(), v.end() - 1), v.back()};
}

Rational Cut::violation(const EpiPoint& point) const {
  if (point.x.size() != pi.size()) throw Error(Errc::DimensionMismatch, "cut and point dimensions differ");
  return dot(pi, point.x) + pi0 * point.eta - alpha;
}

Cut Cut::canonical() const {
  Rational lead = pi0;
  for (const auto& v : pi) {
    if (v != 0) {
      lead = v;
      break;
    }
  }
  if (lead == 0) return *this;
  const Rational s = 1 / abs(lead);
  return {scaled(pi, s), pi0 * s, alpha * s};
}

namespace {

void append_term(std::ostringstream& out, const Rational& coef, const std::string& name, bool first) {
  if (coef == 0) return;
  if (first) {
    if (coef < 0) out << "-";
  } else {
    out << (coef < 0 ? " - " : " + ");
  }
  const Rational mag = abs(coef);
  if (mag != 1) out << to_string(mag) << "*";
  out << name;
}

}  // namespace

std::string to_string(const Cut& cut) {
  // Printed as -pi^T x - pi0 eta >= -alpha, scaled so eta has coefficient 1.
  Cut c = cut.canonical();
  if (c.pi0 != 0) {
    const Rational s = 1 / abs(c.pi0);
    c = {scaled(c.pi, s), c.pi0 * s, c.alpha * s};
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < c.pi.size(); ++j) {
    const std::string name = c.pi.size() == 1 ? "x" : "x" + std::to_string(j + 1);
    if (c.pi[j] == 0) continue;
    append_term(out, -c.pi[j], name, first);
    first = false;
  }
  if (c.pi0 != 0) {
    append_term(out, -c.pi0, "eta", first);
    first = false;
  }
  if (first) out << "0";
  out << " >= " << to_string(Rational(-c.alpha));
  return out.str();
}

Cut certificate_to_cut(const Instance& inst, const Certificate& cert) {
  if (cert.gamma.size() != inst.m) throw Error(Errc::DimensionMismatch, "certificate gamma must have length m");
  if (is_zero(cert.gamma) && cert.gamma0 == 0) throw Error(Errc::ZeroCertificate, "certificate is zero");
  return {inst.H.left_multiply(cert.gamma), -cert.gamma0, dot(cert.gamma, inst.b)};
}

SeparationResult separate(const Instance& inst, const EpiPoint& point, const ObjectiveSpec& strategy,
                          const SolveOptions& options) {
  if (point.x.size() != inst.n) throw Error(Errc::DimensionMismatch, "point x must have length n");
  if (!epi_nonempty(inst)) throw Error(Errc::EmptyEpigraph, "cannot separate from an empty epigraph");
  const LiftedObjective objective = lifted_objective(inst, strategy);
  const auto out = solve(build_cglp_relaxed_subproblem(inst, point, objective), options);
  if (out.status == LpStatus::Unbounded)
    throw Error(Errc::PreconditionViolated, "relaxed subproblem cannot be unbounded");

  Separated sep;
  if (out.status == LpStatus::Optimal) {
    const Rational lambda = out.objective_value;
    if (lambda == 0) return InEpigraph{};
    sep.lambda = lambda;
    sep.cglp_value = -1 / lambda;
    sep.certificate = Certificate::unstack(scaled(relaxed_subproblem_multipliers(out), 1 / lambda));
  } else {
    // No scaling reaches a negative value: the optimum is 0 or unbounded.
    // Only the first still yields a certificate, read off the CGLP itself.
    const auto alt = build_alt_polyhedron(inst, point, true);
    const auto direct = solve(alt.to_lp(objective.w, objective.w0), options);
    if (direct.status == LpStatus::Infeasible) return InEpigraph{};
    if (direct.status == LpStatus::Unbounded)
      throw Error(Errc::StrategyUnbounded, "cut-generating LP is unbounded for this objective");
    sep.lambda = 0;
    sep.cglp_value = direct.objective_value;
    sep.certificate = Certificate::unstack(direct.primal);
  }
  sep.cut = certificate_to_cut(inst, sep.certificate);
  sep.supporting = support_function(inst, sep.cut.pi, sep.cut.pi0) == ExtendedRational(sep.cut.alpha);
  return sep;
}

Rational tighten_rhs(const Instance& inst, const Vector& pi, const Rational& pi0) {
  const ExtendedRational h = support_function(inst, pi, pi0);
  if (!h.is_finite()) throw Error(Errc::Unbounded, "support function is unbounded in this direction");
  return h.value();
}

std::string to_string(Boundedness b) {
  switch (b) {
    case Boundedness::InSet: return "in_set";
    case Boundedness::InClosedCone: return "in_closed_cone";
    case Boundedness::Outside: return "outside";
  }
  return "?";
}

Boundedness boundedness_check(const Instance& inst, const EpiPoint& point, const Vector& omega,
                              const Rational& omega0) {
  if (omega.size() != inst.n || point.x.size() != inst.n)
    throw Error(Errc::DimensionMismatch, "omega and point must have length n");
  if (epi_contains(inst, point)) throw Error(Errc::PreconditionViolated, "point lies in the epigraph");
  if (epi_contains(inst, {add(point.x, omega), point.eta + omega0})) return Boundedness::InSet;
  const auto out = solve(build_reverse_polar_lp(inst, point, omega, omega0));
  if (out.status == LpStatus::Unbounded) return Boundedness::Outside;
  if (out.status == LpStatus::Infeasible) throw Error(Errc::PreconditionViolated, "reverse polar set is empty");
  return Boundedness::InClosedCone;
}

EpiPoint exposed_point(const Instance& inst, const EpiPoint& point, const Vector& omega, const Rational& omega0) {
  const auto lifted = lift_objective(inst, omega, omega0);
  if (point.x.size() != inst.n) throw Error(Errc::DimensionMismatch, "point x must have length n");
  const auto out = solve(build_cglp_relaxed_subproblem(inst, point, lifted));
  if (out.status != LpStatus::Optimal || out.objective_value == 0)
    throw Error(Errc::PreconditionViolated, "directional CGLP optimum is not finite and negative");
  // 1/(-h_Q) is exactly lambda*.
  const Rational& lambda = out.objective_value;
  return {add(point.x, scaled(omega, lambda)), point.eta + lambda * omega0};
}

}  // namespace polarcut
