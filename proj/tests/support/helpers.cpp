#include "support/helpers.hpp"

namespace polarcut::testing {

namespace {

int row_sign(Relation r) { return r == Relation::GreaterEqual ? -1 : 1; }

// Accumulates sum_k mult_k * g_k and sum_k mult_k * h_k over the <=-form
// rows and bounds, checking the sign pattern of the multipliers.
bool aggregate(const LinearProgram& lp, const Vector& rows, const Vector& lower, const Vector& upper,
               int required_sign, Vector& coeffs, Rational& rhs) {
  const std::size_t n = lp.num_vars();
  coeffs = zeros(n);
  rhs = 0;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const auto& row = lp.rows()[i];
    if (row.relation != Relation::Equal && rows[i].sign() * required_sign < 0) return false;
    const int s = row_sign(row.relation);
    for (std::size_t j = 0; j < n; ++j) coeffs[j] += rows[i] * s * row.coeffs[j];
    rhs += rows[i] * s * row.rhs;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lower[j] != 0) {
      if (!lp.lower_bound(j) || lower[j].sign() * required_sign < 0) return false;
      coeffs[j] -= lower[j];
      rhs -= lower[j] * *lp.lower_bound(j);
    }
    if (upper[j] != 0) {
      if (!lp.upper_bound(j) || upper[j].sign() * required_sign < 0) return false;
      coeffs[j] += upper[j];
      rhs += upper[j] * *lp.upper_bound(j);
    }
  }
  return true;
}

}  // namespace

bool certificate_holds(const LinearProgram& lp, const LpOutcome& out) {
  const int sigma = lp.sense() == Sense::Minimize ? 1 : -1;
  Vector coeffs;
  Rational rhs;
  switch (out.status) {
    case LpStatus::Optimal: {
      if (!lp.is_feasible(out.primal)) return false;
      if (out.objective_value != lp.evaluate(out.primal)) return false;
      if (!aggregate(lp, out.dual, out.lower_dual, out.upper_dual, -1, coeffs, rhs)) return false;
      for (std::size_t j = 0; j < lp.num_vars(); ++j)
        if (coeffs[j] != sigma * lp.objective()[j]) return false;
      return rhs == sigma * out.objective_value;
    }
    case LpStatus::Infeasible: {
      if (!aggregate(lp, out.farkas, out.farkas_lower, out.farkas_upper, 1, coeffs, rhs)) return false;
      return is_zero(coeffs) && rhs < 0;
    }
    case LpStatus::Unbounded: {
      if (!lp.is_feasible(out.primal)) return false;
      for (const auto& row : lp.rows()) {
        const Rational g = dot(row.coeffs, out.ray) * row_sign(row.relation);
        if (row.relation == Relation::Equal ? g != 0 : g > 0) return false;
      }
      for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (lp.lower_bound(j) && out.ray[j] < 0) return false;
        if (lp.upper_bound(j) && out.ray[j] > 0) return false;
      }
      return sigma * dot(lp.objective(), out.ray) < 0;
    }
  }
  return false;
}

}  // namespace polarcut::testing
