#include "polarcut/model.hpp"

#include "polarcut/error.hpp"

#include <utility>

namespace polarcut {

Instance Instance::make(Vector c, Vector d, Matrix H, Matrix A, Vector b, MasterDomain master,
                        Rational eta_lower_bound) {
  Instance inst;
  inst.n = c.size();
  inst.k = d.size();
  inst.m = b.size();
  if (inst.n == 0) throw Error(Errc::DimensionMismatch, "master dimension n must be positive");
  if (inst.k == 0) throw Error(Errc::DimensionMismatch, "subproblem dimension k must be positive");
  if (inst.m == 0) throw Error(Errc::DimensionMismatch, "at least one linking row is required");
  if (H.rows() != inst.m || H.cols() != inst.n) throw Error(Errc::DimensionMismatch, "H must be m x n");
  if (A.rows() != inst.m || A.cols() != inst.k) throw Error(Errc::DimensionMismatch, "A must be m x k");
  if (auto* poly = std::get_if<PolyhedralDomain>(&master)) {
    if (poly->G.rows() != poly->g.size()) throw Error(Errc::DimensionMismatch, "G and g row counts differ");
    if (poly->G.rows() == 0) poly->G = Matrix(0, inst.n);
    if (poly->G.cols() != inst.n) throw Error(Errc::DimensionMismatch, "G rows must have length n");
  } else {
    const auto& fin = std::get<FiniteDomain>(master);
    if (fin.points.empty()) throw Error(Errc::DimensionMismatch, "finite master domain needs a point");
    for (const auto& p : fin.points)
      if (p.size() != inst.n) throw Error(Errc::DimensionMismatch, "finite master point must have length n");
  }
  inst.c = std::move(c);
  inst.d = std::move(d);
  inst.H = std::move(H);
  inst.A = std::move(A);
  inst.b = std::move(b);
  inst.master = std::move(master);
  inst.eta_lower_bound = std::move(eta_lower_bound);
  return inst;
}

Vector EpiPoint::stacked() const {
  Vector v = x;
  v.push_back(eta);
  return v;
}

EpiPoint EpiPoint::unstack(const Vector& v) {
  if (v.empty()) throw Error(Errc::DimensionMismatch, "empty master-space vector");
  return {Vector(v.begin(), v.end() - 1), v.back()};
}

namespace {

void require_length(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n) throw Error(Errc::DimensionMismatch, what);
}

// Feasibility system over y: A y <= b - H x (and d^T y <= eta when given).
LinearProgram subproblem_program(const Instance& inst, const Vector& x) {
  const Vector rhs = subtract(inst.b, inst.H * x);
  LinearProgram lp(inst.k);
  for (std::size_t i = 0; i < inst.m; ++i) lp.add_row(inst.A.row_vector(i), Relation::LessEqual, rhs[i]);
  return lp;
}

Vector project(const Instance& inst, const Vector& xyeta) {
  Vector p(xyeta.begin(), xyeta.begin() + static_cast<std::ptrdiff_t>(inst.n));
  p.push_back(xyeta[inst.n + inst.k]);
  return p;
}

void set_master_objective(const Instance& inst, LinearProgram& lp, const Vector& direction) {
  Vector obj = zeros(inst.n + inst.k + 1);
  for (std::size_t j = 0; j < inst.n; ++j) obj[j] = direction[j];
  obj[inst.n + inst.k] = direction[inst.n];
  lp.set_objective(std::move(obj));
}

// Grows a set of affinely independent points of the polyhedron described by
// `lp` (over (x, y, eta)) until no direction orthogonal to their affine hull
// moves within it.
int projected_dimension(const Instance& inst, LinearProgram lp) {
  const auto start = solve(lp);
  if (start.status == LpStatus::Infeasible) return -1;
  std::vector<Vector> points{project(inst, start.primal)};
  const std::size_t dim = inst.n + 1;

  for (;;) {
    Matrix diffs(points.size() - 1, dim);
    for (std::size_t i = 1; i < points.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) diffs(i - 1, j) = points[i][j] - points[0][j];

    bool grew = false;
    for (const auto& v : nullspace(diffs)) {
      const Rational base = dot(v, points[0]);
      for (Sense sense : {Sense::Maximize, Sense::Minimize}) {
        set_master_objective(inst, lp, v);
        lp.set_sense(sense);
        const auto out = solve(lp);
        if (out.status == LpStatus::Unbounded) {
          points.push_back(add(points[0], project(inst, out.ray)));
          grew = true;
        } else if (out.status == LpStatus::Optimal && out.objective_value != base) {
          points.push_back(project(inst, out.primal));
          grew = true;
        }
        if (grew) break;
      }
      if (grew) break;
    }
    if (!grew) return affine_rank(points);
  }
}

}  // namespace

namespace detail {

LinearProgram epigraph_program(const Instance& inst) {
  const std::size_t vars = inst.n + inst.k + 1;
  LinearProgram lp(vars);
  for (std::size_t i = 0; i < inst.m; ++i) {
    Vector row = zeros(vars);
    for (std::size_t j = 0; j < inst.n; ++j) row[j] = inst.H(i, j);
    for (std::size_t j = 0; j < inst.k; ++j) row[inst.n + j] = inst.A(i, j);
    lp.add_row(std::move(row), Relation::LessEqual, inst.b[i]);
  }
  Vector link = zeros(vars);
  for (std::size_t j = 0; j < inst.k; ++j) link[inst.n + j] = inst.d[j];
  link[inst.n + inst.k] = -1;
  lp.add_row(std::move(link), Relation::LessEqual, 0);
  return lp;
}

}  // namespace detail

ExtendedRational subproblem_value(const Instance& inst, const Vector& x) {
  require_length(x, inst.n, "subproblem_value: x must have length n");
  LinearProgram lp = subproblem_program(inst, x);
  lp.set_objective(inst.d);
  const auto out = solve(lp);
  switch (out.status) {
    case LpStatus::Optimal: return out.objective_value;
    case LpStatus::Infeasible: return ExtendedRational::plus_infinity();
    case LpStatus::Unbounded: return ExtendedRational::minus_infinity();
  }
  return ExtendedRational::plus_infinity();
}

bool epi_contains(const Instance& inst, const EpiPoint& point) {
  require_length(point.x, inst.n, "epi_contains: x must have length n");
  LinearProgram lp = subproblem_program(inst, point.x);
  lp.add_row(inst.d, Relation::LessEqual, point.eta);
  return solve(lp).status != LpStatus::Infeasible;
}

bool epi_nonempty(const Instance& inst) {
  return solve(detail::epigraph_program(inst)).status != LpStatus::Infeasible;
}

ExtendedRational support_function(const Instance& inst, const Vector& pi, const Rational& pi0) {
  require_length(pi, inst.n, "support_function: pi must have length n");
  if (!epi_nonempty(inst)) throw Error(Errc::EmptyEpigraph, "support function of an empty epigraph");
  if (pi0 > 0) return ExtendedRational::plus_infinity();

  LinearProgram lp(inst.m);
  lp.set_objective(inst.b);
  lp.set_nonnegative(0, inst.m);
  const Matrix At = inst.A.transpose();
  const Matrix Ht = inst.H.transpose();
  for (std::size_t j = 0; j < inst.k; ++j) lp.add_row(At.row_vector(j), Relation::Equal, pi0 * inst.d[j]);
  for (std::size_t j = 0; j < inst.n; ++j) lp.add_row(Ht.row_vector(j), Relation::Equal, pi[j]);
  const auto out = solve(lp);
  switch (out.status) {
    case LpStatus::Optimal: return out.objective_value;
    case LpStatus::Infeasible: return ExtendedRational::plus_infinity();
    case LpStatus::Unbounded: break;
  }
  throw Error(Errc::EmptyEpigraph, "support-function dual unbounded");
}

int epi_dimension(const Instance& inst) {
  LinearProgram lp = detail::epigraph_program(inst);
  const int dim = projected_dimension(inst, lp);
  if (dim < 0) throw Error(Errc::EmptyEpigraph, "epi_dimension of an empty epigraph");
  return dim;
}

int epi_face_dimension(const Instance& inst, const Vector& pi, const Rational& pi0, const Rational& alpha) {
  require_length(pi, inst.n, "epi_face_dimension: pi must have length n");
  LinearProgram lp = detail::epigraph_program(inst);
  if (solve(lp).status == LpStatus::Infeasible)
    throw Error(Errc::EmptyEpigraph, "face of an empty epigraph");
  Vector row = zeros(inst.n + inst.k + 1);
  for (std::size_t j = 0; j < inst.n; ++j) row[j] = pi[j];
  row[inst.n + inst.k] = pi0;
  lp.add_row(std::move(row), Relation::Equal, alpha);
  return projected_dimension(inst, std::move(lp));
}

}  // namespace polarcut
