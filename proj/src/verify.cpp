#include "polarcut/verify.hpp"

#include "polarcut/error.hpp"

#include <algorithm>
#include <cstdint>

namespace polarcut {

std::string to_string(FaceClass c) {
  switch (c) {
    case FaceClass::NonSupporting: return "non_supporting";
    case FaceClass::Supporting: return "supporting";
    case FaceClass::FacetDefining: return "facet_defining";
    case FaceClass::ContainsEpi: return "contains_epi";
  }
  return "?";
}

std::string to_string(ParetoKind k) {
  switch (k) {
    case ParetoKind::Pareto: return "pareto";
    case ParetoKind::NotPareto: return "not_pareto";
    case ParetoKind::NotApplicable: return "not_applicable";
  }
  return "?";
}

FaceReport face_report(const Instance& inst, const Cut& cut) {
  if (cut.pi.size() != inst.n) throw Error(Errc::DimensionMismatch, "cut pi must have length n");
  FaceReport report;
  report.epi_dimension = epi_dimension(inst);
  if (support_function(inst, cut.pi, cut.pi0) != ExtendedRational(cut.alpha)) return report;
  report.face_dimension = epi_face_dimension(inst, cut.pi, cut.pi0, cut.alpha);
  if (report.face_dimension == report.epi_dimension)
    report.classification = FaceClass::ContainsEpi;
  else if (report.face_dimension == report.epi_dimension - 1)
    report.classification = FaceClass::FacetDefining;
  else
    report.classification = FaceClass::Supporting;
  return report;
}

bool is_mis_certificate(const Instance& inst, const EpiPoint& point, const Certificate& cert) {
  if (cert.gamma.size() != inst.m || point.x.size() != inst.n)
    throw Error(Errc::DimensionMismatch, "certificate or point has the wrong length");
  const Vector rhs = subtract(inst.b, inst.H * point.x);
  std::vector<Constraint> rows;
  for (std::size_t i = 0; i < inst.m; ++i)
    if (cert.gamma[i] > 0) rows.push_back({inst.A.row_vector(i), Relation::LessEqual, rhs[i]});
  if (cert.gamma0 > 0) rows.push_back({inst.d, Relation::LessEqual, point.eta});
  if (rows.empty()) return false;

  auto feasible_without = [&](std::size_t skip) {
    LinearProgram lp(inst.k);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != skip) lp.add_row(rows[r].coeffs, rows[r].relation, rows[r].rhs);
    return solve(lp).status != LpStatus::Infeasible;
  };
  if (feasible_without(rows.size())) return false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!feasible_without(r)) return false;
  return true;
}

namespace {

// Inequalities and equalities of a program, with bounds turned into rows.
struct System {
  std::size_t vars = 0;
  Matrix eq;
  Vector eq_rhs;
  std::vector<Vector> ineq;  // a x <= rhs
  Vector ineq_rhs;
};

System flatten(const LinearProgram& lp) {
  System s;
  s.vars = lp.num_vars();
  std::vector<Vector> eq_rows;
  for (const auto& row : lp.rows()) {
    switch (row.relation) {
      case Relation::Equal:
        eq_rows.push_back(row.coeffs);
        s.eq_rhs.push_back(row.rhs);
        break;
      case Relation::LessEqual:
        s.ineq.push_back(row.coeffs);
        s.ineq_rhs.push_back(row.rhs);
        break;
      case Relation::GreaterEqual:
        s.ineq.push_back(scaled(row.coeffs, -1));
        s.ineq_rhs.push_back(-row.rhs);
        break;
    }
  }
  for (std::size_t j = 0; j < s.vars; ++j) {
    if (const auto& l = lp.lower_bound(j)) {
      Vector e = zeros(s.vars);
      e[j] = -1;
      s.ineq.push_back(std::move(e));
      s.ineq_rhs.push_back(-*l);
    }
    if (const auto& u = lp.upper_bound(j)) {
      Vector e = zeros(s.vars);
      e[j] = 1;
      s.ineq.push_back(std::move(e));
      s.ineq_rhs.push_back(*u);
    }
  }
  s.eq = Matrix::from_rows(eq_rows, s.vars);
  return s;
}

void check_size(const LinearProgram& lp) {
  if (lp.num_vars() > kMaxEnumerationVars)
    throw Error(Errc::TooLarge, "vertex enumeration is limited to " + std::to_string(kMaxEnumerationVars) +
                                    " variables");
}

// Vertex candidate from the equalities plus the chosen inequalities, if it
// is unique and feasible.
std::optional<Vector> try_basis(const System& s, const LinearProgram& lp, const std::vector<std::size_t>& chosen) {
  Matrix m(s.eq.rows() + chosen.size(), s.vars);
  Vector rhs;
  rhs.reserve(m.rows());
  for (std::size_t r = 0; r < s.eq.rows(); ++r) {
    for (std::size_t j = 0; j < s.vars; ++j) m(r, j) = s.eq(r, j);
    rhs.push_back(s.eq_rhs[r]);
  }
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    const std::size_t r = s.eq.rows() + t;
    for (std::size_t j = 0; j < s.vars; ++j) m(r, j) = s.ineq[chosen[t]][j];
    rhs.push_back(s.ineq_rhs[chosen[t]]);
  }
  auto x = solve_unique(m, rhs);
  if (!x || !lp.is_feasible(*x)) return std::nullopt;
  return x;
}

// Advances a sorted k-subset of {0..n-1}; false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void sort_unique(std::vector<Vector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Number of inequalities each basis takes, or nullopt when none can exist.
std::optional<std::size_t> basis_size(const System& s) {
  const std::size_t eq_rank = rank(s.eq);
  const std::size_t need = s.vars - eq_rank;
  if (need > s.ineq.size()) return std::nullopt;
  return need;
}

}  // namespace

std::vector<Vector> enumerate_vertices_serial(const LinearProgram& lp) {
  check_size(lp);
  const System s = flatten(lp);
  const auto need = basis_size(s);
  if (!need) return {};
  std::vector<Vector> out;
  std::vector<std::size_t> combo(*need);
  for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = i;
  do {
    if (auto x = try_basis(s, lp, combo)) out.push_back(std::move(*x));
  } while (!combo.empty() && next_combination(combo, s.ineq.size()));
  sort_unique(out);
  return out;
}

std::vector<Vector> enumerate_vertices(const LinearProgram& lp) {
  check_size(lp);
  const System s = flatten(lp);
  const auto need = basis_size(s);
  if (!need) return {};
  if (*need == 0) return enumerate_vertices_serial(lp);

  constexpr std::size_t kChunk = 512;
  std::vector<Vector> out;
  std::vector<std::size_t> combo(*need);
  for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = i;
  bool more = true;
  while (more) {
    std::vector<std::vector<std::size_t>> batch;
    batch.reserve(kChunk);
    while (more && batch.size() < kChunk) {
      batch.push_back(combo);
      more = next_combination(combo, s.ineq.size());
    }
    std::vector<std::optional<Vector>> found(batch.size());
    const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) found[i] = try_basis(s, lp, batch[i]);
    for (auto& f : found)
      if (f) out.push_back(std::move(*f));
  }
  sort_unique(out);
  return out;
}

std::vector<Vector> enumerate_vertices(const AltPolyhedron& system) { return enumerate_vertices(system.to_lp()); }

bool is_vertex(const LinearProgram& lp, const Vector& candidate) {
  if (candidate.size() != lp.num_vars() || !lp.is_feasible(candidate))
    throw Error(Errc::InfeasibleCandidate, "candidate violates the system");
  const System s = flatten(lp);
  std::vector<Vector> tight;
  for (std::size_t r = 0; r < s.eq.rows(); ++r) tight.push_back(s.eq.row_vector(r));
  for (std::size_t r = 0; r < s.ineq.size(); ++r)
    if (dot(s.ineq[r], candidate) == s.ineq_rhs[r]) tight.push_back(s.ineq[r]);
  return rank(Matrix::from_rows(tight, s.vars)) == s.vars;
}

bool is_vertex(const AltPolyhedron& system, const Vector& candidate) { return is_vertex(system.to_lp(), candidate); }

bool has_mis_certificate(const Instance& inst, const EpiPoint& point, const Vector& pi, const Rational& pi0) {
  if (pi.size() != inst.n) throw Error(Errc::DimensionMismatch, "pi must have length n");
  const Cut target = Cut{pi, pi0, 0}.canonical();
  for (const auto& v : enumerate_vertices(build_alt_polyhedron(inst, point, false))) {
    const Cut cut = certificate_to_cut(inst, Certificate::unstack(v));
    const Cut c = Cut{cut.pi, cut.pi0, 0}.canonical();
    if (c == target) return true;
  }
  return false;
}

namespace {

// Rows of the epigraph program plus the tight cut row, over (x, y, eta, extra...).
LinearProgram tight_epigraph_program(const Instance& inst, const Cut& cut, std::size_t extra) {
  const LinearProgram base = detail::epigraph_program(inst);
  const std::size_t vars = base.num_vars() + extra;
  LinearProgram lp(vars, Sense::Maximize);
  for (const auto& row : base.rows()) {
    Vector coeffs = row.coeffs;
    coeffs.resize(vars);
    lp.add_row(std::move(coeffs), row.relation, row.rhs);
  }
  Vector tight = zeros(vars);
  for (std::size_t j = 0; j < inst.n; ++j) tight[j] = cut.pi[j];
  tight[inst.n + inst.k] = cut.pi0;
  lp.add_row(std::move(tight), Relation::Equal, cut.alpha);
  return lp;
}

// Rows of G that hold with equality on all of S.
std::vector<bool> implicit_equalities(const PolyhedralDomain& s, std::size_t n) {
  std::vector<bool> out(s.G.rows(), false);
  for (std::size_t i = 0; i < s.G.rows(); ++i) {
    LinearProgram lp(n);
    for (std::size_t r = 0; r < s.G.rows(); ++r) lp.add_row(s.G.row_vector(r), Relation::LessEqual, s.g[r]);
    lp.set_objective(s.G.row_vector(i));
    const auto res = solve(lp);
    out[i] = res.status == LpStatus::Optimal && res.objective_value == s.g[i];
  }
  return out;
}

}  // namespace

ParetoVerdict pareto_verdict(const Instance& inst, const Cut& cut) {
  if (cut.pi.size() != inst.n) throw Error(Errc::DimensionMismatch, "cut pi must have length n");
  if (cut.pi0 >= 0) return {ParetoKind::NotApplicable, std::nullopt};
  if (support_function(inst, cut.pi, cut.pi0) != ExtendedRational(cut.alpha)) return {ParetoKind::NotPareto, {}};

  const std::size_t base_vars = inst.n + inst.k + 1;
  std::size_t extra = 1;  // eps
  const auto* fin = std::get_if<FiniteDomain>(&inst.master);
  if (fin != nullptr) extra += fin->points.size();
  LinearProgram lp = tight_epigraph_program(inst, cut, extra);
  const std::size_t vars = lp.num_vars();
  const std::size_t eps = vars - 1;

  if (fin == nullptr) {
    const auto& poly = std::get<PolyhedralDomain>(inst.master);
    const auto implicit = implicit_equalities(poly, inst.n);
    for (std::size_t i = 0; i < poly.G.rows(); ++i) {
      Vector row = zeros(vars);
      for (std::size_t j = 0; j < inst.n; ++j) row[j] = poly.G(i, j);
      if (!implicit[i]) row[eps] = 1;
      lp.add_row(std::move(row), implicit[i] ? Relation::Equal : Relation::LessEqual, poly.g[i]);
    }
  } else {
    // x = sum_i lambda_i s_i, sum lambda = 1, lambda_i >= eps.
    const std::size_t lambda = base_vars;
    for (std::size_t j = 0; j < inst.n; ++j) {
      Vector row = zeros(vars);
      row[j] = -1;
      for (std::size_t p = 0; p < fin->points.size(); ++p) row[lambda + p] = fin->points[p][j];
      lp.add_row(std::move(row), Relation::Equal, 0);
    }
    Vector sum = zeros(vars);
    for (std::size_t p = 0; p < fin->points.size(); ++p) {
      sum[lambda + p] = 1;
      Vector row = zeros(vars);
      row[lambda + p] = -1;
      row[eps] = 1;
      lp.add_row(std::move(row), Relation::LessEqual, 0);
    }
    lp.add_row(std::move(sum), Relation::Equal, 1);
  }
  lp.set_upper_bound(eps, 1);
  Vector obj = zeros(vars);
  obj[eps] = 1;
  lp.set_objective(std::move(obj));
  const auto res = solve(lp);
  if (res.status != LpStatus::Optimal || res.objective_value <= 0) return {ParetoKind::NotPareto, std::nullopt};
  EpiPoint witness{Vector(res.primal.begin(), res.primal.begin() + static_cast<std::ptrdiff_t>(inst.n)),
                   res.primal[inst.n + inst.k]};
  return {ParetoKind::Pareto, std::move(witness)};
}

bool dominates(const Instance& inst, const Cut& a, const Cut& b) {
  if (a.pi.size() != inst.n || b.pi.size() != inst.n) throw Error(Errc::DimensionMismatch, "cut pi must have length n");
  if (a.pi0 >= 0 || b.pi0 >= 0) throw Error(Errc::NotApplicable, "dominance needs pi0 < 0 on both cuts");
  // delta(x) = f_a(x) - f_b(x) = w^T x + w0.
  const Vector w = subtract(scaled(a.pi, -1 / a.pi0), scaled(b.pi, -1 / b.pi0));
  const Rational w0 = a.alpha / a.pi0 - b.alpha / b.pi0;

  if (const auto* fin = std::get_if<FiniteDomain>(&inst.master)) {
    bool strict = false;
    for (const auto& s : fin->points) {
      const Rational delta = dot(w, s) + w0;
      if (delta < 0) return false;
      if (delta > 0) strict = true;
    }
    return strict;
  }
  const auto& poly = std::get<PolyhedralDomain>(inst.master);
  LinearProgram lp(inst.n);
  for (std::size_t r = 0; r < poly.G.rows(); ++r) lp.add_row(poly.G.row_vector(r), Relation::LessEqual, poly.g[r]);
  lp.set_objective(w);
  const auto lo = solve(lp);
  if (lo.status != LpStatus::Optimal || lo.objective_value + w0 < 0) return false;
  lp.set_sense(Sense::Maximize);
  const auto hi = solve(lp);
  return hi.status == LpStatus::Unbounded || (hi.status == LpStatus::Optimal && hi.objective_value + w0 > 0);
}

}  // namespace polarcut
