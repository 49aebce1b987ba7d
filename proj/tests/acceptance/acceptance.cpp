// Acceptance criteria AC1-AC10. Every comparison is an exact rational
// equality; the process exits nonzero when any criterion fails.

#include "polarcut/benders.hpp"
#include "polarcut/cglp.hpp"
#include "polarcut/error.hpp"
#include "polarcut/separation.hpp"
#include "polarcut/verify.hpp"
#include "support/helpers.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>

using namespace polarcut;
using polarcut::testing::q;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const EpiPoint kOrigin{{0}, 0};

Vector P1() { return {q("1/5"), 0, 0, q("1/5")}; }
Vector P2() { return {0, q("1/3"), 0, q("1/3")}; }
Vector P3() { return {0, 0, q("1/14"), q("2/7")}; }

std::optional<Separated> try_separate(const Instance& inst, const EpiPoint& p, const ObjectiveSpec& s) {
  try {
    const auto r = separate(inst, p, s);
    if (const auto* sep = std::get_if<Separated>(&r)) return *sep;
  } catch (const Error& e) {
    if (e.code() != Errc::StrategyUnbounded) throw;
  }
  return std::nullopt;
}

Rational lifted_value(const LiftedObjective& obj, const Vector& v) {
  Vector w = obj.w;
  w.push_back(obj.w0);
  return dot(w, v);
}

// Optimal vertices of the relaxed alternative polyhedron for `obj`.
std::vector<Vector> optimal_vertices(const AltPolyhedron& alt, const LiftedObjective& obj) {
  const auto best = solve(alt.to_lp(obj.w, obj.w0));
  std::vector<Vector> out;
  if (best.status != LpStatus::Optimal) return out;
  for (const auto& v : enumerate_vertices(alt))
    if (lifted_value(obj, v) == best.objective_value) out.push_back(v);
  return out;
}

Check ac1() {
  Check c;
  const auto vs = enumerate_vertices(build_alt_polyhedron(testing::ex1(), kOrigin, false));
  std::vector<Vector> expected{P1(), P2(), P3()};
  std::sort(expected.begin(), expected.end());
  c.require(vs == expected, "vertex set differs");
  return c;
}

Check ac2() {
  Check c;
  const auto s = try_separate(testing::ex1(), kOrigin, MisOnes{});
  c.require(s.has_value(), "no cut");
  if (!s) return c;
  c.require(s->cut.canonical() == Cut{{-1}, -1, q("-7/2")}.canonical(), "cut is " + to_string(s->cut));
  c.require(!s->supporting, "cut reported supporting");
  return c;
}

Check ac3() {
  Check c;
  const Instance inst = testing::ex1();
  const auto s = try_separate(inst, kOrigin, Directional{{2}, 3});
  c.require(s.has_value(), "no cut");
  if (!s) return c;
  c.require(s->cglp_value == q("-4/3"), "cglp value " + to_string(s->cglp_value));
  c.require(s->cut.canonical() == Cut{{q("-1/2")}, -1, -3}.canonical(), "cut is " + to_string(s->cut));
  c.require(s->supporting, "cut not supporting");
  c.require(face_report(inst, s->cut).classification == FaceClass::FacetDefining, "not facet-defining");
  return c;
}

Check ac4() {
  Check c;
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> coef(-5, 5);
  int instances = 0, finite = 0, negative = 0;
  auto one = [&](const Instance& inst, const EpiPoint& point, const Vector& omega, const Rational& omega0) {
    const auto rp = solve(build_reverse_polar_lp(inst, point, omega, omega0));
    const auto lifted = lift_objective(inst, omega, omega0);
    const auto alt = solve(build_alt_polyhedron(inst, point, true).to_lp(lifted.w, lifted.w0));
    c.require(rp.status == alt.status, "status mismatch");
    if (rp.status != LpStatus::Optimal || alt.status != LpStatus::Optimal) return;
    ++finite;
    c.require(rp.objective_value == alt.objective_value, "reverse polar and lifted values differ");
    if (alt.objective_value >= 0) return;
    ++negative;
    const auto sub = solve(build_cglp_relaxed_subproblem(inst, point, lifted));
    c.require(sub.status == LpStatus::Optimal && sub.objective_value > 0, "relaxed subproblem not positive");
    if (sub.status == LpStatus::Optimal && sub.objective_value > 0)
      c.require(-1 / sub.objective_value == alt.objective_value, "-1/lambda* differs");
    const auto sw = solve(build_cglp_normalized(inst, point, lifted));
    c.require(sw.status == LpStatus::Optimal && sw.objective_value > 0, "swapped program not positive");
    if (sw.status == LpStatus::Optimal && sw.objective_value > 0)
      c.require(-1 / sw.objective_value == alt.objective_value, "-1/xi differs");
  };
  one(testing::ex1(), kOrigin, {2}, 3);
  one(testing::ex1(), kOrigin, {q("4/3")}, q("7/3"));
  one(testing::ex1(), kOrigin, {-1}, 0);
  while (instances < 200) {
    const Instance inst = testing::random_feasible_instance(rng, {3, 3, 5, 5});
    const auto point = testing::random_outside_point(inst, rng);
    if (!point) continue;
    ++instances;
    for (int rep = 0; rep < 2; ++rep) {
      Vector omega(inst.n);
      for (auto& v : omega) v = coef(rng);
      one(inst, *point, omega, coef(rng));
    }
  }
  c.require(finite >= 100 && negative >= 50, "too few finite comparisons");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(finite) + " finite, " + std::to_string(negative) +
              " negative optima";
  return c;
}

Check ac5() {
  Check c;
  const Instance inst = testing::ex1();
  const EpiPoint e = exposed_point(inst, kOrigin, {2}, 3);
  c.require(e == EpiPoint{{q("3/2")}, q("9/4")}, "exposed point differs");
  const auto sub = solve(build_cglp_relaxed_subproblem(inst, kOrigin, lift_objective(inst, {2}, 3)));
  const Rational& lambda = sub.objective_value;
  c.require(e == EpiPoint{{2 * lambda}, 3 * lambda}, "not origin + lambda*(omega, omega0)");
  const auto s = try_separate(inst, kOrigin, Directional{{2}, 3});
  c.require(s && s->cut.violation(e) == 0, "cut not tight at the exposed point");
  return c;
}

Check ac6() {
  Check c;
  std::mt19937 rng(1006);
  int instances = 0, vertices = 0;
  while (instances < 100) {
    const Instance inst = testing::random_feasible_instance(rng, {3, 3, 5, 5});
    const auto point = testing::random_outside_point(inst, rng);
    if (!point) continue;
    ++instances;
    const auto vs = enumerate_vertices(build_alt_polyhedron(inst, *point, false));
    std::vector<unsigned> supports;
    for (const auto& v : vs) {
      c.require(is_mis_certificate(inst, *point, Certificate::unstack(v)), "vertex fails the MIS test");
      supports.push_back(testing::support_mask(v));
    }
    // Each minimal infeasible subsystem, through its own normalized Farkas
    // vector, must be one of the vertices.
    const Vector rhs = subtract(inst.b, inst.H * point->x);
    for (const unsigned mask : testing::minimal_infeasible_subsystems(inst, *point)) {
      LinearProgram lp(inst.k);
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i <= inst.m; ++i) {
        if (!(mask & (1u << i))) continue;
        rows.push_back(i);
        if (i < inst.m)
          lp.add_row(inst.A.row_vector(i), Relation::LessEqual, rhs[i]);
        else
          lp.add_row(inst.d, Relation::LessEqual, point->eta);
      }
      const auto out = solve(lp);
      Vector cert = zeros(inst.m + 1);
      for (std::size_t r = 0; r < rows.size(); ++r) cert[rows[r]] = out.farkas[r];
      c.require(std::find(vs.begin(), vs.end(), cert) != vs.end(), "subsystem certificate is not a vertex");
    }
    auto brute = testing::minimal_infeasible_subsystems(inst, *point);
    std::sort(brute.begin(), brute.end());
    std::sort(supports.begin(), supports.end());
    c.require(supports == brute, "vertex supports differ from minimal infeasible subsystems");
    vertices += static_cast<int>(vs.size());
  }
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(vertices) + " vertices";
  return c;
}

Check ac7() {
  Check c;
  std::mt19937 rng(1007);
  int instances = 0, unique = 0, facets = 0;
  while (instances < 100) {
    const Instance inst = testing::random_feasible_instance(rng, {2, 3, 5, 5});
    if (epi_dimension(inst) != static_cast<int>(inst.n) + 1) continue;
    const auto point = testing::random_outside_point(inst, rng);
    const auto inside = testing::random_interior_point(inst, rng);
    if (!point || !inside) continue;
    ++instances;
    const Directional dir{subtract(inside->x, point->x), inside->eta - point->eta};
    const auto s = try_separate(inst, *point, dir);
    c.require(s.has_value(), "directional CGLP unbounded for an interior direction");
    if (!s) continue;
    const FaceReport face = face_report(inst, s->cut);
    const auto opt = optimal_vertices(build_alt_polyhedron(inst, *point, true), lift_objective(inst, dir.omega, dir.omega0));
    if (opt.size() == 1) {
      ++unique;
      c.require(face.facet_criterion(), "unique optimal vertex but cut is " + to_string(face.classification));
    }
    if (face.facet_criterion()) {
      ++facets;
      c.require(is_mis_certificate(inst, *point, s->certificate), "facet cut without MIS certificate");
    }
  }
  c.require(unique >= 50, "too few unique optima");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(unique) + " unique optima, " + std::to_string(facets) +
              " facet cuts";
  return c;
}

Check ac8() {
  Check c;
  const Instance right = testing::ex1(testing::half_line_from(2));
  c.require(pareto_verdict(right, Cut{{q("-1/2")}, -1, -3}).kind == ParetoKind::Pareto, "x/2 + eta >= 3 not Pareto");
  c.require(pareto_verdict(right, Cut{{-2}, -1, -5}).kind == ParetoKind::NotPareto, "2x + eta >= 5 Pareto");
  std::mt19937 rng(1008);
  int instances = 0, checked = 0;
  while (instances < 50) {
    const Instance inst = testing::random_feasible_instance(rng, {2, 3, 5, 5});
    const auto point = testing::random_outside_point(inst, rng);
    const auto core = testing::random_interior_point(inst, rng, true);
    if (!point || !core) continue;
    ++instances;
    const auto s = try_separate(inst, *point, Directional{subtract(core->x, point->x), core->eta - point->eta});
    c.require(s.has_value(), "directional CGLP unbounded for a core direction");
    if (!s || s->cut.pi0 >= 0) continue;
    ++checked;
    const auto verdict = pareto_verdict(inst, s->cut);
    c.require(verdict.kind == ParetoKind::Pareto, "core-point cut not Pareto");
  }
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(checked) + " cuts with pi0 < 0";
  c.require(checked >= 25, "too few cuts with pi0 < 0");
  return c;
}

Check ac9() {
  Check c;
  const Instance inst = testing::ex1();
  const Instance scaled_inst = testing::scale_row(inst, 2, q("1/10"));
  const auto mis = try_separate(inst, kOrigin, MisOnes{});
  const auto mis_scaled = try_separate(scaled_inst, kOrigin, MisOnes{});
  c.require(mis && mis_scaled, "MIS separation failed");
  if (mis && mis_scaled) {
    c.require(mis->certificate.stacked() == P3(), "unscaled MIS vertex is not P3");
    c.require(mis_scaled->certificate.stacked() == P1(), "scaled MIS vertex is not P1");
    c.require(!(mis->cut.canonical() == mis_scaled->cut.canonical()), "MIS cut unchanged");
  }
  const auto dir = try_separate(inst, kOrigin, Directional{{2}, 3});
  const auto dir_scaled = try_separate(scaled_inst, kOrigin, Directional{{2}, 3});
  c.require(dir && dir_scaled && dir->cut.canonical() == dir_scaled->cut.canonical(), "directional cut changed");

  std::mt19937 rng(1009);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> factor(1, 20);
  int instances = 0;
  while (instances < 50) {
    const Instance base = testing::random_feasible_instance(rng, {3, 3, 5, 5});
    const auto point = testing::random_outside_point(base, rng);
    if (!point) continue;
    ++instances;
    Instance scaled_base = base;
    for (std::size_t i = 0; i < base.m; ++i)
      scaled_base = testing::scale_row(scaled_base, i, Rational(factor(rng)) / factor(rng));
    Vector omega(base.n);
    for (auto& v : omega) v = coef(rng);
    const Rational omega0 = coef(rng);
    const auto a = solve(build_reverse_polar_lp(base, *point, omega, omega0));
    const auto b = solve(build_reverse_polar_lp(scaled_base, *point, omega, omega0));
    c.require(a.status == b.status, "status changed under scaling");
    if (a.status == LpStatus::Optimal && b.status == LpStatus::Optimal)
      c.require(a.objective_value == b.objective_value, "optimal value changed under scaling");
  }
  return c;
}

Check ac10() {
  Check c;
  const Instance inst = testing::ex1();
  SolverConfig config;
  const auto r = solve(inst, config);
  c.require(r.status == SolveStatus::Optimal && r.value == q("11/3"), "sample instance value is not 11/3");
  c.require(testing::monolithic_value(inst) == ExtendedRational(q("11/3")), "monolithic value is not 11/3");
  const Instance finite = testing::ex1(FiniteDomain{{{0}, {1}, {2}, {3}}});
  const auto f = solve(finite, config);
  c.require(f.status == SolveStatus::Optimal && f.value == Rational(4), "finite value is not 4");
  c.require(testing::brute_force_finite_value(finite) == ExtendedRational(4), "brute force is not 4");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"AC1 example alternative polyhedron vertices", ac1},
      {"AC2 unit-weight selection gives the non-supporting cut", ac2},
      {"AC3 directional selection gives a supporting facet", ac3},
      {"AC4 cut-generating formulations agree", ac4},
      {"AC5 exposed point", ac5},
      {"AC6 vertices are minimal infeasible subsystems", ac6},
      {"AC7 unique optima give facets, facets give MIS certificates", ac7},
      {"AC8 Pareto verdicts", ac8},
      {"AC9 row-scaling robustness", ac9},
      {"AC10 end-to-end decomposition", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << " (" << ms << " ms)";
    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
    std::cout << '\n';
    if (!c.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
