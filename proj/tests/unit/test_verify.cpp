#include <doctest.h>

#include "polarcut/error.hpp"
#include "polarcut/verify.hpp"
#include "support/helpers.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace polarcut;
using polarcut::testing::q;

namespace {

const EpiPoint origin{{0}, 0};

Vector P1() { return {q("1/5"), 0, 0, q("1/5")}; }
Vector P2() { return {0, q("1/3"), 0, q("1/3")}; }
Vector P3() { return {0, 0, q("1/14"), q("2/7")}; }

}  // namespace

TEST_CASE("vertices of the example alternative polyhedra") {
  const Instance inst = testing::ex1();
  const std::vector<Vector> expected{P3(), P2(), P1()};  // lexicographic order
  CHECK(enumerate_vertices(build_alt_polyhedron(inst, origin, false)) == expected);
  CHECK(enumerate_vertices(build_alt_polyhedron(inst, origin, true)) == expected);
  CHECK(enumerate_vertices(build_alt_polyhedron(inst, {{2}, 3}, false)).empty());
  CHECK(enumerate_vertices_serial(build_alt_polyhedron(inst, origin, false).to_lp()) == expected);
}

TEST_CASE("vertex test") {
  const Instance inst = testing::ex1();
  const auto eq = build_alt_polyhedron(inst, origin, false);
  const auto rel = build_alt_polyhedron(inst, origin, true);
  CHECK(is_vertex(rel, P2()));
  CHECK_FALSE(is_vertex(eq, scaled(add(P1(), P2()), q("1/2"))));
  CHECK_FALSE(is_vertex(rel, scaled(P1(), 2)));
  CHECK_THROWS_AS(is_vertex(eq, scaled(P1(), 2)), Error);
}

TEST_CASE("enumeration bound") {
  LinearProgram big(13);
  CHECK_THROWS_AS(enumerate_vertices(big), Error);
  CHECK_THROWS_AS(enumerate_vertices_serial(big), Error);
  LinearProgram box(2);
  box.set_lower_bound(0, 0);
  box.set_upper_bound(0, 1);
  box.set_lower_bound(1, 0);
  box.set_upper_bound(1, 1);
  CHECK(enumerate_vertices(box) == std::vector<Vector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  LinearProgram line(2);  // no vertices: a free direction
  line.add_row({1, 1}, Relation::Equal, 1);
  CHECK(enumerate_vertices(line).empty());
  LinearProgram point(2);
  point.add_row({1, 1}, Relation::Equal, 1);
  point.add_row({1, -1}, Relation::Equal, 0);
  CHECK(enumerate_vertices(point) == std::vector<Vector>{{q("1/2"), q("1/2")}});
}

TEST_CASE("face reports of the worked example") {
  const Instance inst = testing::ex1();
  const Cut p1{{q("-2/5")}, q("-1/5"), -1};
  const auto r1 = face_report(inst, p1);
  CHECK(r1 == FaceReport{1, 2, FaceClass::FacetDefining});
  CHECK(r1.facet_criterion());
  const Cut p3{{q("-2/7")}, q("-2/7"), -1};
  CHECK(face_report(inst, p3) == FaceReport{-1, 2, FaceClass::NonSupporting});
  const Cut tight{{q("-2/7")}, q("-2/7"), q("-22/21")};
  const auto r3 = face_report(inst, tight);
  CHECK(r3 == FaceReport{0, 2, FaceClass::Supporting});
  CHECK_FALSE(r3.facet_criterion());
  CHECK(face_report(inst, Cut{{0}, 0, 0}).classification == FaceClass::ContainsEpi);
}

TEST_CASE("minimal infeasible subsystems of the worked example") {
  const Instance inst = testing::ex1();
  CHECK(is_mis_certificate(inst, origin, Certificate::unstack(P1())));
  CHECK(is_mis_certificate(inst, origin, Certificate::unstack(P3())));
  CHECK_FALSE(is_mis_certificate(inst, origin, Certificate::unstack(scaled(add(P1(), P3()), q("1/2")))));
  CHECK_FALSE(is_mis_certificate(inst, origin, Certificate{{0, 0, 0}, 0}));
  CHECK(has_mis_certificate(inst, origin, {q("-2/7")}, q("-2/7")));
  CHECK(has_mis_certificate(inst, origin, {-2}, -1));
  CHECK(has_mis_certificate(inst, origin, {-1}, -2));  // P2
  CHECK_FALSE(has_mis_certificate(inst, origin, {-1}, -3));
}

TEST_CASE("Pareto verdicts on the worked example") {
  const Instance inst = testing::ex1(testing::half_line_from(2));
  const auto half = pareto_verdict(inst, Cut{{q("-1/2")}, -1, -3});
  CHECK(half.kind == ParetoKind::Pareto);
  REQUIRE(half.witness.has_value());
  CHECK(half.witness->x[0] > 2);
  CHECK(epi_contains(inst, *half.witness));
  CHECK(pareto_verdict(inst, Cut{{-2}, -1, -5}).kind == ParetoKind::NotPareto);
  CHECK(pareto_verdict(inst, Cut{{-1}, 0, -1}).kind == ParetoKind::NotApplicable);
  // Not supporting.
  CHECK(pareto_verdict(inst, Cut{{-1}, -1, q("-7/2")}).kind == ParetoKind::NotPareto);

  const Instance finite = testing::ex1(FiniteDomain{{{2}, {3}}});
  CHECK(pareto_verdict(finite, Cut{{q("-1/2")}, -1, -3}).kind == ParetoKind::Pareto);
  CHECK(pareto_verdict(finite, Cut{{-2}, -1, -5}).kind == ParetoKind::NotPareto);
  // x = 4/3 is the only tight point of the vertex cut; it lies inside conv{1, 2}.
  const Instance around = testing::ex1(FiniteDomain{{{1}, {2}}});
  CHECK(pareto_verdict(around, Cut{{-1}, -1, q("-11/3")}).kind == ParetoKind::Pareto);
  const Instance at_end = testing::ex1(FiniteDomain{{{q("4/3")}, {2}}});
  CHECK(pareto_verdict(at_end, Cut{{-1}, -1, q("-11/3")}).kind == ParetoKind::NotPareto);
}

TEST_CASE("dominance on the worked example") {
  const Instance inst = testing::ex1();
  const Cut raw{{q("-2/7")}, q("-2/7"), -1};
  const Cut tight{{q("-2/7")}, q("-2/7"), q("-22/21")};
  CHECK(dominates(inst, tight, raw));
  CHECK_FALSE(dominates(inst, raw, tight));
  const Cut p1{{q("-2/5")}, q("-1/5"), -1};
  const Cut p2{{q("-1/6")}, q("-1/3"), -1};
  CHECK_FALSE(dominates(inst, p1, p2));
  CHECK_FALSE(dominates(inst, p2, p1));
  CHECK_FALSE(dominates(inst, p1, p1));
  CHECK_THROWS_AS(dominates(inst, Cut{{-1}, 0, 0}, p1), Error);

  // Restricted to x >= 2 the second cut is the stronger one.
  const Instance right = testing::ex1(testing::half_line_from(2));
  CHECK(dominates(right, p2, p1));
  const Instance points = testing::ex1(FiniteDomain{{{0}, {1}}});
  CHECK(dominates(points, p1, p2));
}

TEST_CASE("property: parallel and serial enumeration agree") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t vars = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    LinearProgram lp(vars);
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    for (std::size_t r = 0; r < rows; ++r) {
      Vector coeffs(vars);
      for (auto& c : coeffs) c = coef(rng);
      lp.add_row(coeffs, r % 4 == 3 ? Relation::Equal : Relation::LessEqual, coef(rng) + 4);
    }
    lp.set_nonnegative(0, vars);
    const auto par = enumerate_vertices(lp);
    CHECK(par == enumerate_vertices_serial(lp));
    for (const auto& v : par) CHECK(is_vertex(lp, v));
  }
}

TEST_CASE("property: vertex enumeration agrees with simplex optima") {
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t vars = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    LinearProgram lp(vars);
    for (std::size_t r = 0; r < 5; ++r) {
      Vector coeffs(vars);
      for (auto& c : coeffs) c = coef(rng);
      lp.add_row(coeffs, Relation::LessEqual, coef(rng) + 3);
    }
    for (std::size_t j = 0; j < vars; ++j) {
      lp.set_lower_bound(j, -3);
      lp.set_upper_bound(j, 3);
    }
    Vector obj(vars);
    for (auto& c : obj) c = coef(rng);
    lp.set_objective(obj);
    const auto out = solve(lp);
    const auto vs = enumerate_vertices(lp);
    if (out.status == LpStatus::Infeasible) {
      CHECK(vs.empty());
      continue;
    }
    REQUIRE(out.status == LpStatus::Optimal);
    REQUIRE_FALSE(vs.empty());
    Rational best = dot(obj, vs.front());
    for (const auto& v : vs) best = std::min(best, dot(obj, v));
    CHECK(best == out.objective_value);
  }
}
