#pragma once

#include "polarcut/cglp.hpp"
#include "polarcut/lp.hpp"
#include "polarcut/model.hpp"
#include "polarcut/separation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polarcut {

enum class FaceClass { NonSupporting, Supporting, FacetDefining, ContainsEpi };
std::string to_string(FaceClass c);

struct FaceReport {
  int face_dimension = -1;  ///< -1 when h_epi != alpha
  int epi_dimension = 0;
  FaceClass classification = FaceClass::NonSupporting;

  /// Facet-defining or containing epi(z).
  bool facet_criterion() const noexcept {
    return classification == FaceClass::FacetDefining || classification == FaceClass::ContainsEpi;
  }
  friend bool operator==(const FaceReport&, const FaceReport&) = default;
};

/// Error{EmptyEpigraph}.
FaceReport face_report(const Instance& instance, const Cut& cut);

/// True iff the rows A_i y <= b_i - H_i x* (gamma_i > 0) and d^T y <= eta*
/// (gamma0 > 0) are infeasible together and each loses that property when
/// any single one of them is dropped.
bool is_mis_certificate(const Instance& instance, const EpiPoint& point, const Certificate& certificate);

/// Largest variable count accepted by the brute-force oracles.
inline constexpr std::size_t kMaxEnumerationVars = 12;

/// Every vertex of the feasible set of `lp` (objective ignored), sorted
/// lexicographically. Candidate bases are solved in parallel.
/// Error{TooLarge} above kMaxEnumerationVars variables.
std::vector<Vector> enumerate_vertices(const LinearProgram& lp);
std::vector<Vector> enumerate_vertices(const AltPolyhedron& system);
/// Single-threaded reference with identical output.
std::vector<Vector> enumerate_vertices_serial(const LinearProgram& lp);

/// Tight constraints at `candidate` have full rank.
/// Error{InfeasibleCandidate} when the candidate violates the system.
bool is_vertex(const LinearProgram& lp, const Vector& candidate);
bool is_vertex(const AltPolyhedron& system, const Vector& candidate);

/// Some vertex of P(x*, eta*) maps to a positive multiple of (pi, pi0).
/// Error{TooLarge} when m + 1 exceeds the enumeration bound.
bool has_mis_certificate(const Instance& instance, const EpiPoint& point, const Vector& pi, const Rational& pi0);

enum class ParetoKind { Pareto, NotPareto, NotApplicable };
std::string to_string(ParetoKind k);

struct ParetoVerdict {
  ParetoKind kind = ParetoKind::NotApplicable;
  /// Tight epigraph point with x in the relative interior of conv(S).
  std::optional<EpiPoint> witness;
};

ParetoVerdict pareto_verdict(const Instance& instance, const Cut& cut);

/// Bound eta >= (pi_a^T x - alpha_a)/(-pi0_a) is at least that of b on all of
/// S and strictly larger somewhere. Error{NotApplicable} unless both pi0 < 0.
bool dominates(const Instance& instance, const Cut& a, const Cut& b);

}  // namespace polarcut
