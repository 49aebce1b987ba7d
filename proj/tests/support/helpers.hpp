#pragma once

#include "polarcut/lp.hpp"
#include "polarcut/rational.hpp"

#include <string_view>

namespace polarcut::testing {

inline Rational q(std::string_view text) { return parse_rational(text); }

/// Checks an outcome against its own certificate: optimality by primal and
/// dual feasibility with equal objectives, infeasibility by the Farkas
/// identity, unboundedness by the ray. Independent of the simplex internals.
bool certificate_holds(const LinearProgram& lp, const LpOutcome& out);

}  // namespace polarcut::testing
