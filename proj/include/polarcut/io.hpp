#pragma once

#include "polarcut/benders.hpp"
#include "polarcut/model.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace polarcut {

/// Reads the JSON instance format:
///   {"n":1, "k":1, "m":3, "c":[1], "d":[1], "H":[[-2],["-1/2"],[-4]],
///    "A":[[-1],[-1],[-4]], "b":[-5,-3,-14],
///    "master":{"type":"polyhedron","G":[[-1]],"g":[0]},
///    "eta_lower_bound":0}
/// Numbers are integers or "p/q" strings; "master" may instead be
/// {"type":"finite","points":[[0],[1]]}.
/// Error{ParseError} naming the line or field, Error{DimensionMismatch}.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance; parse_instance(serialize_instance(i)) == i.
std::string serialize_instance(const Instance& instance);

/// Error{ParseError} when the file cannot be read.
Instance load_instance(const std::filesystem::path& path);

/// "fnv1a64:<16 hex digits>" of the serialized instance.
std::string instance_digest(const Instance& instance);

/// Trace document with the instance digest, the configuration, every
/// iteration (canonical cuts) and the final status.
std::string serialize_trace(const Instance& instance, const SolverConfig& config, const SolveResult& result);

struct ReplayReport {
  bool ok = true;
  std::size_t iterations = 0;
  std::vector<std::string> mismatches;
};

/// Re-solves the master with the recorded cuts and compares master points
/// and values; recomputes recorded face reports. Error{ParseError}.
ReplayReport replay_trace(const Instance& instance, std::string_view trace_text);

}  // namespace polarcut
