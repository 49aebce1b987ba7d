#include "polarcut/io.hpp"

#include "polarcut/error.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace polarcut {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, "field " + path + ": " + what);
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
    return Rational(Integer(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      field_error(path, e.what());
    }
  }
  if (j.is_number_float()) field_error(path, "floating-point numbers are not exact; use \"p/q\"");
  field_error(path, "expected an integer or a \"p/q\" string");
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

Vector read_vector(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected a list");
  Vector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Vector> read_rows(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected a list of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(read_vector(j[i], path + "[" + std::to_string(i) + "]"));
  return rows;
}

Matrix read_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  const auto data = read_rows(j, path);
  if (data.size() != rows)
    throw Error(Errc::DimensionMismatch, path + " has " + std::to_string(data.size()) + " rows, expected " +
                                             std::to_string(rows));
  for (std::size_t i = 0; i < data.size(); ++i)
    if (data[i].size() != cols)
      throw Error(Errc::DimensionMismatch, path + "[" + std::to_string(i) + "] has length " +
                                               std::to_string(data[i].size()) + ", expected " + std::to_string(cols));
  return Matrix::from_rows(data, cols);
}

std::size_t read_size(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) field_error(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

void check_length(const Vector& v, std::size_t n, const std::string& path) {
  if (v.size() != n)
    throw Error(Errc::DimensionMismatch, path + " has length " + std::to_string(v.size()) + ", expected " +
                                             std::to_string(n));
}

json write_rational(const Rational& r) {
  if (denominator(r) == 1) {
    const Integer num = numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
      return json(static_cast<std::int64_t>(num));
  }
  return json(to_string(r));
}

json write_vector(const Vector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(write_rational(e));
  return out;
}

json write_matrix(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(write_vector(m.row_vector(i)));
  return out;
}

json write_point(const EpiPoint& p) { return {{"x", write_vector(p.x)}, {"eta", write_rational(p.eta)}}; }

EpiPoint read_point(const json& j, const std::string& path) {
  return {read_vector(member(j, "x", path), join(path, "x")), read_rational(member(j, "eta", path), join(path, "eta"))};
}

json write_cut(const Cut& c) {
  return {{"pi", write_vector(c.pi)}, {"pi0", write_rational(c.pi0)}, {"alpha", write_rational(c.alpha)}};
}

Cut read_cut(const json& j, const std::string& path) {
  return {read_vector(member(j, "pi", path), join(path, "pi")), read_rational(member(j, "pi0", path), join(path, "pi0")),
          read_rational(member(j, "alpha", path), join(path, "alpha"))};
}

json write_face(const FaceReport& f) {
  return {{"face_dimension", f.face_dimension},
          {"epi_dimension", f.epi_dimension},
          {"classification", to_string(f.classification)}};
}

json write_strategy(const ObjectiveSpec& s) {
  if (std::holds_alternative<MisOnes>(s)) return {{"kind", "mis"}};
  if (const auto* d = std::get_if<Directional>(&s))
    return {{"kind", "directional"}, {"omega", write_vector(d->omega)}, {"omega0", write_rational(d->omega0)}};
  const auto& c = std::get<Custom>(s);
  return {{"kind", "custom"}, {"omega_tilde", write_vector(c.omega_tilde)}, {"omega_tilde0", write_rational(c.omega_tilde0)}};
}

json write_core_mode(const std::optional<CorePointMode>& mode) {
  if (!mode) return nullptr;
  if (const auto* f = std::get_if<FixedCore>(&*mode)) return {{"kind", "fixed"}, {"point", write_point(f->point)}};
  if (const auto* p = std::get_if<FromPoint>(&*mode))
    return {{"kind", "from_point"}, {"omega", write_vector(p->omega)}, {"omega0", write_rational(p->omega0)}};
  return {{"kind", "update_on_incumbent"}, {"blend", write_rational(std::get<UpdateOnIncumbent>(*mode).blend)}};
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string(what) + " line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                                      ": malformed JSON");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text, "instance");
  if (!doc.is_object()) field_error("<root>", "expected an object");
  const std::size_t n = read_size(member(doc, "n", ""), "n");
  const std::size_t k = read_size(member(doc, "k", ""), "k");
  const std::size_t m = read_size(member(doc, "m", ""), "m");
  Vector c = read_vector(member(doc, "c", ""), "c");
  Vector d = read_vector(member(doc, "d", ""), "d");
  Vector b = read_vector(member(doc, "b", ""), "b");
  check_length(c, n, "c");
  check_length(d, k, "d");
  check_length(b, m, "b");
  Matrix H = read_matrix(member(doc, "H", ""), "H", m, n);
  Matrix A = read_matrix(member(doc, "A", ""), "A", m, k);

  const json& mj = member(doc, "master", "");
  const json& type = member(mj, "type", "master");
  MasterDomain master;
  if (type == "polyhedron") {
    const auto rows = read_rows(member(mj, "G", "master"), "master.G");
    Vector g = read_vector(member(mj, "g", "master"), "master.g");
    for (std::size_t i = 0; i < rows.size(); ++i)
      check_length(rows[i], n, "master.G[" + std::to_string(i) + "]");
    check_length(g, rows.size(), "master.g");
    master = PolyhedralDomain{Matrix::from_rows(rows, n), std::move(g)};
  } else if (type == "finite") {
    auto points = read_rows(member(mj, "points", "master"), "master.points");
    for (std::size_t i = 0; i < points.size(); ++i)
      check_length(points[i], n, "master.points[" + std::to_string(i) + "]");
    master = FiniteDomain{std::move(points)};
  } else {
    field_error("master.type", "expected \"polyhedron\" or \"finite\"");
  }
  Rational eta_lb = read_rational(member(doc, "eta_lower_bound", ""), "eta_lower_bound");
  return Instance::make(std::move(c), std::move(d), std::move(H), std::move(A), std::move(b), std::move(master),
                        std::move(eta_lb));
}

std::string serialize_instance(const Instance& inst) {
  json master;
  if (const auto* poly = std::get_if<PolyhedralDomain>(&inst.master)) {
    master = {{"type", "polyhedron"}, {"G", write_matrix(poly->G)}, {"g", write_vector(poly->g)}};
  } else {
    json pts = json::array();
    for (const auto& p : std::get<FiniteDomain>(inst.master).points) pts.push_back(write_vector(p));
    master = {{"type", "finite"}, {"points", pts}};
  }
  json doc = {{"n", inst.n},
              {"k", inst.k},
              {"m", inst.m},
              {"c", write_vector(inst.c)},
              {"d", write_vector(inst.d)},
              {"H", write_matrix(inst.H)},
              {"A", write_matrix(inst.A)},
              {"b", write_vector(inst.b)},
              {"master", master},
              {"eta_lower_bound", write_rational(inst.eta_lower_bound)}};
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string instance_digest(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : serialize_instance(inst)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string serialize_trace(const Instance& inst, const SolverConfig& config, const SolveResult& result) {
  json iterations = json::array();
  for (const auto& rec : result.trace) {
    json it = {{"index", rec.index},
               {"master_point", write_point(rec.master_point)},
               {"master_value", write_rational(rec.master_value)}};
    if (const auto* added = std::get_if<CutAdded>(&rec.outcome)) {
      it["outcome"] = "cut_added";
      it["certificate"] = {{"gamma", write_vector(added->certificate.gamma)},
                           {"gamma0", write_rational(added->certificate.gamma0)}};
      it["cut"] = write_cut(added->cut.canonical());
      it["cut_text"] = to_string(added->cut);
      it["cglp_value"] = write_rational(added->cglp_value);
      it["supporting"] = added->supporting;
      if (added->direction)
        it["direction"] = {{"omega", write_vector(added->direction->first)},
                           {"omega0", write_rational(added->direction->second)}};
      if (!added->fallback.empty()) it["fallback"] = added->fallback;
      if (added->face_report) it["face_report"] = write_face(*added->face_report);
    } else {
      it["outcome"] = "converged";
    }
    iterations.push_back(std::move(it));
  }
  json doc = {{"format", "polarcut-trace/1"},
              {"instance_digest", instance_digest(inst)},
              {"config",
               {{"strategy", write_strategy(config.strategy)},
                {"max_iterations", config.max_iterations},
                {"core_point_mode", write_core_mode(config.core_point_mode)},
                {"verify_each_cut", config.verify_each_cut}}},
              {"iterations", iterations},
              {"status", to_string(result.status)}};
  if (result.value) {
    doc["value"] = write_rational(*result.value);
    doc["x"] = write_vector(result.x);
    doc["y"] = write_vector(result.y);
  }
  if (!result.reason.empty()) doc["reason"] = result.reason;
  return doc.dump(2) + "\n";
}

ReplayReport replay_trace(const Instance& inst, std::string_view trace_text) {
  const json doc = parse_json(trace_text, "trace");
  ReplayReport report;
  auto mismatch = [&](std::string what) {
    report.ok = false;
    report.mismatches.push_back(std::move(what));
  };
  const json& digest = member(doc, "instance_digest", "");
  if (!digest.is_string()) field_error("instance_digest", "expected a string");
  if (digest.get<std::string>() != instance_digest(inst)) mismatch("instance digest differs");

  const json& iterations = member(doc, "iterations", "");
  if (!iterations.is_array()) field_error("iterations", "expected a list");
  std::vector<Cut> cuts;
  for (std::size_t i = 0; i < iterations.size(); ++i) {
    const std::string path = "iterations[" + std::to_string(i) + "]";
    const json& it = iterations[i];
    const EpiPoint recorded = read_point(member(it, "master_point", path), path + ".master_point");
    const Rational value = read_rational(member(it, "master_value", path), path + ".master_value");
    const MasterSolution master = solve_master(inst, cuts);
    if (master.status != MasterStatus::Solved) {
      mismatch(path + ": master no longer solvable");
      break;
    }
    if (master.value != value) mismatch(path + ": master value " + to_string(master.value) + " != " + to_string(value));
    if (!(master.point == recorded)) mismatch(path + ": master point differs");
    ++report.iterations;

    const json& outcome = member(it, "outcome", path);
    if (outcome == "converged") continue;
    const Cut cut = read_cut(member(it, "cut", path), path + ".cut");
    if (cut.pi.size() != inst.n) throw Error(Errc::DimensionMismatch, path + ".cut.pi has the wrong length");
    if (cut.violation(recorded) <= 0) mismatch(path + ": cut does not separate its master point");
    if (const auto f = it.find("face_report"); f != it.end()) {
      const json now = write_face(face_report(inst, cut));
      if (now != *f) mismatch(path + ": face report differs");
    }
    cuts.push_back(cut);
  }
  return report;
}

}  // namespace polarcut
