#include "polarcut/cli.hpp"

#include "polarcut/benders.hpp"
#include "polarcut/error.hpp"
#include "polarcut/io.hpp"
#include "polarcut/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace polarcut::cli {

namespace {

namespace fs = std::filesystem;

struct StrategyArgs {
  std::string name = "mis";
  std::vector<std::string> omega;
  std::string omega0;
  std::vector<std::string> omega_tilde;
  std::string blend = "1/2";
  std::vector<std::string> core;
};

void add_strategy_options(CLI::App* app, StrategyArgs& s, bool with_core) {
  std::vector<std::string> names{"mis", "directional", "custom"};
  if (with_core) names.push_back("pareto");
  app->add_option("--strategy", s.name, "Cut selection")->check(CLI::IsMember(names));
  app->add_option("--omega", s.omega, "Master-space direction (n values)")->expected(1, -1);
  app->add_option("--omega0", s.omega0, "Direction component for eta");
  app->add_option("--omega-tilde", s.omega_tilde, "Lifted objective (m values, then the eta weight)")
      ->expected(1, -1);
  if (with_core) {
    app->add_option("--blend", s.blend, "Core-point blend in (0,1) for the pareto strategy");
    app->add_option("--core", s.core, "Fixed core point (n values, then eta) for the pareto strategy")
        ->expected(1, -1);
  }
}

Vector to_vector(const std::vector<std::string>& text, std::size_t expected, const std::string& what) {
  if (text.size() != expected)
    throw Error(Errc::InvalidArgument, what + " needs " + std::to_string(expected) + " values, got " +
                                           std::to_string(text.size()));
  Vector out;
  for (const auto& t : text) out.push_back(parse_rational(t));
  return out;
}

Rational required(const std::string& text, const std::string& what) {
  if (text.empty()) throw Error(Errc::InvalidArgument, what + " is required");
  return parse_rational(text);
}

ObjectiveSpec make_objective(const Instance& inst, const StrategyArgs& s) {
  if (s.name == "directional")
    return Directional{to_vector(s.omega, inst.n, "--omega"), required(s.omega0, "--omega0")};
  if (s.name == "custom") {
    Vector all = to_vector(s.omega_tilde, inst.m + 1, "--omega-tilde");
    const Rational last = all.back();
    all.pop_back();
    return Custom{std::move(all), last};
  }
  return MisOnes{};
}

std::string join(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

int exit_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::DimensionMismatch:
    case Errc::InvalidArgument:
    case Errc::TooLarge: return kExitInputError;
    case Errc::EmptyEpigraph: return kExitInfeasible;
    default: return kExitIllPosed;
  }
}

int exit_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return kExitOk;
    case SolveStatus::Infeasible: return kExitInfeasible;
    case SolveStatus::IllPosed: return kExitIllPosed;
    case SolveStatus::IterationLimit: return kExitIterationLimit;
  }
  return kExitIllPosed;
}

SolverConfig make_config(const Instance& inst, const StrategyArgs& s, std::size_t max_iter, bool verify) {
  SolverConfig config;
  config.max_iterations = max_iter;
  config.verify_each_cut = verify;
  if (s.name == "pareto") {
    if (!s.core.empty())
      config.core_point_mode = FixedCore{EpiPoint::unstack(to_vector(s.core, inst.n + 1, "--core"))};
    else
      config.core_point_mode = UpdateOnIncumbent{parse_rational(s.blend)};
  } else {
    config.strategy = make_objective(inst, s);
  }
  config.validate();
  return config;
}

void print_solve(std::ostream& out, const SolveResult& r) {
  out << "status=" << to_string(r.status) << '\n';
  if (r.value) {
    out << "value=" << to_string(*r.value) << '\n';
    out << "x=" << join(r.x) << '\n';
    out << "y=" << join(r.y) << '\n';
  }
  if (!r.reason.empty()) out << "reason=" << r.reason << '\n';
  out << "iterations=" << r.trace.size() << '\n';
  std::size_t count = 0;
  for (const auto& rec : r.trace)
    if (std::holds_alternative<CutAdded>(rec.outcome)) ++count;
  out << "cuts=" << count << '\n';
  std::size_t i = 0;
  for (const auto& rec : r.trace) {
    const auto* a = std::get_if<CutAdded>(&rec.outcome);
    if (a == nullptr) continue;
    const std::string key = "cut." + std::to_string(++i);
    out << key << '=' << to_string(a->cut) << '\n';
    out << key << ".cglp_value=" << to_string(a->cglp_value) << '\n';
    out << key << ".supporting=" << flag(a->supporting) << '\n';
    if (!a->fallback.empty()) out << key << ".fallback=" << a->fallback << '\n';
    if (a->face_report) out << key << ".face=" << to_string(a->face_report->classification) << '\n';
  }
}

int cmd_solve(const Instance& inst, const StrategyArgs& s, std::size_t max_iter, bool verify,
              const std::string& trace_path, std::ostream& out) {
  const SolverConfig config = make_config(inst, s, max_iter, verify);
  const SolveResult r = solve(inst, config);
  print_solve(out, r);
  if (!trace_path.empty()) {
    std::ofstream t(trace_path);
    if (!t) throw Error(Errc::InvalidArgument, "cannot write " + trace_path);
    t << serialize_trace(inst, config, r);
    out << "trace=" << trace_path << '\n';
  }
  return exit_for(r.status);
}

int cmd_separate(const Instance& inst, const StrategyArgs& s, const std::vector<std::string>& point_text,
                 std::ostream& out) {
  const EpiPoint point = EpiPoint::unstack(to_vector(point_text, inst.n + 1, "--point"));
  const SeparationResult r = separate(inst, point, make_objective(inst, s));
  if (std::holds_alternative<InEpigraph>(r)) {
    out << "result=in_epigraph\n";
    return kExitOk;
  }
  const auto& sep = std::get<Separated>(r);
  out << "result=separated\n";
  out << "cut=" << to_string(sep.cut) << '\n';
  out << "pi=" << join(sep.cut.pi) << '\n';
  out << "pi0=" << to_string(sep.cut.pi0) << '\n';
  out << "alpha=" << to_string(sep.cut.alpha) << '\n';
  out << "gamma=" << join(sep.certificate.gamma) << '\n';
  out << "gamma0=" << to_string(sep.certificate.gamma0) << '\n';
  out << "cglp_value=" << to_string(sep.cglp_value) << '\n';
  out << "supporting=" << flag(sep.supporting) << '\n';
  return kExitOk;
}

int cmd_verify(const Instance& inst, const std::vector<std::string>& cut_text,
               const std::vector<std::string>& point_text, std::ostream& out) {
  const Vector v = to_vector(cut_text, inst.n + 2, "--cut");
  const Cut cut{Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(inst.n)), v[inst.n], v[inst.n + 1]};
  const ExtendedRational h = support_function(inst, cut.pi, cut.pi0);
  const FaceReport face = face_report(inst, cut);
  out << "cut=" << to_string(cut) << '\n';
  out << "support_value=" << to_string(h) << '\n';
  out << "valid=" << flag(h <= ExtendedRational(cut.alpha)) << '\n';
  out << "supporting=" << flag(h == ExtendedRational(cut.alpha)) << '\n';
  out << "face_dimension=" << face.face_dimension << '\n';
  out << "epi_dimension=" << face.epi_dimension << '\n';
  out << "classification=" << to_string(face.classification) << '\n';
  out << "facet_criterion=" << flag(face.facet_criterion()) << '\n';
  if (point_text.empty()) {
    out << "mis=n/a\n";
  } else {
    const EpiPoint point = EpiPoint::unstack(to_vector(point_text, inst.n + 1, "--point"));
    if (epi_contains(inst, point))
      out << "mis=n/a\n";
    else
      out << "mis=" << flag(has_mis_certificate(inst, point, cut.pi, cut.pi0)) << '\n';
  }
  const ParetoVerdict p = pareto_verdict(inst, cut);
  out << "pareto=" << to_string(p.kind) << '\n';
  if (p.witness) out << "pareto.witness=" << join(p.witness->stacked()) << '\n';
  return kExitOk;
}

int cmd_enumerate(const Instance& inst, const std::vector<std::string>& point_text, std::ostream& out) {
  const EpiPoint point = EpiPoint::unstack(to_vector(point_text, inst.n + 1, "--point"));
  out << "in_epigraph=" << flag(epi_contains(inst, point)) << '\n';
  for (const bool relaxed : {false, true}) {
    const std::string key = relaxed ? "P_le" : "P";
    const auto vs = enumerate_vertices(build_alt_polyhedron(inst, point, relaxed));
    out << key << ".count=" << vs.size() << '\n';
    for (std::size_t i = 0; i < vs.size(); ++i) out << key << '.' << (i + 1) << '=' << join(vs[i]) << '\n';
  }
  return kExitOk;
}

std::string bench_one(const fs::path& file, const std::string& strategy, std::size_t max_iter) {
  std::ostringstream line;
  line << "instance=" << file.filename().string() << " strategy=" << strategy;
  try {
    const Instance inst = load_instance(file);
    StrategyArgs s;
    s.name = strategy;
    if (strategy == "directional") {
      s.omega.assign(inst.n, "0");
      s.omega0 = "1";
    }
    const SolveResult r = solve(inst, make_config(inst, s, max_iter, false));
    std::size_t cuts = 0, fallbacks = 0;
    for (const auto& rec : r.trace) {
      if (const auto* a = std::get_if<CutAdded>(&rec.outcome)) {
        ++cuts;
        if (!a->fallback.empty()) ++fallbacks;
      }
    }
    line << " status=" << to_string(r.status) << " iterations=" << r.trace.size() << " cuts=" << cuts
         << " fallbacks=" << fallbacks << " value=" << (r.value ? to_string(*r.value) : "none");
  } catch (const Error& e) {
    line << " status=error error=" << to_string(e.code());
  }
  return line.str();
}

int cmd_bench(const std::string& dir, std::vector<std::string> strategies, std::size_t max_iter, std::ostream& out) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(Errc::InvalidArgument, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (strategies.empty()) strategies = {"mis", "directional", "pareto"};

  std::vector<std::pair<fs::path, std::string>> jobs;
  for (const auto& f : files)
    for (const auto& s : strategies) jobs.emplace_back(f, s);
  std::vector<std::string> lines(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) lines[i] = bench_one(jobs[i].first, jobs[i].second, max_iter);
  out << "instances=" << files.size() << '\n';
  for (const auto& l : lines) out << l << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-rational Benders decomposition and cut analysis", "polarcut"};
  app.require_subcommand(1);

  std::string file;
  StrategyArgs strategy;
  std::size_t max_iter = 100;
  bool verify = false;
  std::string trace_path;
  auto* solve_cmd = app.add_subcommand("solve", "Run the decomposition loop");
  solve_cmd->add_option("file", file, "Instance file")->required();
  add_strategy_options(solve_cmd, strategy, true);
  solve_cmd->add_option("--max-iter", max_iter, "Iteration limit")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--verify", verify, "Classify every cut");
  solve_cmd->add_option("--trace", trace_path, "Write a JSON trace");

  std::vector<std::string> point;
  auto* sep_cmd = app.add_subcommand("separate", "Separate one point");
  sep_cmd->add_option("file", file, "Instance file")->required();
  sep_cmd->add_option("--point", point, "x (n values) then eta")->expected(1, -1)->required();
  add_strategy_options(sep_cmd, strategy, false);

  std::vector<std::string> cut;
  auto* verify_cmd = app.add_subcommand("verify", "Classify a cut pi^T x + pi0 eta <= alpha");
  verify_cmd->add_option("file", file, "Instance file")->required();
  verify_cmd->add_option("--cut", cut, "pi (n values), pi0, alpha")->expected(1, -1)->required();
  verify_cmd->add_option("--point", point, "Separated point for the MIS check")->expected(1, -1);

  auto* enum_cmd = app.add_subcommand("enumerate", "Vertices of the alternative polyhedra");
  enum_cmd->add_option("file", file, "Instance file")->required();
  enum_cmd->add_option("--point", point, "x (n values) then eta")->expected(1, -1)->required();

  std::string dir;
  std::vector<std::string> strategies;
  auto* bench_cmd = app.add_subcommand("bench", "Iteration counts per strategy over a directory");
  bench_cmd->add_option("dir", dir, "Directory of instance files")->required();
  bench_cmd->add_option("--strategies", strategies, "mis,directional,pareto")
      ->delimiter(',')
      ->check(CLI::IsMember({"mis", "directional", "pareto"}));
  bench_cmd->add_option("--max-iter", max_iter, "Iteration limit")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*bench_cmd) return cmd_bench(dir, strategies, max_iter, out);
    const Instance inst = load_instance(file);
    if (*solve_cmd) return cmd_solve(inst, strategy, max_iter, verify, trace_path, out);
    if (*sep_cmd) return cmd_separate(inst, strategy, point, out);
    if (*verify_cmd) return cmd_verify(inst, cut, point, out);
    return cmd_enumerate(inst, point, out);
  } catch (const Error& e) {
    err << "error=" << to_string(e.code()) << '\n' << "message=" << e.what() << '\n';
    return exit_for(e.code());
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace polarcut::cli
