#include <doctest.h>

#include "polarcut/cli.hpp"
#include "polarcut/error.hpp"
#include "polarcut/io.hpp"
#include "support/helpers.hpp"
#include "support/instances.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace polarcut;
using polarcut::testing::q;

namespace {

const char* kEx1 = R"({
  "n": 1, "k": 1, "m": 3,
  "c": [1], "d": [1],
  "H": [[-2], ["-1/2"], [-4]],
  "A": [[-1], [-1], [-4]],
  "b": [-5, -3, -14],
  "master": {"type": "polyhedron", "G": [[-1]], "g": [0]},
  "eta_lower_bound": 0
})";

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("polarcut_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& out, const std::string& line) {
  std::istringstream in(out);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("instance documents") {
  CHECK(parse_instance(kEx1) == testing::ex1());
  const std::string thirds = replace(kEx1, "\"-1/2\"", "\"-3/6\"");
  CHECK(parse_instance(thirds) == testing::ex1());
  const std::string one_third = replace(kEx1, "\"eta_lower_bound\": 0", "\"eta_lower_bound\": \"1/3\"");
  CHECK(parse_instance(one_third).eta_lower_bound == q("1/3"));

  const std::string finite = replace(kEx1, R"({"type": "polyhedron", "G": [[-1]], "g": [0]})",
                                     R"({"type": "finite", "points": [[0], [1], [2], [3]]})");
  CHECK(parse_instance(finite) == testing::ex1(FiniteDomain{{{0}, {1}, {2}, {3}}}));
}

TEST_CASE("instance document errors") {
  CHECK(code_of([] { parse_instance(replace(kEx1, "[[-2], [\"-1/2\"], [-4]]", "[[-2, 1], [\"-1/2\"], [-4]]")); }) ==
        Errc::DimensionMismatch);
  CHECK(code_of([] { parse_instance(replace(kEx1, "\"m\": 3", "\"m\": 2")); }) == Errc::DimensionMismatch);
  CHECK(code_of([] { parse_instance(replace(kEx1, "[-5, -3, -14]", "[-5, -3.5, -14]")); }) == Errc::ParseError);
  CHECK(message_of([] { parse_instance(replace(kEx1, "[-5, -3, -14]", "[-5, -3.5, -14]")); }).find("b[1]") !=
        std::string::npos);
  CHECK(message_of([] { parse_instance(replace(kEx1, "\"-1/2\"", "\"-1/0\"")); }).find("H[1][0]") !=
        std::string::npos);
  CHECK(message_of([] { parse_instance(replace(kEx1, "\"eta_lower_bound\": 0", "\"eta\": 0")); })
            .find("eta_lower_bound") != std::string::npos);
  CHECK(code_of([] { parse_instance(replace(kEx1, "polyhedron", "ball")); }) == Errc::ParseError);
  const std::string broken = replace(kEx1, "\"b\": [-5, -3, -14],", "\"b\": [-5, -3, -14]");
  CHECK(code_of([&] { parse_instance(broken); }) == Errc::ParseError);
  CHECK(message_of([&] { parse_instance(broken); }).find("line 7") != std::string::npos);
  CHECK(code_of([] { load_instance("/nonexistent/instance.json"); }) == Errc::ParseError);
}

TEST_CASE("property: serialization round-trips exactly") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = testing::random_instance(rng, {3, 3, 5, 5});
    inst.H(0, 0) = q("-7/3");
    inst.b[0] = q("123456789012345678901234567890");
    inst.eta_lower_bound = q("-9223372036854775809");
    if (trial % 3 == 0) inst.master = FiniteDomain{{Vector(inst.n, q("1/2")), Vector(inst.n, Rational(-2))}};
    if (trial % 5 == 0) inst.master = PolyhedralDomain{Matrix(0, inst.n), {}};
    const Instance back = parse_instance(serialize_instance(inst));
    CHECK(back == inst);
    CHECK(instance_digest(back) == instance_digest(inst));
  }
  CHECK(instance_digest(testing::ex1()) != instance_digest(testing::ex1(testing::half_line_from(1))));
}

TEST_CASE("traces replay") {
  const Instance inst = testing::ex1();
  SolverConfig config;
  config.strategy = MisOnes{};
  config.verify_each_cut = true;
  const SolveResult r = solve(inst, config);
  const std::string trace = serialize_trace(inst, config, r);
  const ReplayReport ok = replay_trace(inst, trace);
  CHECK(ok.ok);
  CHECK(ok.iterations == r.trace.size());
  CHECK(ok.mismatches.empty());

  const ReplayReport other = replay_trace(testing::ex1(testing::half_line_from(1)), trace);
  CHECK_FALSE(other.ok);

  const std::string tampered = replace(trace, "\"classification\": \"non_supporting\"", "\"classification\": \"supporting\"");
  CHECK_FALSE(replay_trace(inst, tampered).ok);
  CHECK(code_of([] { replay_trace(testing::ex1(), "{"); }) == Errc::ParseError);
}

TEST_CASE("command line: solve") {
  TempDir dir;
  const std::string ex1 = dir.write("ex1.json", kEx1);
  const std::string trace = (dir.path / "t.json").string();
  const Run r = run({"solve", ex1, "--strategy", "directional", "--omega", "2", "--omega0", "3", "--trace", trace});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "status=optimal"));
  CHECK(has_line(r.out, "value=11/3"));
  CHECK(has_line(r.out, "cut.1=1/2*x + eta >= 3"));
  std::ifstream in(trace);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(replay_trace(testing::ex1(), text.str()).ok);

  CHECK(run({"solve", (dir.path / "missing.json").string()}).code == 4);
  CHECK(run({"solve", ex1, "--max-iter", "1"}).code == 5);
  CHECK(run({"solve", ex1, "--strategy", "directional", "--omega", "2"}).code == 4);
  CHECK(run({"solve", ex1, "--strategy", "sideways"}).code == 4);
  CHECK(run({"solve", ex1, "--strategy", "pareto", "--blend", "1"}).code == 4);
  const Run custom = run({"solve", ex1, "--strategy", "custom", "--omega-tilde", "-1", "-1", "-1", "-1"});
  CHECK(custom.code == 0);
  CHECK(has_line(custom.out, "cut.1=x + eta >= 7/2"));
  const Run verified = run({"solve", ex1, "--verify"});
  CHECK(has_line(verified.out, "cut.1.face=non_supporting"));

  const std::string high = dir.write("high.json", replace(kEx1, "\"eta_lower_bound\": 0", "\"eta_lower_bound\": 10"));
  CHECK(run({"solve", high}).code == 3);
  const std::string empty = dir.write("empty.json", replace(kEx1, "\"G\": [[-1]], \"g\": [0]",
                                                            "\"G\": [[-1], [1]], \"g\": [0, -1]"));
  CHECK(run({"solve", empty}).code == 2);
  const std::string bad = dir.write("bad.json", "{\"n\": 1");
  CHECK(run({"solve", bad}).code == 4);
}

TEST_CASE("command line: separate, verify, enumerate, bench") {
  TempDir dir;
  const std::string ex1 = dir.write("ex1.json", kEx1);
  const Run sep = run({"separate", ex1, "--point", "0", "0", "--strategy", "mis"});
  CHECK(sep.code == 0);
  CHECK(has_line(sep.out, "cut=x + eta >= 7/2"));
  CHECK(has_line(sep.out, "supporting=false"));
  CHECK(has_line(sep.out, "gamma=0 0 1/14"));
  const Run inside = run({"separate", ex1, "--point", "2", "3"});
  CHECK(has_line(inside.out, "result=in_epigraph"));
  CHECK(run({"separate", ex1, "--point", "0", "0", "--strategy", "directional", "--omega", "-1", "--omega0", "0"})
            .code == 3);
  CHECK(run({"separate", ex1, "--point", "0"}).code == 4);

  const Run ver = run({"verify", ex1, "--cut", "-2/5", "-1/5", "-1", "--point", "0", "0"});
  CHECK(ver.code == 0);
  CHECK(has_line(ver.out, "classification=facet_defining"));
  CHECK(has_line(ver.out, "mis=true"));
  CHECK(has_line(ver.out, "pareto=pareto"));
  const Run nomis = run({"verify", ex1, "--cut", "-1", "-1", "-4"});
  CHECK(has_line(nomis.out, "mis=n/a"));
  CHECK(has_line(nomis.out, "valid=false"));

  const Run en = run({"enumerate", ex1, "--point", "0", "0"});
  CHECK(en.code == 0);
  CHECK(has_line(en.out, "P.count=3"));
  CHECK(has_line(en.out, "P.1=0 0 1/14 2/7"));
  CHECK(has_line(en.out, "P_le.count=3"));

  dir.write("b.json", replace(kEx1, R"({"type": "polyhedron", "G": [[-1]], "g": [0]})",
                              R"({"type": "finite", "points": [[0], [1], [2], [3]]})"));
  const Run bench = run({"bench", dir.path.string(), "--strategies", "mis,directional"});
  CHECK(bench.code == 0);
  CHECK(has_line(bench.out, "instances=2"));
  CHECK(bench.out.find("instance=b.json strategy=mis status=optimal") != std::string::npos);
  CHECK(bench.out.find("instance=ex1.json strategy=directional status=optimal") != std::string::npos);
  CHECK(bench.out.find("value=4") != std::string::npos);
  CHECK(run({"bench", (dir.path / "nope").string()}).code == 4);
  CHECK(run({}).code == 4);
}
