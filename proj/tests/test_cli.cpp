#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "pachner/cli.hpp"
#include "pachner/generate.hpp"
#include "pachner/io.hpp"

using namespace pachner;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "pachner_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  io::write_file(p, text);
  return p.string();
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

bool one_error_line(const Result& r, const std::string& code) {
  return lines(r.err) == 1 && r.err.rfind("ERROR " + code + ": ", 0) == 0;
}

}  // namespace

TEST_CASE("gen") {
  const auto r = run({"gen", "--kind", "sphere", "--dim", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");

  CHECK(run({"gen", "--kind", "simplex", "--dim", "1", "--format", "json"}).out == "{\"dim\":1,\"facets\":[[1,2]]}\n");
  CHECK(run({"gen", "--kind", "octahedron"}).out == io::format_facet_list(gen::octahedron()));

  const auto circle = write("circle.txt", "1 2\n2 3\n1 3\n");
  CHECK(run({"gen", "--kind", "suspension", "--input", circle}).out ==
        io::format_facet_list(gen::suspension(gen::sphere(1))));
  CHECK(run({"gen", "--kind", "cone", "--input", circle}).out == io::format_facet_list(gen::cone(gen::sphere(1))));

  const auto out = scratch("gen_out.json");
  CHECK(run({"gen", "--kind", "sphere", "--dim", "3", "--out", out.string()}).code == cli::kOk);
  CHECK(io::load(out) == gen::sphere(3));
}

TEST_CASE("info") {
  const auto sphere = write("s2.txt", "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  CHECK(run({"info", sphere}).out ==
        "dim: 2\n"
        "vertices: 4\n"
        "facets: 4\n"
        "f-vector: 4 6 4\n"
        "euler: 2\n"
        "pseudomanifold: yes\n"
        "boundary: closed\n"
        "closed-pseudomanifold: yes\n"
        "orientable: yes\n"
        "manifold: yes\n");

  const auto rp2 = write("rp2.txt", io::format_facet_list(gen::rp2_6()));
  const auto r = run({"info", rp2});
  CHECK(r.out.find("euler: 1\n") != std::string::npos);
  CHECK(r.out.find("orientable: no\n") != std::string::npos);

  const auto ball = write("ball.txt", "1 2 3 4\n2 3 4 5\n");
  const auto b = run({"info", ball});
  CHECK(b.out.find("boundary: 6 ridges\n") != std::string::npos);
  CHECK(b.out.find("orientable: n/a\n") != std::string::npos);
  CHECK(b.out.find("manifold: yes\n") != std::string::npos);
  // stable across runs
  CHECK(run({"info", ball}).out == b.out);
}

TEST_CASE("moves and apply") {
  const auto sphere = write("s2m.txt", "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  const auto m = run({"moves", sphere});
  CHECK(m.out == "2 1 2 3 | 5\n2 1 2 4 | 5\n2 1 3 4 | 5\n2 2 3 4 | 5\n");
  CHECK(run({"moves", sphere, "--kind", "1"}).out.empty());

  const auto tri = write("tri.txt", "1 2 3\n");
  CHECK(run({"apply", tri, "--a", "1 2 3"}).out == "1 2 4\n1 3 4\n2 3 4\n");

  CHECK(run({"apply", tri, "--a", "1 2 3", "--b", "9"}).out == "1 2 9\n1 3 9\n2 3 9\n");

  const auto quad = write("quad.txt", "1 2 3\n1 2 4\n");
  CHECK(run({"apply", quad, "--a", "1 2", "--b", "3 4"}).out == "1 3 4\n2 3 4\n");

  const auto bad = run({"apply", sphere, "--a", "1 2", "--b", "3 4"});
  CHECK(bad.code == cli::kInadmissible);
  CHECK(one_error_line(bad, "InadmissibleMove"));
  CHECK(bad.out.empty());

  const auto missing_b = run({"apply", quad, "--a", "1 2"});
  CHECK(missing_b.code == cli::kUsage);
  CHECK(one_error_line(missing_b, "Usage"));
}

TEST_CASE("walk then verify") {
  const auto sphere = write("s2w.txt", "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  const auto trace = scratch("walk.trace").string();
  const auto end = scratch("walk_end.txt").string();
  const auto w = run({"walk", sphere, "--steps", "40", "--budget", "9", "--seed", "17", "--trace", trace, "--out", end});
  CHECK(w.code == cli::kOk);
  const auto v = run({"verify", sphere, "--trace", trace});
  CHECK(v.code == cli::kOk);
  CHECK(v.out == "exact-match: 40 steps\n");

  // same flags, same bytes
  const auto first = io::read_file(trace);
  run({"walk", sphere, "--steps", "40", "--budget", "9", "--seed", "17", "--trace", trace, "--out", end});
  CHECK(io::read_file(trace) == first);

  // verifying against a different start diverges
  const auto oct = write("oct.txt", io::format_facet_list(gen::octahedron()));
  const auto d = run({"verify", oct, "--trace", trace});
  CHECK(d.code == cli::kInadmissible);
  CHECK(one_error_line(d, "TraceDivergence"));

  CHECK(run({"walk", sphere, "--steps", "3"}).code == cli::kUsage);
}

TEST_CASE("simplify") {
  const auto bumpy = write("bumpy.txt", io::format_facet_list(random_walk(gen::sphere(2), 30, 12, 3).end));
  const auto report = scratch("report.json").string();
  const auto r = run({"simplify", bumpy, "--seed", "4", "--report", report});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("verdict: REDUCED\n", 0) == 0);
  CHECK(r.err.find("wall-seconds") != std::string::npos);
  const auto first = io::read_file(report);
  run({"simplify", bumpy, "--seed", "4", "--report", report, "--jobs", "3"});
  CHECK(io::read_file(report) == first);

  const auto rp2 = write("rp2s.txt", io::format_facet_list(gen::rp2_6()));
  const auto u = run({"simplify", rp2, "--seed", "1", "--max-steps", "100", "--restarts", "2"});
  CHECK(u.code == cli::kUnknown);
  CHECK(u.out.rfind("verdict: UNKNOWN\n", 0) == 0);
}

TEST_CASE("flipgraph") {
  const auto sphere = write("s2f.txt", "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  const auto dir = scratch("graph");
  std::filesystem::remove_all(dir);
  const auto r = run({"flipgraph", sphere, "--budget", "7", "--out", dir.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("nodes: 9\n") != std::string::npos);
  CHECK(r.out.find("connected: yes\n") != std::string::npos);
  CHECK(r.out.find("classes-with-7-vertices: 5\n") != std::string::npos);
  CHECK(lines(io::read_file(dir / "graph.txt")) == 9);
  CHECK(std::filesystem::exists(dir / "nodes" / "8.txt"));
}

TEST_CASE("shell") {
  const auto ball = write("ball2.txt", "1 2 3 4\n2 3 4 5\n");
  const auto r = run({"shell", ball});
  CHECK(r.out ==
        "S 1 2 3 4 | 1 | 2 3 4\n"
        "  boundary: 0 1 | 2 3 4 verified\n"
        "S 2 3 4 5 | 5 | 2 3 4\n"
        "  boundary: 0 5 | 2 3 4 verified\n");

  const auto path = write("path.txt", "1 2 3\n2 3 4\n3 4 5\n");
  const auto trace = scratch("shell.trace").string();
  const auto s = run({"shell", path, "--to-facet", "--seed", "2", "--trace", trace});
  CHECK(s.code == cli::kOk);
  CHECK(s.out.find("verdict: SHELLED 2 steps\n") != std::string::npos);
  CHECK(run({"verify", path, "--trace", trace}).out == "exact-match: 2 steps\n");

  CHECK(run({"shell", path, "--to-facet"}).code == cli::kUsage);
  const auto sphere = write("s2sh.txt", "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  const auto closed = run({"shell", sphere});
  CHECK(closed.code == cli::kInadmissible);
  CHECK(one_error_line(closed, "ClosedComplex"));
}

TEST_CASE("errors") {
  const auto mixed = write("mixed.txt", "1 2 3\n1 2\n");
  const auto m = run({"info", mixed});
  CHECK(m.code == cli::kInputError);
  CHECK(one_error_line(m, "MixedDimensions"));

  const auto junk = write("junk.txt", "1 2 x\n");
  CHECK(one_error_line(run({"info", junk}), "ParseError"));

  const auto missing = run({"info", scratch("nope.txt").string()});
  CHECK(missing.code == cli::kInputError);
  CHECK(one_error_line(missing, "IoError"));

  const auto none = run({});
  CHECK(none.code == cli::kUsage);
  CHECK(one_error_line(none, "Usage"));

  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == cli::kUsage);
  CHECK(one_error_line(unknown, "Usage"));
}
