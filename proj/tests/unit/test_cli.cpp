#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "helpers.hpp"
#include "pfcone/checks.hpp"
#include "pfcone/cli.hpp"
#include "pfcone/error.hpp"

using namespace pfcone;
using namespace pfcone::test;
namespace fs = std::filesystem;

namespace {

// Scratch directory removed at scope exit.
class Scratch {
 public:
  Scratch() {
    static int counter = 0;
    dir_ = fs::temp_directory_path() / ("pfcone_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string matrix(const std::string& name, const std::string& rows) const {
    Json r = parse_json_exact(rows);
    return write(name, "{\"n\":" + std::to_string(r.size()) + ",\"entries\":" + rows + "}");
  }
  std::string vector(const std::string& name, const std::string& entries) const {
    return write(name, "{\"entries\":" + entries + "}");
  }

 private:
  fs::path dir_;
};

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pfcone");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace

TEST_CASE("solve1 reproduces the diagonal counterexample") {
  Scratch s;
  auto m = s.matrix("m.json", "[[0,0,0],[0,1,0],[0,0,2]]");
  auto b = s.vector("b.json", "[0,0,1]");
  Outcome o = run_cli({"solve1", "--lambda", "1", "--b", b, m});
  CHECK(o.code == 0);
  Json d = o.doc();
  CHECK(d["solvable"] == false);
  CHECK(d["rho_b"] == 2);
  CHECK(d["fired_condition"] == "h");
  CHECK(d["mode"] == "rational");
}

TEST_CASE("analyze reports two final basic classes for the identity") {
  Scratch s;
  Outcome o = run_cli({"analyze", s.matrix("m.json", "[[1,0],[0,1]]")});
  REQUIRE(o.code == 0);
  Json d = o.doc();
  for (const char* key : {"classes", "taxonomy", "spectral", "faces"}) CHECK(d.contains(key));
  REQUIRE(d["taxonomy"].size() == 2);
  for (const auto& cls : d["taxonomy"]) {
    CHECK(cls["basic"] == true);
    CHECK(cls["final"] == true);
  }
}

TEST_CASE("check of the positive sub-invariant vector property on the Jordan block") {
  Scratch s;
  Outcome o = run_cli({"check", "--property", "thm5.10", s.matrix("m.json", "[[1,1],[0,1]]")});
  REQUIRE(o.code == 0);
  Json d = o.doc();
  CHECK(d["pass"] == true);
  CHECK(d["rho_in_sigma1"] == false);
  CHECK(d["lp_agrees"] == true);
}

TEST_CASE("every property suite runs and passes on small matrices") {
  Scratch s;
  for (const char* rows : {"[[1,1],[0,1]]", "[[2,1,0],[0,1,0],[0,0,1]]", "[[0,1],[1,0]]", "[[0,0],[0,0]]"}) {
    auto m = s.matrix("m.json", rows);
    for (const std::string& id : property_ids()) {
      Outcome o = run_cli({"check", "--property", id, m});
      INFO(id << " on " << rows << ": " << o.out);
      REQUIRE(o.code == 0);
      CHECK(o.doc()["pass"] == true);
      CHECK(o.doc()["property"] == id);
    }
  }
}

TEST_CASE("solve2, cw and alt payloads") {
  Scratch s;
  auto m = s.matrix("m.json", "[[2,0],[1,1]]");
  auto e2 = s.vector("e2.json", "[0,1]");
  Json solve2 = run_cli({"solve2", "--lambda", "2", "--b", e2, m}).doc();
  CHECK(solve2["solvable"] == true);
  CHECK(solve2["regime"] == "above");
  CHECK(solve2["certificate"] == "cor4_2");
  CHECK(solve2["x"] == Json::array({1, 0}));

  auto j = s.matrix("j.json", "[[1,1],[0,1]]");
  auto x = s.vector("x.json", "[0,1]");
  Json cw = run_cli({"cw", "--x", x, j}).doc();
  CHECK(cw["R_upper"] == "inf");
  CHECK(cw["r_lower"] == 1);
  Json sets = run_cli({"cw", j}).doc();
  CHECK(sets["sup_omega"] == 1);
  CHECK(sets["inf_sigma1_attained"] == false);

  Json alt = run_cli({"alt", "--shift", "1", "--x", x, "--max-steps", "5", j}).doc();
  CHECK(alt["kind"] == "finite");
  CHECK(alt["length"] == 2);
  CHECK(alt["is_m_matrix"] == true);
}

TEST_CASE("non-integer rationals are emitted as p/q strings") {
  Scratch s;
  auto m = s.matrix("m.json", "[[0,1],[1,0]]");
  auto x = s.vector("x.json", "[1,2]");
  Json cw = run_cli({"cw", "--x", x, m}).doc();
  CHECK(cw["r_lower"] == "1/2");
  CHECK(cw["R_upper"] == 2);
}

TEST_CASE("auto mode falls back to float for irrational radii") {
  Scratch s;
  auto m = s.matrix("m.json", "[[1,1],[1,0]]");
  Outcome o = run_cli({"analyze", m});
  REQUIRE(o.code == 0);
  CHECK(o.doc()["mode"] == "float");
  CHECK(o.doc()["spectral"]["rho"].get<double>() == doctest::Approx(1.6180339887));

  Outcome strict = run_cli({"--mode", "rational", "analyze", m});
  CHECK(strict.code == cli::kNumericError);
  CHECK(strict.doc()["error"] == "mode");

  Outcome after_verb = run_cli({"analyze", "--mode", "float", m});
  CHECK(after_verb.code == 0);
  CHECK(after_verb.doc()["mode"] == "float");
}

TEST_CASE("usage and input errors exit with code 2") {
  Scratch s;
  auto m = s.matrix("m.json", "[[1,0],[0,1]]");
  auto b = s.vector("b.json", "[1,0]");
  CHECK(run_cli({}).code == cli::kInputError);
  CHECK(run_cli({"bogus", m}).code == cli::kInputError);
  CHECK(run_cli({"analyze", "--nope", m}).code == cli::kInputError);
  CHECK(run_cli({"check", "--property", "thm9.9", m}).code == cli::kInputError);
  CHECK(run_cli({"analyze", (fs::temp_directory_path() / "pfcone_missing.json").string()}).code == cli::kInputError);
  CHECK(run_cli({"analyze", s.write("bad.json", "{\"n\":2,")}).code == cli::kInputError);
  CHECK(run_cli({"analyze", s.matrix("neg.json", "[[1,-1],[0,1]]")}).code == cli::kInputError);
  CHECK(run_cli({"solve1", "--lambda", "0", "--b", b, m}).code == cli::kInputError);
  CHECK(run_cli({"solve1", "--lambda", "1", "--b", s.vector("short.json", "[1]"), m}).code == cli::kInputError);

  Outcome o = run_cli({"analyze", s.matrix("neg2.json", "[[1,-1],[0,1]]")});
  Json d = o.doc();
  CHECK(d.contains("error"));
  CHECK(d.contains("message"));
}

TEST_CASE("output is byte-stable across runs") {
  Scratch s;
  auto g = rng(80);
  for (int t = 0; t < 20; ++t) {
    NonnegMatrix p = fuzz::random_matrix(g);
    auto m = s.write("m.json", dump(matrix_to_json(p.mat())));
    auto b = s.write("b.json", dump(Json{{"entries", vector_to_json(fuzz::random_vector(g, p.n()))}}));
    for (std::vector<std::string> args : {std::vector<std::string>{"analyze", m},
                                          std::vector<std::string>{"solve1", "--lambda", "3/2", "--b", b, m},
                                          std::vector<std::string>{"solve2", "--lambda", "1", "--b", b, m},
                                          std::vector<std::string>{"cw", m}}) {
      Outcome first = run_cli(args), second = run_cli(args);
      CHECK(first.code == second.code);
      CHECK(first.out == second.out);
      CHECK(first.out.back() == '\n');
    }
  }
}

TEST_CASE("evaluate and describe_error") {
  cli::Request r;
  r.verb = "solve1";
  r.matrix = parse_json_exact(R"({"n":2,"entries":[[2,0],[1,1]]})");
  r.lambda = "3";
  r.b = parse_json_exact(R"({"entries":[1,1]})");
  Json d = cli::evaluate(r);
  CHECK(d["solvable"] == true);
  CHECK(d["fired_condition"] == "g");

  Json doc;
  CHECK(cli::describe_error(InputError("x"), doc) == cli::kInputError);
  CHECK(doc["error"] == "input");
  CHECK(cli::describe_error(PreconditionError("x"), doc) == cli::kInputError);
  CHECK(cli::describe_error(NumericFailure("x"), doc) == cli::kNumericError);
  CHECK(cli::describe_error(ModeMismatch("x"), doc) == cli::kNumericError);
  CHECK(cli::describe_error(InternalInconsistency("x"), doc) == cli::kNumericError);
}
