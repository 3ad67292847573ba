#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "morreykit/cli.hpp"
#include "morreykit/io.hpp"
#include "oracles.hpp"

using namespace morreykit;
namespace fs = std::filesystem;

namespace {

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

std::string temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("morreykit_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

std::string body(const std::string& out) { return out.substr(out.find('\n') + 1); }

}  // namespace

TEST_CASE("norm subcommand") {
  const auto seq = temp_file("triple.json", "[[-1, 1], [0, 1], [1, 1]]");
  const auto r = run({"norm", "--seq", seq, "--p", "1", "--q", "2", "--weight", "one"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# ", 0) == 0);
  CHECK(r.out.find("\"window\":[-13,13]") != std::string::npos);
  const auto j = nlohmann::json::parse(body(r.out));
  CHECK(j["value"].get<double>() == doctest::Approx(1.7320508075688772).epsilon(1e-15));
  CHECK(j["witness"]["m"] == 0);
  CHECK(j["witness"]["N"] == 1);

  const auto inf = run({"norm", "--seq", seq, "--p", "2", "--q", "inf"});
  CHECK(nlohmann::json::parse(body(inf.out))["value"] == 1.0);
  const auto weak = run({"weak-norm", "--seq", seq, "--p", "1", "--q", "2"});
  CHECK(nlohmann::json::parse(body(weak.out))["lambda"] == 1.0);
}

TEST_CASE("czd subcommand") {
  const auto seq = temp_file("four.json", "[[1, 4]]");
  const auto r = run({"czd", "--seq", seq, "--weight", "one", "--t", "1"});
  CHECK(r.code == 0);
  CHECK(body(r.out) == "[{\"avg\":2.0,\"hi\":2,\"level\":1,\"lo\":1,\"pos\":1}]\n");
  CHECK(run({"czd", "--seq", seq, "--t", "0"}).code == 2);
  CHECK(run({"czd", "--seq", seq}).code == 2);
}

TEST_CASE("characteristic and maximal subcommands") {
  const auto a = run({"apnorm", "--weight", "power", "--beta", "1", "--p", "1", "--window", "-2:2"});
  CHECK(a.code == 0);
  CHECK(body(a.out) == "{\"value\":1.5,\"witness\":[1,2]}\n");
  const auto w = temp_file("w.json", R"({"lo": 0, "values": [1.0, 4.0]})");
  const auto b = run({"apnorm", "--weight", w, "--p", "2"});
  CHECK(nlohmann::json::parse(body(b.out))["value"].get<double>() == doctest::Approx(1.5625));
  CHECK(run({"rhnorm", "--weight", w, "--r", "2"}).code == 0);
  CHECK(run({"rhnorm", "--weight", w, "--r", "1"}).code == 2);
  CHECK(run({"apnorm", "--weight", "one", "--p", "2"}).code == 2);

  const auto seq = temp_file("delta.json", "[[0, 1]]");
  const auto m = run({"maximal", "--seq", seq, "--window", "0:3"});
  CHECK(body(m.out) == "k,value,radius\n0,1,0\n1,0.33333333333333331,1\n2,0.20000000000000001,2\n"
                       "3,0.14285714285714285,3\n");
  const auto mw = run({"wmaximal", "--seq", seq, "--weight", "power", "--beta", "1", "--window", "2:2"});
  CHECK(body(mw.out) == "k,value,radius\n2,0.090909090909090912,2\n");
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"norm", "--seq", "/nonexistent.json", "--p", "2", "--q", "3"}).code == 2);
  const auto bad = temp_file("bad.json", "[[0, 1], [0, 2]]");
  const auto r = run({"norm", "--seq", bad, "--p", "2", "--q", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("sequence[1]") != std::string::npos);
  const auto seq = temp_file("ok.json", "[[0, 1]]");
  CHECK(run({"norm", "--seq", seq, "--p", "3", "--q", "2"}).err.find("--q") != std::string::npos);
  CHECK(run({"norm", "--seq", seq, "--p", "0.5", "--q", "2"}).code == 2);
  CHECK(run({"norm", "--seq", seq, "--p", "2", "--q", "3", "--window", "5:1"}).code == 2);
  CHECK(run({"verify", "--seq", seq, "--lambda", "0"}).code == 2);
  CHECK(run({"norm", "--seq", temp_file("zero.json", "[[0, 0]]"), "--p", "1", "--q", "2"}).code == 2);
  CHECK(run({"norm", "--seq", temp_file("garbage.json", "[[0, 1"), "--p", "1", "--q", "2"}).code == 2);
}

TEST_CASE("verify subcommand and determinism") {
  const std::vector<std::string> base{"verify", "--weight", "power", "--beta", "0.5", "--p", "2",
                                      "--instances", "4", "--seed", "3"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto many = base;
  many.insert(many.end(), {"--threads", "3"});
  const auto a = run(one);
  const auto b = run(many);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("check_id,params_json,lhs,rhs,constant_used,pass,witness_json") != std::string::npos);
  CHECK(nlohmann::json::parse(a.err)["failed"] == 0);
}

TEST_CASE("sweep and probe subcommands") {
  const auto s = run({"sweep-beta", "--p", "2", "--q", "3", "--betas", "0:1:0.5", "--ladder", "16,32"});
  CHECK(s.code == 0);
  std::istringstream lines(body(s.out));
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 1 + 3 * 2);
  CHECK(run({"sweep-beta", "--betas", "1:0:1", "--p", "2", "--q", "3"}).code == 2);

  const auto p = run({"probe-necessity", "--p", "2", "--q", "3", "--beta", "0", "--ladder", "4"});
  CHECK(p.code == 1);  // the 2/7 bound fails at the far probed points
  CHECK(p.out.find("necessity_probe") != std::string::npos);
}

TEST_CASE("sequence files round-trip") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    const auto x = oracle::random_real_sequence(rng, -100, 100, 30, 1e6);
    const fs::path p = fs::temp_directory_path() / "morreykit_roundtrip.json";
    write_sequence(p.string(), x);
    CHECK(read_sequence(p.string()) == x);
  }
}

TEST_CASE("out flag writes the report to a file") {
  const auto seq = temp_file("four2.json", "[[1, 4]]");
  const fs::path out = fs::temp_directory_path() / "morreykit_czd_out.json";
  const auto r = run({"czd", "--seq", seq, "--t", "3", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string header, payload;
  std::getline(in, header);
  std::getline(in, payload);
  CHECK(payload == "[{\"avg\":4.0,\"hi\":1,\"level\":0,\"lo\":1,\"pos\":1}]");
}
