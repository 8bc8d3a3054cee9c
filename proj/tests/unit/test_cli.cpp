#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "besselxi/cli.hpp"
#include "check_close.hpp"
#include "json.hpp"

using namespace besselxi;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::parse_and_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "besselxi_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

const std::set<std::string> kExactKeys = {"check_id", "params", "lhs",    "rhs",    "abs_diff",
                                          "rel_diff", "ratio",  "tol",    "passed", "wall_ms"};

std::set<std::string> keys_of(const json& j) {
  std::set<std::string> k;
  for (const auto& [key, _] : j.items()) k.insert(key);
  return k;
}

}  // namespace

TEST_CASE("eval") {
  Run r = run_cli({"eval", "Xi", "--y", "0"});
  CHECK(r.code == 0);
  CHECK_REL(std::stod(r.out), 0.49712077818831411, 1e-13);

  r = run_cli({"eval", "j0", "--x=1"});
  CHECK_REL(std::stod(r.out), 0.76519768655796655, 1e-14);

  r = run_cli({"eval", "gamma", "--z", "1+1i"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0.4980156681183", 0) == 0);
  CHECK(r.out.find("-0.154949828301") != std::string::npos);

  r = run_cli({"eval", "psi", "--y", "1", "--convention", "plain"});
  CHECK_REL(std::stod(r.out), 0.38631860241332608, 1e-14);

  r = run_cli({"eval", "u", "--r", "1", "--t", "1"});
  CHECK_REL(std::stod(r.out), 0.28556906232129696, 1e-12);

  r = run_cli({"eval", "h1", "--y", "0.8", "--r", "0.7", "--imag-r", "1", "--t", "1.5"});
  CHECK_REL(std::stod(r.out), -0.49998007952813396, 1e-13);

  r = run_cli({"eval", "1f1", "--a", "0.5", "--w", "-1"});
  CHECK_REL(std::stod(r.out), 0.64503527044915007, 1e-13);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"verify", "nosuchcheck"}).code == 2);
  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"verify", "bvp_i", "--format", "xml"}).code == 2);
  CHECK(run_cli({"verify", "bvp_i", "--tol", "abc"}).code == 2);
  CHECK(run_cli({"verify", "bvp_i", "--t", "1,x"}).code == 2);
  CHECK(run_cli({"eval", "nosuchfn", "--y", "1"}).code == 2);
  CHECK(run_cli({"eval", "Xi"}).code == 2);
  CHECK(run_cli({"eval", "Xi", "--y", "1", "--z", "2"}).code == 2);
  CHECK(run_cli({"scan", "zeta-zeros", "--y-max", "10"}).code == 2);
  const Run r = run_cli({"verify", "nosuchcheck"});
  CHECK(r.err.find("usage:") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("domain errors exit 2") {
  CHECK(run_cli({"eval", "gamma", "--z", "-2"}).code == 2);
  CHECK(run_cli({"verify", "thm_1_2", "--x", "1"}).code == 2);
}

TEST_CASE("help") {
  const Run r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify <check_id|all>") != std::string::npos);
  CHECK(run_cli({"verify", "--help"}).code == 0);
}

TEST_CASE("verify json report") {
  const Run r = run_cli({"verify", "bvp_i", "--t", "1.0", "--tol", "1e-10", "--format", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(keys_of(j) == kExactKeys);
  CHECK(j["check_id"] == "bvp_i");
  CHECK(j["passed"] == true);
  CHECK(j["tol"] == 1e-10);
  CHECK(j["params"]["t"] == 1.0);
  CHECK(j["wall_ms"] == 0.0);
}

TEST_CASE("json round-trips the report numbers") {
  verify::CheckRequest req;
  req.id = verify::CheckId::bvp_ii;
  const verify::CheckReport rep = verify::run_check(req).report;
  const Run r = run_cli({"verify", "bvp_ii", "--format", "json"});
  const json j = json::parse(r.out);
  CHECK(j["lhs"].get<double>() == rep.lhs.real());
  CHECK(j["rhs"].get<double>() == rep.rhs.real());
  CHECK(j["abs_diff"].get<double>() == rep.abs_diff);
  CHECK(j["rel_diff"].get<double>() == rep.rel_diff);
  CHECK(j["ratio"].get<double>() == rep.ratio.real());
}

TEST_CASE("calibrate report carries the constant") {
  const Run r = run_cli({"verify", "contour_3_6", "--format", "json", "--timing"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  auto expected = kExactKeys;
  expected.insert("calibration");
  CHECK(keys_of(j) == expected);
  CHECK_REL(j["calibration"]["constant"].get<double>(), 0.25, 1e-8);
  CHECK(j["calibration"]["spread"].get<double>() <= 1e-4);
  CHECK(j["wall_ms"].get<double>() > 0.0);
}

TEST_CASE("complex values in json and csv") {
  Run r = run_cli({"verify", "mellin_3_3", "--format", "json"});
  const json j = json::parse(r.out);
  CHECK(j["lhs"].is_object());
  CHECK(j["lhs"].contains("re"));
  CHECK(j["lhs"].contains("im"));
  r = run_cli({"verify", "mellin_3_3", "--format", "csv", "--s_im", "0.3", "--s_re", "0.5"});
  CHECK(r.code == 0);
  const std::string row = r.out.substr(r.out.find('\n') + 1);
  CHECK(row.find("i,") != std::string::npos);
}

TEST_CASE("failing check exits 1") {
  const Run r = run_cli({"verify", "thm_1_2_r0"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("errata") != std::string::npos);
}

TEST_CASE("csv suite has one row per report") {
  const Run r = run_cli({"verify", "all", "--no-real-r", "--format", "csv"});
  CHECK(r.code == 1);  // printed thm_1_2_r0 fails in EXACT mode
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 20);
  CHECK(r.out.rfind("check_id,params,lhs,rhs,abs_diff,rel_diff,ratio,tol,passed,", 0) == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"verify", "parseval", "--format", "json"};
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("--out writes atomically") {
  const auto path = scratch("report.json");
  std::filesystem::remove(path);
  const Run r = run_cli({"verify", "kummer_3_9", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  CHECK(j["check_id"] == "kummer_3_9");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  CHECK(run_cli({"verify", "bvp_i", "--out", "/nonexistent-dir/x.json"}).code == 3);
}

TEST_CASE("config file with flag override") {
  const auto path = scratch("run.cfg");
  {
    std::ofstream f(path);
    f << "# suite settings\nformat = json\ntol = 1e-30\ntiming = false\n";
  }
  Run r = run_cli({"verify", "bvp_i", "--config", path.string()});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["tol"] == 1e-30);
  r = run_cli({"verify", "bvp_i", "--config", path.string(), "--tol", "1e-9"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["tol"] == 1e-9);
  CHECK(run_cli({"verify", "bvp_i", "--config", "/nonexistent.cfg"}).code == 2);
}

TEST_CASE("sink failure exits 3") {
  std::ostringstream out, err;
  out.setstate(std::ios::badbit);
  CHECK(cli::parse_and_dispatch({"verify", "bvp_i"}, out, err) == 3);
}

TEST_CASE("scan xi-zeros") {
  const Run r = run_cli({"scan", "xi-zeros", "--y-max", "26"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,y_lower,y_upper,y_mid");
  std::vector<double> mids;
  while (std::getline(in, line)) mids.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  REQUIRE(mids.size() == 3);
  CHECK(std::fabs(mids[0] - 14.134725141734694) <= 1e-4);
  CHECK(std::fabs(mids[2] - 25.010857580145689) <= 1e-4);
}

TEST_CASE("heat") {
  const Run r = run_cli({"heat", "--r", "1", "--t", "1", "--residual"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("u 0.285569062321", 0) == 0);
  const double residual = std::stod(r.out.substr(r.out.find("residual ") + 9));
  CHECK(residual <= 1e-6);
}
