#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "derivcalc/cli.hpp"

namespace derivcalc {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// --- documented behaviour ---

TEST(Cli, OrderOfSecondDerivative) {
  const Result r = run_cli({"order", "--k", "1", "--op", "d[2]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order: 2\n"), std::string::npos);
}

TEST(Cli, Char2Demo) {
  const Result r = run_cli({"demo", "char2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("D(x): 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("D(x^2): 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("is-derivation: false\n"), std::string::npos);
}

TEST(Cli, InfeasibleFit) {
  const Result r = run_cli({"fit", "--k", "1", "--n", "0", "--require-o0", "--table", R"({"t1":"1"})"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("infeasible"), std::string::npos);
}

// --- exit codes ---

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"order", "--k", "1", "--op", "t1"}).code, 1);
  EXPECT_EQ(run_cli({"order", "--k", "1", "--op", "d[2]", "--upper", "1", "--samples", "t1"}).code, 1);
  EXPECT_EQ(run_cli({"recurrence", "--coeffs", "-1; -1; 1", "--seq", "1; 1; 2; 3; 6"}).code, 1);
  EXPECT_EQ(run_cli({"order", "--k", "1", "--op", "d[2"}).code, 2);
  EXPECT_EQ(run_cli({"order", "--k", "1"}).code, 2);
  EXPECT_EQ(run_cli({"order", "--k", "1", "--op", "d[1]", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"apply", "--k", "2", "--op", "d[1,0]", "--f", "t3"}).code, 2);
  EXPECT_EQ(run_cli({"fit", "--k", "1", "--n", "1", "--table", "{not json"}).code, 2);
  EXPECT_EQ(run_cli({"fit", "--k", "1", "--n", "1", "--table", R"({"t1":"1","2*t1/2":"3"})"}).code, 2);
  EXPECT_EQ(run_cli({"reconstruct", "--grid", R"({"k":1,"n":2,"values":{"0":"0"}})"}).code, 2);
  EXPECT_EQ(run_cli({"demo", "theorem2", "--derivs", "(t1 -> 0)"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ParseErrorsReportOffset) {
  const Result r = run_cli({"apply", "--k", "2", "--op", "d[1,0]", "--f", "t1 + t3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown variable t3 at byte 5"), std::string::npos) << r.err;
}

TEST(Cli, OperatorSourcesAreExclusive) {
  EXPECT_EQ(run_cli({"expoly", "--k", "1", "--op", "d[1]", "--deriv", "t1 -> 1"}).code, 2);
}

TEST(Cli, OperatorSourcesAgree) {
  const auto a = run_cli({"apply", "--k", "1", "--word", "(t1 -> 1) o (t1 -> t1)", "--f", "1/(t1+1)"});
  const auto b = run_cli({"apply", "--k", "1", "--op", "d[1] + t1*d[2]", "--f", "1/(t1+1)"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GridFromFile) {
  const fs::path p = fs::temp_directory_path() / "derivcalc_grid_test.json";
  std::ofstream(p) << R"({"k":1,"n":2,"values":{"0":"0","1":"t1","2":"2*t1^2"}})";
  const Result r = run_cli({"reconstruct", "--grid", "@" + p.string()});
  fs::remove(p);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "operator: t1 * d[1]\ndegree: 1\n");
}

TEST(Cli, EnvironmentSeedOverridesFlag) {
  const std::vector<std::string> base{"gpdeg", "--k", "1", "--op", "d[2]", "--n", "1"};
  auto with_seed = [&](const std::string& seed) {
    auto args = base;
    args.insert(args.end(), {"--seed", seed});
    return run_cli(args);
  };
  const Result flag7 = with_seed("7");
  ::setenv("DERIVCALC_SEED", "7", 1);
  const Result env7 = with_seed("99");
  ::setenv("DERIVCALC_SEED", "oops", 1);
  const Result bad = with_seed("99");
  ::unsetenv("DERIVCALC_SEED");
  const Result flag99 = with_seed("99");
  EXPECT_EQ(flag7.code, 1);
  EXPECT_EQ(flag7.out, env7.out);
  EXPECT_NE(flag7.out, flag99.out);
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, RunsAreDeterministic) {
  const std::vector<std::string> args{"demo", "composition-order", "--k", "2", "--derivs", "(t1 -> t2) o (t2 -> t1)"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, DemoAliasMatchesPrimaryName) {
  const Result a = run_cli({"demo", "composition-order", "--k", "2", "--derivs", "(t1 -> 1) o (t2 -> t1)"});
  const Result b = run_cli({"demo", "theorem2", "--k", "2", "--derivs", "(t1 -> 1) o (t2 -> t1)"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

// --- golden files: human and JSON output carry the same content ---

struct GoldenCase {
  const char* name;
  std::vector<std::string> args;
  int code;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"order", {"order", "--k", "1", "--op", "d[2]"}, 0},
      {"order_not_o0", {"order", "--k", "1", "--op", "d[1] + t1"}, 1},
      {"order_upper_fail", {"order", "--k", "1", "--op", "d[2]", "--upper", "1", "--samples", "t1"}, 1},
      {"apply_word", {"apply", "--k", "2", "--word", "(t1->1,t2->0) o (t1->t1,t2->1)", "--f", "t1^2*t2"}, 0},
      {"normalize", {"normalize", "--k", "1", "--word", "(t1 -> 1) o (t1 -> t1)"}, 0},
      {"compose", {"compose", "--k", "1", "--left", "t1*d[1]", "--right", "d[1]"}, 0},
      {"defect", {"defect", "--k", "1", "--op", "d[2]", "--x", "t1", "--y", "t1"}, 0},
      {"gpdeg_fail", {"gpdeg", "--k", "1", "--op", "d[1]", "--n", "0", "--increments", "t1 + 1", "--points", "t1"}, 1},
      {"gpdeg_pass", {"gpdeg", "--k", "2", "--op", "t1*d[1,1] + d[0,1]", "--n", "2"}, 0},
      {"expoly", {"expoly", "--k", "2", "--op", "d[1,0] * (t1*d[1,0] + d[0,1])"}, 0},
      {"reconstruct", {"reconstruct", "--grid", R"({"k":1,"n":2,"values":{"0":"0","1":"0","2":"2"}})"}, 0},
      {"reconstruct_overflow",
       {"reconstruct", "--grid", R"({"k":2,"n":1,"values":{"0,0":"0","1,0":"t1","0,1":"0","1,1":"2*t1*t2"}})"},
       1},
      {"fit", {"fit", "--k", "1", "--n", "2", "--require-o0", "--table", R"({"t1":"t1","t1^2":"2*t1^2","t1^3":"3*t1^3"})"}, 0},
      {"fit_infeasible", {"fit", "--k", "1", "--n", "0", "--require-o0", "--table", R"({"t1":"1"})"}, 1},
      {"recurrence", {"recurrence", "--coeffs", "-1; -1; 1", "--seq", "1; 1; 2; 3; 6"}, 1},
      {"demo_char2", {"demo", "char2"}, 0},
      {"demo_product_ring", {"demo", "product-ring"}, 0},
      {"demo_composition_order", {"demo", "composition-order", "--k", "2", "--derivs", "(t1 -> 1) o (t1 -> t1; t2 -> 1)"}, 0},
  };
  return cases;
}

// Regenerate with DERIVCALC_UPDATE_GOLDEN=1 after an intended output change.
void check_golden(const fs::path& path, const std::string& actual) {
  if (std::getenv("DERIVCALC_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << path;
  EXPECT_EQ(read_file(path), actual) << path;
}

// Every leaf value in the JSON report also appears in the human output,
// on the line of its key.
void expect_same_content(const nlohmann::ordered_json& j, const std::string& text) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      expect_same_content(v, text);
      continue;
    }
    const auto at = text.find(key + ":");
    ASSERT_NE(at, std::string::npos) << key;
    const std::string line = text.substr(at, text.find('\n', at) - at);
    std::vector<nlohmann::ordered_json> leaves;
    if (v.is_array()) {
      leaves.assign(v.begin(), v.end());
    } else {
      leaves.push_back(v);
    }
    for (const auto& leaf : leaves) {
      const std::string s = leaf.is_string() ? leaf.get<std::string>() : leaf.is_null() ? "none" : leaf.dump();
      EXPECT_NE(line.find(s), std::string::npos) << key << " = " << s << " not in: " << line;
    }
  }
}

TEST(CliGolden, HumanAndJsonOutputs) {
  const fs::path dir(DERIVCALC_GOLDEN_DIR);
  for (const auto& c : golden_cases()) {
    SCOPED_TRACE(c.name);
    const Result text = run_cli(c.args);
    auto json_args = c.args;
    json_args.push_back("--json");
    const Result json = run_cli(json_args);
    EXPECT_EQ(text.code, c.code) << text.err;
    EXPECT_EQ(json.code, c.code) << json.err;
    check_golden(dir / (std::string(c.name) + ".txt"), text.out);
    check_golden(dir / (std::string(c.name) + ".json"), json.out);
    expect_same_content(nlohmann::ordered_json::parse(json.out), text.out);
  }
}

}  // namespace
}  // namespace derivcalc
