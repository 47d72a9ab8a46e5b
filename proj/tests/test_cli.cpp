#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "orlicz/descriptor_json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = orlicz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '-')) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Cli, OminusMatchesClosedForm) {
  auto r = run({"ominus", "--phi", "power:2:0.5", "--phi1", "power:4:0.25", "--grid", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 64u);
  for (const auto& row : rows) EXPECT_NEAR(row[1], std::pow(row[0], 4) / 4.0, 1e-6 * std::pow(row[0], 4) / 4.0);
}

TEST(Cli, OminusJson) {
  auto r = run({"ominus", "--phi", "power:2:0.5", "--phi1", "power:4:0.25", "--grid", "8", "--zero", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = orlicz::Json::parse(r.out);
  EXPECT_TRUE(j.contains("schema"));
}

TEST(Cli, PredictCaseTwo) {
  auto r = run({"predict", "--phi1", "power:2", "--phi", "power:2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = orlicz::Json::parse(r.out);
  EXPECT_EQ(j.at("case"), "ii");
  EXPECT_EQ(j.at("space"), "Linf");
}

TEST(Cli, PathologyReport) {
  auto r = run({"pathology", "--n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = orlicz::Json::parse(r.out);
  EXPECT_EQ(j.at("n"), 4);
  auto c = run({"pathology", "--n", "4", "--csv"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("u,psi,phi", 0), 0u);
}

TEST(Cli, EvalAndInverse) {
  auto e = run({"eval", "--phi", "power:2", "--u", "1,2", "--json"});
  ASSERT_EQ(e.code, 0);
  auto j = orlicz::Json::parse(e.out);
  EXPECT_EQ(j.at("rows").at(1).at("value").get<double>(), 4.0);
  auto i = run({"inverse", "--phi", "power:2", "--v", "4,inf"});
  ASSERT_EQ(i.code, 0);
  EXPECT_NE(i.out.find("4,2"), std::string::npos);
  EXPECT_NE(i.out.find("inf,inf"), std::string::npos);
}

TEST(Cli, NormAndMultiplier) {
  auto n = run({"norm", "--space", "L1", "--phi", "power:2", "--model", "grid01:4", "--x", "[1,0,0,0]"});
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_NEAR(orlicz::Json::parse(n.out).at("norm").get<double>(), 0.5, 1e-10);
  auto m = run({"mult-norm", "--E", "L2", "--F", "L1", "--model", "counting:4", "--x", "[1,1,1,1]"});
  ASSERT_EQ(m.code, 0) << m.err;
  auto j = orlicz::Json::parse(m.out);
  EXPECT_EQ(j.at("certificate").get<double>(), 2.0);
  EXPECT_NEAR(j.at("value").get<double>(), 2.0, 1e-9);
}

TEST(Cli, CheckEquivExitCodes) {
  // phi1 = phi2 = u, phi = u^2 is refuted on the left for large arguments.
  auto refuted = run({"check-equiv", "--phi1", "power:1", "--phi2", "power:1", "--phi", "power:2", "--direction", "left",
                      "--range", "large"});
  EXPECT_EQ(refuted.code, 2);
  auto holds = run({"check-equiv", "--phi1", "power:2", "--phi2", "power:2", "--phi", "power:1", "--direction", "left"});
  EXPECT_EQ(holds.code, 0);
  EXPECT_EQ(orlicz::Json::parse(holds.out).at("verdict"), "holds");
  auto cert = run({"check-equiv", "--phi1", "power:2", "--phi2", "step:1", "--phi", "power:2", "--direction", "right",
                   "--range", "large", "--certificate", "example9:8"});
  EXPECT_EQ(cert.code, 2);
}

TEST(Cli, ErrorsAreMachineReadable) {
  auto bad = run({"eval", "--phi", R"({"pieces":[{"start":0,"kind":"power","params":{"p":2}}]})", "--u", "1"});
  EXPECT_EQ(bad.code, 1);
  auto j = orlicz::Json::parse(bad.out.empty() ? bad.err : bad.out);
  EXPECT_EQ(j.at("error").at("type"), "descriptor");
  EXPECT_EQ(j.at("error").at("path"), "/pieces/0/start");
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"eval", "--phi", "power:2", "--u", "1", "--bogus"}).code, 1);
  EXPECT_EQ(run({"eval", "--phi", "nosuch:1", "--u", "1"}).code, 1);
  EXPECT_EQ(run({"predict", "--phi1", "power:2", "--phi", "example7_phi"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"mult-norm", "--E", "L3", "--F", "L1.5", "--model", "counting:8",
                                         "--x", "[1,2,0.5,3,0,1,1,2]"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto p = run({"pathology", "--n", "5"}), q = run({"pathology", "--n", "5"});
  EXPECT_EQ(p.out, q.out);
}
