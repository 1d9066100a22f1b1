// Copyright 2026 The gqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>

#include "gqfi/cli.hpp"
#include "gqfi/errors.hpp"
#include "json.hpp"

namespace gqfi::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kFourSinh2One = 5.52439138216726292;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GQFI_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed binary and captures stdout and the exit status.
Outcome shell(const std::string& args) {
  const std::string cmd = std::string(GQFI_BINARY) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out, ""};
}

TEST(ParseNetwork, ReadsAllElementKinds) {
  const NetworkSpec spec = load_network(data("mixed_network.json"));
  EXPECT_EQ(spec.n_modes, 3);
  ASSERT_TRUE(spec.input_squeezing.has_value());
  EXPECT_EQ(spec.input_squeezing->size(), 3u);
  ASSERT_EQ(spec.elements.size(), 3u);
  EXPECT_EQ(std::get<RandomPassiveElement>(spec.elements[0]).seed, 42u);
  EXPECT_EQ(std::get<MeshElement>(spec.elements[1]).params.rotation_angles[2].phi, 0.6);
  EXPECT_EQ(std::get<BeamSplitterElement>(spec.elements[2]).mode_a, 2);
}

TEST(ParseNetwork, RejectsMalformed) {
  EXPECT_THROW(load_network(data("unknown_kind.json")), ParseError);
  EXPECT_THROW(load_network(data("does_not_exist.json")), ParseError);
  EXPECT_THROW(parse_network("{"), ParseError);
  EXPECT_THROW(parse_network(R"({"n_modes": 1, "elements": []})"), ParseError);
  EXPECT_THROW(parse_network(R"({"n_modes": 1, "input_squeezing": [0.1], "covariance": [[1,0],[0,1]], "elements": []})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"n_modes": 2, "input_squeezing": [0.1], "elements": []})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"n_modes": 1, "input_squeezing": [0.1], "elements": [], "extra": 1})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"n_modes": 2, "input_squeezing": [0.1, 0.2], "elements": [{"kind": "phase", "mode": 2, "theta": 0}]})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"n_modes": 2, "input_squeezing": [0.1, 0.2], "elements": [{"kind": "bs", "mode_a": 1, "mode_b": 1, "eta": 0}]})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"n_modes": 2, "input_squeezing": [0.1, 0.2], "elements": [{"kind": "mesh", "rotation_angles": [], "output_phases": [0, 0]}]})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"n_modes": 1, "input_squeezing": ["a"], "elements": []})"),
               ParseError);
}

TEST(ParseNetwork, RoundTripsThroughJson) {
  const NetworkSpec spec = load_network(data("mixed_network.json"));
  const NetworkSpec again = parse_network(network_to_json(spec));
  EXPECT_EQ(network_to_json(again), network_to_json(spec));
  EXPECT_EQ(build_state(again).data(), build_state(spec).data());
}

TEST(BuildState, FirstElementActsFirst) {
  const NetworkSpec spec = load_network(data("epr_pipeline.json"));
  const CovarianceMatrix v = build_state(spec);
  const CovarianceMatrix want =
      apply(compose(beam_splitter(2, 0, 1, std::numbers::pi / 4), phase_shift(2, 0, std::numbers::pi / 2)),
            input_state(SqueezingVector({0.5, 0.5})));
  EXPECT_LT((v.data() - want.data()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(CovarianceJson, RoundTrip) {
  for (const char* name : {"mixed_network.json", "epr_pipeline.json", "thermal.json"}) {
    const CovarianceMatrix v = build_state(load_network(data(name)));
    const CovarianceMatrix back = covariance_from_json(covariance_to_json(v));
    EXPECT_LE((back.data() - v.data()).cwiseAbs().maxCoeff(), 1e-12) << name;
  }
  EXPECT_THROW(covariance_from_json("[[1, 0], [0]]"), ParseError);
}

TEST(FormatCsvNumber, ShortestUpToTwelveDigits) {
  EXPECT_EQ(format_csv_number(0.0), "0");
  EXPECT_EQ(format_csv_number(0.5), "0.5");
  EXPECT_EQ(format_csv_number(16.0), "16");
  EXPECT_EQ(format_csv_number(std::numbers::pi), "3.14159265359");
  EXPECT_EQ(format_csv_number(1e-20), "1e-20");
  EXPECT_EQ(format_csv_number(-2.5), "-2.5");
}

TEST(CmdQfi, Examples) {
  Outcome o = call({"qfi", "--network", data("squeezed_pair.json"), "--g", "1,-1", "--output", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = json::parse(o.out);
  EXPECT_NEAR(doc["qfi"].get<double>(), kFourSinh2One, 1e-12);
  EXPECT_EQ(doc["exactness"], "exact-pure");
  EXPECT_EQ(doc["pure"], true);
  EXPECT_EQ(doc["per_mode_photon_numbers"].size(), 2u);
  EXPECT_NEAR(doc["total_photons"].get<double>(), 2 * 0.271540317407621889, 1e-14);

  o = call({"qfi", "--network", data("squeezed_pair.json"), "--g", "-1,1", "--output", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(json::parse(o.out)["qfi"].get<double>(), kFourSinh2One, 1e-12);

  o = call({"qfi", "--network", data("squeezed_pair.json"), "--g", "0,0", "--output", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(json::parse(o.out)["qfi"].get<double>(), 0.0);

  o = call({"qfi", "--network", data("epr_pipeline.json"), "--g", "1,-1", "--output", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_NEAR(json::parse(o.out)["qfi"].get<double>(), 0.0, 1e-12);

  o = call({"qfi", "--network", data("thermal.json"), "--g", "1"});
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("exactness: upper-bound-mixed"), std::string::npos);
}

TEST(CmdQfi, ExitCodes) {
  EXPECT_EQ(call({"qfi", "--network", data("unphysical.json"), "--g", "1"}).code, kUnphysicalState);
  EXPECT_EQ(call({"qfi", "--network", data("unknown_kind.json"), "--g", "1,1"}).code, kUsageError);
  EXPECT_EQ(call({"qfi", "--network", data("missing.json"), "--g", "1,1"}).code, kUsageError);
  EXPECT_EQ(call({"qfi", "--network", data("squeezed_pair.json"), "--g", "1"}).code, kUsageError);
  EXPECT_EQ(call({"qfi", "--network", data("squeezed_pair.json"), "--g", "1,1", "--output", "xml"}).code,
            kUsageError);
  EXPECT_EQ(call({"qfi", "--g", "1,1"}).code, kUsageError);
  EXPECT_EQ(call({"qfi", "--network", data("squeezed_pair.json"), "--g", "1,"}).code, kUsageError);
}

TEST(CmdScan, WritesGoldenCsv) {
  const fs::path out = fs::temp_directory_path() / "gqfi_scan_test.csv";
  ASSERT_EQ(call({"scan", "--r", "0.5", "--points", "65", "--out", out.string()}).code, 0);
  EXPECT_EQ(slurp(out), slurp(data("scan_r0.5_p65.csv")));
  fs::remove(out);
}

TEST(CmdScan, Examples) {
  Outcome o = call({"scan", "--r", "0.5", "--points", "2", "--out", "-"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out,
            "theta,entropy,qfi_single,qfi_common,qfi_differential\n"
            "0,0,2.76219569108,5.52439138217,5.52439138217\n"
            "1.57079632679,0.659452959168,1.38109784554,5.52439138217,0\n");

  o = call({"scan", "--r", "0", "--points", "5"});
  ASSERT_EQ(o.code, 0);
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.find(',')), ",0,0,0,0");
  }
  EXPECT_EQ(rows, 5);
}

TEST(CmdScan, ExitCodes) {
  EXPECT_EQ(call({"scan", "--points", "1"}).code, kUsageError);
  EXPECT_EQ(call({"scan", "--r", "-1"}).code, kUsageError);
  EXPECT_EQ(call({"scan", "--out", "/nonexistent-dir/x.csv"}).code, kUsageError);
}

TEST(CmdOptimize, Examples) {
  Outcome o = call({"optimize", "--r", "0.5,0.5", "--g", "1,-1", "--restarts", "8", "--seed", "7"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = json::parse(o.out);
  EXPECT_LE(doc["gap"].get<double>(), 1e-6 * doc["theoretical_max"].get<double>());
  EXPECT_TRUE(doc["final_state_decoupled_across_g_groups"].get<bool>());
  EXPECT_EQ(doc["best_params"]["rotation_angles"].size(), 1u);

  o = call({"optimize", "--r", "0.3,0.9", "--g", "2,1", "--restarts", "16", "--seed", "7"});
  ASSERT_EQ(o.code, 0);
  doc = json::parse(o.out);
  const double want = 2 * (4 * std::pow(std::sinh(1.8), 2) + std::pow(std::sinh(0.6), 2));
  EXPECT_NEAR(doc["theoretical_max"].get<double>(), want, 1e-12 * want);
  EXPECT_LE(doc["gap"].get<double>(), 1e-5 * want);
}

TEST(CmdOptimize, ExitCodes) {
  EXPECT_EQ(call({"optimize", "--r", "", "--g", ""}).code, kUsageError);
  EXPECT_EQ(call({"optimize", "--r", "0.1,0.2", "--g", "1"}).code, kUsageError);
  EXPECT_EQ(call({"optimize", "--r", "0.1", "--g", "1", "--restarts", "0"}).code, kUsageError);
  EXPECT_EQ(call({"optimize", "--r", "0.1"}).code, kUsageError);
  EXPECT_EQ(call({"optimize", "--r", "0.1,,0.2", "--g", "1,1,1"}).code, kUsageError);
  EXPECT_EQ(call({"optimize", "--r", "0.1,x", "--g", "1,1"}).code, kUsageError);
}

TEST(CmdVerify, ExitCodes) {
  EXPECT_EQ(call({"verify", "--trials", "0"}).code, kUsageError);
  EXPECT_EQ(call({"verify", "--max-modes", "9"}).code, kUsageError);
  EXPECT_EQ(call({"verify", "--seed", "abc"}).code, kUsageError);
  const Outcome o = call({"verify", "--seed", "1", "--trials", "5", "--max-modes", "3"});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(json::parse(o.out)["all_pass"].get<bool>());
}

TEST(Run, HelpAndUsage) {
  EXPECT_EQ(call({"--help"}).code, 0);
  for (const char* sub : {"qfi", "scan", "optimize", "verify"}) {
    const Outcome o = call({sub, "--help"});
    EXPECT_EQ(o.code, 0) << sub;
    EXPECT_FALSE(o.out.empty()) << sub;
  }
  EXPECT_EQ(call({}).code, kUsageError);
  EXPECT_EQ(call({"frobnicate"}).code, kUsageError);
}

TEST(Binary, VerifyIsByteIdentical) {
  const Outcome a = shell("verify --seed 42 --trials 20 --max-modes 4");
  const Outcome b = shell("verify --seed 42 --trials 20 --max-modes 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
}

TEST(Binary, ExitCodesPropagate) {
  EXPECT_EQ(shell("scan --points 1").code, kUsageError);
  EXPECT_EQ(shell("qfi --network " + data("unphysical.json") + " --g 1").code, kUnphysicalState);
  EXPECT_EQ(shell("--help").code, 0);
}

}  // namespace
}  // namespace gqfi::cli
