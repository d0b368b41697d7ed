// Copyright 2026 The ctxflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "test_util.h"

using namespace ctxflow;
using namespace ctxflow::cli;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run_args(std::vector<std::string> args) {
    args.insert(args.begin(), "ctxflow");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

int run_binary(const std::string &args) {
    std::string cmd = std::string(CTXFLOW_BINARY) + " " + args + " > /dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

class ScopedEnv {
   public:
    ScopedEnv(const char *name, const std::string &value) : name_(name) {
        setenv(name, value.c_str(), 1);
    }
    ~ScopedEnv() {
        unsetenv(name_);
    }

   private:
    const char *name_;
};

}  // namespace

TEST(Cli, InequalityJson) {
    auto r = run_args({"inequality", "--state", "nx", "--format", "json"});
    ASSERT_EQ(r.status, EXIT_OK) << r.err;
    EXPECT_NE(r.out.find("\"violation\": 0.222222222222"), std::string::npos) << r.out;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["command"], "inequality");
    EXPECT_EQ(doc["state"][0][0], 0.666666666667);
    EXPECT_EQ(doc["network_hash"].get<std::string>().size(), 16u);
    EXPECT_EQ(doc["result"]["violated"], true);
    EXPECT_EQ(doc["result"]["p_d1"], 0.0555555555556);
}

TEST(Cli, InequalityText) {
    auto r = run_args({"inequality", "--state", "symmetric"});
    ASSERT_EQ(r.status, EXIT_OK);
    EXPECT_NE(r.out.find("P(f)        1/9"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("P(D1)       0"), std::string::npos) << r.out;
}

TEST(Cli, WeakValuesTextRowForF) {
    auto r = run_args({"weak-values", "--state", "nx"});
    ASSERT_EQ(r.status, EXIT_OK);
    std::istringstream lines(r.out);
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::vector<std::string> row;
        std::string cell;
        while (cells >> cell) {
            row.push_back(cell);
        }
        if (!row.empty() && row[0] == "f") {
            EXPECT_EQ(row, (std::vector<std::string>{"f", "1/2", "1/2", "-1"}));
            found = true;
        }
        if (!row.empty() && row[0] == "P2") {
            EXPECT_EQ(row[1], "-1/4");
        }
        if (!row.empty() && row[0] == "D2") {
            EXPECT_EQ(row[1], "1/4");
            EXPECT_EQ(row[3], "-1/2");
        }
    }
    EXPECT_TRUE(found) << r.out;
}

TEST(Cli, WeakValuesCsvLayout) {
    auto r = run_args({"weak-values", "--state", "nx", "--format", "csv"});
    ASSERT_EQ(r.status, EXIT_OK);
    EXPECT_EQ(r.out.rfind("arm,OUT1,OUT2,OUT3\n", 0), 0u);
    EXPECT_NE(r.out.find("\nF,0.5:0,0.5:0,-1:0\n"), std::string::npos) << r.out;
}

TEST(Cli, WeakValuesUndefinedOutcomes) {
    auto r = run_args({"weak-values", "--state", "1,0,0", "--format", "json"});
    ASSERT_EQ(r.status, EXIT_OK);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["result"]["rows"][0]["values"][1].is_null());
    auto text = run_args({"weak-values", "--state", "1,0,0"});
    EXPECT_NE(text.out.find("undefined"), std::string::npos);
}

TEST(Cli, ProbsAllContextsAndSingleContext) {
    auto all = run_args({"probs", "--state", "nx"});
    ASSERT_EQ(all.status, EXIT_OK);
    EXPECT_NE(all.out.find("context ctx1 {IN1, S1, D1}"), std::string::npos) << all.out;
    EXPECT_NE(all.out.find("  D1    1/18"), std::string::npos) << all.out;
    auto one = run_args({"probs", "--state", "nx", "--context", "S1,f,P1", "--format", "csv"});
    ASSERT_EQ(one.status, EXIT_OK);
    EXPECT_EQ(one.out, "context,arm,probability\nctx2,F,0.333333333333\nctx2,S1,0.5\nctx2,P1,0.166666666667\n");
}

TEST(Cli, PathsShowsStagesAndKets) {
    auto r = run_args({"paths"});
    ASSERT_EQ(r.status, EXIT_OK);
    EXPECT_NE(r.out.find("stage 3: S1, P1 -> S2, P2  R = 1/4"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("D2    4      (0.707106781187, 0, -0.707106781187)"), std::string::npos) << r.out;
}

TEST(Cli, PathsJsonListsPhases) {
    auto plain = nlohmann::json::parse(run_args({"paths", "--format", "json"}).out);
    EXPECT_TRUE(plain["result"]["phases"].empty());
    auto shifted = run_args({"paths", "--format", "json", "--network", test::data_path("phase_shifted.json")});
    ASSERT_EQ(shifted.status, EXIT_OK);
    auto doc = nlohmann::json::parse(shifted.out);
    EXPECT_EQ(doc["result"]["phases"]["F"], 0.7);
    EXPECT_EQ(doc["result"]["phases"]["D2"], -1.2);
    EXPECT_EQ(doc["result"]["phases"]["IN3"], 0.3);
}

TEST(Cli, ContinuityReport) {
    auto r = run_args({"continuity", "--state", "nx", "--format", "json"});
    ASSERT_EQ(r.status, EXIT_OK);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["result"]["entries"].size(), 15u);
    EXPECT_LT(doc["result"]["max_residual"].get<double>(), 1e-10);
    bool found = false;
    for (const auto &e : doc["result"]["entries"]) {
        if (e["stage"] == 4 && e["outcome"] == "OUT1") {
            EXPECT_EQ(e["input_sum"][0], 0.25);
            EXPECT_EQ(e["output_sum"][0], 0.25);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, ClassicalReport) {
    auto r = run_args({"classical", "--format", "json"});
    ASSERT_EQ(r.status, EXIT_OK);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["state"].is_null());
    EXPECT_EQ(doc["result"]["claim_holds"], true);
    EXPECT_EQ(doc["result"]["via_f_same_port"],
              nlohmann::json::array({"1-f-D2-1", "2-D1-f-2", "3-D1-f-D2-3"}));
    EXPECT_EQ(doc["result"]["trajectories"].size(), 34u);
}

TEST(Cli, SampleIsReproducible) {
    auto a = run_args({"sample", "--state", "nx", "--shots", "20000", "--seed", "9", "--format", "json"});
    auto b = run_args({"sample", "--state", "nx", "--shots", "20000", "--seed", "9", "--format", "json"});
    ASSERT_EQ(a.status, EXIT_OK) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["result"]["context"], "output");
    uint64_t total = 0;
    for (const auto &[k, v] : doc["result"]["counts"].items()) {
        total += v.get<uint64_t>();
    }
    EXPECT_EQ(total, 20000u);
    auto c = run_args({"sample", "--state", "1,0,0", "--shots", "500", "--format", "csv"});
    EXPECT_NE(c.out.find("OUT1,500,1,1"), std::string::npos) << c.out;
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run_args({"verify"}).status, EXIT_OK);
    auto tampered = run_args({"verify", "--network", test::data_path("tampered_stage3.json")});
    EXPECT_EQ(tampered.status, EXIT_VERIFY_FAILED);
    EXPECT_NE(tampered.out.find("[FAIL] network-identity"), std::string::npos);
    EXPECT_EQ(run_args({"verify", "--network", test::data_path("canonical_network.json"), "--format", "csv"}).status,
              EXIT_OK);
}

TEST(Cli, EnvironmentNetworkOverride) {
    ScopedEnv env(NETWORK_ENV, test::data_path("tampered_stage3.json"));
    EXPECT_EQ(run_args({"verify"}).status, EXIT_VERIFY_FAILED);
    // --network wins over the environment
    EXPECT_EQ(run_args({"verify", "--network", test::data_path("canonical_network.json")}).status, EXIT_OK);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_args({}).status, EXIT_USAGE);
    EXPECT_EQ(run_args({"bogus"}).status, EXIT_USAGE);
    EXPECT_EQ(run_args({"inequality"}).status, EXIT_USAGE);
    EXPECT_EQ(run_args({"inequality", "--state", "nx", "--format", "xml"}).status, EXIT_USAGE);
    EXPECT_EQ(run_args({"inequality", "--state", "0.9,0,0"}).status, EXIT_USAGE);
    EXPECT_EQ(run_args({"inequality", "--state", "0.9,0,0", "--normalize"}).status, EXIT_OK);
    EXPECT_EQ(run_args({"probs", "--state", "nx", "--context", "nowhere"}).status, EXIT_USAGE);
    EXPECT_EQ(run_args({"sample", "--state", "nx", "--shots", "0"}).status, EXIT_USAGE);
    EXPECT_EQ(run_args({"verify", "--network", "/nonexistent.json"}).status, EXIT_USAGE);
    auto r = run_args({"inequality", "--state", "garbage"});
    EXPECT_EQ(r.status, EXIT_USAGE);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Help) {
    auto r = run_args({"--help"});
    EXPECT_EQ(r.status, EXIT_OK);
    EXPECT_NE(r.out.find("weak-values"), std::string::npos);
}

TEST(Cli, JsonReportsRoundTripByteIdentical) {
    const std::vector<std::vector<std::string>> commands{
        {"paths"},
        {"probs", "--state", "nx"},
        {"weak-values", "--state", "0.5+0.5i,0.5,-0.5i"},
        {"weak-values", "--state", "1,0,0"},
        {"inequality", "--state", "symmetric"},
        {"continuity", "--state", "nx"},
        {"classical"},
        {"sample", "--state", "nx", "--shots", "1000"},
        {"verify", "--network", test::data_path("phase_shifted.json")},
    };
    for (auto args : commands) {
        args.push_back("--format");
        args.push_back("json");
        auto r = run_args(args);
        ASSERT_EQ(r.status, EXIT_OK) << args[0] << ": " << r.err;
        auto reparsed = nlohmann::json::parse(r.out);
        EXPECT_EQ(reparsed.dump(2) + "\n", r.out) << args[0];
        for (const char *key : {"command", "state", "network_hash", "result"}) {
            EXPECT_TRUE(reparsed.contains(key)) << key;
        }
    }
}

TEST(Cli, BinaryExitStatus) {
    EXPECT_EQ(run_binary("verify"), EXIT_OK);
    EXPECT_EQ(run_binary("verify --network " + test::data_path("tampered_stage3.json")), EXIT_VERIFY_FAILED);
    EXPECT_EQ(run_binary("inequality"), EXIT_USAGE);
}
