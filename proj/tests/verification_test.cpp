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

#include "ctxflow/verification.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "ctxflow/network_json.h"
#include "test_util.h"

using namespace ctxflow;

namespace {

const CheckResult &find(const std::vector<CheckResult> &results, const std::string &name) {
    auto it = std::find_if(results.begin(), results.end(), [&](const CheckResult &r) { return r.name == name; });
    if (it == results.end()) {
        throw std::runtime_error("no check named " + name);
    }
    return *it;
}

}  // namespace

TEST(InvariantSuite, CanonicalPasses) {
    auto results = run_invariant_suite(canonical_network());
    for (const auto &r : results) {
        EXPECT_EQ(r.status, CheckStatus::Pass) << r.name << ": " << r.detail;
    }
    EXPECT_TRUE(all_passed(results));
    EXPECT_GE(results.size(), 15u);
}

TEST(InvariantSuite, TamperedStageThreeFails) {
    auto results = run_invariant_suite(load_network_file(test::data_path("tampered_stage3.json")));
    EXPECT_FALSE(all_passed(results));
    EXPECT_EQ(find(results, "network-identity").status, CheckStatus::Fail);
    // Everything that does not depend on the identity still holds.
    EXPECT_EQ(find(results, "continuity").status, CheckStatus::Pass);
    EXPECT_EQ(find(results, "classical-claim").status, CheckStatus::Pass);
}

TEST(InvariantSuite, PhaseShiftsSkipIdentityAndReality) {
    auto results = run_invariant_suite(load_network_file(test::data_path("phase_shifted.json")));
    EXPECT_EQ(find(results, "network-identity").status, CheckStatus::Skip);
    EXPECT_EQ(find(results, "weak-value-reality").status, CheckStatus::Skip);
    EXPECT_TRUE(all_passed(results));
}

TEST(InvariantSuite, SmallRandomSample) {
    VerifyOptions options;
    options.random_states = 10;
    options.seed = 5;
    EXPECT_TRUE(all_passed(run_invariant_suite(canonical_network(), options)));
}
