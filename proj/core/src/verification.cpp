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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "ctxflow/analysis.h"
#include "ctxflow/classical.h"
#include "ctxflow/random.h"

namespace ctxflow {

namespace {

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

CheckResult bound_check(std::string name, double worst, double tol) {
    bool ok = worst <= tol;
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
            "max deviation " + sci(worst) + " (tolerance " + sci(tol) + ")"};
}

std::vector<StateVector> probe_states(const VerifyOptions &options, bool real_only) {
    std::vector<StateVector> states{nx_state(), symmetric_state(), StateVector::basis(1), StateVector::basis(2),
                                    StateVector::basis(3)};
    CounterRng rng(options.seed);
    for (int k = 0; k < options.random_states; ++k) {
        states.push_back(real_only ? random_real_state(rng) : random_state(rng));
    }
    return states;
}

double orthonormality_deviation(const Network &net, const Context &ctx) {
    double worst = 0;
    for (size_t a = 0; a < 3; ++a) {
        for (size_t b = 0; b < 3; ++b) {
            Complex g = inner_product(path_state(net, ctx.members[a]), path_state(net, ctx.members[b]));
            worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass:
            return "PASS";
        case CheckStatus::Fail:
            return "FAIL";
        case CheckStatus::Skip:
            return "SKIP";
    }
    return "?";
}

bool all_passed(const std::vector<CheckResult> &results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult &r) { return r.status == CheckStatus::Fail; });
}

std::vector<CheckResult> run_invariant_suite(const Network &net, const VerifyOptions &options) {
    std::vector<CheckResult> results;
    const auto ctxs = contexts(net);
    const auto states = probe_states(options, false);

    {
        double worst = 0;
        for (int k = 1; k <= net.stage_count(); ++k) {
            auto u = stage_unitary(net, k);
            worst = std::max(worst, max_entry_deviation(compose(adjoint(u), u), Operator3::identity()));
        }
        results.push_back(bound_check("stage-unitarity", worst, TOL_UNITARY));
    }

    if (net.has_phases()) {
        results.push_back({"network-identity", CheckStatus::Skip, "phase shifts present"});
    } else {
        double dev = max_entry_deviation(network_unitary(net), Operator3::identity());
        results.push_back(bound_check("network-identity", dev, TOL_UNITARY));
    }

    {
        double worst = 0;
        for (const auto &c : ctxs) {
            worst = std::max(worst, orthonormality_deviation(net, c));
        }
        results.push_back(bound_check("context-orthonormality", worst, TOL_NORM));
    }

    {
        bool ok = true;
        for (size_t t = 0; t + 1 < ctxs.size(); ++t) {
            std::set<PathLabel> a(ctxs[t].members.begin(), ctxs[t].members.end());
            int shared = 0;
            for (PathLabel m : ctxs[t + 1].members) {
                shared += static_cast<int>(a.count(m));
            }
            ok = ok && shared == 1;
        }
        results.push_back({"context-chain", ok ? CheckStatus::Pass : CheckStatus::Fail,
                           "consecutive contexts share exactly one arm"});
    }

    {
        double worst = 0;
        for (int k = 1; k <= net.stage_count(); ++k) {
            PathLabel par = net.parallel_arm(k);
            std::array<Complex, 3> in{};
            std::array<Complex, 3> expected{};
            in[net.slot_of(par, k - 1)] = 1.0;
            expected[net.slot_of(par, k)] = 1.0;
            worst = std::max(worst, max_component_deviation(apply(stage_unitary(net, k), StateVector(in)),
                                                            StateVector(expected)));
        }
        results.push_back(bound_check("parallel-arm-conservation", worst, TOL_NORM));
    }

    {
        double worst = 0;
        for (const auto &s : states) {
            for (const auto &c : ctxs) {
                double total = 0;
                for (const auto &[arm, p] : context_probabilities(s, net, c)) {
                    total += p;
                }
                worst = std::max(worst, std::abs(total - 1));
            }
        }
        results.push_back(bound_check("probability-completeness", worst, TOL_NORM));
    }

    {
        double worst = 0;
        for (const auto &s : states) {
            auto slices = propagate(s, net);
            for (PathLabel arm : net.arms()) {
                int t = net.creation_slice(arm);
                double via_slices = std::norm(slices[static_cast<size_t>(t)][net.slot_of(arm, t)]);
                worst = std::max(worst, std::abs(via_slices - path_probability(s, net, arm)));
            }
        }
        results.push_back(bound_check("born-consistency", worst, TOL_NORM));
    }

    {
        double worst = 0;
        for (const auto &s : states) {
            for (int k = 1; k <= 3; ++k) {
                PathLabel o = output_port(k);
                if (path_probability(s, net, o) <= TOL_ZERO) {
                    continue;
                }
                for (const auto &c : ctxs) {
                    Complex sum = 0;
                    for (PathLabel i : c.members) {
                        sum += weak_value(s, net, i, o);
                    }
                    worst = std::max(worst, std::abs(sum - 1.0));
                }
            }
        }
        results.push_back(bound_check("weak-value-sum-rule", worst, TOL_CONTINUITY));
    }

    {
        double worst = 0;
        for (const auto &s : states) {
            for (PathLabel i : net.arms()) {
                for (size_t t = static_cast<size_t>(net.creation_slice(i)); t < ctxs.size(); ++t) {
                    auto d = current_decomposition(s, net, i, ctxs[t]);
                    worst = std::max({worst, d.residual(), std::abs(d.reconstructed.imag())});
                }
            }
        }
        results.push_back(bound_check("decomposition-identity", worst, TOL_CONTINUITY));
    }

    {
        double worst = 0;
        for (const auto &s : states) {
            worst = std::max(worst, continuity_check(s, net).max_residual());
        }
        results.push_back(bound_check("continuity", worst, TOL_CONTINUITY));
    }

    if (net.has_phases()) {
        results.push_back({"weak-value-reality", CheckStatus::Skip, "phase shifts present"});
    } else {
        double worst = 0;
        for (const auto &s : probe_states(options, true)) {
            for (const auto &w : weak_value_table(s, net)) {
                worst = std::max(worst, std::abs(w.value.imag()));
            }
        }
        results.push_back(bound_check("weak-value-reality", worst, TOL_ZERO));
    }

    auto trajectories = enumerate_trajectories(net);
    {
        bool ok = std::all_of(trajectories.begin(), trajectories.end(),
                              [&](const Trajectory &t) { return is_connected(t, net); });
        results.push_back({"trajectories-connected", ok ? CheckStatus::Pass : CheckStatus::Fail,
                           std::to_string(trajectories.size()) + " trajectories"});
    }
    {
        auto counted = count_routes(net);
        bool ok = true;
        for (int k = 1; k <= 3; ++k) {
            PathLabel in = input_port(k);
            uint64_t n = 0;
            double kraft = 0;
            for (const auto &t : trajectories) {
                if (t.input == in) {
                    ++n;
                    kraft += std::ldexp(1.0, -t.branchings);
                }
            }
            ok = ok && n == counted[in] && std::abs(kraft - 1) < 1e-12;
        }
        results.push_back({"trajectories-exhaustive", ok ? CheckStatus::Pass : CheckStatus::Fail,
                           "enumeration matches route count and branching weights sum to 1"});
    }
    {
        auto report = verify_classical_claim(net);
        results.push_back({"classical-claim", report.claim_holds ? CheckStatus::Pass : CheckStatus::Fail,
                           std::to_string(report.via_f_same_port.size()) + " same-port routes through f"});
    }

    {
        const auto &out = ctxs.back();
        auto a = sample_detections(nx_state(), net, out, 10000, options.seed);
        auto b = sample_detections(nx_state(), net, out, 10000, options.seed);
        uint64_t total = 0;
        for (const auto &[arm, n] : a.counts) {
            total += n;
        }
        bool ok = a.counts == b.counts && total == a.shots;
        results.push_back({"sampling-determinism", ok ? CheckStatus::Pass : CheckStatus::Fail,
                           "repeat draws with seed " + std::to_string(options.seed)});
    }

    return results;
}

}  // namespace ctxflow
