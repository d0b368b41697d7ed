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

#ifndef CTXFLOW_CLI_CLI_H
#define CTXFLOW_CLI_CLI_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace ctxflow::cli {

enum class Command { Paths, Probs, WeakValues, Inequality, Continuity, Classical, Sample, Verify };
enum class OutputFormat { Text, Json, Csv };

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_VERIFY_FAILED = 1;
inline constexpr int EXIT_USAGE = 2;

/// Environment variable naming a network file used when --network is absent.
inline constexpr const char *NETWORK_ENV = "CTXFLOW_NETWORK";

struct RunConfig {
    Command command = Command::Verify;
    std::optional<std::string> state_source;
    std::optional<std::string> network_source;  // nullopt: $CTXFLOW_NETWORK, else the built-in network
    OutputFormat output_format = OutputFormat::Text;
    bool normalize = false;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> shots;
    std::optional<std::string> context;
};

std::string command_name(Command c);

/// True for commands that read a state (everything but paths, classical, verify).
bool needs_state(Command c);

/// Executes one command. Reports go to `out`, diagnostics to `err`.
/// Returns EXIT_OK, EXIT_VERIFY_FAILED or EXIT_USAGE.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv into a RunConfig and runs it.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ctxflow::cli

#endif
