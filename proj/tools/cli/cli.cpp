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

#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "cli/format.h"
#include "cli/report.h"
#include "cli/state_parser.h"
#include "ctxflow/errors.h"
#include "ctxflow/network_json.h"

namespace ctxflow::cli {

namespace {

constexpr uint64_t DEFAULT_SEED = 42;
constexpr uint64_t DEFAULT_SHOTS = 1000000;

const std::map<std::string, Command> &command_table() {
    static const std::map<std::string, Command> table{
        {"paths", Command::Paths},           {"probs", Command::Probs},
        {"weak-values", Command::WeakValues}, {"inequality", Command::Inequality},
        {"continuity", Command::Continuity}, {"classical", Command::Classical},
        {"sample", Command::Sample},         {"verify", Command::Verify},
    };
    return table;
}

std::string label(PathLabel l) {
    return std::string(display_name(l));
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

Network resolve_network(const RunConfig &config) {
    if (config.network_source) {
        return load_network_file(*config.network_source);
    }
    if (const char *env = std::getenv(NETWORK_ENV); env && *env) {
        return load_network_file(env);
    }
    return canonical_network();
}

std::string members_text(const Context &c) {
    std::string s = "{";
    for (size_t k = 0; k < 3; ++k) {
        s += (k ? ", " : "") + label(c.members[k]);
    }
    return s + "}";
}

struct Emitted {
    json result;
    std::string text;
    std::string csv;
    bool failed = false;
};

Emitted do_paths(const Network &net) {
    Emitted e{paths_json(net), {}, {}};
    std::ostringstream text;
    std::ostringstream csv;
    for (const auto &s : net.stages()) {
        text << "stage " << s.stage_index << ": " << label(s.in_a) << ", " << label(s.in_b) << " -> "
             << label(s.out_a) << ", " << label(s.out_b) << "  R = " << format_fraction(s.reflectivity) << "\n";
    }
    for (const auto &[arm, angle] : net.phases()) {
        text << "phase " << label(arm) << " = " << format_decimal(angle) << " rad\n";
    }
    text << "\n";
    csv << "arm,slice,re1,im1,re2,im2,re3,im3\n";
    text << std::left << std::setw(6) << "arm" << std::setw(7) << "slice"
         << "ket in basis (1, 2, 3)\n";
    for (PathLabel arm : net.arms()) {
        const auto &k = path_state(net, arm);
        text << std::setw(6) << label(arm) << std::setw(7) << net.creation_slice(arm) << "(";
        csv << to_string(arm) << "," << net.creation_slice(arm);
        for (size_t j = 0; j < 3; ++j) {
            text << (j ? ", " : "") << format_complex(k[j]);
            csv << "," << format_decimal(k[j].real()) << "," << format_decimal(k[j].imag());
        }
        text << ")\n";
        csv << "\n";
    }
    e.text = text.str();
    e.csv = csv.str();
    return e;
}

Emitted do_probs(const StateVector &state, const Network &net, const std::vector<Context> &ctxs) {
    Emitted e{probabilities_json(state, net, ctxs), {}, {}};
    std::ostringstream text;
    std::ostringstream csv;
    csv << "context,arm,probability\n";
    for (const auto &c : ctxs) {
        auto probs = context_probabilities(state, net, c);
        text << "context " << c.name << " " << members_text(c) << "\n";
        for (PathLabel m : c.members) {
            text << "  " << std::left << std::setw(6) << label(m) << format_fraction(probs.at(m)) << "\n";
            csv << c.name << "," << to_string(m) << "," << format_decimal(probs.at(m)) << "\n";
        }
    }
    e.text = text.str();
    e.csv = csv.str();
    return e;
}

Emitted do_weak_values(const StateVector &state, const Network &net) {
    Emitted e{weak_values_json(state, net), {}, {}};
    std::ostringstream text;
    std::ostringstream csv;
    std::vector<bool> defined;
    text << std::left << std::setw(8) << "W(i|o)";
    csv << "arm";
    for (int k = 1; k <= 3; ++k) {
        PathLabel o = output_port(k);
        defined.push_back(path_probability(state, net, o) > TOL_ZERO);
        text << std::setw(16) << label(o);
        csv << "," << to_string(o);
    }
    text << "\n";
    csv << "\n";
    for (PathLabel i : net.arms()) {
        text << std::setw(8) << label(i);
        csv << to_string(i);
        for (int k = 1; k <= 3; ++k) {
            if (!defined[k - 1]) {
                text << std::setw(16) << "undefined";
                csv << ",";
                continue;
            }
            Complex w = weak_value(state, net, i, output_port(k));
            text << std::setw(16) << format_complex(w);
            csv << "," << format_complex_cell(w);
        }
        text << "\n";
        csv << "\n";
    }
    e.text = text.str();
    e.csv = csv.str();
    return e;
}

Emitted do_inequality(const StateVector &state, const Network &net) {
    auto r = ks_inequality(state, net);
    Emitted e{inequality_json(r), {}, {}};
    std::ostringstream text;
    text << std::left << std::setw(12) << "P(f)" << format_fraction(r.p_f) << "\n"
         << std::setw(12) << "P(D1)" << format_fraction(r.p_d1) << "\n"
         << std::setw(12) << "P(D2)" << format_fraction(r.p_d2) << "\n"
         << std::setw(12) << "violation" << format_fraction(r.violation) << "\n"
         << std::setw(12) << "violated" << (r.violated ? "yes" : "no") << "\n";
    e.text = text.str();
    e.csv = "quantity,value\np_f," + format_decimal(r.p_f) + "\np_d1," + format_decimal(r.p_d1) + "\np_d2," +
            format_decimal(r.p_d2) + "\nviolation," + format_decimal(r.violation) + "\nviolated," +
            (r.violated ? "true" : "false") + "\n";
    return e;
}

Emitted do_continuity(const StateVector &state, const Network &net) {
    auto r = continuity_check(state, net);
    Emitted e{continuity_json(r), {}, {}};
    std::ostringstream text;
    std::ostringstream csv;
    csv << "stage,outcome,input_re,input_im,output_re,output_im,residual\n";
    text << std::left << std::setw(7) << "stage" << std::setw(9) << "outcome" << std::setw(14) << "into"
         << std::setw(14) << "out of"
         << "residual\n";
    for (const auto &c : r.entries) {
        text << std::setw(7) << c.stage_index << std::setw(9) << label(c.outcome) << std::setw(14)
             << format_complex(c.input_sum) << std::setw(14) << format_complex(c.output_sum)
             << format_decimal(c.residual) << "\n";
        csv << c.stage_index << "," << to_string(c.outcome) << "," << format_decimal(c.input_sum.real()) << ","
            << format_decimal(c.input_sum.imag()) << "," << format_decimal(c.output_sum.real()) << ","
            << format_decimal(c.output_sum.imag()) << "," << format_decimal(c.residual) << "\n";
    }
    text << "max residual " << format_decimal(r.max_residual()) << "\n";
    e.text = text.str();
    e.csv = csv.str();
    return e;
}

Emitted do_classical(const Network &net) {
    auto r = verify_classical_claim(net);
    Emitted e{trajectories_json(r), {}, {}};
    std::ostringstream text;
    std::ostringstream csv;
    csv << "input,output,route,branchings,via_f_same_port\n";
    for (const auto &t : r.all_trajectories) {
        bool via = t.same_port() && t.visits(PathLabel::F);
        text << (via ? "* " : "  ") << t.route() << "\n";
        csv << to_string(t.input) << "," << to_string(t.output) << "," << t.route() << "," << t.branchings << ","
            << (via ? "true" : "false") << "\n";
    }
    text << r.all_trajectories.size() << " trajectories; " << r.via_f_same_port.size()
         << " same-port routes through f (marked *)\n"
         << "every marked route visits D1 or D2: " << (r.claim_holds ? "yes" : "no") << "\n"
         << "assumes each particle exits from the port matching its input\n";
    e.text = text.str();
    e.csv = csv.str();
    return e;
}

Emitted do_sample(const StateVector &state, const Network &net, const Context &ctx, uint64_t shots,
                  uint64_t seed) {
    auto s = sample_detections(state, net, ctx, shots, seed);
    Emitted e{sample_json(s, state, net), {}, {}};
    auto probs = context_probabilities(state, net, ctx);
    std::ostringstream text;
    std::ostringstream csv;
    text << "context " << ctx.name << " " << members_text(ctx) << ", " << shots << " shots, seed " << seed << "\n";
    text << std::left << std::setw(6) << "arm" << std::setw(12) << "count" << std::setw(18) << "frequency"
         << "probability\n";
    csv << "arm,count,frequency,probability\n";
    for (PathLabel m : ctx.members) {
        double f = static_cast<double>(s.counts.at(m)) / static_cast<double>(shots);
        text << std::setw(6) << label(m) << std::setw(12) << s.counts.at(m) << std::setw(18) << format_decimal(f)
             << format_fraction(probs.at(m)) << "\n";
        csv << to_string(m) << "," << s.counts.at(m) << "," << format_decimal(f) << ","
            << format_decimal(probs.at(m)) << "\n";
    }
    e.text = text.str();
    e.csv = csv.str();
    return e;
}

Emitted do_verify(const Network &net, uint64_t seed) {
    VerifyOptions options;
    options.seed = seed;
    auto results = run_invariant_suite(net, options);
    Emitted e{verify_json(results), {}, {}};
    e.failed = !all_passed(results);
    std::ostringstream text;
    std::ostringstream csv;
    csv << "check,status,detail\n";
    for (const auto &r : results) {
        text << "[" << to_string(r.status) << "] " << r.name << ": " << r.detail << "\n";
        csv << r.name << "," << to_string(r.status) << "," << csv_quote(r.detail) << "\n";
    }
    text << (e.failed ? "verification FAILED" : "all checks passed") << "\n";
    e.text = text.str();
    e.csv = csv.str();
    return e;
}

}  // namespace

std::string command_name(Command c) {
    for (const auto &[name, cmd] : command_table()) {
        if (cmd == c) {
            return name;
        }
    }
    return "?";
}

bool needs_state(Command c) {
    return c != Command::Paths && c != Command::Classical && c != Command::Verify;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        Network net = resolve_network(config);
        std::optional<StateVector> state;
        if (needs_state(config.command)) {
            if (!config.state_source) {
                err << "error: " << command_name(config.command) << " requires --state\n";
                return EXIT_USAGE;
            }
            state = parse_state(*config.state_source, config.normalize);
        }
        uint64_t seed = config.seed.value_or(DEFAULT_SEED);

        Emitted e;
        switch (config.command) {
            case Command::Paths:
                e = do_paths(net);
                break;
            case Command::Probs: {
                std::vector<Context> ctxs =
                    config.context ? std::vector<Context>{find_context(net, *config.context)} : contexts(net);
                e = do_probs(*state, net, ctxs);
                break;
            }
            case Command::WeakValues:
                e = do_weak_values(*state, net);
                break;
            case Command::Inequality:
                e = do_inequality(*state, net);
                break;
            case Command::Continuity:
                e = do_continuity(*state, net);
                break;
            case Command::Classical:
                e = do_classical(net);
                break;
            case Command::Sample: {
                Context ctx = config.context ? find_context(net, *config.context) : contexts(net).back();
                uint64_t shots = config.shots.value_or(DEFAULT_SHOTS);
                if (shots == 0) {
                    err << "error: --shots must be positive\n";
                    return EXIT_USAGE;
                }
                e = do_sample(*state, net, ctx, shots, seed);
                break;
            }
            case Command::Verify:
                e = do_verify(net, seed);
                break;
        }

        switch (config.output_format) {
            case OutputFormat::Text:
                out << e.text;
                break;
            case OutputFormat::Json:
                out << dump_report(envelope(command_name(config.command), state, net, std::move(e.result)));
                break;
            case OutputFormat::Csv:
                out << e.csv;
                break;
        }
        return e.failed ? EXIT_VERIFY_FAILED : EXIT_OK;
    } catch (const Error &ex) {
        err << "error: " << ex.what() << "\n";
        return EXIT_USAGE;
    }
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Three-path interferometer simulator: path probabilities, weak values, continuity, "
                 "contextuality inequality and classical trajectories."};
    app.name("ctxflow");
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "text";
    std::optional<std::string> state;
    std::optional<std::string> network;
    std::optional<std::string> context;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> shots;
    bool normalize = false;

    const std::vector<std::pair<std::string, std::string>> descriptions{
        {"paths", "print the ket of every arm"},
        {"probs", "Born probabilities for every context (or --context)"},
        {"weak-values", "table of W(i|o) over all arms and output ports"},
        {"inequality", "evaluate P(f) <= P(D1) + P(D2)"},
        {"continuity", "conditional currents into and out of every beam splitter"},
        {"classical", "enumerate classical trajectories and check the route argument"},
        {"sample", "simulate detections in a context"},
        {"verify", "run the invariant suite; exit 1 on any failure"},
    };
    for (const auto &[name, description] : descriptions) {
        auto *sub = app.add_subcommand(name, description);
        Command cmd = command_table().at(name);
        sub->callback([&config, cmd] { config.command = cmd; });
        if (needs_state(cmd)) {
            sub->add_option("--state", state, "preset (nx, symmetric), amplitude list \"a,b,c\" or JSON file");
            sub->add_flag("--normalize", normalize, "rescale a state whose norm is not 1");
        }
        sub->add_option("--network", network, "network JSON file (default: $CTXFLOW_NETWORK or built-in)");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
        if (cmd == Command::Probs || cmd == Command::Sample) {
            sub->add_option("--context", context, "context name, slice index or member list");
        }
        if (cmd == Command::Sample || cmd == Command::Verify) {
            sub->add_option("--seed", seed, "pseudorandom seed (default 42)");
        }
        if (cmd == Command::Sample) {
            sub->add_option("--shots", shots, "number of detections (default 1000000)")
                ->check(CLI::PositiveNumber);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == static_cast<int>(CLI::ExitCodes::Success) ? EXIT_OK : EXIT_USAGE;
    }

    config.state_source = state;
    config.network_source = network;
    config.context = context;
    config.seed = seed;
    config.shots = shots;
    config.normalize = normalize;
    config.output_format = format == "json" ? OutputFormat::Json
                           : format == "csv" ? OutputFormat::Csv
                                             : OutputFormat::Text;
    return run(config, out, err);
}

}  // namespace ctxflow::cli
