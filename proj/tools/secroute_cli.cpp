/*
   Copyright 2026 The secroute Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end for the experiment runners.
//
// Exit status: 0 success, 1 usage or validation error, 2 runtime or I/O
// error, 3 destination unreachable (route-demo).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "secroute/experiments.hpp"
#include "secroute/params.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitUnreachable = 3;

struct Subcommand {
    secroute::ExperimentKind kind;
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::string config;
    std::string scenario_out;
    bool paper_scale = false;
};

const char* describe(secroute::ExperimentKind kind)
{
    using secroute::ExperimentKind;
    switch (kind) {
    case ExperimentKind::validate_cop:
        return "Monte Carlo vs closed-form path connection outage";
    case ExperimentKind::validate_sop:
        return "Monte Carlo vs closed-form path secrecy outage";
    case ExperimentKind::tradeoff_curve:
        return "COP/SOP pairs along a transmit power sweep";
    case ExperimentKind::optimal_tradeoff:
        return "optimal outage and per-hop powers against the outage bound";
    case ExperimentKind::table_fixture:
        return "optimal allocations for a fixed path";
    case ExperimentKind::route_demo:
        return "shortest path plus power allocation on a random scenario";
    }
    return "";
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

int run(Subcommand& sub)
{
    std::map<std::string, std::string> options;
    if (!sub.config.empty()) {
        std::ifstream in(sub.config);
        if (!in) {
            throw std::runtime_error("cannot open config file '" + sub.config + "'");
        }
        options = secroute::parse_config(in);
    }
    for (const auto& [key, value] : sub.values) {
        options[key] = value; // flags override the config file
    }
    if (sub.paper_scale) {
        options["paper-scale"] = "true";
    }

    const auto spec = secroute::spec_from_options(sub.kind, options);
    const auto result = secroute::run_experiment(spec);
    if (spec.out.empty()) {
        std::cout << result.csv;
    } else {
        write_file(spec.out, result.csv);
    }
    if (result.scenario) {
        std::string path = sub.scenario_out;
        if (path.empty() && !spec.out.empty()) {
            path = spec.out + ".scenario";
        }
        if (!path.empty()) {
            write_file(path, *result.scenario);
        }
    }
    if (result.unreachable) {
        std::cerr << "destination unreachable\n";
        return kExitUnreachable;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secure multi-hop routing experiments: outage analytics, Monte Carlo "
                 "validation, power allocation and routing."};
    app.require_subcommand(1);

    using secroute::ExperimentKind;
    std::vector<std::unique_ptr<Subcommand>> subs;
    for (auto kind : {ExperimentKind::validate_cop, ExperimentKind::validate_sop,
                      ExperimentKind::tradeoff_curve, ExperimentKind::optimal_tradeoff,
                      ExperimentKind::table_fixture, ExperimentKind::route_demo}) {
        auto sub = std::make_unique<Subcommand>();
        sub->kind = kind;
        sub->app = app.add_subcommand(secroute::to_string(kind), describe(kind));
        for (const auto& name : secroute::option_names(kind)) {
            if (name == "paper-scale") {
                sub->app->add_flag("--paper-scale", sub->paper_scale,
                                   "use 10^7 Monte Carlo rounds");
                continue;
            }
            sub->app->add_option("--" + name, sub->values[name]);
        }
        sub->app->add_option("--config", sub->config, "key = value file; flags take precedence");
        if (kind == ExperimentKind::route_demo) {
            sub->app->add_option("--scenario-out", sub->scenario_out,
                                 "where to write the scenario (default <out>.scenario)");
        }
        subs.push_back(std::move(sub));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (auto& sub : subs) {
        if (!sub->app->parsed()) {
            continue;
        }
        // Only options actually given on the command line count.
        for (auto it = sub->values.begin(); it != sub->values.end();) {
            it = sub->app->count("--" + it->first) ? std::next(it) : sub->values.erase(it);
        }
        try {
            return run(*sub);
        } catch (const std::invalid_argument& e) { // UsageError and friends
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const secroute::ParamError& e) {
            std::cerr << "error: " << e.field() << ": " << e.what() << '\n';
            return kExitUsage;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitRuntime;
        }
    }
    return kExitUsage;
}
