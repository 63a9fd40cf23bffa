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

#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "secroute/params.hpp"

namespace secroute {

enum class ExperimentKind {
    validate_cop,
    validate_sop,
    tradeoff_curve,
    optimal_tradeoff,
    table_fixture,
    route_demo,
};

const char* to_string(ExperimentKind kind) noexcept;

/// Throws UsageError for an unknown name.
ExperimentKind parse_kind(std::string_view name);

/// Bad options, config lines or parameter values. Maps to exit status 1.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A runner's self-check on the shape of its output failed (a closed-form
/// column that should be monotone was not). Maps to exit status 2.
class ShapeError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDeskRounds = 1'000'000;
inline constexpr std::uint64_t kPaperRounds = 10'000'000;

/// Everything a runner needs. Build one with spec_from_options() so the
/// kind-specific defaults are applied.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::validate_cop;
    ParamsInput base;                  ///< scalar parameters
    std::vector<double> lambda_j;      ///< swept or single value
    std::vector<double> lambda_e;      ///< swept or single value
    std::vector<double> hop_distances; ///< per-hop length, one path per value
    std::vector<double> powers;        ///< per-hop transmit power grid
    std::vector<double> betas;         ///< outage bound grid
    std::vector<double> path_distances; ///< explicit hop lengths (table-fixture)
    std::size_t hops = 5;
    double beta_so = 0.4;
    double beta_co = 0.4;
    std::string fixture;
    double max_range = 8.0;
    std::size_t nodes = 20;
    double area_side = 20.0;           ///< route-demo square side
    double window = 2000.0;            ///< Monte Carlo window side
    std::optional<std::uint64_t> seed;
    std::uint64_t rounds = kDeskRounds;
    unsigned threads = 1;
    std::string out;                   ///< empty means stdout
    std::optional<std::string> scenario; ///< route-demo replay input
};

/// Reads `key = value` lines. Blank lines and lines starting with '#' are
/// skipped; underscores in keys are read as dashes. Throws UsageError on a
/// malformed line or a repeated key.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Builds a spec from option values keyed by long flag name without the
/// leading dashes ("lambda-j", "seed", ...). List options take
/// comma-separated numbers. Kind-specific defaults fill everything not
/// given. Throws UsageError for unknown or inapplicable keys, malformed
/// numbers, or parameter domain violations.
ExperimentSpec spec_from_options(ExperimentKind kind,
                                 const std::map<std::string, std::string>& options);

/// Option names accepted by a kind, for help text and validation.
std::vector<std::string> option_names(ExperimentKind kind);

struct ExperimentOutput {
    std::string csv;
    std::optional<std::string> scenario; ///< route-demo: serialized scenario
    bool unreachable = false;            ///< route-demo: no path to destination
};

/// Runs the experiment. The CSV is a pure function of the spec: thread
/// count never changes it, and closed-form columns never depend on rounds or
/// seed. Throws UsageError for specs missing a required seed, ShapeError if
/// a monotonicity self-check fails, std::runtime_error on I/O problems.
ExperimentOutput run_experiment(const ExperimentSpec& spec);

ExperimentOutput run_validate_cop(const ExperimentSpec& spec);
ExperimentOutput run_validate_sop(const ExperimentSpec& spec);
ExperimentOutput run_tradeoff_curve(const ExperimentSpec& spec);
ExperimentOutput run_optimal_tradeoff(const ExperimentSpec& spec);
ExperimentOutput run_table_fixture(const ExperimentSpec& spec);
ExperimentOutput run_route_demo(const ExperimentSpec& spec);

/// Numeric CSV field: "%.12g".
std::string csv_number(double value);

} // namespace secroute
