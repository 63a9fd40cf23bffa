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

#include "secroute/tradeoff.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "secroute/outage.hpp"
#include "secroute/random.hpp"

namespace secroute {

namespace {

constexpr double kCrossCheckTolerance = 1e-9;

// Perturbation scales cycled through by the verifier, coarse to fine.
constexpr double kScales[] = {0.5, 0.05, 5e-3, 5e-4, 5e-5};

void cross_check(const char* what, double closed_form, double from_powers)
{
    if (!(std::abs(closed_form - from_powers) <= kCrossCheckTolerance)) {
        throw std::logic_error(std::string(what) + ": closed form " + std::to_string(closed_form) +
                               " disagrees with outage formula " + std::to_string(from_powers));
    }
}

// Work in F_k = P_k^(2/alpha): path COP is 1 - exp(-A sum d_k^2 / F_k) and
// path SOP is 1 - exp(-B sum F_k).
double cop_sum(const std::vector<double>& d, const std::vector<double>& f)
{
    double s = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        s += d[k] * d[k] / f[k];
    }
    return s;
}

double sop_sum(const std::vector<double>& f)
{
    return std::accumulate(f.begin(), f.end(), 0.0);
}

} // namespace

const char* to_string(Objective objective) noexcept
{
    return objective == Objective::so_cop ? "so-cop" : "qo-sop";
}

double optimal_outage(double total_length, const SystemParams& params, double beta)
{
    const OutageConstraint bound(OutageKind::secrecy, beta); // validates beta
    if (!(total_length > 0) || !std::isfinite(total_length)) {
        throw std::invalid_argument("path length must be positive and finite");
    }
    const double ratio = std::pow(params.gamma_c() / params.gamma_e(), 2.0 / params.alpha());
    const double exponent = params.lambda_e() * std::numbers::pi / std::log1p(-bound.beta()) *
                            ratio * total_length * total_length;
    return -std::expm1(exponent);
}

PowerAllocation solve_so_cop(const PathSpec& path, const SystemParams& params, double beta_so)
{
    const auto constraint = OutageConstraint::secrecy(beta_so);
    if (params.lambda_e() == 0) {
        throw ParamError("lambda_e", "secrecy constraint is vacuous when lambda_e is 0");
    }
    const auto d = path.distances();
    const double total = path.total_length();
    const double budget = -std::log1p(-constraint.beta()) / b_so(params); // sum of F_k
    const double half_alpha = params.alpha() / 2.0;

    std::vector<double> powers;
    powers.reserve(d.size());
    for (double dk : d) {
        powers.push_back(std::pow(budget * dk / total, half_alpha));
    }

    const PathSpec allocated = path.assign_powers(powers);
    PowerAllocation out{powers, Objective::so_cop, optimal_outage(total, params, beta_so),
                        path_sop(allocated, params).probability, constraint};
    cross_check("so-cop", out.achieved_cop, path_cop(allocated, params).probability);
    return out;
}

PowerAllocation solve_qo_sop(const PathSpec& path, const SystemParams& params, double beta_co)
{
    const auto constraint = OutageConstraint::connection(beta_co);
    if (params.gamma_c() == 0) {
        throw ParamError("gamma_c", "connection constraint is vacuous when gamma_c is 0");
    }
    const auto d = path.distances();
    const double total = path.total_length();
    const double scale = -a_co(params) / std::log1p(-constraint.beta()) * total;
    const double half_alpha = params.alpha() / 2.0;

    std::vector<double> powers;
    powers.reserve(d.size());
    for (double dk : d) {
        powers.push_back(std::pow(scale * dk, half_alpha));
    }

    const PathSpec allocated = path.assign_powers(powers);
    PowerAllocation out{powers, Objective::qo_sop, path_cop(allocated, params).probability,
                        optimal_outage(total, params, beta_co), constraint};
    cross_check("qo-sop", out.achieved_sop, path_sop(allocated, params).probability);
    return out;
}

VerificationReport verify_optimality(const PowerAllocation& allocation, const PathSpec& path,
                                     const SystemParams& params, std::uint64_t trials,
                                     std::uint64_t seed, double tolerance)
{
    const auto d = path.distances();
    if (allocation.powers.size() != d.size()) {
        throw std::invalid_argument("allocation and path have different hop counts");
    }
    const double expo = 2.0 / params.alpha();
    const double log_slack = -std::log1p(-allocation.constraint.beta());
    const bool so_cop = allocation.objective == Objective::so_cop;
    // Active constraint: sum F = log_slack / B (so-cop) or
    // sum d^2/F = log_slack / A (qo-sop).
    const double target = so_cop ? log_slack / b_so(params) : log_slack / a_co(params);
    const double rate = so_cop ? a_co(params) : b_so(params);

    auto project = [&](std::vector<double>& f) {
        const double t = so_cop ? target / sop_sum(f) : cop_sum(d, f) / target;
        for (auto& x : f) {
            x *= t;
        }
    };
    auto objective = [&](const std::vector<double>& f) {
        return -std::expm1(-rate * (so_cop ? cop_sum(d, f) : sop_sum(f)));
    };

    std::vector<double> base;
    base.reserve(d.size());
    for (double p : allocation.powers) {
        base.push_back(std::pow(p, expo));
    }
    project(base);
    const double f0 = objective(base);

    VerificationReport report;
    report.trials = trials;
    report.best_gain = -std::numeric_limits<double>::infinity();
    std::vector<double> trial(base.size());
    std::normal_distribution<double> normal;
    for (std::uint64_t t = 0; t < trials; ++t) {
        CounterStream stream({seed, Purpose::verifier, t, 0});
        const double sigma = kScales[t % std::size(kScales)];
        normal.reset(); // no cached variate may leak between trials
        for (std::size_t k = 0; k < base.size(); ++k) {
            trial[k] = base[k] * std::exp(sigma * normal(stream));
        }
        project(trial);
        const double gain = f0 > 0 ? (f0 - objective(trial)) / f0 : 0.0;
        if (gain > report.best_gain) {
            report.best_gain = gain;
        }
        if (gain > tolerance) {
            ++report.improving;
            if (!report.counterexample || gain >= report.best_gain) {
                std::vector<double> powers;
                for (double f : trial) {
                    powers.push_back(std::pow(f, 1.0 / expo));
                }
                report.counterexample = std::move(powers);
            }
        }
    }
    return report;
}

} // namespace secroute
