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

#include "secroute/params.hpp"

#include <cmath>
#include <numeric>

namespace secroute {

namespace {

void require(bool ok, const char* field, const std::string& message)
{
    if (!ok) {
        throw ParamError(field, message);
    }
}

} // namespace

SystemParams validate_params(const ParamsInput& raw)
{
    // NaN fails every comparison below, so it is rejected with the field name.
    require(raw.lambda_j > 0 && std::isfinite(raw.lambda_j), "lambda_j",
            "lambda_j must be positive and finite");
    require(raw.lambda_e >= 0 && std::isfinite(raw.lambda_e), "lambda_e",
            "lambda_e must be non-negative and finite");
    require(raw.gamma_c >= 0 && std::isfinite(raw.gamma_c), "gamma_c",
            "gamma_c must be non-negative and finite");
    require(raw.gamma_e > 0 && std::isfinite(raw.gamma_e), "gamma_e",
            "gamma_e must be positive and finite");
    require(raw.p_jam > 0 && std::isfinite(raw.p_jam), "p_jam",
            "p_jam must be positive and finite");
    require(raw.alpha > 2 && std::isfinite(raw.alpha), "alpha", "alpha must exceed 2");
    return SystemParams(raw);
}

Thresholds rates_to_thresholds(double codeword_rate, double secrecy_rate)
{
    if (!(secrecy_rate >= 0) || !std::isfinite(codeword_rate)) {
        throw std::invalid_argument("code rates must be finite and non-negative");
    }
    if (secrecy_rate > codeword_rate) {
        throw std::invalid_argument(
            "secrecy rate exceeds codeword rate (negative rate redundancy)");
    }
    const double redundancy = codeword_rate - secrecy_rate;
    return {std::exp2(codeword_rate) - 1.0, std::exp2(redundancy) - 1.0};
}

PathSpec::PathSpec(std::vector<Hop> hops) : hops_(std::move(hops))
{
    if (hops_.empty()) {
        throw std::invalid_argument("a path needs at least one hop");
    }
    for (const auto& hop : hops_) {
        if (!(hop.distance > 0) || !std::isfinite(hop.distance)) {
            throw std::invalid_argument("hop distances must be positive and finite");
        }
        if (hop.power && (!(*hop.power > 0) || !std::isfinite(*hop.power))) {
            throw std::invalid_argument("hop powers must be positive and finite");
        }
    }
}

PathSpec PathSpec::from_distances(std::span<const double> distances)
{
    std::vector<Hop> hops;
    hops.reserve(distances.size());
    for (double d : distances) {
        hops.push_back({d, std::nullopt});
    }
    return PathSpec(std::move(hops));
}

PathSpec PathSpec::with_powers(std::span<const double> distances,
                               std::span<const double> powers)
{
    return from_distances(distances).assign_powers(powers);
}

PathSpec PathSpec::uniform(std::size_t hop_count, double distance, double power)
{
    return PathSpec(std::vector<Hop>(hop_count, Hop{distance, power}));
}

std::vector<double> PathSpec::distances() const
{
    std::vector<double> out;
    out.reserve(hops_.size());
    for (const auto& hop : hops_) {
        out.push_back(hop.distance);
    }
    return out;
}

bool PathSpec::has_powers() const noexcept
{
    for (const auto& hop : hops_) {
        if (!hop.power) {
            return false;
        }
    }
    return true;
}

std::vector<double> PathSpec::powers() const
{
    std::vector<double> out;
    out.reserve(hops_.size());
    for (const auto& hop : hops_) {
        if (!hop.power) {
            throw std::invalid_argument("path has hops without a transmit power");
        }
        out.push_back(*hop.power);
    }
    return out;
}

double PathSpec::total_length() const noexcept
{
    return std::accumulate(hops_.begin(), hops_.end(), 0.0,
                           [](double acc, const Hop& h) { return acc + h.distance; });
}

PathSpec PathSpec::assign_powers(std::span<const double> powers) const
{
    if (powers.size() != hops_.size()) {
        throw std::invalid_argument("power count does not match hop count");
    }
    std::vector<Hop> hops = hops_;
    for (std::size_t k = 0; k < hops.size(); ++k) {
        hops[k].power = powers[k];
    }
    return PathSpec(std::move(hops));
}

const char* to_string(OutageKind kind) noexcept
{
    return kind == OutageKind::connection ? "connection" : "secrecy";
}

OutageConstraint::OutageConstraint(OutageKind kind, double beta) : kind_(kind), beta_(beta)
{
    if (!(beta > kBetaGuard && beta < 1.0 - kBetaGuard)) {
        throw std::invalid_argument("outage constraint beta must lie strictly inside (0, 1)");
    }
}

} // namespace secroute
