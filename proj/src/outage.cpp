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

#include "secroute/outage.hpp"

#include <cmath>
#include <numbers>

namespace secroute {

namespace {

void require_power(double p)
{
    if (!(p > 0) || !std::isfinite(p)) {
        throw std::invalid_argument("transmit power must be positive and finite");
    }
}

// 1 - exp(-x) without cancellation for small x.
double outage_from_exponent(double x)
{
    return -std::expm1(-x);
}

} // namespace

double gamma_factor(double alpha)
{
    if (!(alpha > 2) || !std::isfinite(alpha)) {
        throw ParamError("alpha", "alpha must exceed 2");
    }
    const double x = 2.0 / alpha;
    return std::exp(std::lgamma(1.0 - x) + std::lgamma(1.0 + x));
}

double a_co(const SystemParams& p)
{
    return p.lambda_j() * std::numbers::pi * std::pow(p.gamma_c() * p.p_jam(), 2.0 / p.alpha()) *
           gamma_factor(p.alpha());
}

double b_so(const SystemParams& p)
{
    return p.lambda_e() / p.lambda_j() /
           (std::pow(p.gamma_e() * p.p_jam(), 2.0 / p.alpha()) * gamma_factor(p.alpha()));
}

OutageValue link_cop(double distance, double power, const SystemParams& params)
{
    if (!(distance > 0) || !std::isfinite(distance)) {
        throw std::invalid_argument("link distance must be positive and finite");
    }
    require_power(power);
    const double exponent =
        a_co(params) * distance * distance * std::pow(power, -2.0 / params.alpha());
    return {outage_from_exponent(exponent), OutageKind::connection};
}

OutageValue path_cop(const PathSpec& path, const SystemParams& params)
{
    const double inv = -2.0 / params.alpha();
    double sum = 0;
    for (const auto& hop : path.hops()) {
        if (!hop.power) {
            throw std::invalid_argument("path_cop needs a power on every hop");
        }
        sum += hop.distance * hop.distance * std::pow(*hop.power, inv);
    }
    return {outage_from_exponent(a_co(params) * sum), OutageKind::connection};
}

OutageValue link_sop(double power, const SystemParams& params)
{
    require_power(power);
    return {outage_from_exponent(b_so(params) * std::pow(power, 2.0 / params.alpha())),
            OutageKind::secrecy};
}

OutageValue path_sop(const PathSpec& path, const SystemParams& params)
{
    const double expo = 2.0 / params.alpha();
    double sum = 0;
    for (const auto& hop : path.hops()) {
        if (!hop.power) {
            throw std::invalid_argument("path_sop needs a power on every hop");
        }
        sum += std::pow(*hop.power, expo);
    }
    return {outage_from_exponent(b_so(params) * sum), OutageKind::secrecy};
}

} // namespace secroute
