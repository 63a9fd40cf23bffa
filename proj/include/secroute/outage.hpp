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

#include "secroute/params.hpp"

namespace secroute {

/// A connection or secrecy outage probability in [0, 1].
struct OutageValue {
    double probability;
    OutageKind kind;
};

/// Gamma(1 - 2/alpha) * Gamma(1 + 2/alpha), via log-gamma. Throws ParamError
/// for alpha <= 2.
double gamma_factor(double alpha);

/// Connection-outage constant
///   A_co = lambda_J * pi * (gamma_C * P_J)^(2/alpha) * gamma_factor(alpha).
double a_co(const SystemParams& params);

/// Secrecy-outage constant
///   B_so = lambda_E / lambda_J / ((gamma_E * P_J)^(2/alpha) * gamma_factor(alpha)).
double b_so(const SystemParams& params);

/// Single hop: 1 - exp(-A_co d^2 p^(-2/alpha)).
OutageValue link_cop(double distance, double power, const SystemParams& params);

/// Whole path: 1 - exp(-A_co sum_k d_k^2 P_k^(-2/alpha)). All hops need powers.
OutageValue path_cop(const PathSpec& path, const SystemParams& params);

/// Single hop: 1 - exp(-B_so p^(2/alpha)). This is an upper bound on the
/// true secrecy outage (the derivation averages the jammer field inside the
/// exponential); it is the value used throughout the optimizer.
OutageValue link_sop(double power, const SystemParams& params);

/// Whole path: 1 - exp(-B_so sum_k P_k^(2/alpha)).
OutageValue path_sop(const PathSpec& path, const SystemParams& params);

} // namespace secroute
