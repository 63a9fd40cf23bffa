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
#include <optional>
#include <vector>

#include "secroute/params.hpp"

namespace secroute {

/// Which outage is minimised while the other is held at its bound.
enum class Objective {
    so_cop, ///< minimise connection outage subject to secrecy outage <= beta
    qo_sop, ///< minimise secrecy outage subject to connection outage <= beta
};

const char* to_string(Objective objective) noexcept;

struct PowerAllocation {
    std::vector<double> powers;
    Objective objective;
    double achieved_cop;
    double achieved_sop;
    OutageConstraint constraint;

    /// The minimised outage: achieved_cop for so_cop, achieved_sop for qo_sop.
    double achieved_objective() const noexcept
    {
        return objective == Objective::so_cop ? achieved_cop : achieved_sop;
    }
};

/// Optimal outage value shared by both problems for a path of total length
/// `total_length` and bound `beta`:
///   1 - exp[lambda_E pi / ln(1 - beta) * (gamma_C / gamma_E)^(2/alpha) * L^2].
/// It does not depend on lambda_J or P_J.
double optimal_outage(double total_length, const SystemParams& params, double beta);

/// Per-hop powers minimising path COP with path SOP held at beta_so:
///   P_k = (-ln(1 - beta) / B_so * d_k / sum d)^(alpha/2).
/// Throws ParamError("lambda_e") when lambda_e == 0, since the secrecy bound
/// is then vacuous. Throws std::logic_error if the closed-form optimum and
/// the outage formulas applied to the powers disagree by more than 1e-9.
PowerAllocation solve_so_cop(const PathSpec& path, const SystemParams& params, double beta_so);

/// Per-hop powers minimising path SOP with path COP held at beta_co:
///   P_k = (-A_co / ln(1 - beta) * sum d * d_k)^(alpha/2).
/// Throws ParamError("gamma_c") when gamma_c == 0 (every power meets the
/// bound, so no positive optimum exists).
PowerAllocation solve_qo_sop(const PathSpec& path, const SystemParams& params, double beta_co);

struct VerificationReport {
    std::uint64_t trials = 0;
    std::uint64_t improving = 0;
    /// Largest relative objective gain seen, (f0 - f) / f0; negative when
    /// every trial was worse.
    double best_gain = 0;
    /// Powers of the best improving trial, if any improved by more than the
    /// tolerance.
    std::optional<std::vector<double>> counterexample;

    bool optimal() const noexcept { return improving == 0; }
};

/// Draws `trials` random allocations on the active constraint surface around
/// `allocation` and counts those whose objective beats it by more than
/// `tolerance` (relative). Trials are perturbed multiplicatively in
/// F_k = P_k^(2/alpha) space over a spread of scales, then rescaled so the
/// constraint holds with equality. Each trial reads its own random stream,
/// addressed by (seed, trial index).
VerificationReport verify_optimality(const PowerAllocation& allocation, const PathSpec& path,
                                     const SystemParams& params, std::uint64_t trials,
                                     std::uint64_t seed, double tolerance = 1e-9);

} // namespace secroute
