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
#include <span>
#include <vector>

#include "secroute/geometry.hpp"
#include "secroute/params.hpp"
#include "secroute/random.hpp"

namespace secroute {

/// How a hop's outage event is sampled.
///
/// `exhaustive` draws the whole jammer (and eavesdropper) PPP over the window
/// every hop and round and evaluates the SIR literally. Cost grows with
/// density times window area.
///
/// `lazy` samples the same windowed model exactly in distribution but only
/// materialises points near the receiver (COP) or transmitter (SOP). The rest
/// of the window enters through Poisson thinning of a dominating process,
/// which relies on the desired-link gain being unit exponential:
/// P(h > a + b) = P(h > a) P(h' > b).
enum class SimMethod { lazy, exhaustive };

struct HopLayout {
    Point tx;
    Point rx;
    double power;
};

struct SimConfig {
    std::uint64_t rounds = 1'000'000;
    Region region{2000.0, 2000.0};
    std::vector<HopLayout> hops;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    SimMethod method = SimMethod::lazy;
    /// Expected number of far-field candidates per target in the lazy
    /// engine. Larger values shrink the explicit disc. Does not change the
    /// sampled distribution, only where the work is spent.
    double far_budget = 0.05;
};

/// Lays the hops of `path` end to end along a horizontal line through the
/// centre of `region`. Every hop needs a power.
SimConfig make_sim_config(const PathSpec& path, const Region& region, std::uint64_t rounds,
                          std::uint64_t seed);

struct SimEstimate {
    std::uint64_t outage_count = 0;
    std::uint64_t rounds = 0;

    double estimate() const noexcept
    {
        return rounds ? static_cast<double>(outage_count) / static_cast<double>(rounds) : 0.0;
    }
    double std_error() const noexcept;
};

/// One SIR realisation at `rx` for a transmission from `tx`, with fresh
/// unit-mean exponential gains on the main link and every jammer link.
/// Throws std::invalid_argument if tx == rx, p_tx < 0 or no jammers are given.
double simulate_link_sir(const Point& tx, const Point& rx, double p_tx,
                         std::span<const Point> jammers, const SystemParams& params,
                         CounterStream& stream);

/// Path connection outage: each round, every hop sees an independent jammer
/// PPP and independent fading; the path is in outage if any hop's SIR falls
/// below gamma_c.
SimEstimate estimate_path_cop(const SimConfig& config, const SystemParams& params);

/// Path secrecy outage: each round, every hop sees independent jammer and
/// eavesdropper PPPs; a hop leaks if any eavesdropper's SIR exceeds gamma_e,
/// and the path leaks if any hop does. No combining across hops.
/// lambda_e == 0 yields a zero estimate.
SimEstimate estimate_path_sop(const SimConfig& config, const SystemParams& params);

/// Eavesdropper disc radius used by the lazy SOP engine for a hop with the
/// given transmit power: the expected number of intercepting eavesdroppers
/// beyond it is below 1e-9.
double eavesdropper_radius(double power, const SystemParams& params);

} // namespace secroute
