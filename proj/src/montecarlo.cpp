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

#include "secroute/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "secroute/outage.hpp"

namespace secroute {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kBatchRounds = 1024;
// Bound on the expected number of intercepting eavesdroppers that the lazy
// SOP engine leaves outside its eavesdropper disc.
constexpr double kEavesdropperTail = 1e-9;

// Lane layout: hop index in the high bits, sub-stream in the low 20.
constexpr std::uint32_t lane(std::size_t hop, std::uint32_t sub)
{
    return static_cast<std::uint32_t>(hop << 20) | sub;
}

enum Sub : std::uint32_t {
    kSignal = 0,
    kJammers = 1,
    kFar = 2,
    kEaves = 3,
    kTargetBase = 4,
};

// Plain copy of the parameters so worker threads never touch lgamma.
struct Model {
    double lambda_j, lambda_e, gamma_c, gamma_e, p_jam, alpha;
    bool alpha_is_four;

    explicit Model(const SystemParams& p)
        : lambda_j(p.lambda_j()), lambda_e(p.lambda_e()), gamma_c(p.gamma_c()),
          gamma_e(p.gamma_e()), p_jam(p.p_jam()), alpha(p.alpha()), alpha_is_four(p.alpha() == 4.0)
    {}

    // r^-alpha from r^2.
    double gain(double r2) const noexcept
    {
        return alpha_is_four ? 1.0 / (r2 * r2) : std::pow(r2, -0.5 * alpha);
    }
};

// Radius around a target beyond which the dominating far-field process has
// `budget` expected points: 2 pi lambda c r^(2-alpha) / (alpha - 2) = budget.
double far_radius(double lambda, double c, double alpha, double budget)
{
    return std::pow(kTwoPi * lambda * c / ((alpha - 2.0) * budget), 1.0 / (alpha - 2.0));
}

double far_mean(double lambda, double c, double alpha, double r0)
{
    return kTwoPi * lambda * c * std::pow(r0, 2.0 - alpha) / (alpha - 2.0);
}

// A point drawn from the dominating far-field process around `center`:
// radius density proportional to r^(1-alpha) on [r0, inf), uniform angle and
// a size-biased (Gamma(2,1)) fading mark.
struct FarCandidate {
    Point where;
    double r2;
    double gain_mark;
};

FarCandidate draw_far_candidate(const Point& center, double r0, double alpha,
                                CounterStream& s)
{
    const double r = r0 * std::pow(s.uniform_pos(), -1.0 / (alpha - 2.0));
    Point dir = sample_unit_disc(s);
    while (dir.x == 0 && dir.y == 0) {
        dir = sample_unit_disc(s);
    }
    const double scale = r / std::hypot(dir.x, dir.y);
    const double mark = -std::log(s.uniform_pos() * s.uniform_pos());
    return {{center.x + scale * dir.x, center.y + scale * dir.y}, r * r, mark};
}

// Thinning ratio (1 - e^-x) / x of the dominating intensity.
bool accept_far(double x, CounterStream& s)
{
    const double ratio = x > 1e-12 ? -std::expm1(-x) / x : 1.0;
    return s.uniform() < ratio;
}

// A jammer at squared distance r2 blocks a target with constant c with
// probability 1 - exp(-c h r^-alpha) given its fading h; averaged over
// h ~ Exp(1) that is x / (1 + x) with x = c r^-alpha.
bool blocks(double c, double r2, const Model& m, CounterStream& s)
{
    const double x = c * m.gain(r2);
    return s.uniform() * (1.0 + x) < x;
}

struct CopHopPlan {
    double c;          // gamma_c P_J d^alpha / P
    double radius;     // explicit disc around the receiver
    bool covers_window;
};

struct Target {
    Point where;
    double r2;   // squared distance to the transmitter
    double c;    // gamma_e P_J r^alpha / P
};

struct SopHopPlan {
    double eaves_radius;
    bool eaves_cover_window;
    double cover; // covering radius of the window around the transmitter
};

struct Workspace {
    PointSet jammers;
    std::vector<Target> targets;
    std::vector<FarCandidate> owned;
};

class Engine {
public:
    Engine(const SimConfig& cfg, const SystemParams& params)
        : cfg_(cfg), m_(params), sop_budget_(kSopBudgetScale * cfg.far_budget)
    {
        validate();
        if (cfg_.method == SimMethod::lazy) {
            plan();
        }
    }

    bool cop_round(std::uint64_t round, Workspace& ws) const
    {
        if (m_.gamma_c == 0) {
            return false;
        }
        for (std::size_t k = 0; k < cfg_.hops.size(); ++k) {
            const bool outage = cfg_.method == SimMethod::lazy ? lazy_cop_hop(round, k)
                                                               : exhaustive_cop_hop(round, k, ws);
            if (outage) {
                return true;
            }
        }
        return false;
    }

    bool sop_round(std::uint64_t round, Workspace& ws) const
    {
        if (m_.lambda_e == 0) {
            return false;
        }
        for (std::size_t k = 0; k < cfg_.hops.size(); ++k) {
            const bool outage = cfg_.method == SimMethod::lazy ? lazy_sop_hop(round, k, ws)
                                                               : exhaustive_sop_hop(round, k, ws);
            if (outage) {
                return true;
            }
        }
        return false;
    }

private:
    void validate() const
    {
        if (cfg_.rounds < 1) {
            throw std::invalid_argument("simulation needs at least one round");
        }
        if (cfg_.hops.empty()) {
            throw std::invalid_argument("simulation needs at least one hop");
        }
        if (!(cfg_.far_budget > 0)) {
            throw std::invalid_argument("far_budget must be positive");
        }
        for (const auto& hop : cfg_.hops) {
            if (!cfg_.region.contains(hop.tx) || !cfg_.region.contains(hop.rx)) {
                throw std::invalid_argument("hop endpoints must lie inside the region");
            }
            if (hop.tx == hop.rx) {
                throw std::invalid_argument("hop transmitter and receiver coincide");
            }
            if (!(hop.power > 0) || !std::isfinite(hop.power)) {
                throw std::invalid_argument("hop power must be positive and finite");
            }
        }
    }

    void plan()
    {
        const double g = gamma_factor(m_.alpha);
        for (const auto& hop : cfg_.hops) {
            const double d2 = squared_distance(hop.tx, hop.rx);
            CopHopPlan cp{};
            cp.c = m_.gamma_c * m_.p_jam / (hop.power * m_.gain(d2));
            if (cp.c > 0) {
                cp.radius = std::max(std::sqrt(d2),
                                     far_radius(m_.lambda_j, cp.c, m_.alpha, cfg_.far_budget));
                cp.covers_window = cp.radius >= cfg_.region.covering_radius(hop.rx);
            }
            cop_.push_back(cp);

            SopHopPlan sp{};
            if (m_.lambda_e > 0) {
                const double cover = cfg_.region.covering_radius(hop.tx);
                sp.eaves_radius = std::min(eaves_radius(hop.power, g), cover);
                sp.eaves_cover_window = sp.eaves_radius >= cover;
                sp.cover = cover;
            }
            sop_.push_back(sp);
        }
    }

    double eaves_radius(double power, double g) const
    {
        const double a = m_.lambda_j * std::numbers::pi *
                         std::pow(m_.gamma_e * m_.p_jam / power, 2.0 / m_.alpha) * g;
        const double ratio = m_.lambda_e * std::numbers::pi / (a * kEavesdropperTail);
        const double r = ratio > 1.0 ? std::sqrt(std::log(ratio) / a) : 0.0;
        return std::max(r, 1.0);
    }

    StreamAddress address(Purpose purpose, std::uint64_t round, std::size_t hop,
                          std::uint32_t sub) const
    {
        return {cfg_.seed, purpose, round, lane(hop, sub)};
    }

    // --- connection outage ------------------------------------------------

    bool lazy_cop_hop(std::uint64_t round, std::size_t k) const
    {
        const HopLayout& hop = cfg_.hops[k];
        const CopHopPlan& plan = cop_[k];

        // Given the jammer positions, the hop survives with probability
        // prod 1 / (1 + c r_j^-alpha). The product only shrinks, so the loop
        // stops as soon as it drops to the uniform draw.
        CounterStream s(address(Purpose::cop_round, round, k, kSignal));
        const double u = s.uniform();

        CounterStream js(address(Purpose::cop_round, round, k, kJammers));
        const double radius = plan.covers_window ? 0.0 : plan.radius;
        const auto count = plan.covers_window
                               ? sample_poisson(js, m_.lambda_j * cfg_.region.area())
                               : sample_poisson(js, m_.lambda_j * std::numbers::pi * radius * radius);
        double survive = 1.0;
        for (std::uint64_t j = 0; j < count; ++j) {
            Point p;
            if (plan.covers_window) {
                p = {js.uniform() * cfg_.region.width(), js.uniform() * cfg_.region.height()};
            } else {
                const Point q = sample_unit_disc(js);
                p = {hop.rx.x + radius * q.x, hop.rx.y + radius * q.y};
                if (!cfg_.region.contains(p)) {
                    continue;
                }
            }
            survive /= 1.0 + plan.c * m_.gain(squared_distance(p, hop.rx));
            if (survive <= u) {
                return true;
            }
        }
        if (plan.covers_window) {
            return false;
        }

        // Remaining window: any far jammer that blocks the receiver.
        CounterStream fs(address(Purpose::cop_round, round, k, kFar));
        const auto candidates =
            sample_poisson(fs, far_mean(m_.lambda_j, plan.c, m_.alpha, radius));
        for (std::uint64_t i = 0; i < candidates; ++i) {
            const FarCandidate cand = draw_far_candidate(hop.rx, radius, m_.alpha, fs);
            if (!cfg_.region.contains(cand.where)) {
                continue;
            }
            if (accept_far(plan.c * cand.gain_mark * m_.gain(cand.r2), fs)) {
                return true;
            }
        }
        return false;
    }

    bool exhaustive_cop_hop(std::uint64_t round, std::size_t k, Workspace& ws) const
    {
        const HopLayout& hop = cfg_.hops[k];
        CounterStream js(address(Purpose::cop_round, round, k, kJammers));
        ws.jammers = sample_ppp(m_.lambda_j, cfg_.region, js);
        if (ws.jammers.empty()) {
            return false; // no interference: SIR is unbounded
        }
        CounterStream fading(address(Purpose::cop_round, round, k, kSignal));
        const double sir = link_sir(hop.tx, hop.rx, hop.power, ws.jammers, fading);
        return sir < m_.gamma_c;
    }

    // --- secrecy outage ---------------------------------------------------

    bool lazy_sop_hop(std::uint64_t round, std::size_t k, Workspace& ws) const
    {
        const HopLayout& hop = cfg_.hops[k];
        const SopHopPlan& plan = sop_[k];
        const Point& src = hop.tx;

        CounterStream es(address(Purpose::sop_round, round, k, kEaves));
        const PointSet eaves =
            plan.eaves_cover_window
                ? sample_ppp(m_.lambda_e, cfg_.region, es)
                : sample_ppp_disc(m_.lambda_e, src, plan.eaves_radius, cfg_.region, es);
        if (eaves.empty()) {
            return false;
        }
        ws.targets.clear();
        for (const auto& e : eaves) {
            const double r2 = squared_distance(e, src);
            ws.targets.push_back({e, r2, m_.gamma_e * m_.p_jam / (hop.power * m_.gain(r2))});
        }
        std::stable_sort(ws.targets.begin(), ws.targets.end(),
                         [](const Target& a, const Target& b) { return a.r2 < b.r2; });

        // The jammer field is independent of the eavesdroppers, so the
        // explicit disc may be sized from this realization: every target
        // keeps at least `sop_budget_` expected far candidates.
        double jammer_radius = 0;
        for (const auto& t : ws.targets) {
            jammer_radius = std::max(jammer_radius,
                                     std::sqrt(t.r2) + far_radius(m_.lambda_j, t.c, m_.alpha,
                                                                  sop_budget_));
        }
        const bool jammers_cover_window = jammer_radius >= plan.cover;
        CounterStream js(address(Purpose::sop_round, round, k, kJammers));
        ws.jammers = jammers_cover_window
                         ? sample_ppp(m_.lambda_j, cfg_.region, js)
                         : sample_ppp_disc(m_.lambda_j, src, jammer_radius, cfg_.region, js);
        const double jr2 = jammer_radius * jammer_radius;

        // Far jammers blocking at least one target, each owned by the first
        // target (in sorted order) it blocks. Whether target i is blocked by
        // the far field depends only on targets 0..i, so targets are settled
        // in order and the hop stops at the first interception.
        ws.owned.clear();
        for (std::size_t i = 0; i < ws.targets.size(); ++i) {
            const Target& t = ws.targets[i];
            CounterStream ts(address(Purpose::sop_round, round, k,
                                     kTargetBase + static_cast<std::uint32_t>(i)));
            const double u = ts.uniform(); // intercepted iff u < prod 1/(1 + c g_j)

            bool blocked = false;
            for (const auto& cand : ws.owned) {
                if (blocks(t.c, squared_distance(cand.where, t.where), m_, ts)) {
                    blocked = true;
                    break;
                }
            }

            if (!jammers_cover_window) {
                const double r0 = jammer_radius - std::sqrt(t.r2);
                const auto n = sample_poisson(ts, far_mean(m_.lambda_j, t.c, m_.alpha, r0));
                for (std::uint64_t c = 0; c < n; ++c) {
                    const FarCandidate cand = draw_far_candidate(t.where, r0, m_.alpha, ts);
                    if (!cfg_.region.contains(cand.where) ||
                        squared_distance(cand.where, src) < jr2) {
                        continue;
                    }
                    if (!accept_far(t.c * cand.gain_mark * m_.gain(cand.r2), ts)) {
                        continue;
                    }
                    bool earlier = false;
                    for (std::size_t j = 0; j < i && !earlier; ++j) {
                        const Target& u = ws.targets[j];
                        earlier = blocks(u.c, squared_distance(cand.where, u.where), m_, ts);
                    }
                    if (!earlier) {
                        ws.owned.push_back(cand);
                        blocked = true;
                    }
                }
            }

            if (blocked) {
                continue;
            }
            double survive = 1.0;
            for (const auto& jam : ws.jammers) {
                survive /= 1.0 + t.c * m_.gain(squared_distance(jam, t.where));
                if (survive <= u) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                return true;
            }
        }
        return false;
    }

    bool exhaustive_sop_hop(std::uint64_t round, std::size_t k, Workspace& ws) const
    {
        const HopLayout& hop = cfg_.hops[k];
        CounterStream es(address(Purpose::sop_round, round, k, kEaves));
        const PointSet eaves = sample_ppp(m_.lambda_e, cfg_.region, es);
        if (eaves.empty()) {
            return false;
        }
        CounterStream js(address(Purpose::sop_round, round, k, kJammers));
        ws.jammers = sample_ppp(m_.lambda_j, cfg_.region, js);
        if (ws.jammers.empty()) {
            return true; // eavesdroppers see no interference at all
        }
        CounterStream fading(address(Purpose::sop_round, round, k, kSignal));
        for (const auto& e : eaves) {
            if (e == hop.tx || link_sir(hop.tx, e, hop.power, ws.jammers, fading) > m_.gamma_e) {
                return true;
            }
        }
        return false;
    }

    double link_sir(const Point& tx, const Point& rx, double p_tx, std::span<const Point> jammers,
                    CounterStream& s) const
    {
        const double signal = p_tx * s.exponential() * m_.gain(squared_distance(tx, rx));
        double interference = 0;
        for (const auto& j : jammers) {
            interference += m_.p_jam * s.exponential() * m_.gain(squared_distance(j, rx));
        }
        return signal / interference;
    }

    // SOP hops carry several targets, each with a cheap far field, so they
    // get a larger share than a COP receiver.
    static constexpr double kSopBudgetScale = 100.0;

    const SimConfig& cfg_;
    Model m_;
    double sop_budget_;
    std::vector<CopHopPlan> cop_;
    std::vector<SopHopPlan> sop_;
};

template <typename RoundFn>
SimEstimate run_rounds(const SimConfig& cfg, RoundFn&& round_fn)
{
    const std::uint64_t batches = (cfg.rounds + kBatchRounds - 1) / kBatchRounds;
    const unsigned threads =
        static_cast<unsigned>(std::clamp<std::uint64_t>(cfg.threads, 1, batches));
    std::atomic<std::uint64_t> next{0};
    std::vector<std::uint64_t> counts(threads, 0);

    auto worker = [&](unsigned id) {
        Workspace ws;
        std::uint64_t local = 0;
        for (std::uint64_t b = next++; b < batches; b = next++) {
            const std::uint64_t begin = b * kBatchRounds;
            const std::uint64_t end = std::min(cfg.rounds, begin + kBatchRounds);
            for (std::uint64_t r = begin; r < end; ++r) {
                local += round_fn(r, ws) ? 1 : 0;
            }
        }
        counts[id] = local;
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker, t);
        }
    }
    SimEstimate est;
    est.rounds = cfg.rounds;
    for (auto c : counts) {
        est.outage_count += c;
    }
    return est;
}

} // namespace

SimConfig make_sim_config(const PathSpec& path, const Region& region, std::uint64_t rounds,
                          std::uint64_t seed)
{
    const auto powers = path.powers();
    const auto dists = path.distances();
    SimConfig cfg;
    cfg.rounds = rounds;
    cfg.region = region;
    cfg.seed = seed;
    const Point c = region.center();
    double x = c.x - path.total_length() / 2;
    for (std::size_t k = 0; k < dists.size(); ++k) {
        cfg.hops.push_back({{x, c.y}, {x + dists[k], c.y}, powers[k]});
        x += dists[k];
    }
    return cfg;
}

double SimEstimate::std_error() const noexcept
{
    if (rounds == 0) {
        return 0.0;
    }
    const double p = estimate();
    return std::sqrt(p * (1.0 - p) / static_cast<double>(rounds));
}

double simulate_link_sir(const Point& tx, const Point& rx, double p_tx,
                         std::span<const Point> jammers, const SystemParams& params,
                         CounterStream& stream)
{
    if (tx == rx) {
        throw std::invalid_argument("transmitter and receiver coincide");
    }
    if (!(p_tx >= 0)) {
        throw std::invalid_argument("transmit power must be non-negative");
    }
    if (jammers.empty()) {
        throw std::invalid_argument("SIR is undefined without interferers");
    }
    const Model m(params);
    const double signal = p_tx * stream.exponential() * m.gain(squared_distance(tx, rx));
    double interference = 0;
    for (const auto& j : jammers) {
        interference += m.p_jam * stream.exponential() * m.gain(squared_distance(j, rx));
    }
    return signal / interference;
}

SimEstimate estimate_path_cop(const SimConfig& config, const SystemParams& params)
{
    const Engine engine(config, params);
    return run_rounds(config, [&](std::uint64_t r, Workspace& ws) {
        return engine.cop_round(r, ws);
    });
}

SimEstimate estimate_path_sop(const SimConfig& config, const SystemParams& params)
{
    const Engine engine(config, params);
    return run_rounds(config, [&](std::uint64_t r, Workspace& ws) {
        return engine.sop_round(r, ws);
    });
}

double eavesdropper_radius(double power, const SystemParams& params)
{
    if (!(power > 0)) {
        throw std::invalid_argument("transmit power must be positive");
    }
    const double a = params.lambda_j() * std::numbers::pi *
                     std::pow(params.gamma_e() * params.p_jam() / power, 2.0 / params.alpha()) *
                     gamma_factor(params.alpha());
    const double ratio = params.lambda_e() * std::numbers::pi / (a * kEavesdropperTail);
    const double r = ratio > 1.0 ? std::sqrt(std::log(ratio) / a) : 0.0;
    return std::max(r, 1.0);
}

} // namespace secroute
