#include <doctest.h>

#include <cmath>
#include <vector>

#include "secroute/montecarlo.hpp"
#include "secroute/outage.hpp"

using namespace secroute;

namespace {

SystemParams params(double lj, double le, double gc = 1, double ge = 1)
{
    return validate_params({lj, le, gc, ge, 1, 4});
}

// Two independent estimates agree within `z` combined standard errors.
bool agree(const SimEstimate& a, const SimEstimate& b, double z = 4.0)
{
    const double se = std::hypot(a.std_error(), b.std_error());
    return std::abs(a.estimate() - b.estimate()) <= z * std::max(se, 1e-4);
}

} // namespace

TEST_CASE("link SIR realisations")
{
    const auto p = params(1e-3, 1e-4);
    const std::vector<Point> one{{0, 5}};
    CounterStream s({1, Purpose::fading, 0, 0});
    CHECK(simulate_link_sir({0, 0}, {5, 0}, 0.0, one, p, s) == 0.0);

    // Jammer as far from the receiver as the transmitter: SIR is a ratio of
    // two i.i.d. exponentials, below 1 half the time.
    const std::vector<Point> jam{{10, 0}};
    int below = 0;
    const int n = 1'000'000;
    for (int i = 0; i < n; ++i) {
        below += simulate_link_sir({0, 0}, {5, 0}, 1.0, jam, p, s) < 1.0;
    }
    CHECK(static_cast<double>(below) / n == doctest::Approx(0.5).epsilon(0.004));

    CounterStream a({2, Purpose::fading, 9, 0}), b({2, Purpose::fading, 9, 0});
    CHECK(simulate_link_sir({0, 0}, {5, 0}, 1.0, jam, p, a) ==
          simulate_link_sir({0, 0}, {5, 0}, 1.0, jam, p, b));

    CHECK_THROWS_AS(simulate_link_sir({0, 0}, {0, 0}, 1.0, jam, p, s), std::invalid_argument);
    CHECK_THROWS_AS(simulate_link_sir({0, 0}, {5, 0}, 1.0, {}, p, s), std::invalid_argument);
    CHECK_THROWS_AS(simulate_link_sir({0, 0}, {5, 0}, -1.0, jam, p, s), std::invalid_argument);
}

TEST_CASE("isolated eavesdropper with a loud transmitter always intercepts")
{
    const auto p = params(1e-3, 1e-3);
    const std::vector<Point> cluster{{0, 0}, {1, 0}, {0, 1}};
    CounterStream s({3, Purpose::fading, 0, 0});
    int hits = 0;
    for (int i = 0; i < 1000; ++i) {
        hits += simulate_link_sir({1000, 1000}, {1001, 1000}, 1e6, cluster, p, s) > p.gamma_e();
    }
    CHECK(hits == 1000);
}

TEST_CASE("trivial estimates")
{
    const auto path = PathSpec::uniform(5, 3, 1);
    auto cfg = make_sim_config(path, Region(2000, 2000), 1000, 5);
    CHECK(estimate_path_cop(cfg, params(1e-3, 1e-4, 0)).outage_count == 0);
    CHECK(estimate_path_sop(cfg, params(1e-3, 0)).outage_count == 0);
    cfg.method = SimMethod::exhaustive;
    cfg.rounds = 3;
    CHECK(estimate_path_cop(cfg, params(1e-4, 1e-4, 0)).outage_count == 0);

    cfg = make_sim_config(path, Region(2000, 2000), 1, 5);
    const auto one = estimate_path_cop(cfg, params(1e-3, 1e-4));
    CHECK(one.rounds == 1);
    CHECK((one.estimate() == 0.0 || one.estimate() == 1.0));
}

TEST_CASE("hops are laid end to end through the window centre")
{
    const auto path = PathSpec::with_powers(std::vector<double>{3, 4}, std::vector<double>{1, 2});
    const auto cfg = make_sim_config(path, Region(100, 50), 10, 1);
    REQUIRE(cfg.hops.size() == 2);
    CHECK(cfg.hops[0].tx == Point{46.5, 25});
    CHECK(cfg.hops[0].rx == Point{49.5, 25});
    CHECK(cfg.hops[1].tx == cfg.hops[0].rx);
    CHECK(cfg.hops[1].rx == Point{53.5, 25});
    CHECK(cfg.hops[1].power == 2.0);
}

TEST_CASE("invalid configurations are rejected")
{
    const auto p = params(1e-3, 1e-4);
    auto cfg = make_sim_config(PathSpec::uniform(1, 3, 1), Region(20, 20), 10, 1);
    cfg.rounds = 0;
    CHECK_THROWS_AS(estimate_path_cop(cfg, p), std::invalid_argument);
    cfg.rounds = 10;
    cfg.hops[0].rx = {25, 10};
    CHECK_THROWS_AS(estimate_path_cop(cfg, p), std::invalid_argument);
    cfg.hops[0].rx = cfg.hops[0].tx;
    CHECK_THROWS_AS(estimate_path_sop(cfg, p), std::invalid_argument);
    cfg.hops.clear();
    CHECK_THROWS_AS(estimate_path_cop(cfg, p), std::invalid_argument);
    CHECK_THROWS_AS(eavesdropper_radius(0.0, p), std::invalid_argument);
    CHECK(eavesdropper_radius(1.0, p) >= 1.0);
}

TEST_CASE("COP estimate matches the closed form at desk scale")
{
    const auto p = params(1e-3, 1e-4);
    const auto path = PathSpec::uniform(5, 3, 1);
    const auto est = estimate_path_cop(make_sim_config(path, Region(2000, 2000), 1'000'000, 11), p);
    CHECK(est.estimate() == doctest::Approx(0.1991).epsilon(0.003 / 0.1991));
}

TEST_CASE("SOP estimate sits at or below the closed-form bound")
{
    const auto p = params(1e-2, 1e-3);
    const auto path = PathSpec::uniform(5, 3, 1);
    const auto est = estimate_path_sop(make_sim_config(path, Region(2000, 2000), 1'000'000, 12), p);
    const double closed = path_sop(path, p).probability;
    CHECK(est.estimate() <= closed + 0.01);
    CHECK(std::abs(est.estimate() - closed) <= 0.03);
}

TEST_CASE("lazy and exhaustive engines sample the same outage law")
{
    const Region window(60, 60);
    const std::uint64_t rounds = 60'000;

    SUBCASE("connection outage")
    {
        const auto p = params(1e-2, 1e-4);
        const auto path = PathSpec::uniform(3, 3, 1);
        for (double budget : {0.05, 5.0}) {
            CAPTURE(budget);
            auto lazy = make_sim_config(path, window, rounds, 21);
            lazy.far_budget = budget;
            auto full = make_sim_config(path, window, rounds, 22);
            full.method = SimMethod::exhaustive;
            const auto a = estimate_path_cop(lazy, p);
            const auto b = estimate_path_cop(full, p);
            CHECK(agree(a, b));
        }
    }
    SUBCASE("secrecy outage")
    {
        const auto p = params(1e-2, 2e-3);
        const auto path = PathSpec::uniform(2, 3, 1);
        for (double budget : {0.05, 2.0}) {
            CAPTURE(budget);
            auto lazy = make_sim_config(path, window, rounds, 23);
            lazy.far_budget = budget;
            auto full = make_sim_config(path, window, rounds, 24);
            full.method = SimMethod::exhaustive;
            const auto a = estimate_path_sop(lazy, p);
            const auto b = estimate_path_sop(full, p);
            CHECK(agree(a, b));
        }
    }
}

TEST_CASE("counts do not depend on the thread count")
{
    const auto p = params(1e-2, 1e-3);
    const auto path = PathSpec::uniform(5, 4, 1);
    auto cfg = make_sim_config(path, Region(2000, 2000), 20'000, 31);
    cfg.threads = 1;
    const auto cop1 = estimate_path_cop(cfg, p);
    const auto sop1 = estimate_path_sop(cfg, p);
    cfg.threads = 3;
    CHECK(estimate_path_cop(cfg, p).outage_count == cop1.outage_count);
    CHECK(estimate_path_sop(cfg, p).outage_count == sop1.outage_count);
    cfg.threads = 8;
    CHECK(estimate_path_cop(cfg, p).outage_count == cop1.outage_count);
}

TEST_CASE("estimates across seeds centre on a constant with 1/sqrt(n) spread")
{
    const auto p = params(1e-3, 1e-4);
    const auto path = PathSpec::uniform(5, 3, 1);
    const double closed = path_cop(path, p).probability;
    double spread[2];
    const std::uint64_t sizes[2] = {2'000, 8'000};
    for (int s = 0; s < 2; ++s) {
        const int seeds = 30;
        double sum = 0, sq = 0;
        for (int seed = 0; seed < seeds; ++seed) {
            const auto est = estimate_path_cop(
                make_sim_config(path, Region(2000, 2000), sizes[s], 1000 + seed), p);
            sum += est.estimate();
            sq += est.estimate() * est.estimate();
        }
        const double mean = sum / seeds;
        spread[s] = std::sqrt((sq - seeds * mean * mean) / (seeds - 1));
        const double se_mean = std::sqrt(closed * (1 - closed) / sizes[s] / seeds);
        CHECK(std::abs(mean - closed) <= 4 * se_mean);
    }
    // Four times the rounds halves the spread; sample sds over 30 seeds
    // carry roughly 13% relative noise each.
    CHECK(spread[0] / spread[1] == doctest::Approx(2.0).epsilon(0.35));
}
