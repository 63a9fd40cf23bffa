#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "secroute/outage.hpp"
#include "secroute/random.hpp"

using namespace secroute;

namespace {

SystemParams params(double lj, double le, double gc = 1, double ge = 1, double pj = 1,
                    double alpha = 4)
{
    return validate_params({lj, le, gc, ge, pj, alpha});
}

// Euler reflection: Gamma(1 - x) Gamma(1 + x) = pi x / sin(pi x).
double reflection(double alpha)
{
    const double x = 2.0 / alpha;
    return std::numbers::pi * x / std::sin(std::numbers::pi * x);
}

} // namespace

TEST_CASE("gamma factor against the reflection formula")
{
    CHECK(gamma_factor(4.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    CHECK(gamma_factor(6.0) == doctest::Approx(1.2091995761561456).epsilon(1e-12));
    for (double alpha : {2.05, 2.5, 3.0, 3.7, 4.0, 5.0, 8.0, 20.0}) {
        CAPTURE(alpha);
        CHECK(gamma_factor(alpha) == doctest::Approx(reflection(alpha)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(gamma_factor(2.0), ParamError);
    CHECK_THROWS_AS(gamma_factor(1.0), ParamError);
}

TEST_CASE("outage constants")
{
    const double pi = std::numbers::pi;
    CHECK(a_co(params(1e-3, 1e-4)) == doctest::Approx(pi * pi / 2000).epsilon(1e-12));
    CHECK(a_co(params(1e-3, 1e-4, 0)) == 0.0);
    CHECK(a_co(params(2e-3, 1e-4)) == doctest::Approx(2 * a_co(params(1e-3, 1e-4))));
    CHECK(b_so(params(1e-3, 1e-3)) == doctest::Approx(2 / pi).epsilon(1e-12));
    CHECK(b_so(params(1e-3, 1e-4)) == doctest::Approx(0.2 / pi).epsilon(1e-12));
    CHECK(b_so(params(1e-3, 0)) == 0.0);
}

TEST_CASE("scaling gamma_c up and p_jam down leaves A_co unchanged")
{
    for (double c : {0.1, 0.5, 3.0, 17.0}) {
        CHECK(a_co(params(1e-3, 1e-4, 2.0 * c, 1, 0.7 / c)) ==
              doctest::Approx(a_co(params(1e-3, 1e-4, 2.0, 1, 0.7))).epsilon(1e-12));
    }
}

TEST_CASE("link and path values")
{
    const auto p = params(1e-3, 1e-4);
    CHECK(link_cop(3, 1, p).probability == doctest::Approx(-std::expm1(-0.0444113)).epsilon(1e-5));
    CHECK(link_cop(3, 1, p).kind == OutageKind::connection);
    CHECK(link_cop(1e-9, 1, p).probability < 1e-15);
    CHECK(path_cop(PathSpec::uniform(5, 3, 1), p).probability ==
          doctest::Approx(0.1991).epsilon(5e-4));
    CHECK(path_cop(PathSpec::uniform(1, 3.3, 0.7), p).probability ==
          doctest::Approx(link_cop(3.3, 0.7, p).probability).epsilon(1e-15));

    const auto q = params(1e-3, 1e-3);
    CHECK(link_sop(1, q).probability == doctest::Approx(0.4709).epsilon(2e-4));
    CHECK(link_sop(1e-12, q).probability < 1e-5);
    CHECK(link_sop(5, params(1e-3, 0)).probability == 0.0);
    CHECK(path_sop(PathSpec::uniform(1, 2, 0.7), q).probability ==
          doctest::Approx(link_sop(0.7, q).probability).epsilon(1e-15));

    // Power at which a five-hop path leaks with probability one half.
    const double root = std::log(2.0) * std::numbers::pi / 10;
    const double anchor = root * root;
    CHECK(anchor == doctest::Approx(0.047419).epsilon(1e-4));
    CHECK(path_sop(PathSpec::uniform(5, 3, anchor), q).probability ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(path_cop(PathSpec::uniform(5, 3, anchor), q).probability ==
          doctest::Approx(0.64).epsilon(0.01 / 0.64));

    CHECK_THROWS_AS(link_cop(0, 1, p), std::invalid_argument);
    CHECK_THROWS_AS(link_cop(1, 0, p), std::invalid_argument);
    CHECK_THROWS_AS(link_sop(-1, p), std::invalid_argument);
    const auto bare = PathSpec::from_distances(std::vector<double>{1, 2});
    CHECK_THROWS_AS(path_cop(bare, p), std::invalid_argument);
    CHECK_THROWS_AS(path_sop(bare, p), std::invalid_argument);
}

TEST_CASE("path outage equals one minus the product of hop survivals")
{
    CounterStream s({5, Purpose::test, 0, 0});
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = params(1e-4 + 1e-2 * s.uniform(), 1e-2 * s.uniform(), 0.1 + 3 * s.uniform(),
                              0.1 + 3 * s.uniform(), 0.1 + 3 * s.uniform(), 2.1 + 4 * s.uniform());
        const std::size_t k = 1 + s() % 8;
        std::vector<double> d, pw;
        double cop_survive = 1, sop_survive = 1;
        for (std::size_t i = 0; i < k; ++i) {
            d.push_back(1 + 9 * s.uniform());
            pw.push_back(0.01 + 5 * s.uniform());
            cop_survive *= 1 - link_cop(d.back(), pw.back(), p).probability;
            sop_survive *= 1 - link_sop(pw.back(), p).probability;
        }
        const auto path = PathSpec::with_powers(d, pw);
        const double cop = path_cop(path, p).probability;
        const double sop = path_sop(path, p).probability;
        // Compared on the survival side, where the subtraction is harmless.
        CHECK(1 - cop == doctest::Approx(cop_survive).epsilon(1e-12));
        CHECK(1 - sop == doctest::Approx(sop_survive).epsilon(1e-12));
        CHECK(cop >= 0);
        CHECK(cop <= 1);
        CHECK(sop >= 0);
        CHECK(sop <= 1);
    }
}

TEST_CASE("monotonicity sweeps")
{
    CounterStream s({6, Purpose::test, 0, 0});
    for (int trial = 0; trial < 200; ++trial) {
        ParamsInput in{1e-4 + 1e-2 * s.uniform(), 1e-4 + 1e-2 * s.uniform(), 0.1 + 2 * s.uniform(),
                       0.1 + 2 * s.uniform(),     0.1 + 2 * s.uniform(),     2.5 + 3 * s.uniform()};
        const std::size_t k = 1 + s() % 6;
        std::vector<double> d, pw;
        for (std::size_t i = 0; i < k; ++i) {
            d.push_back(1 + 9 * s.uniform());
            pw.push_back(0.05 + 2 * s.uniform());
        }
        const auto path = PathSpec::with_powers(d, pw);
        const auto base = validate_params(in);
        const double cop0 = path_cop(path, base).probability;
        const double sop0 = path_sop(path, base).probability;
        const double f = 1.01 + 0.5 * s.uniform();
        // Strict where the base value is resolvable in double, weak once saturated.
        constexpr double saturated = 1 - 1e-12;
        auto rises = [](double before, double after) {
            return after > before || (before > saturated && after >= before);
        };
        auto falls = [](double before, double after) {
            return after < before || (before > saturated && after <= before);
        };

        auto bumped = [&](double ParamsInput::*field) {
            ParamsInput up = in;
            up.*field *= f;
            return validate_params(up);
        };
        CHECK(rises(cop0, path_cop(path, bumped(&ParamsInput::lambda_j)).probability));
        CHECK(rises(cop0, path_cop(path, bumped(&ParamsInput::p_jam)).probability));
        CHECK(rises(cop0, path_cop(path, bumped(&ParamsInput::gamma_c)).probability));
        CHECK(rises(sop0, path_sop(path, bumped(&ParamsInput::lambda_e)).probability));
        CHECK(falls(sop0, path_sop(path, bumped(&ParamsInput::gamma_e)).probability));
        CHECK(falls(sop0, path_sop(path, bumped(&ParamsInput::lambda_j)).probability));
        CHECK(falls(sop0, path_sop(path, bumped(&ParamsInput::p_jam)).probability));

        const std::size_t h = s() % k;
        auto d2 = d;
        d2[h] *= f;
        CHECK(rises(cop0, path_cop(PathSpec::with_powers(d2, pw), base).probability));
        auto p2 = pw;
        p2[h] *= f;
        CHECK(falls(cop0, path_cop(PathSpec::with_powers(d, p2), base).probability));
        CHECK(rises(sop0, path_sop(PathSpec::with_powers(d, p2), base).probability));
    }
}
