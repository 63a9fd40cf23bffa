#include <doctest.h>

#include <cmath>
#include <vector>

#include "secroute/params.hpp"

using namespace secroute;

TEST_CASE("default parameters validate")
{
    const auto p = validate_params({});
    CHECK(p.lambda_j() == 1e-3);
    CHECK(p.lambda_e() == 1e-4);
    CHECK(p.alpha() == 4.0);
}

TEST_CASE("each invariant names its field")
{
    auto field_of = [](ParamsInput in) {
        try {
            validate_params(in);
        } catch (const ParamError& e) {
            return e.field();
        }
        return std::string("none");
    };
    ParamsInput in;
    in.lambda_j = 0;
    CHECK(field_of(in) == "lambda_j");
    in = {};
    in.lambda_e = -1e-4;
    CHECK(field_of(in) == "lambda_e");
    in = {};
    in.gamma_c = -1;
    CHECK(field_of(in) == "gamma_c");
    in = {};
    in.gamma_e = 0;
    CHECK(field_of(in) == "gamma_e");
    in = {};
    in.p_jam = 0;
    CHECK(field_of(in) == "p_jam");
    in = {};
    in.alpha = 2.0;
    CHECK(field_of(in) == "alpha");
    in = {};
    in.alpha = NAN;
    CHECK(field_of(in) == "alpha");
    in = {};
    in.lambda_e = 0;
    in.gamma_c = 0;
    CHECK(field_of(in) == "none");
}

TEST_CASE("rates map to thresholds")
{
    const auto t = rates_to_thresholds(2.0, 1.0);
    CHECK(t.gamma_c == doctest::Approx(3.0));
    CHECK(t.gamma_e == doctest::Approx(1.0));
    CHECK(rates_to_thresholds(1.0, 1.0).gamma_e == 0.0);
    CHECK_THROWS_AS(rates_to_thresholds(1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(rates_to_thresholds(1.0, -0.5), std::invalid_argument);
}

TEST_CASE("path spec validation and accessors")
{
    const std::vector<double> d{3.0, 4.0, 5.0};
    const auto path = PathSpec::from_distances(d);
    CHECK(path.size() == 3);
    CHECK(path.total_length() == 12.0);
    CHECK_FALSE(path.has_powers());
    CHECK_THROWS_AS(path.powers(), std::invalid_argument);

    const std::vector<double> p{1.0, 2.0, 3.0};
    const auto powered = path.assign_powers(p);
    CHECK(powered.has_powers());
    CHECK(powered.powers() == p);
    CHECK(powered.distances() == d);

    CHECK_THROWS_AS(PathSpec({}), std::invalid_argument);
    CHECK_THROWS_AS(PathSpec({{0.0, std::nullopt}}), std::invalid_argument);
    CHECK_THROWS_AS(PathSpec({{1.0, -1.0}}), std::invalid_argument);
    const std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(path.assign_powers(two), std::invalid_argument);

    const auto u = PathSpec::uniform(5, 3.0, 1.0);
    CHECK(u.size() == 5);
    CHECK(u.total_length() == 15.0);
}

TEST_CASE("outage constraint keeps beta away from 0 and 1")
{
    CHECK(OutageConstraint::secrecy(0.4).beta() == 0.4);
    CHECK(OutageConstraint::connection(0.4).kind() == OutageKind::connection);
    CHECK_THROWS(OutageConstraint::secrecy(0.0));
    CHECK_THROWS(OutageConstraint::secrecy(1.0));
    CHECK_THROWS(OutageConstraint::secrecy(1e-13));
    CHECK_THROWS(OutageConstraint::secrecy(NAN));
    CHECK(std::string(to_string(OutageKind::secrecy)) != to_string(OutageKind::connection));
}
