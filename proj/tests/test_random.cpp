#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "secroute/geometry.hpp"
#include "secroute/random.hpp"

using namespace secroute;

// Known-answer vectors published with the Random123 reference implementation.
TEST_CASE("philox4x32-10 known answers")
{
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) ==
          PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                     {0xffffffff, 0xffffffff}) ==
          PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                     {0xa4093822, 0x299f31d0}) ==
          PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("a stream is a pure function of its address")
{
    const StreamAddress addr{42, Purpose::test, 7, 3};
    CounterStream a(addr), b(addr);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(a() == b());
    }
    CHECK(a.consumed() == 1000);
}

TEST_CASE("distinct address fields give distinct streams")
{
    std::set<std::uint64_t> firsts;
    const StreamAddress base{42, Purpose::test, 7, 3};
    std::vector<StreamAddress> variants{base};
    variants.push_back({43, Purpose::test, 7, 3});
    variants.push_back({42, Purpose::fading, 7, 3});
    variants.push_back({42, Purpose::test, 8, 3});
    variants.push_back({42, Purpose::test, 7, 4});
    variants.push_back({42, Purpose::test, 7 + (1ull << 32), 3});
    variants.push_back({42ull | (1ull << 40), Purpose::test, 7, 3});
    for (const auto& v : variants) {
        CounterStream s(v);
        firsts.insert(s.next_u64());
    }
    CHECK(firsts.size() == variants.size());
}

TEST_CASE("uniform and exponential draws")
{
    CounterStream s({1, Purpose::test, 0, 0});
    const int n = 200000;
    double sum = 0, sum_exp = 0;
    bool in_range = true;
    for (int i = 0; i < n; ++i) {
        const double u = s.uniform();
        in_range = in_range && u >= 0.0 && u < 1.0;
        sum += u;
        const double up = s.uniform_pos();
        in_range = in_range && up > 0.0 && up <= 1.0;
        sum_exp += s.exponential();
    }
    CHECK(in_range);
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
    CHECK(sum_exp / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("rayleigh power gain has unit mean and exponential tail")
{
    CounterStream s({2, Purpose::fading, 0, 0});
    const int n = 400000;
    double sum = 0;
    int above2 = 0;
    for (int i = 0; i < n; ++i) {
        const double g = sample_rayleigh_power(s);
        sum += g;
        above2 += g > 2.0;
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.01));
    // P(g > 2) = e^-2; binomial sd is about 0.0005.
    CHECK(static_cast<double>(above2) / n == doctest::Approx(std::exp(-2.0)).epsilon(0.02));
}

TEST_CASE("poisson counts match mean and variance")
{
    CounterStream s({3, Purpose::test, 0, 0});
    for (double mean : {0.3, 4.0, 150.0}) {
        const int n = 50000;
        double sum = 0, sq = 0;
        for (int i = 0; i < n; ++i) {
            const double k = static_cast<double>(sample_poisson(s, mean));
            sum += k;
            sq += k * k;
        }
        const double m = sum / n;
        const double var = sq / n - m * m;
        CHECK(m == doctest::Approx(mean).epsilon(0.02));
        CHECK(var == doctest::Approx(mean).epsilon(0.05));
    }
    CHECK(sample_poisson(s, 0.0) == 0);
    CHECK(sample_poisson(s, -1.0) == 0);
}
