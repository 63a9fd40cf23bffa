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

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "secroute/params.hpp"
#include "secroute/random.hpp"

namespace secroute {

struct Point {
    double x = 0;
    double y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(const Point& a, const Point& b) noexcept
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double distance(const Point& a, const Point& b) noexcept
{
    return std::sqrt(squared_distance(a, b));
}

/// Axis-aligned rectangle [0, width] x [0, height].
class Region {
public:
    Region(double width, double height);

    double width() const noexcept { return width_; }
    double height() const noexcept { return height_; }
    double area() const noexcept { return width_ * height_; }
    Point center() const noexcept { return {width_ / 2, height_ / 2}; }

    bool contains(const Point& p) const noexcept
    {
        return p.x >= 0 && p.x <= width_ && p.y >= 0 && p.y <= height_;
    }

    /// Largest distance from p to any point of the region.
    double covering_radius(const Point& p) const noexcept;

    friend bool operator==(const Region&, const Region&) = default;

private:
    double width_;
    double height_;
};

/// Points of one process; all lie inside the region they were sampled in.
using PointSet = std::vector<Point>;

/// Legitimate nodes, jammers and eavesdroppers in one region.
struct Scenario {
    Region region;
    PointSet legit_nodes;
    PointSet jammers;
    PointSet eavesdroppers;
    std::uint64_t seed = 0;
};

/// Homogeneous PPP on the region: Poisson(density * area) points, i.i.d.
/// uniform. density 0 yields an empty set.
PointSet sample_ppp(double density, const Region& region, CounterStream& stream);

/// Uniform point in the unit disc, by rejection from the enclosing square
/// (about 2.5 uniforms per point, no trigonometry).
Point sample_unit_disc(CounterStream& stream);

/// Homogeneous PPP on a disc, restricted to the points that fall inside
/// `clip`.
PointSet sample_ppp_disc(double density, const Point& center, double radius,
                         const Region& clip, CounterStream& stream);

/// Unit-mean exponential power gain of a Rayleigh-faded channel.
double sample_rayleigh_power(CounterStream& stream);

/// Uniform legitimate nodes plus jammer and eavesdropper PPPs, fully
/// determined by `seed`. Throws std::invalid_argument if n_legit < 2.
Scenario generate_scenario(const SystemParams& params, const Region& region,
                           std::size_t n_legit, std::uint64_t seed);

/// Line-oriented text format:
///   region <w> <h>
///   seed <n>
///   legit|jammer|eaves <x> <y>
/// Coordinates are written with 17 significant digits so they round-trip.
void write_scenario(std::ostream& out, const Scenario& scenario);

/// Parses the format written by write_scenario. Blank lines and lines
/// starting with '#' are ignored. Throws std::runtime_error on malformed
/// input or points outside the region.
Scenario read_scenario(std::istream& in);

} // namespace secroute
