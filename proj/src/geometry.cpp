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

#include "secroute/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace secroute {

Region::Region(double width, double height) : width_(width), height_(height)
{
    if (!(width > 0) || !(height > 0) || !std::isfinite(width) || !std::isfinite(height)) {
        throw std::invalid_argument("region width and height must be positive");
    }
}

double Region::covering_radius(const Point& p) const noexcept
{
    const double dx = std::max(p.x, width_ - p.x);
    const double dy = std::max(p.y, height_ - p.y);
    return std::hypot(dx, dy);
}

PointSet sample_ppp(double density, const Region& region, CounterStream& stream)
{
    const auto count = sample_poisson(stream, density * region.area());
    PointSet points;
    points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double x = stream.uniform() * region.width();
        const double y = stream.uniform() * region.height();
        points.push_back({x, y});
    }
    return points;
}

Point sample_unit_disc(CounterStream& stream)
{
    while (true) {
        const Point q{2.0 * stream.uniform() - 1.0, 2.0 * stream.uniform() - 1.0};
        if (q.x * q.x + q.y * q.y < 1.0) {
            return q;
        }
    }
}

PointSet sample_ppp_disc(double density, const Point& center, double radius,
                         const Region& clip, CounterStream& stream)
{
    const double mean = density * std::numbers::pi * radius * radius;
    const auto count = sample_poisson(stream, mean);
    PointSet points;
    points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Point q = sample_unit_disc(stream);
        const Point p{center.x + radius * q.x, center.y + radius * q.y};
        if (clip.contains(p)) {
            points.push_back(p);
        }
    }
    return points;
}

double sample_rayleigh_power(CounterStream& stream)
{
    return stream.exponential();
}

Scenario generate_scenario(const SystemParams& params, const Region& region,
                           std::size_t n_legit, std::uint64_t seed)
{
    if (n_legit < 2) {
        throw std::invalid_argument("a scenario needs at least two legitimate nodes");
    }
    Scenario s{region, {}, {}, {}, seed};

    CounterStream legit({seed, Purpose::legit_nodes, 0, 0});
    s.legit_nodes.reserve(n_legit);
    for (std::size_t i = 0; i < n_legit; ++i) {
        const double x = legit.uniform() * region.width();
        const double y = legit.uniform() * region.height();
        s.legit_nodes.push_back({x, y});
    }

    CounterStream jammers({seed, Purpose::jammers, 0, 0});
    s.jammers = sample_ppp(params.lambda_j(), region, jammers);
    CounterStream eaves({seed, Purpose::eavesdroppers, 0, 0});
    s.eavesdroppers = sample_ppp(params.lambda_e(), region, eaves);
    return s;
}

namespace {

void write_points(std::ostream& out, const char* tag, const PointSet& points)
{
    char buf[96];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%s %.17g %.17g\n", tag, p.x, p.y);
        out << buf;
    }
}

[[noreturn]] void parse_error(std::size_t line, const std::string& message)
{
    throw std::runtime_error("scenario line " + std::to_string(line) + ": " + message);
}

} // namespace

void write_scenario(std::ostream& out, const Scenario& scenario)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "region %.17g %.17g\n", scenario.region.width(),
                  scenario.region.height());
    out << buf << "seed " << scenario.seed << '\n';
    write_points(out, "legit", scenario.legit_nodes);
    write_points(out, "jammer", scenario.jammers);
    write_points(out, "eaves", scenario.eavesdroppers);
}

Scenario read_scenario(std::istream& in)
{
    std::optional<Region> region;
    std::optional<std::uint64_t> seed;
    PointSet legit, jammers, eaves;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag.front() == '#') {
            continue;
        }
        if (tag == "region") {
            double w = 0, h = 0;
            if (!(fields >> w >> h)) {
                parse_error(line_no, "expected 'region <w> <h>'");
            }
            try {
                region.emplace(w, h);
            } catch (const std::invalid_argument& e) {
                parse_error(line_no, e.what());
            }
        } else if (tag == "seed") {
            std::uint64_t n = 0;
            if (!(fields >> n)) {
                parse_error(line_no, "expected 'seed <n>'");
            }
            seed = n;
        } else if (tag == "legit" || tag == "jammer" || tag == "eaves") {
            Point p;
            if (!(fields >> p.x >> p.y)) {
                parse_error(line_no, "expected '" + tag + " <x> <y>'");
            }
            if (!region) {
                parse_error(line_no, "point before region header");
            }
            if (!region->contains(p)) {
                parse_error(line_no, "point outside region");
            }
            (tag == "legit" ? legit : tag == "jammer" ? jammers : eaves).push_back(p);
        } else {
            parse_error(line_no, "unknown record '" + tag + "'");
        }
        std::string extra;
        if (fields >> extra) {
            parse_error(line_no, "trailing data");
        }
    }
    if (!region) {
        throw std::runtime_error("scenario has no region header");
    }
    if (!seed) {
        throw std::runtime_error("scenario has no seed header");
    }
    return Scenario{*region, std::move(legit), std::move(jammers), std::move(eaves), *seed};
}

} // namespace secroute
