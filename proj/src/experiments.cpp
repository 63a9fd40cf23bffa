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

#include "secroute/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "secroute/geometry.hpp"
#include "secroute/montecarlo.hpp"
#include "secroute/outage.hpp"
#include "secroute/routing.hpp"
#include "secroute/tradeoff.hpp"

namespace secroute {

namespace {

struct Fixture {
    const char* name;
    std::vector<double> distances;
    double beta;
};

const Fixture kFixtures[] = {
    {"table1", {3.5726, 7.8148, 7.7836, 4.4240, 6.1104}, 0.5},
    {"table2", {6.6027, 4.6456, 5.9676, 4.7477, 5.3562}, 0.4},
};

constexpr const char* kKindNames[] = {"validate-cop",     "validate-sop",  "tradeoff-curve",
                                      "optimal-tradeoff", "table-fixture", "route-demo"};

const std::vector<std::string> kCommonOptions = {
    "out",     "seed",     "rounds",  "paper-scale", "threads", "lambda-j",
    "lambda-e", "gamma-c", "gamma-e", "p-jam",       "alpha",
};

std::vector<std::string> kind_options(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::validate_cop:
    case ExperimentKind::validate_sop:
        return {"hop-distance", "hops", "power", "window"};
    case ExperimentKind::tradeoff_curve:
        return {"hop-distance", "hops", "power"};
    case ExperimentKind::optimal_tradeoff:
        return {"beta", "hop-distance", "hops"};
    case ExperimentKind::table_fixture:
        return {"fixture", "distances", "beta-so", "beta-co"};
    case ExperimentKind::route_demo:
        return {"max-range", "beta-so", "beta-co", "nodes", "area", "scenario"};
    }
    return {};
}

// --- option parsing -------------------------------------------------------

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& key, std::string_view text)
{
    const std::string t = trim(text);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) {
        throw UsageError("option '" + key + "': '" + t + "' is not a finite number");
    }
    return value;
}

std::uint64_t parse_count(const std::string& key, std::string_view text)
{
    const std::string t = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw UsageError("option '" + key + "': '" + t + "' is not a non-negative integer");
    }
    return value;
}

std::vector<double> parse_list(const std::string& key, std::string_view text)
{
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        values.push_back(parse_number(key, text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

bool parse_flag(const std::string& key, std::string_view text)
{
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes") {
        return true;
    }
    if (t == "false" || t == "0" || t == "no") {
        return false;
    }
    throw UsageError("option '" + key + "': expected true or false, got '" + t + "'");
}

// Sorted, duplicate-free copy: runners check monotonicity along each grid.
std::vector<double> grid(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

class Options {
public:
    explicit Options(const std::map<std::string, std::string>& raw) : raw_(raw) {}

    bool has(const std::string& key) const { return raw_.count(key) != 0; }

    double number(const std::string& key, double fallback) const
    {
        return has(key) ? parse_number(key, raw_.at(key)) : fallback;
    }
    std::vector<double> list(const std::string& key, std::vector<double> fallback) const
    {
        return has(key) ? parse_list(key, raw_.at(key)) : std::move(fallback);
    }
    std::uint64_t count(const std::string& key, std::uint64_t fallback) const
    {
        return has(key) ? parse_count(key, raw_.at(key)) : fallback;
    }
    std::string text(const std::string& key, std::string fallback) const
    {
        return has(key) ? trim(raw_.at(key)) : std::move(fallback);
    }
    bool flag(const std::string& key) const { return has(key) && parse_flag(key, raw_.at(key)); }

private:
    const std::map<std::string, std::string>& raw_;
};

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw UsageError(message);
    }
}

SystemParams checked_params(const ParamsInput& in)
{
    try {
        return validate_params(in);
    } catch (const ParamError& e) {
        throw UsageError(e.field() + ": " + e.what());
    }
}

SystemParams with_lambdas(const ExperimentSpec& spec, double lambda_j, double lambda_e)
{
    ParamsInput in = spec.base;
    in.lambda_j = lambda_j;
    in.lambda_e = lambda_e;
    return checked_params(in);
}

// --- CSV helpers ----------------------------------------------------------

class CsvWriter {
public:
    explicit CsvWriter(std::initializer_list<const char*> header)
    {
        bool first = true;
        for (const char* h : header) {
            out_ << (first ? "" : ",") << h;
            first = false;
        }
        out_ << '\n';
    }

    CsvWriter& field(const std::string& s)
    {
        out_ << (row_started_ ? "," : "") << s;
        row_started_ = true;
        return *this;
    }
    CsvWriter& num(double v) { return field(csv_number(v)); }
    CsvWriter& count(std::uint64_t v) { return field(std::to_string(v)); }
    CsvWriter& empty() { return field(""); }
    void end()
    {
        out_ << '\n';
        row_started_ = false;
    }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
    bool row_started_ = false;
};

void shape_check(bool ok, const std::string& what)
{
    if (!ok) {
        throw ShapeError("shape check failed: " + what);
    }
}

std::uint64_t require_seed(const ExperimentSpec& spec)
{
    if (!spec.seed) {
        throw UsageError(std::string(to_string(spec.kind)) + " needs an explicit --seed");
    }
    return *spec.seed;
}

// Independent seed per grid point.
std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// --- Monte Carlo validation ----------------------------------------------

struct McPoint {
    SystemParams params;
    double distance;
};

ExperimentOutput run_validation(const ExperimentSpec& spec, OutageKind kind,
                                const std::vector<McPoint>& points)
{
    const std::uint64_t seed = require_seed(spec);
    const double power = spec.powers.at(0);
    CsvWriter csv({"lambda_j", "lambda_e", "gamma_c", "gamma_e", "p_jam", "alpha", "hops",
                   "distance", "power", "rounds", "outage_count", "estimate", "std_error",
                   "closed_form", "abs_diff"});
    const Region window(spec.window, spec.window);
    std::uint64_t index = 0;
    for (const auto& pt : points) {
        const PathSpec path = PathSpec::uniform(spec.hops, pt.distance, power);
        SimConfig cfg = make_sim_config(path, window, spec.rounds, point_seed(seed, index++));
        cfg.threads = spec.threads;
        const bool cop = kind == OutageKind::connection;
        const SimEstimate est =
            cop ? estimate_path_cop(cfg, pt.params) : estimate_path_sop(cfg, pt.params);
        const double closed = cop ? path_cop(path, pt.params).probability
                                  : path_sop(path, pt.params).probability;
        const auto& p = pt.params;
        csv.num(p.lambda_j()).num(p.lambda_e()).num(p.gamma_c()).num(p.gamma_e());
        csv.num(p.p_jam()).num(p.alpha()).count(spec.hops).num(pt.distance).num(power);
        csv.count(est.rounds).count(est.outage_count).num(est.estimate()).num(est.std_error());
        csv.num(closed).num(std::abs(est.estimate() - closed));
        csv.end();
    }
    return {csv.str(), std::nullopt, false};
}

double uniform_cop(const ExperimentSpec& spec, const SystemParams& p, double d, double power)
{
    return path_cop(PathSpec::uniform(spec.hops, d, power), p).probability;
}

double uniform_sop(const ExperimentSpec& spec, const SystemParams& p, double power)
{
    return path_sop(PathSpec::uniform(spec.hops, 1.0, power), p).probability;
}

} // namespace

const char* to_string(ExperimentKind kind) noexcept
{
    return kKindNames[static_cast<int>(kind)];
}

ExperimentKind parse_kind(std::string_view name)
{
    for (int i = 0; i < static_cast<int>(std::size(kKindNames)); ++i) {
        if (name == kKindNames[i]) {
            return static_cast<ExperimentKind>(i);
        }
    }
    throw UsageError("unknown experiment kind '" + std::string(name) + "'");
}

std::string csv_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::map<std::string, std::string> parse_config(std::istream& in)
{
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto eq = t.find('=');
        const std::string where = "config line " + std::to_string(line_no);
        require(eq != std::string::npos, where + ": expected 'key = value'");
        std::string key = trim(std::string_view(t).substr(0, eq));
        const std::string value = trim(std::string_view(t).substr(eq + 1));
        require(!key.empty(), where + ": missing key");
        require(!value.empty(), where + ": missing value for '" + key + "'");
        std::replace(key.begin(), key.end(), '_', '-');
        require(out.emplace(key, value).second, where + ": duplicate key '" + key + "'");
    }
    return out;
}

std::vector<std::string> option_names(ExperimentKind kind)
{
    auto names = kCommonOptions;
    const auto extra = kind_options(kind);
    names.insert(names.end(), extra.begin(), extra.end());
    return names;
}

ExperimentSpec spec_from_options(ExperimentKind kind,
                                 const std::map<std::string, std::string>& raw)
{
    const auto allowed = option_names(kind);
    for (const auto& [key, value] : raw) {
        require(std::find(allowed.begin(), allowed.end(), key) != allowed.end(),
                "option '" + key + "' does not apply to " + to_string(kind));
    }
    const Options opt(raw);
    ExperimentSpec spec;
    spec.kind = kind;

    // Per-kind defaults for the densities and grids.
    std::vector<double> lj{spec.base.lambda_j}, le{spec.base.lambda_e};
    switch (kind) {
    case ExperimentKind::validate_cop:
        lj = {1e-4, 1e-3, 1e-2};
        spec.hop_distances = {3, 4, 5};
        spec.powers = {1};
        break;
    case ExperimentKind::validate_sop:
        lj = {1e-3, 1e-2};
        le = {1e-4, 2e-4, 5e-4, 1e-3};
        spec.hop_distances = {3};
        spec.powers = {1};
        break;
    case ExperimentKind::tradeoff_curve:
        lj = {1e-3};
        le = {1e-3};
        spec.hop_distances = {3, 4, 5};
        spec.powers = {0, 0.001, 0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1, 2};
        break;
    case ExperimentKind::optimal_tradeoff:
        lj = {1e-4, 1e-3};
        le = {1e-4, 1e-3};
        spec.hop_distances = {5};
        for (int i = 1; i <= 19; ++i) {
            spec.betas.push_back(0.05 * i);
        }
        break;
    case ExperimentKind::table_fixture:
    case ExperimentKind::route_demo:
        break;
    }

    spec.base.gamma_c = opt.number("gamma-c", spec.base.gamma_c);
    spec.base.gamma_e = opt.number("gamma-e", spec.base.gamma_e);
    spec.base.p_jam = opt.number("p-jam", spec.base.p_jam);
    spec.base.alpha = opt.number("alpha", spec.base.alpha);
    spec.lambda_j = grid(opt.list("lambda-j", lj));
    spec.lambda_e = grid(opt.list("lambda-e", le));
    spec.hop_distances = grid(opt.list("hop-distance", spec.hop_distances));
    spec.powers = grid(opt.list("power", spec.powers));
    spec.betas = grid(opt.list("beta", spec.betas));

    const bool sweeps_j =
        kind == ExperimentKind::validate_cop || kind == ExperimentKind::validate_sop ||
        kind == ExperimentKind::optimal_tradeoff;
    const bool sweeps_e =
        kind == ExperimentKind::validate_sop || kind == ExperimentKind::optimal_tradeoff;
    require(sweeps_j || spec.lambda_j.size() == 1,
            std::string("lambda-j takes a single value for ") + to_string(kind));
    require(sweeps_e || spec.lambda_e.size() == 1,
            std::string("lambda-e takes a single value for ") + to_string(kind));
    if (!sweeps_j) {
        spec.base.lambda_j = spec.lambda_j.front();
    }
    if (!sweeps_e) {
        spec.base.lambda_e = spec.lambda_e.front();
    }
    checked_params(spec.base);
    for (double j : spec.lambda_j) {
        for (double e : spec.lambda_e) {
            checked_params({j, e, spec.base.gamma_c, spec.base.gamma_e, spec.base.p_jam,
                            spec.base.alpha});
        }
    }

    for (double d : spec.hop_distances) {
        require(d > 0, "hop-distance values must be positive");
    }
    const bool validation =
        kind == ExperimentKind::validate_cop || kind == ExperimentKind::validate_sop;
    for (double p : spec.powers) {
        require(p > 0 || (p == 0 && kind == ExperimentKind::tradeoff_curve),
                "power values must be positive");
    }
    if (validation) {
        require(spec.powers.size() == 1, "power takes a single value for validation runs");
    }
    for (double b : spec.betas) {
        require(b > OutageConstraint::kBetaGuard && b < 1 - OutageConstraint::kBetaGuard,
                "beta values must lie strictly between 0 and 1");
    }

    const auto hops = opt.count("hops", spec.hops);
    require(hops >= 1 && hops <= 1000, "hops must be between 1 and 1000");
    spec.hops = static_cast<std::size_t>(hops);
    spec.window = opt.number("window", spec.window);
    require(spec.window > 0, "window must be positive");
    if (validation) {
        require(spec.hops * spec.hop_distances.back() < spec.window,
                "the path does not fit inside the simulation window");
    }

    // Named fixtures carry their own distances and bound; explicit
    // --distances make a "custom" fixture unless a name is also given.
    if (kind == ExperimentKind::table_fixture) {
        spec.fixture = opt.text("fixture", opt.has("distances") ? "custom" : "table2");
        const auto fx = std::find_if(std::begin(kFixtures), std::end(kFixtures),
                                     [&](const Fixture& f) { return spec.fixture == f.name; });
        const bool named = fx != std::end(kFixtures);
        require(named || spec.fixture == "custom",
                "unknown fixture '" + spec.fixture + "' (expected table1, table2 or custom)");
        spec.path_distances = opt.list("distances", named ? fx->distances : std::vector<double>{});
        require(!spec.path_distances.empty(), "fixture 'custom' needs --distances");
        for (double d : spec.path_distances) {
            require(d > 0, "distances must be positive");
        }
        spec.beta_so = spec.beta_co = named ? fx->beta : 0.5;
    }
    spec.beta_so = opt.number("beta-so", spec.beta_so);
    spec.beta_co = opt.number("beta-co", spec.beta_co);
    for (double b : {spec.beta_so, spec.beta_co}) {
        require(b > OutageConstraint::kBetaGuard && b < 1 - OutageConstraint::kBetaGuard,
                "beta-so and beta-co must lie strictly between 0 and 1");
    }

    spec.max_range = opt.number("max-range", spec.max_range);
    require(spec.max_range > 0, "max-range must be positive");
    const auto nodes = opt.count("nodes", spec.nodes);
    require(nodes >= 2 && nodes <= 100000, "nodes must be between 2 and 100000");
    spec.nodes = static_cast<std::size_t>(nodes);
    spec.area_side = opt.number("area", spec.area_side);
    require(spec.area_side > 0, "area must be positive");
    if (opt.has("scenario")) {
        spec.scenario = opt.text("scenario", "");
    }

    if (opt.has("seed")) {
        spec.seed = opt.count("seed", 0);
    }
    const bool paper = opt.flag("paper-scale");
    require(!(paper && opt.has("rounds")), "--paper-scale and --rounds are mutually exclusive");
    spec.rounds = paper ? kPaperRounds : opt.count("rounds", kDeskRounds);
    require(spec.rounds >= 1, "rounds must be at least 1");
    const auto hw = std::max(1u, std::thread::hardware_concurrency());
    const auto threads = opt.count("threads", hw);
    require(threads >= 1 && threads <= 1024, "threads must be between 1 and 1024");
    spec.threads = static_cast<unsigned>(threads);
    spec.out = opt.text("out", "");
    return spec;
}

ExperimentOutput run_validate_cop(const ExperimentSpec& spec)
{
    std::vector<McPoint> points;
    for (double lj : spec.lambda_j) {
        for (double d : spec.hop_distances) {
            points.push_back({with_lambdas(spec, lj, spec.lambda_e.front()), d});
        }
    }
    const double power = spec.powers.at(0);
    for (std::size_t i = 0; i < spec.lambda_j.size(); ++i) {
        for (std::size_t k = 0; k < spec.hop_distances.size(); ++k) {
            const auto& pt = points[i * spec.hop_distances.size() + k];
            const double here = uniform_cop(spec, pt.params, pt.distance, power);
            if (k > 0 && spec.base.gamma_c > 0) {
                const auto& prev = points[i * spec.hop_distances.size() + k - 1];
                shape_check(uniform_cop(spec, prev.params, prev.distance, power) < here,
                            "closed-form COP must increase with hop distance");
            }
            if (i > 0 && spec.base.gamma_c > 0) {
                const auto& prev = points[(i - 1) * spec.hop_distances.size() + k];
                shape_check(uniform_cop(spec, prev.params, prev.distance, power) < here,
                            "closed-form COP must increase with lambda_j");
            }
        }
    }
    return run_validation(spec, OutageKind::connection, points);
}

ExperimentOutput run_validate_sop(const ExperimentSpec& spec)
{
    std::vector<McPoint> points;
    for (double lj : spec.lambda_j) {
        for (double le : spec.lambda_e) {
            points.push_back({with_lambdas(spec, lj, le), spec.hop_distances.front()});
        }
    }
    const double power = spec.powers.at(0);
    const std::size_t ne = spec.lambda_e.size();
    for (std::size_t i = 0; i < spec.lambda_j.size(); ++i) {
        for (std::size_t k = 0; k < ne; ++k) {
            const double here = uniform_sop(spec, points[i * ne + k].params, power);
            if (k > 0) {
                shape_check(uniform_sop(spec, points[i * ne + k - 1].params, power) < here,
                            "closed-form SOP must increase with lambda_e");
            }
            if (i > 0 && spec.lambda_e[k] > 0) {
                shape_check(uniform_sop(spec, points[(i - 1) * ne + k].params, power) > here,
                            "closed-form SOP must decrease with lambda_j");
            }
        }
    }
    return run_validation(spec, OutageKind::secrecy, points);
}

ExperimentOutput run_tradeoff_curve(const ExperimentSpec& spec)
{
    const SystemParams p = checked_params(spec.base);
    CsvWriter csv({"row_type", "distance", "power", "cop", "sop"});
    std::vector<double> previous_cop;
    for (double d : spec.hop_distances) {
        double last_cop = 2, last_sop = -1;
        std::vector<double> cops;
        for (double power : spec.powers) {
            // Zero power is the limit point: nothing gets through, nothing leaks.
            const double cop = power > 0 ? uniform_cop(spec, p, d, power) : 1.0;
            const double sop = power > 0 ? uniform_sop(spec, p, power) : 0.0;
            if (p.gamma_c() > 0) {
                shape_check(cop < last_cop, "COP must decrease along the power list");
            }
            if (p.lambda_e() > 0) {
                shape_check(sop > last_sop, "SOP must increase along the power list");
            }
            last_cop = cop;
            last_sop = sop;
            cops.push_back(cop);
            csv.field("curve").num(d).num(power).num(cop).num(sop);
            csv.end();
        }
        if (!previous_cop.empty() && p.gamma_c() > 0) {
            for (std::size_t i = 0; i < cops.size(); ++i) {
                shape_check(spec.powers[i] == 0 || cops[i] > previous_cop[i],
                            "COP must increase with hop distance");
            }
        }
        previous_cop = cops;
        if (p.lambda_e() > 0) {
            // Power at which path SOP is exactly 1/2.
            const double anchor = std::pow(std::log(2.0) / (b_so(p) * spec.hops), p.alpha() / 2);
            csv.field("anchor").num(d).num(anchor).num(uniform_cop(spec, p, d, anchor));
            csv.num(uniform_sop(spec, p, anchor));
            csv.end();
        }
    }
    return {csv.str(), std::nullopt, false};
}

ExperimentOutput run_optimal_tradeoff(const ExperimentSpec& spec)
{
    CsvWriter csv({"panel", "lambda_j", "lambda_e", "beta", "value"});
    const double length = spec.hops * spec.hop_distances.front();
    const PathSpec path = PathSpec::uniform(spec.hops, spec.hop_distances.front(), 1.0);
    const PathSpec bare = PathSpec::from_distances(path.distances());

    auto emit = [&](const char* panel, const SystemParams& p,
                    const std::function<double(double)>& value, int direction,
                    std::vector<double>& column) {
        double last = 0;
        column.clear();
        for (std::size_t i = 0; i < spec.betas.size(); ++i) {
            const double v = value(spec.betas[i]);
            if (i > 0) {
                shape_check(direction * (v - last) > 0,
                            std::string("panel ") + panel + " is not monotone in beta");
            }
            last = v;
            column.push_back(v);
            csv.field(panel).num(p.lambda_j()).num(p.lambda_e()).num(spec.betas[i]).num(v);
            csv.end();
        }
    };

    // Panel a: optimal value; panel b: secrecy-constrained power. Both use
    // the base jammer density.
    std::vector<double> col, prev_a, prev_b;
    const bool value_varies = spec.base.gamma_c > 0;
    for (double le : spec.lambda_e) {
        const SystemParams p = with_lambdas(spec, spec.base.lambda_j, le);
        if (le == 0 || !value_varies) {
            continue;
        }
        emit("a", p, [&](double b) { return optimal_outage(length, p, b); }, -1, col);
        if (!prev_a.empty()) {
            for (std::size_t i = 0; i < col.size(); ++i) {
                shape_check(col[i] > prev_a[i], "optimal value must grow with lambda_e");
            }
        }
        prev_a = col;
    }
    for (double le : spec.lambda_e) {
        if (le == 0) {
            continue;
        }
        const SystemParams p = with_lambdas(spec, spec.base.lambda_j, le);
        emit("b", p, [&](double b) { return solve_so_cop(bare, p, b).powers.front(); }, +1, col);
        if (!prev_b.empty()) {
            for (std::size_t i = 0; i < col.size(); ++i) {
                shape_check(col[i] < prev_b[i], "SO-COP power must fall with lambda_e");
            }
        }
        prev_b = col;
    }
    // Panel c: connection-constrained power against the jammer density.
    std::vector<double> prev_c;
    if (spec.base.gamma_c > 0) {
        for (double lj : spec.lambda_j) {
            const SystemParams p = with_lambdas(spec, lj, spec.base.lambda_e);
            emit("c", p, [&](double b) { return solve_qo_sop(bare, p, b).powers.front(); }, -1,
                 col);
            if (!prev_c.empty()) {
                for (std::size_t i = 0; i < col.size(); ++i) {
                    shape_check(col[i] > prev_c[i], "QO-SOP power must grow with lambda_j");
                }
            }
            prev_c = col;
        }
    }
    return {csv.str(), std::nullopt, false};
}

ExperimentOutput run_table_fixture(const ExperimentSpec& spec)
{
    const SystemParams p = checked_params(spec.base);
    const PathSpec path = PathSpec::from_distances(spec.path_distances);
    const PowerAllocation so = solve_so_cop(path, p, spec.beta_so);
    const PowerAllocation qo = solve_qo_sop(path, p, spec.beta_co);
    CsvWriter csv({"fixture", "hop", "distance", "p_so_cop", "p_qo_sop", "optimal_cop",
                   "optimal_sop"});
    for (std::size_t k = 0; k < path.size(); ++k) {
        csv.field(spec.fixture).count(k + 1).num(spec.path_distances[k]);
        csv.num(so.powers[k]).num(qo.powers[k]).num(so.achieved_cop).num(qo.achieved_sop);
        csv.end();
    }
    return {csv.str(), std::nullopt, false};
}

ExperimentOutput run_route_demo(const ExperimentSpec& spec)
{
    const SystemParams p = checked_params(spec.base);
    Scenario scenario = [&] {
        if (spec.scenario) {
            std::ifstream in(*spec.scenario);
            if (!in) {
                throw std::runtime_error("cannot open scenario file '" + *spec.scenario + "'");
            }
            return read_scenario(in);
        }
        const Region area(spec.area_side, spec.area_side);
        return generate_scenario(p, area, spec.nodes, require_seed(spec));
    }();

    CsvWriter csv({"algorithm", "row_type", "hop", "from_id", "to_id", "distance", "power",
                   "value"});
    bool unreachable = false;
    const Endpoints ends = default_endpoints(scenario);
    const auto so = route_so_cop(scenario, spec.max_range, p, spec.beta_so, ends);
    const auto qo = so ? route_qo_sop(scenario, spec.max_range, p, spec.beta_co, ends)
                       : std::nullopt;
    for (const auto* r : {&so, &qo}) {
        const char* name = r == &so ? "so-cop" : "qo-sop";
        if (!*r) {
            unreachable = true;
            csv.field(name).field("unreachable").empty().count(ends.source);
            csv.count(ends.destination).empty().empty().empty();
            csv.end();
            continue;
        }
        const RouteResult& route = **r;
        for (std::size_t k = 0; k < route.hop_distances.size(); ++k) {
            csv.field(name).field("hop").count(k + 1).count(route.nodes[k]);
            csv.count(route.nodes[k + 1]).num(route.hop_distances[k]);
            csv.num(route.allocation.powers[k]).empty();
            csv.end();
        }
        csv.field(name).field("summary").count(route.hop_distances.size());
        csv.count(route.nodes.front()).count(route.nodes.back()).num(route.total_length);
        csv.empty().num(route.achieved);
        csv.end();
    }
    if (so && qo) {
        shape_check(so->nodes == qo->nodes, "both algorithms must choose the same path");
    }

    std::ostringstream text;
    write_scenario(text, scenario);
    return {csv.str(), text.str(), unreachable};
}

ExperimentOutput run_experiment(const ExperimentSpec& spec)
{
    switch (spec.kind) {
    case ExperimentKind::validate_cop:
        return run_validate_cop(spec);
    case ExperimentKind::validate_sop:
        return run_validate_sop(spec);
    case ExperimentKind::tradeoff_curve:
        return run_tradeoff_curve(spec);
    case ExperimentKind::optimal_tradeoff:
        return run_optimal_tradeoff(spec);
    case ExperimentKind::table_fixture:
        return run_table_fixture(spec);
    case ExperimentKind::route_demo:
        return run_route_demo(spec);
    }
    throw std::logic_error("unhandled experiment kind");
}

} // namespace secroute
