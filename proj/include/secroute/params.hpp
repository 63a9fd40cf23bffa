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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace secroute {

/// Raised when a candidate parameter set violates a domain invariant. The
/// offending field is available through field().
class ParamError : public std::domain_error {
public:
    ParamError(std::string field, const std::string& what)
        : std::domain_error(what), field_(std::move(field))
    {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Unvalidated network parameters, as read from a config file or flags.
struct ParamsInput {
    double lambda_j = 1e-3; ///< jammer density (points per unit area)
    double lambda_e = 1e-4; ///< eavesdropper density
    double gamma_c = 1.0;   ///< SIR threshold at the legitimate receiver
    double gamma_e = 1.0;   ///< SIR threshold at an eavesdropper
    double p_jam = 1.0;     ///< common jammer transmit power
    double alpha = 4.0;     ///< path-loss exponent
};

/// Validated network parameters. Instances can only be obtained through
/// validate_params(), so every SystemParams satisfies:
///   lambda_j > 0, lambda_e >= 0, gamma_c >= 0, gamma_e > 0, p_jam > 0,
///   alpha > 2.
class SystemParams {
public:
    double lambda_j() const noexcept { return v_.lambda_j; }
    double lambda_e() const noexcept { return v_.lambda_e; }
    double gamma_c() const noexcept { return v_.gamma_c; }
    double gamma_e() const noexcept { return v_.gamma_e; }
    double p_jam() const noexcept { return v_.p_jam; }
    double alpha() const noexcept { return v_.alpha; }

    /// Copy of the underlying values, handy for building a modified candidate.
    const ParamsInput& raw() const noexcept { return v_; }

private:
    explicit SystemParams(const ParamsInput& v) : v_(v) {}
    friend SystemParams validate_params(const ParamsInput& raw);

    ParamsInput v_;
};

/// Checks every invariant and returns the validated value object.
/// Throws ParamError naming the first violated field.
SystemParams validate_params(const ParamsInput& raw);

/// SIR thresholds derived from Wyner code rates.
struct Thresholds {
    double gamma_c;
    double gamma_e;
};

/// gamma_c = 2^rt - 1 and gamma_e = 2^(rt - rs) - 1. Requires rt >= rs >= 0.
/// A zero gamma_e is a legal output here but must not be fed to the SOP
/// formulas.
Thresholds rates_to_thresholds(double codeword_rate, double secrecy_rate);

/// One hop of a path: link length and, once allocated, a transmit power.
struct Hop {
    double distance;
    std::optional<double> power;
};

/// Ordered list of hops. At least one hop, strictly positive distances and
/// strictly positive powers where present.
class PathSpec {
public:
    explicit PathSpec(std::vector<Hop> hops);

    static PathSpec from_distances(std::span<const double> distances);
    static PathSpec with_powers(std::span<const double> distances,
                                std::span<const double> powers);
    /// K hops of equal length and power.
    static PathSpec uniform(std::size_t hop_count, double distance, double power);

    std::size_t size() const noexcept { return hops_.size(); }
    const std::vector<Hop>& hops() const noexcept { return hops_; }

    std::vector<double> distances() const;
    bool has_powers() const noexcept;
    /// Throws std::invalid_argument if any hop lacks a power.
    std::vector<double> powers() const;
    double total_length() const noexcept;

    /// Same distances, new powers (one per hop).
    PathSpec assign_powers(std::span<const double> powers) const;

private:
    std::vector<Hop> hops_;
};

enum class OutageKind { connection, secrecy };

const char* to_string(OutageKind kind) noexcept;

/// A bound on one of the outage probabilities. beta must lie in
/// (kBetaGuard, 1 - kBetaGuard) so that ln(1 - beta) stays finite.
class OutageConstraint {
public:
    static constexpr double kBetaGuard = 1e-12;

    OutageConstraint(OutageKind kind, double beta);
    static OutageConstraint secrecy(double beta) { return {OutageKind::secrecy, beta}; }
    static OutageConstraint connection(double beta) { return {OutageKind::connection, beta}; }

    OutageKind kind() const noexcept { return kind_; }
    double beta() const noexcept { return beta_; }

private:
    OutageKind kind_;
    double beta_;
};

} // namespace secroute
