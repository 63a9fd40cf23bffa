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

#include <array>
#include <cstdint>
#include <limits>

namespace secroute {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., SC'11). Pure function of
/// (counter, key).
PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key) noexcept;

/// What a stream is used for. Distinct tags never share random numbers.
enum class Purpose : std::uint16_t {
    generic = 0,
    legit_nodes = 1,
    jammers = 2,
    eavesdroppers = 3,
    fading = 4,
    cop_round = 5,
    sop_round = 6,
    verifier = 7,
    test = 0xfff0,
};

/// Full address of a random stream. Every draw is a pure function of the
/// address and its position within the stream, so work may be split across
/// threads in any way without changing results.
struct StreamAddress {
    std::uint64_t seed = 0;
    Purpose purpose = Purpose::generic;
    std::uint64_t round = 0; ///< only the low 48 bits are used
    std::uint32_t lane = 0;  ///< sub-stream within a round (hop, target, ...)
};

/// Sequential view over one counter-based stream. Satisfies
/// UniformRandomBitGenerator, so it can drive <random> distributions.
class CounterStream {
public:
    using result_type = std::uint32_t;

    explicit CounterStream(const StreamAddress& address) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept
    {
        if (pos_ == 4) {
            refill();
        }
        return block_[pos_++];
    }

    std::uint64_t next_u64() noexcept
    {
        const std::uint64_t hi = (*this)();
        return (hi << 32) | (*this)();
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1].
    double uniform_pos() noexcept { return 1.0 - uniform(); }

    /// Exponential with unit mean.
    double exponential() noexcept;

    /// Number of 32-bit words consumed so far.
    std::uint64_t consumed() const noexcept { return blocks_ * 4 - (4 - pos_); }

private:
    void refill() noexcept;

    PhiloxKey key_;
    PhiloxCounter counter_;
    PhiloxCounter block_{};
    std::uint64_t blocks_ = 0;
    unsigned pos_ = 4;
};

/// Poisson-distributed count with the given mean (0 when mean <= 0).
std::uint64_t sample_poisson(CounterStream& stream, double mean);

} // namespace secroute
