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

#include "secroute/random.hpp"

#include <cmath>
#include <random>

namespace secroute {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi)
{
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}

} // namespace

PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) noexcept
{
    for (int round = 0; round < 10; ++round) {
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(kPhiloxM0, ctr[0], lo0, hi0);
        mulhilo(kPhiloxM1, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return ctr;
}

// Counter layout: [0] block index, [1] lane, [2] round low 32 bits,
// [3] round bits 32..47 | purpose << 16.
CounterStream::CounterStream(const StreamAddress& a) noexcept
    : key_{static_cast<std::uint32_t>(a.seed), static_cast<std::uint32_t>(a.seed >> 32)},
      counter_{0, a.lane, static_cast<std::uint32_t>(a.round),
               static_cast<std::uint32_t>((a.round >> 32) & 0xffffu) |
                   (static_cast<std::uint32_t>(a.purpose) << 16)}
{}

void CounterStream::refill() noexcept
{
    block_ = philox4x32(counter_, key_);
    ++counter_[0];
    ++blocks_;
    pos_ = 0;
}

double CounterStream::exponential() noexcept
{
    return -std::log(uniform_pos());
}

std::uint64_t sample_poisson(CounterStream& stream, double mean)
{
    if (!(mean > 0)) {
        return 0;
    }
    std::poisson_distribution<std::int64_t> dist(mean);
    return static_cast<std::uint64_t>(dist(stream));
}

} // namespace secroute
