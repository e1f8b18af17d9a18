/*
   Copyright 2026 The bellchain authors

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
#include <cstddef>
#include <cstdint>

namespace bellchain::rng {

// Counter-based generator: Philox4x32-10.
// Salmon et al., "Parallel random numbers: as easy as 1, 2, 3", SC 2011.
//
// Every draw is a pure function of (seed, trial, slot). Trial loops can run
// in any order on any number of workers and reproduce the same stream.

namespace detail {

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) noexcept
{
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * ctr[0];
        const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * ctr[2];
        ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0],
               std::uint32_t(p1),
               std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
               std::uint32_t(p0)};
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return ctr;
}

} // namespace detail

/// Independent randomness slots within one trial.
enum class Slot : std::uint32_t {
    AliceLocal = 0,    // u
    BobLocal = 1,      // v
    AliceNonlocal = 2, // alpha
    BobNonlocal = 3,   // beta
    SharedLambda = 4,  // classical shared hidden phase
    AliceSetting = 5,
    BobSetting = 6,
};

/// Uniform double in [0, 1), 53-bit resolution.
inline double uniform01(std::uint64_t seed, std::uint64_t trial, Slot slot) noexcept
{
    const auto out = detail::philox4x32(
        {std::uint32_t(trial), std::uint32_t(trial >> 32), std::uint32_t(slot), 0u},
        {std::uint32_t(seed), std::uint32_t(seed >> 32)});
    const std::uint64_t bits = (std::uint64_t(out[1]) << 32) | out[0];
    return double(bits >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, n). Bias is O(n / 2^53), negligible for setting counts.
inline std::size_t uniform_index(std::uint64_t seed, std::uint64_t trial, Slot slot,
                                 std::size_t n) noexcept
{
    const auto i = std::size_t(uniform01(seed, trial, slot) * double(n));
    return i < n ? i : n - 1;
}

} // namespace bellchain::rng
