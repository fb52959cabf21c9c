/*
 * Copyright 2026 The distext Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DISTEXT_RNG_HPP
#define DISTEXT_RNG_HPP

#include <cstdint>

namespace distext {

/// Counter-based generator: draw i is a pure function of (seed, stream, i),
/// so any test case can be regenerated from its index alone.
class CounterRng
{
    __extension__ using u128 = unsigned __int128;

public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL)))
    {
    }

    std::uint64_t at(std::uint64_t i) const noexcept { return mix(key_ + (i + 1) * 0x9e3779b97f4a7c15ULL); }

    std::uint64_t next() noexcept { return at(counter_++); }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        // Lemire's multiply-shift; the bias is below 2^-32 for the bounds used here.
        return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
    }

    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace distext

#endif // DISTEXT_RNG_HPP
