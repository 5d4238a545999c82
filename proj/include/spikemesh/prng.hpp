/*
 * Copyright 2026 The spikemesh authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SPIKEMESH_PRNG_HPP
#define SPIKEMESH_PRNG_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "spikemesh/fixed.hpp"

namespace spikemesh
{

// 16-bit Fibonacci LFSR with taps (16, 15, 13, 4), the maximal-length set
// for this width; period 2^16 - 1. One step shifts in a single bit:
//
//   fb   = s[0] ^ s[1] ^ s[3] ^ s[12]
//   s'   = (s >> 1) | (fb << 15)
//
// The all-zero state is unreachable from any nonzero seed.
class Lfsr16
{
public:
    explicit Lfsr16(std::uint16_t seed)
            : state_(seed)
    {
        if (seed == 0)
        {
            throw std::invalid_argument("Lfsr16: seed must be nonzero");
        }
    }

    std::uint16_t state() const { return state_; }

    void step()
    {
        const std::uint16_t s = state_;
        const std::uint16_t fb =
                ((s >> 0) ^ (s >> 1) ^ (s >> 3) ^ (s >> 12)) & 1u;
        state_ = static_cast<std::uint16_t>((s >> 1) | (fb << 15));
    }

    // Sixteen single-bit steps; returns the refreshed state, uniform over
    // [1, 65535].
    std::uint16_t next16()
    {
        for (int i = 0; i < 16; ++i)
        {
            step();
        }
        return state_;
    }

    // Uniform draw over the inclusive raw range [lo, hi].
    std::int32_t uniform_raw(std::int32_t lo, std::int32_t hi)
    {
        if (lo > hi)
        {
            throw std::invalid_argument("Lfsr16: uniform range with lo > hi");
        }
        const std::uint32_t span = std::uint32_t(hi - lo) + 1u;
        return lo + std::int32_t(next16() % span);
    }

    // Bernoulli trial with success probability p in [0, 1].
    bool bernoulli(double p)
    {
        const auto threshold = std::uint32_t(std::lround(p * 65536.0));
        return std::uint32_t(next16()) < threshold;
    }

private:
    std::uint16_t state_;
};

inline FxAcc prng_uniform(Lfsr16 &prng, FxAcc lo, FxAcc hi)
{
    return FxAcc{prng.uniform_raw(lo.raw, hi.raw)};
}

// Deterministic 16-bit stream seed derived from a master seed and a salt
// (node index, harness role, ...). Never returns zero.
inline std::uint16_t derive_seed(std::uint32_t master, std::uint32_t salt)
{
    std::uint32_t x = master ^ (salt * 0x9E3779B9u);
    x ^= x >> 16;
    x *= 0x45D9F3Bu;
    x ^= x >> 16;
    const auto s = static_cast<std::uint16_t>(x & 0xFFFFu);
    return s == 0 ? std::uint16_t(0xACE1) : s;
}

} // namespace spikemesh

#endif // SPIKEMESH_PRNG_HPP
