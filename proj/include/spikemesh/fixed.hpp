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

#ifndef SPIKEMESH_FIXED_HPP
#define SPIKEMESH_FIXED_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace spikemesh
{

// Global binary point position: all fixed-point values carry kFracBits
// fractional bits.
inline constexpr int kFracBits = 8;
inline constexpr std::int32_t kFracOne = 1 << kFracBits;

struct SatCounter
{
    std::uint64_t events = 0;
};

// 16-bit saturating signed fixed point, Q7.8. Holds synaptic weights and
// biases. Range [-128.0, +127.99609375].
struct Fx16
{
    std::int16_t raw = 0;

    static constexpr std::int32_t kMaxRaw = 32767;
    static constexpr std::int32_t kMinRaw = -32768;

    static constexpr Fx16 from_raw_clamped(std::int64_t r)
    {
        r = std::clamp<std::int64_t>(r, kMinRaw, kMaxRaw);
        return Fx16{static_cast<std::int16_t>(r)};
    }
    // Round-to-nearest conversion used only when parsing configuration.
    static Fx16 from_real(double v)
    {
        return from_raw_clamped(std::llround(v * kFracOne));
    }
    constexpr double to_real() const { return raw / double(kFracOne); }

    constexpr bool operator==(const Fx16 &) const = default;
};

// 24-bit saturating signed accumulator, Q15.8, same binary point as Fx16.
// Holds membrane potentials. Wide enough for a 256-axon sum of extreme
// unscaled weights plus bias.
struct FxAcc
{
    std::int32_t raw = 0;

    static constexpr std::int32_t kMaxRaw = (1 << 23) - 1;
    static constexpr std::int32_t kMinRaw = -(1 << 23);

    static constexpr FxAcc from_raw_clamped(std::int64_t r)
    {
        r = std::clamp<std::int64_t>(r, kMinRaw, kMaxRaw);
        return FxAcc{static_cast<std::int32_t>(r)};
    }
    static FxAcc from_real(double v)
    {
        return from_raw_clamped(std::llround(v * kFracOne));
    }
    static constexpr FxAcc widen(Fx16 v) { return FxAcc{v.raw}; }
    constexpr double to_real() const { return raw / double(kFracOne); }

    constexpr bool operator==(const FxAcc &) const = default;
};

// Per-axon weight scaling factor s in {0,1,2,3}; the effective weight of a
// synapse on that axon is raw * 2^(s - kFracBits).
struct AxonScale
{
    std::uint8_t s = 0;
};

inline Fx16 add_sat(Fx16 a, Fx16 b, SatCounter *sat = nullptr)
{
    const std::int32_t wide = std::int32_t(a.raw) + std::int32_t(b.raw);
    if (wide > Fx16::kMaxRaw || wide < Fx16::kMinRaw)
    {
        if (sat != nullptr)
        {
            ++sat->events;
        }
        return Fx16{static_cast<std::int16_t>(
                wide > 0 ? Fx16::kMaxRaw : Fx16::kMinRaw)};
    }
    return Fx16{static_cast<std::int16_t>(wide)};
}

inline Fx16 sub_sat(Fx16 a, Fx16 b, SatCounter *sat = nullptr)
{
    const std::int32_t wide = std::int32_t(a.raw) - std::int32_t(b.raw);
    if (wide > Fx16::kMaxRaw || wide < Fx16::kMinRaw)
    {
        if (sat != nullptr)
        {
            ++sat->events;
        }
        return Fx16{static_cast<std::int16_t>(
                wide > 0 ? Fx16::kMaxRaw : Fx16::kMinRaw)};
    }
    return Fx16{static_cast<std::int16_t>(wide)};
}

inline FxAcc add_sat(FxAcc a, FxAcc b, SatCounter *sat = nullptr)
{
    const std::int64_t wide = std::int64_t(a.raw) + std::int64_t(b.raw);
    if (wide > FxAcc::kMaxRaw || wide < FxAcc::kMinRaw)
    {
        if (sat != nullptr)
        {
            ++sat->events;
        }
        return FxAcc{wide > 0 ? FxAcc::kMaxRaw : FxAcc::kMinRaw};
    }
    return FxAcc{static_cast<std::int32_t>(wide)};
}

inline FxAcc sub_sat(FxAcc a, FxAcc b, SatCounter *sat = nullptr)
{
    const std::int64_t wide = std::int64_t(a.raw) - std::int64_t(b.raw);
    if (wide > FxAcc::kMaxRaw || wide < FxAcc::kMinRaw)
    {
        if (sat != nullptr)
        {
            ++sat->events;
        }
        return FxAcc{wide > 0 ? FxAcc::kMaxRaw : FxAcc::kMinRaw};
    }
    return FxAcc{static_cast<std::int32_t>(wide)};
}

// Effective accumulator contribution of weight w on an axon with scale sc.
inline FxAcc scaled_weight(Fx16 w, AxonScale sc)
{
    return FxAcc{std::int32_t(w.raw) * (std::int32_t(1) << sc.s)};
}

struct Pow2Quant
{
    int sign = 0; // -1, 0, +1
    int exponent = 0;
};

// Priority-encoder quantization: for q != 0 returns the exponent e with
// 2^e <= |q| < 2^(e+1), computed as the index of the most significant set
// bit of |raw| minus kFracBits. q == 0 returns {0, 0}.
inline Pow2Quant pow2_quantize(FxAcc q)
{
    if (q.raw == 0)
    {
        return {0, 0};
    }
    const std::uint32_t mag =
            q.raw < 0 ? std::uint32_t(-std::int64_t(q.raw)) : std::uint32_t(q.raw);
    const int msb = 31 - std::countl_zero(mag);
    return {q.raw < 0 ? -1 : 1, msb - kFracBits};
}

// 2^e as Fx16. e >= 0 is a left shift of the literal 1, e < 0 a right
// shift; magnitudes below 1 LSB underflow to exactly 0, values above the
// Fx16 range saturate.
inline Fx16 pow2_value(int e)
{
    const int shift = e + kFracBits;
    if (shift < 0)
    {
        return Fx16{0};
    }
    if (shift > 14)
    {
        return Fx16{static_cast<std::int16_t>(Fx16::kMaxRaw)};
    }
    return Fx16{static_cast<std::int16_t>(std::int32_t(1) << shift)};
}

} // namespace spikemesh

#endif // SPIKEMESH_FIXED_HPP
