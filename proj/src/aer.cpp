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

#include "spikemesh/aer.hpp"

#include <bit>

namespace spikemesh
{

int axon_nibbles(int n_axons)
{
    if (n_axons < 2 || !std::has_single_bit(std::uint32_t(n_axons)))
    {
        throw std::invalid_argument("axon count must be a power of two >= 2");
    }
    const int l = std::countr_zero(std::uint32_t(n_axons));
    return (l + 3) / 4;
}

int flits_per_packet(int n_axons)
{
    return 2 + axon_nibbles(n_axons) + 1;
}

AerPacket AerPacket::make(Coord dest, std::uint16_t axon, std::uint8_t ext,
        int n_axons)
{
    if (dest.x > 0xF || dest.y > 0xF)
    {
        throw std::invalid_argument("packet destination exceeds 4-bit field");
    }
    if (int(axon) >= n_axons)
    {
        throw std::invalid_argument("packet axon index exceeds L-bit field");
    }
    if (ext > 0xF)
    {
        throw std::invalid_argument("packet extension exceeds 4-bit field");
    }
    return AerPacket{dest.x, dest.y, axon, ext};
}

std::vector<Flit> encode_packet(const AerPacket &p, int n_axons)
{
    const int nib = axon_nibbles(n_axons);
    std::vector<Flit> flits;
    flits.reserve(std::size_t(nib) + 3);
    flits.push_back({std::uint8_t(p.dest_x & 0xF)});
    flits.push_back({std::uint8_t(p.dest_y & 0xF)});
    for (int i = nib - 1; i >= 0; --i)
    {
        flits.push_back({std::uint8_t((p.axon >> (4 * i)) & 0xF)});
    }
    flits.push_back({std::uint8_t(p.ext & 0xF)});
    return flits;
}

std::optional<AerPacket> decode_packet(std::span<const Flit> flits,
        int n_axons)
{
    const int nib = axon_nibbles(n_axons);
    if (int(flits.size()) != nib + 3)
    {
        return std::nullopt;
    }
    AerPacket p;
    p.dest_x = flits[0].bits & 0xF;
    p.dest_y = flits[1].bits & 0xF;
    std::uint16_t axon = 0;
    for (int i = 0; i < nib; ++i)
    {
        axon = std::uint16_t((axon << 4) | (flits[std::size_t(2 + i)].bits & 0xF));
    }
    p.axon = axon;
    p.ext = flits[std::size_t(nib + 2)].bits & 0xF;
    return p;
}

} // namespace spikemesh
