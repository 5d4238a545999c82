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

#ifndef SPIKEMESH_AER_HPP
#define SPIKEMESH_AER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace spikemesh
{

struct Coord
{
    std::uint8_t x = 0;
    std::uint8_t y = 0;

    constexpr bool operator==(const Coord &) const = default;
};

// One flow-control unit: a 4-bit slice of a packet. Head/tail are derived
// from position, nothing extra travels on the wire.
struct Flit
{
    std::uint8_t bits = 0; // low nibble only
};

// Number of axon-index nibbles for a core with n_axons inputs (2^L = N).
int axon_nibbles(int n_axons);

// Total flits per packet: dest_x nibble, dest_y nibble, axon nibbles
// MSB-first, ext nibble.
int flits_per_packet(int n_axons);

// Address-event spike message. Only dest coordinates, axon index and the
// 4-bit extension field are wire-encoded; everything a simulation needs
// beyond that is tracked out of band.
struct AerPacket
{
    std::uint8_t dest_x = 0; // 4 bits
    std::uint8_t dest_y = 0; // 4 bits
    std::uint16_t axon = 0;  // L = log2(N) bits
    std::uint8_t ext = 0;    // 4 bits, MSB = multicast continue bit

    bool continue_bit() const { return (ext & 0x8u) != 0; }
    Coord dest() const { return {dest_x, dest_y}; }

    // Throws std::invalid_argument when a field does not fit its width.
    static AerPacket make(Coord dest, std::uint16_t axon, std::uint8_t ext,
            int n_axons);

    bool operator==(const AerPacket &) const = default;
};

// One row of a destination (multicast) table in configuration memory.
// Within a group every entry except the last carries continue_bit = 1.
struct AerEntry
{
    std::uint8_t dest_x = 0;
    std::uint8_t dest_y = 0;
    std::uint16_t axon = 0;
    std::uint8_t ext = 0;

    bool continue_bit() const { return (ext & 0x8u) != 0; }
    Coord dest() const { return {dest_x, dest_y}; }

    bool operator==(const AerEntry &) const = default;
};

std::vector<Flit> encode_packet(const AerPacket &p, int n_axons);

// Inverse of encode_packet. A wrong flit count is a malformed packet and
// yields nullopt; callers count and discard.
std::optional<AerPacket> decode_packet(std::span<const Flit> flits,
        int n_axons);

} // namespace spikemesh

#endif // SPIKEMESH_AER_HPP
