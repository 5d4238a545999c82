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

#ifndef SPIKEMESH_NEURON_HPP
#define SPIKEMESH_NEURON_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "spikemesh/aer.hpp"
#include "spikemesh/bitvec.hpp"
#include "spikemesh/fixed.hpp"
#include "spikemesh/prng.hpp"

namespace spikemesh
{

enum class NeuronMode : std::uint8_t
{
    kIf,
    kSif,
    kRelu,
};

// Spike-history counters saturate at this sentinel; a counter at kCounterMax
// means "no event within any window".
inline constexpr std::uint16_t kCounterMax = 0xFFFF;

struct NeuronConfig
{
    NeuronMode mode = NeuronMode::kIf;
    bool learning = false;
    FxAcc threshold;                    // IF firing threshold / ReLU U_th
    FxAcc threshold_lo, threshold_hi;   // SIF random-threshold range
    Fx16 eta_ltp_log, eta_ltd_log;      // log2 learning rates
    std::uint16_t tau_ltp = 1;          // LTP window, in NECs
    std::uint16_t tau_ltd = 1;          // LTD window, in NECs
    std::vector<AerEntry> destinations; // multicast table, may be empty
    // Per-axon plasticity gate; empty means every synapse is plastic.
    // Synapses outside the mask keep fixed weights (their history counters
    // still advance).
    std::vector<bool> plastic;

    bool axon_plastic(int axon) const
    {
        return plastic.empty() || plastic[std::size_t(axon)];
    }
};

struct NeuronState
{
    FxAcc u;                                // membrane potential
    Fx16 bias;                              // w_0
    std::vector<Fx16> weights;              // one per axon
    std::uint16_t post_counter = kCounterMax;
    std::vector<std::uint16_t> pre_counters; // one per axon

    static NeuronState zeroed(int n_axons)
    {
        NeuronState s;
        s.weights.assign(std::size_t(n_axons), Fx16{0});
        s.pre_counters.assign(std::size_t(n_axons), kCounterMax);
        return s;
    }

    bool operator==(const NeuronState &) const = default;
};

// A single weight/bias update request produced by the STDP tracker.
struct LearnEvent
{
    enum class Kind : std::uint8_t
    {
        kLtp,
        kLtd,
    };
    static constexpr int kBiasAxon = -1;

    Kind kind = Kind::kLtp;
    int axon = kBiasAxon;

    bool operator==(const LearnEvent &) const = default;
};

// Integrate-and-fire update: u' = sat(bias + u + sum of scaled weights on
// spiking axons); firing resets u to 0. Accumulation order is bias, previous
// potential, then axons ascending, with saturation at every step.
bool infer_if(NeuronState &state, const BitVec &spikes,
        const NeuronConfig &cfg, std::span<const AxonScale> scales,
        SatCounter *sat = nullptr);

// Stochastic IF: draws this evaluation's threshold uniformly from
// [threshold_lo, threshold_hi], then behaves as infer_if.
bool infer_sif(NeuronState &state, const BitVec &spikes,
        const NeuronConfig &cfg, std::span<const AxonScale> scales,
        Lfsr16 &prng, SatCounter *sat = nullptr);

// Spiking ReLU: accumulates one unit per spike on a connected axon
// (weight != 0 marks the synapse; the weight value itself is not used),
// fires at most once per NEC and carries the surplus u - U_th forward,
// discharging it as a burst over subsequent NECs.
bool infer_relu(NeuronState &state, const BitVec &spikes,
        const NeuronConfig &cfg, SatCounter *sat = nullptr);

// STDP tracker step for one learning neuron, run once per NEC after
// inference. Emits the LTP/LTD events for this NEC (axons ascending, bias
// last), expires consumed histories and then advances the counters. Only
// plastic axons produce events; counters are maintained for all axons.
std::vector<LearnEvent> classify_events(bool fired, const BitVec &spikes,
        NeuronState &state, const NeuronConfig &cfg);

// Q2PS weight update: Q is the distance to the log-rate target, the delta
// is the largest power of two not exceeding |Q| (zero when |Q| is below one
// LSB), added for LTP and subtracted for LTD.
Fx16 q2ps_apply(Fx16 w, LearnEvent::Kind kind, const NeuronConfig &cfg);

// Bias learning: LTP when the neuron fired this NEC, LTD otherwise,
// independent of spike timing.
void bias_apply(NeuronState &state, bool fired, const NeuronConfig &cfg);

// Applies one tracker event to the owning neuron's state.
void apply_event(NeuronState &state, const LearnEvent &ev,
        const NeuronConfig &cfg);

} // namespace spikemesh

#endif // SPIKEMESH_NEURON_HPP
