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

#include "spikemesh/neuron.hpp"

namespace spikemesh
{

namespace
{

std::uint16_t sat_inc(std::uint16_t c)
{
    return c == kCounterMax ? kCounterMax : std::uint16_t(c + 1);
}

bool fire_and_reset(NeuronState &state, FxAcc u_next, FxAcc threshold)
{
    if (u_next.raw >= threshold.raw)
    {
        state.u = FxAcc{0};
        return true;
    }
    state.u = u_next;
    return false;
}

FxAcc accumulate(const NeuronState &state, const BitVec &spikes,
        std::span<const AxonScale> scales, SatCounter *sat)
{
    FxAcc acc = FxAcc::widen(state.bias);
    acc = add_sat(acc, state.u, sat);
    spikes.for_each_set([&](int axon) {
        acc = add_sat(acc,
                scaled_weight(state.weights[std::size_t(axon)],
                        scales[std::size_t(axon)]),
                sat);
    });
    return acc;
}

} // namespace

bool infer_if(NeuronState &state, const BitVec &spikes,
        const NeuronConfig &cfg, std::span<const AxonScale> scales,
        SatCounter *sat)
{
    return fire_and_reset(state, accumulate(state, spikes, scales, sat),
            cfg.threshold);
}

bool infer_sif(NeuronState &state, const BitVec &spikes,
        const NeuronConfig &cfg, std::span<const AxonScale> scales,
        Lfsr16 &prng, SatCounter *sat)
{
    const FxAcc threshold =
            prng_uniform(prng, cfg.threshold_lo, cfg.threshold_hi);
    return fire_and_reset(state, accumulate(state, spikes, scales, sat),
            threshold);
}

bool infer_relu(NeuronState &state, const BitVec &spikes,
        const NeuronConfig &cfg, SatCounter *sat)
{
    std::int32_t connected_spikes = 0;
    spikes.for_each_set([&](int axon) {
        if (state.weights[std::size_t(axon)].raw != 0)
        {
            ++connected_spikes;
        }
    });
    FxAcc a = add_sat(state.u, FxAcc{connected_spikes * kFracOne}, sat);
    if (a.raw >= cfg.threshold.raw)
    {
        state.u = sub_sat(a, cfg.threshold, sat);
        return true;
    }
    state.u = a;
    return false;
}

std::vector<LearnEvent> classify_events(bool fired, const BitVec &spikes,
        NeuronState &state, const NeuronConfig &cfg)
{
    const int n = int(state.weights.size());
    std::vector<LearnEvent> events;

    if (fired)
    {
        // Post spike this NEC. Every synapse learns: LTP when the pre
        // history is inside the window (a spike in this very snapshot
        // counts as distance 0), LTD otherwise. A consumed pre history
        // expires so it cannot fund a second LTP.
        events.reserve(std::size_t(n) + 1);
        for (int a = 0; a < n; ++a)
        {
            const bool recent_pre = spikes.test(a) ||
                    state.pre_counters[std::size_t(a)] < cfg.tau_ltp;
            if (cfg.axon_plastic(a))
            {
                events.push_back({recent_pre ? LearnEvent::Kind::kLtp
                                             : LearnEvent::Kind::kLtd,
                        a});
            }
            if (recent_pre)
            {
                state.pre_counters[std::size_t(a)] = kCounterMax;
            }
        }
        events.push_back({LearnEvent::Kind::kLtp, LearnEvent::kBiasAxon});
    }
    else
    {
        // Pre spikes without a post spike depress while the post history
        // is inside the LTD window; the post history expires once all
        // axons of this NEC have been served.
        bool expire_post = false;
        if (state.post_counter < cfg.tau_ltd)
        {
            spikes.for_each_set([&](int a) {
                if (cfg.axon_plastic(a))
                {
                    events.push_back({LearnEvent::Kind::kLtd, a});
                }
                expire_post = true;
            });
        }
        events.push_back({LearnEvent::Kind::kLtd, LearnEvent::kBiasAxon});
        if (expire_post)
        {
            state.post_counter = kCounterMax;
        }
    }

    // Counter maintenance, after event classification.
    state.post_counter = fired ? 0 : sat_inc(state.post_counter);
    for (int a = 0; a < n; ++a)
    {
        auto &c = state.pre_counters[std::size_t(a)];
        c = spikes.test(a) ? 0 : sat_inc(c);
    }
    return events;
}

Fx16 q2ps_apply(Fx16 w, LearnEvent::Kind kind, const NeuronConfig &cfg)
{
    const std::int32_t q_raw = kind == LearnEvent::Kind::kLtp
            ? std::int32_t(cfg.eta_ltp_log.raw) - w.raw
            : std::int32_t(cfg.eta_ltd_log.raw) + w.raw;
    const Pow2Quant q = pow2_quantize(FxAcc{q_raw});
    if (q.sign == 0)
    {
        return w;
    }
    const Fx16 delta = pow2_value(q.exponent);
    return kind == LearnEvent::Kind::kLtp ? add_sat(w, delta)
                                          : sub_sat(w, delta);
}

void bias_apply(NeuronState &state, bool fired, const NeuronConfig &cfg)
{
    state.bias = q2ps_apply(state.bias,
            fired ? LearnEvent::Kind::kLtp : LearnEvent::Kind::kLtd, cfg);
}

void apply_event(NeuronState &state, const LearnEvent &ev,
        const NeuronConfig &cfg)
{
    if (ev.axon == LearnEvent::kBiasAxon)
    {
        state.bias = q2ps_apply(state.bias, ev.kind, cfg);
    }
    else
    {
        auto &w = state.weights[std::size_t(ev.axon)];
        w = q2ps_apply(w, ev.kind, cfg);
    }
}

} // namespace spikemesh
