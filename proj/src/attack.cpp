/*
 * Copyright 2026 The pufecc Authors
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

#include "pufecc/attack.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pufecc/error.hpp"

namespace pufecc::attack {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::BitIsF: return "bit_is_f";
        case Verdict::BitIsNotF: return "bit_is_not_f";
        case Verdict::Undecidable: return "undecidable";
    }
    return "undecidable";
}

std::string_view to_string(Leakage l) noexcept { return l == Leakage::Leaky ? "leaky" : "constant"; }

namespace {

class Observer {
public:
    explicit Observer(const AttackOptions& o) : jitter_(o.jitter), rng_(o.jitter_seed) {}

    Cycles operator()(Cycles cycles) {
        if (jitter_ == 0) return cycles;
        std::uniform_int_distribution<long long> d(-static_cast<long long>(jitter_),
                                                   static_cast<long long>(jitter_));
        const long long v = static_cast<long long>(cycles) + d(rng_);
        return static_cast<Cycles>(std::max(v, 0LL));
    }

private:
    Cycles jitter_;
    std::mt19937_64 rng_;
};

Cycles reconstruct_cycles(device::PufDevice& dev, const fe::HelperData& helper, const Codec& codec,
                          std::size_t key_bytes = fe::kDefaultKeyBytes) {
    return fe::reconstruct(dev.measure(), helper, codec, key_bytes).cycles;
}

}  // namespace

Leakage calibrate(device::PufDevice& dev, const fe::HelperData& helper, const Codec& codec,
                  const CalibrationOptions& options) {
    if (options.campaign_vulnerable.value_or(false)) return Leakage::Leaky;

    const Cycles reference = reconstruct_cycles(dev, helper, codec);
    const std::size_t width = dev.width();
    const std::size_t probes = std::clamp<std::size_t>(options.probe_positions, 1, width);
    for (std::size_t p = 0; p < probes; ++p) {
        const std::size_t pos = p * width / probes;
        for (std::uint8_t f : {std::uint8_t{0}, std::uint8_t{1}}) {
            dev.inject_fault({pos, f});
            if (reconstruct_cycles(dev, helper, codec) != reference) return Leakage::Leaky;
        }
    }
    return Leakage::Constant;
}

AttackTrace run(device::PufDevice& dev, const fe::HelperData& helper, const Codec& codec, Leakage calibration,
                const AttackOptions& options) {
    AttackTrace trace;
    trace.codec_id = codec.id();
    trace.profile = codec.timing().name;
    trace.polarity = options.polarity & 1;
    trace.calibration = calibration;

    Observer observe_cycles(options);
    const std::size_t injections_before = dev.injections();

    // Step 1: clean reference latency.
    trace.reference_cycles = observe_cycles(reconstruct_cycles(dev, helper, codec, options.key_bytes));
    trace.reconstructions = 1;

    // Steps 2-4: fault each bit in turn and compare latencies.
    const std::uint8_t f = trace.polarity;
    trace.per_bit.reserve(dev.width());
    for (std::size_t m = 0; m < dev.width(); ++m) {
        dev.inject_fault({m, f});
        const Cycles t_m = observe_cycles(reconstruct_cycles(dev, helper, codec, options.key_bytes));
        ++trace.reconstructions;

        // Both observations carry up to +-jitter, so equal latencies may differ by 2*jitter.
        const Cycles diff = t_m > trace.reference_cycles ? t_m - trace.reference_cycles : trace.reference_cycles - t_m;
        Verdict v = Verdict::Undecidable;
        if (calibration == Leakage::Leaky) v = diff <= 2 * options.jitter ? Verdict::BitIsF : Verdict::BitIsNotF;
        trace.per_bit.push_back({m, f, t_m, v});
    }
    trace.injections_used = dev.injections() - injections_before;

    const bool decided = std::none_of(trace.per_bit.begin(), trace.per_bit.end(),
                                      [](const BitRecord& r) { return r.verdict == Verdict::Undecidable; });
    if (decided) {
        Bits w(trace.per_bit.size());
        for (const auto& r : trace.per_bit) {
            w[r.position] = r.verdict == Verdict::BitIsF ? r.injected : static_cast<std::uint8_t>(r.injected ^ 1);
        }
        trace.recovered_key_hex = fe::derive_key(w, fe::KeySource::Reconstructed, options.key_bytes).hex();
        trace.recovered = std::move(w);
    }
    return trace;
}

nlohmann::json to_json(const AttackTrace& trace) {
    nlohmann::json bits = nlohmann::json::array();
    for (const auto& r : trace.per_bit) {
        bits.push_back({{"position", r.position},
                        {"injected", r.injected},
                        {"measured_cycles", r.measured_cycles},
                        {"verdict", to_string(r.verdict)}});
    }
    nlohmann::json j = {{"codec", trace.codec_id},
                        {"profile", trace.profile},
                        {"polarity", trace.polarity},
                        {"calibration", to_string(trace.calibration)},
                        {"reference_cycles", trace.reference_cycles},
                        {"injections_used", trace.injections_used},
                        {"reconstructions", trace.reconstructions},
                        {"per_bit", std::move(bits)}};
    j["recovered"] = trace.recovered ? nlohmann::json(bits_to_hex(*trace.recovered)) : nlohmann::json(nullptr);
    j["recovered_key"] = trace.recovered_key_hex ? nlohmann::json(*trace.recovered_key_hex) : nlohmann::json(nullptr);
    return j;
}

std::string render_table(const AttackTrace& trace) {
    std::ostringstream os;
    os << "codec " << trace.codec_id << " profile " << trace.profile << " polarity f=" << int(trace.polarity)
       << " calibration " << to_string(trace.calibration) << '\n';
    os << "reference T = " << trace.reference_cycles << " cycles\n";
    os << "  bit  f  T(m)  verdict\n";
    for (const auto& r : trace.per_bit) {
        os << "  " << std::string(r.position < 10 ? 2 : (r.position < 100 ? 1 : 0), ' ') << r.position << "  "
           << int(r.injected) << "  " << r.measured_cycles << "    " << to_string(r.verdict) << '\n';
    }
    os << "injections " << trace.injections_used << ", reconstructions " << trace.reconstructions << '\n';
    if (trace.recovered) {
        os << "recovered W = " << bits_to_hex(*trace.recovered) << '\n';
        os << "recovered key = " << *trace.recovered_key_hex << '\n';
    } else {
        os << "undecidable: constant-time target\n";
    }
    return os.str();
}

}  // namespace pufecc::attack
