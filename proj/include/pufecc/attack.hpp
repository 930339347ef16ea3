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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pufecc/codec.hpp"
#include "pufecc/device.hpp"
#include "pufecc/fe.hpp"

/**
 * Combined fault-injection and timing attack on a fuzzy-extractor device.
 *
 * For every response bit m the attacker forces bit m to f, runs a
 * reconstruction and compares its decode latency T(m) against the clean
 * reference T. Equal latency means the bit already held f; a different one
 * means the fault introduced an error. A calibration pass decides up front
 * whether the target leaks at all, so a constant-time decoder yields
 * "undecidable" verdicts instead of a fabricated secret.
 */
namespace pufecc::attack {

enum class Verdict { BitIsF, BitIsNotF, Undecidable };
enum class Leakage { Leaky, Constant };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Leakage l) noexcept;

struct BitRecord {
    std::size_t position = 0;
    std::uint8_t injected = 0;
    Cycles measured_cycles = 0;
    Verdict verdict = Verdict::Undecidable;
};

struct AttackTrace {
    std::string codec_id;
    std::string profile;
    std::uint8_t polarity = 1;
    Leakage calibration = Leakage::Constant;
    Cycles reference_cycles = 0;
    std::vector<BitRecord> per_bit;
    /// Present iff every verdict is decided.
    std::optional<Bits> recovered;
    /// Key derived from the recovered response.
    std::optional<std::string> recovered_key_hex;
    std::size_t injections_used = 0;
    std::size_t reconstructions = 0;
};

struct CalibrationOptions {
    /// Positions probed with both polarities, spread evenly over the response.
    std::size_t probe_positions = 4;
    /// Verdict of a timing campaign for the same codec, if one was run.
    std::optional<bool> campaign_vulnerable;
};

struct AttackOptions {
    std::uint8_t polarity = 1;
    /// Uniform +-jitter added to every observed latency (0 = exact timing). Latencies
    /// within 2*jitter of the reference count as equal, so verdicts stay sound
    /// while 4*jitter is below the leak gap.
    Cycles jitter = 0;
    std::uint64_t jitter_seed = 0;
    std::size_t key_bytes = fe::kDefaultKeyBytes;
};

/// Leaky iff a probe moves the latency away from the clean reference or the
/// campaign certificate says so.
Leakage calibrate(device::PufDevice& dev, const fe::HelperData& helper, const Codec& codec,
                  const CalibrationOptions& options = {});

/// One pass over every bit: |W| injections and |W| + 1 reconstructions.
/// A Constant calibration downgrades every verdict to Undecidable.
AttackTrace run(device::PufDevice& dev, const fe::HelperData& helper, const Codec& codec, Leakage calibration,
                const AttackOptions& options = {});

nlohmann::json to_json(const AttackTrace& trace);
/// Human-readable per-bit table with a summary line.
std::string render_table(const AttackTrace& trace);

}  // namespace pufecc::attack
