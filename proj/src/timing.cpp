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

#include "pufecc/timing.hpp"

#include <string>

#include "pufecc/error.hpp"

namespace pufecc {

std::string_view to_string(CodeFamily f) noexcept {
    return f == CodeFamily::Bch ? "bch" : "rs";
}

std::string_view to_string(TimingMode m) noexcept {
    return m == TimingMode::SpeedOptimized ? "speed-optimized" : "worst-case-pipelined";
}

std::string_view to_string(BmaMode m) noexcept {
    return m == BmaMode::Serial ? "serial" : "parallel";
}

std::optional<CodeFamily> parse_code_family(std::string_view s) noexcept {
    if (s == "bch") return CodeFamily::Bch;
    if (s == "rs") return CodeFamily::Rs;
    return std::nullopt;
}

std::optional<TimingMode> parse_timing_mode(std::string_view s) noexcept {
    if (s == "speed-optimized") return TimingMode::SpeedOptimized;
    if (s == "worst-case-pipelined") return TimingMode::WorstCasePipelined;
    return std::nullopt;
}

std::optional<BmaMode> parse_bma_mode(std::string_view s) noexcept {
    if (s == "serial") return BmaMode::Serial;
    if (s == "parallel") return BmaMode::Parallel;
    return std::nullopt;
}

namespace {

std::vector<TimingProfile> make_builtin() {
    // BCH(12,4): 12 syndrome cycles (one per received bit), one cycle per BMA
    // iteration, a final XOR cycle. Chien latency absorbs the remainder so the
    // totals land on 28 (2t^2 = 8 iterations) and 21 (2t = 4 iterations).
    TimingProfile bch_serial;
    bch_serial.name = std::string(kProfileBchSerial);
    bch_serial.family = CodeFamily::Bch;
    bch_serial.bma_mode = BmaMode::Serial;
    bch_serial.syndrome_cycles = 12;
    bch_serial.bma_cycles_per_iteration = 1;
    bch_serial.chien_cycles = 7;
    bch_serial.correction_cycles = 1;

    TimingProfile bch_parallel = bch_serial;
    bch_parallel.name = std::string(kProfileBchParallel);
    bch_parallel.bma_mode = BmaMode::Parallel;
    bch_parallel.chien_cycles = 4;

    // RS(8,4): 38 for a clean word, +28 for the first located symbol
    // (EA setup, one quotient step, Chien), +6 per further EA step.
    TimingProfile rs;
    rs.name = std::string(kProfileRs);
    rs.family = CodeFamily::Rs;
    rs.mode = TimingMode::SpeedOptimized;
    rs.syndrome_cycles = 32;
    rs.ea_fixed_cycles = 14;
    rs.ea_cycles_per_iteration = 6;
    rs.chien_cycles = 8;
    rs.forney_cycles = 0;
    rs.output_cycles = 6;

    TimingProfile rs_worst = rs;
    rs_worst.name = std::string(kProfileRsWorstCase);
    rs_worst.mode = TimingMode::WorstCasePipelined;

    return {bch_serial, bch_parallel, rs, rs_worst};
}

}  // namespace

const std::vector<TimingProfile>& builtin_profiles() {
    static const std::vector<TimingProfile> profiles = make_builtin();
    return profiles;
}

const TimingProfile& find_profile(const std::vector<TimingProfile>& profiles, std::string_view name) {
    for (const auto& p : profiles) {
        if (p.name == name) return p;
    }
    throw Error(ErrorCode::ConfigError, "unknown timing profile '" + std::string(name) + "'");
}

const TimingProfile& builtin_profile(std::string_view name) {
    return find_profile(builtin_profiles(), name);
}

}  // namespace pufecc
