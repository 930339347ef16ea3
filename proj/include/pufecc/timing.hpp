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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pufecc {

using Cycles = std::uint64_t;

enum class CodeFamily { Bch, Rs };

enum class TimingMode {
    /// Stages finish as soon as their work is done; the key solver leaks.
    SpeedOptimized,
    /// Every stage padded by registers to its worst-case latency.
    WorstCasePipelined,
};

enum class BmaMode { Serial, Parallel };

std::string_view to_string(CodeFamily f) noexcept;
std::string_view to_string(TimingMode m) noexcept;
std::string_view to_string(BmaMode m) noexcept;
std::optional<CodeFamily> parse_code_family(std::string_view s) noexcept;
std::optional<TimingMode> parse_timing_mode(std::string_view s) noexcept;
std::optional<BmaMode> parse_bma_mode(std::string_view s) noexcept;

/// Per-stage latency constants of a behavioural decoder model.
///
/// BCH: syndrome + bma_iterations * bma_cycles_per_iteration + chien + correction.
/// RS:  syndrome + [ea_fixed + ea_iterations * ea_cycles_per_iteration + chien]
///      + forney + output, where the bracket is skipped on an all-zero syndrome
///      unless the profile is worst-case pipelined.
struct TimingProfile {
    std::string name;
    CodeFamily family = CodeFamily::Bch;
    TimingMode mode = TimingMode::SpeedOptimized;
    /// BCH profiles are calibrated against one BMA architecture.
    std::optional<BmaMode> bma_mode;

    Cycles syndrome_cycles = 0;
    Cycles chien_cycles = 0;

    Cycles bma_cycles_per_iteration = 0;
    Cycles correction_cycles = 0;

    Cycles ea_fixed_cycles = 0;
    Cycles ea_cycles_per_iteration = 0;
    Cycles forney_cycles = 0;
    Cycles output_cycles = 0;

    bool operator==(const TimingProfile&) const = default;
};

inline constexpr std::string_view kProfileBchSerial = "paper-bch-serial";
inline constexpr std::string_view kProfileBchParallel = "paper-bch-parallel";
inline constexpr std::string_view kProfileRs = "paper-rs";
inline constexpr std::string_view kProfileRsWorstCase = "paper-rs-worstcase";
inline constexpr int kProfilesVersion = 1;

/// The shipped presets; data/timing_profiles.ini carries the same values.
const std::vector<TimingProfile>& builtin_profiles();

/// Looks a profile up by name; throws Error(ConfigError) when absent.
const TimingProfile& find_profile(const std::vector<TimingProfile>& profiles, std::string_view name);
const TimingProfile& builtin_profile(std::string_view name);

}  // namespace pufecc
