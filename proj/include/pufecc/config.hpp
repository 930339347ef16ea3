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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pufecc/codec.hpp"
#include "pufecc/timing.hpp"

// INI-style experiment configuration and the timing-profile data file.
namespace pufecc::config {

struct CodecSection {
    CodeFamily type = CodeFamily::Bch;
    std::size_t n = 12;
    std::size_t k = 4;
    unsigned t = 2;
    /// Symbol width for RS, field width for BCH.
    unsigned m = 4;
    std::uint32_t reduction_poly = 0x13;
    BmaMode bma_mode = BmaMode::Serial;
    std::string timing_profile = "paper-bch-serial";
};

struct DeviceSection {
    /// Response W as packed hex; drawn from `seed` when absent.
    std::optional<std::string> w_hex;
    std::uint64_t seed = 1;
    double noise = 0.0;
    std::uint64_t noise_seed = 0;
};

struct PathsSection {
    std::string helper = "helper.txt";
    std::string report;
};

struct ExperimentConfig {
    CodecSection codec;
    DeviceSection device;
    PathsSection paths;
};

/// Named codec presets: bch-serial, bch-parallel, bch (= bch-serial), rs,
/// rs-worstcase. Throws Error(ConfigError) for anything else.
CodecSection codec_preset(std::string_view name);

/// Parses the profile data file. Every section other than [meta] is a profile.
std::vector<TimingProfile> parse_profiles(std::string_view text);
std::vector<TimingProfile> load_profiles(const std::filesystem::path& path);

/// Missing keys fall back to the preset of the codec type.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Validates the section against the code invariants and resolves the profile.
Codec make_codec(const CodecSection& section, const std::vector<TimingProfile>& profiles = builtin_profiles());

}  // namespace pufecc::config
