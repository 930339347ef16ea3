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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pufecc/codec.hpp"

// Code-offset fuzzy extractor: helper = W xor E(S0), key = SHA-256(W).
namespace pufecc::fe {

inline constexpr std::size_t kDefaultKeyBytes = 32;
inline constexpr std::string_view kHelperMagic = "pufecc-helper-v1";

struct HelperData {
    Bits mask;
    std::string codec_id;

    bool operator==(const HelperData&) const = default;
};

enum class KeySource { Generated, Reconstructed };

struct FEKey {
    std::vector<std::uint8_t> key_bytes;
    KeySource source = KeySource::Generated;

    std::string hex() const;
    /// Digest equality, ignoring where the key came from.
    bool matches(const FEKey& other) const noexcept { return key_bytes == other.key_bytes; }
};

struct Enrollment {
    HelperData helper;
    FEKey key;
};

struct Reconstruction {
    FEKey key;
    /// Decoder latency, passed through unmodified.
    Cycles cycles = 0;
    DecodeStatus status = DecodeStatus::Ok;
    std::size_t corrected_errors = 0;
};

/// SHA-256 over W packed LSB-first, truncated to `key_bytes` (1..32).
FEKey derive_key(std::span<const std::uint8_t> w, KeySource source, std::size_t key_bytes = kDefaultKeyBytes);

/// Uniform secret message S0 drawn from a seeded generator.
Bits random_secret(const Codec& codec, std::uint64_t seed);

/// Enrollment. Throws Error(LengthMismatch) if |w| != codec width or the
/// secret is not a full message.
Enrollment generate(std::span<const std::uint8_t> w, std::span<const std::uint8_t> secret,
                    const Codec& codec, std::size_t key_bytes = kDefaultKeyBytes);

/// Reproduction: decode(w' xor mask), then W = mask xor E(corrected secret).
/// Throws Error(ReconstructFailed) when the decoder gives up; no key escapes.
Reconstruction reconstruct(std::span<const std::uint8_t> w_prime, const HelperData& helper,
                           const Codec& codec, std::size_t key_bytes = kDefaultKeyBytes);

/// Two-line text form: "<magic> <codec id>" then the mask in hex.
std::string format_helper(const HelperData& helper);
HelperData parse_helper(std::string_view text, std::size_t width_bits);
void save_helper(const std::filesystem::path& path, const HelperData& helper);
HelperData load_helper(const std::filesystem::path& path, std::size_t width_bits);

}  // namespace pufecc::fe
