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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pufecc {

/// One bit per entry, values 0 or 1; index 0 is bit position 0.
using Bits = std::vector<std::uint8_t>;

enum class DecodeStatus { Ok, Uncorrectable };

std::string_view to_string(DecodeStatus s) noexcept;

Bits xor_bits(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Packs bits LSB-first into bytes (bit i lands in byte i/8, bit i%8).
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);
/// Inverse of pack_bits; `nbits` may be smaller than 8 * bytes.size().
Bits unpack_bits(std::span<const std::uint8_t> bytes, std::size_t nbits);

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Accepts an optional 0x prefix; throws Error(ParseError) on bad input.
std::vector<std::uint8_t> from_hex(std::string_view hex);

/// Bit vector as packed LSB-first hex.
std::string bits_to_hex(std::span<const std::uint8_t> bits);
/// Throws Error(LengthMismatch) if the hex has the wrong byte count or stray high bits.
Bits bits_from_hex(std::string_view hex, std::size_t nbits);

}  // namespace pufecc
