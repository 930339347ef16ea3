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

#include "pufecc/common.hpp"

#include <cctype>

#include "pufecc/error.hpp"

namespace pufecc {

std::string_view to_string(DecodeStatus s) noexcept {
    return s == DecodeStatus::Ok ? "ok" : "uncorrectable";
}

Bits xor_bits(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch, "xor of bit vectors with different lengths");
    }
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] ^ b[i]) & 1);
    return out;
}

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch, "distance of bit vectors with different lengths");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] ^ b[i]) & 1;
    return d;
}

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] & 1) out[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    }
    return out;
}

Bits unpack_bits(std::span<const std::uint8_t> bytes, std::size_t nbits) {
    Bits out(nbits, 0);
    for (std::size_t i = 0; i < nbits && i / 8 < bytes.size(); ++i) {
        out[i] = (bytes[i / 8] >> (i % 8)) & 1;
    }
    return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(kDigits[b >> 4]);
        s.push_back(kDigits[b & 0xF]);
    }
    return s;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.size() % 2 != 0) throw Error(ErrorCode::ParseError, "hex string has odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = nibble(hex[2 * i]);
        const int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw Error(ErrorCode::ParseError, "invalid hex digit");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::string bits_to_hex(std::span<const std::uint8_t> bits) { return to_hex(pack_bits(bits)); }

Bits bits_from_hex(std::string_view hex, std::size_t nbits) {
    const auto bytes = from_hex(hex);
    if (bytes.size() != (nbits + 7) / 8) {
        throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string((nbits + 7) / 8) +
                                                   " hex bytes for " + std::to_string(nbits) + " bits");
    }
    if (nbits % 8 != 0 && (bytes.back() >> (nbits % 8)) != 0) {
        throw Error(ErrorCode::LengthMismatch, "hex value has bits set beyond width " + std::to_string(nbits));
    }
    return unpack_bits(bytes, nbits);
}

}  // namespace pufecc
