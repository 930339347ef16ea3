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

#include "pufecc/codec.hpp"

#include "pufecc/error.hpp"

namespace pufecc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_width(std::span<const std::uint8_t> bits, std::size_t width, const char* what) {
    if (bits.size() != width) {
        throw Error(ErrorCode::LengthMismatch, std::string(what) + " must be " + std::to_string(width) +
                                                   " bits, got " + std::to_string(bits.size()));
    }
}

}  // namespace

std::string Codec::id() const {
    const auto tag = family() == CodeFamily::Bch ? "bch(" : "rs(";
    return tag + std::to_string(length()) + "," + std::to_string(dimension()) + "," + std::to_string(t()) + ")";
}

const TimingProfile& Codec::timing() const noexcept {
    return std::visit([](const auto& c) -> const TimingProfile& { return c.timing; }, impl_);
}

std::size_t Codec::length() const noexcept {
    return std::visit([](const auto& c) { return c.n; }, impl_);
}

std::size_t Codec::dimension() const noexcept {
    return std::visit([](const auto& c) { return c.k; }, impl_);
}

unsigned Codec::t() const noexcept {
    return std::visit([](const auto& c) { return c.t; }, impl_);
}

unsigned Codec::symbol_bits() const noexcept {
    return std::visit(overloaded{[](const bch::BchConfig&) { return 1u; },
                                 [](const rs::RsConfig& c) { return c.symbol_bits; }},
                      impl_);
}

Bits Codec::encode(std::span<const std::uint8_t> message) const {
    require_width(message, message_bits(), "message");
    return std::visit(overloaded{[&](const bch::BchConfig& c) { return bch::encode(message, c); },
                                 [&](const rs::RsConfig& c) {
                                     const auto msg = rs::bits_to_symbols(message, c.symbol_bits);
                                     return rs::symbols_to_bits(rs::encode(msg, c), c.symbol_bits);
                                 }},
                      impl_);
}

Bits Codec::extract_message(std::span<const std::uint8_t> codeword) const {
    require_width(codeword, width_bits(), "codeword");
    return std::visit(overloaded{[&](const bch::BchConfig& c) { return bch::extract_message(codeword, c); },
                                 [&](const rs::RsConfig& c) {
                                     const auto sym = rs::bits_to_symbols(codeword, c.symbol_bits);
                                     return rs::symbols_to_bits(rs::extract_message(sym, c), c.symbol_bits);
                                 }},
                      impl_);
}

CodecDecode Codec::decode(std::span<const std::uint8_t> received) const {
    require_width(received, width_bits(), "received word");
    return std::visit(overloaded{[&](const bch::BchConfig& c) {
                                     auto r = bch::decode(received, c);
                                     return CodecDecode{std::move(r.corrected), r.status, r.cycles,
                                                        r.error_positions.size()};
                                 },
                                 [&](const rs::RsConfig& c) {
                                     const auto sym = rs::bits_to_symbols(received, c.symbol_bits);
                                     auto r = rs::decode(sym, c);
                                     return CodecDecode{rs::symbols_to_bits(r.corrected, c.symbol_bits),
                                                        r.status, r.cycles, r.error_positions.size()};
                                 }},
                      impl_);
}

}  // namespace pufecc
