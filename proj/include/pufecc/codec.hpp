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

#include <span>
#include <string>
#include <variant>

#include "pufecc/bch.hpp"
#include "pufecc/rs.hpp"

namespace pufecc {

/// Outcome of a decode seen through the bit-level codec interface.
struct CodecDecode {
    Bits corrected;
    DecodeStatus status = DecodeStatus::Ok;
    Cycles cycles = 0;
    std::size_t error_count = 0;
};

/// Either codec behind one bit-oriented surface, as the fuzzy extractor and
/// the attack see it. Codewords are `width_bits()` long; RS symbols are laid
/// out LSB first, symbol 0 first.
class Codec {
public:
    explicit Codec(bch::BchConfig cfg) : impl_(std::move(cfg)) {}
    explicit Codec(rs::RsConfig cfg) : impl_(std::move(cfg)) {}

    CodeFamily family() const noexcept {
        return std::holds_alternative<bch::BchConfig>(impl_) ? CodeFamily::Bch : CodeFamily::Rs;
    }
    /// Configuration identifier, e.g. "bch(12,4,2)" or "rs(8,4,2)".
    std::string id() const;
    const TimingProfile& timing() const noexcept;

    std::size_t length() const noexcept;
    std::size_t dimension() const noexcept;
    unsigned t() const noexcept;
    unsigned symbol_bits() const noexcept;
    std::size_t width_bits() const noexcept { return length() * symbol_bits(); }
    std::size_t message_bits() const noexcept { return dimension() * symbol_bits(); }

    Bits encode(std::span<const std::uint8_t> message) const;
    Bits extract_message(std::span<const std::uint8_t> codeword) const;
    CodecDecode decode(std::span<const std::uint8_t> received) const;

    const bch::BchConfig* bch() const noexcept { return std::get_if<bch::BchConfig>(&impl_); }
    const rs::RsConfig* rs() const noexcept { return std::get_if<rs::RsConfig>(&impl_); }

private:
    std::variant<bch::BchConfig, rs::RsConfig> impl_;
};

}  // namespace pufecc
