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
#include <span>
#include <vector>

#include "pufecc/common.hpp"
#include "pufecc/gf.hpp"
#include "pufecc/timing.hpp"

// Binary BCH codec modelled as the three-stage hardware pipeline
// syndrome -> Berlekamp-Massey -> Chien search, plus the XOR correction.
// Every stage always runs, so the cycle count is a configuration constant.
namespace pufecc::bch {

struct BchConfig {
    std::size_t n = 12;
    std::size_t k = 4;
    unsigned t = 2;
    gf::GFContext gf{4, gf::kDefaultPoly4};
    /// Generator over GF(2), lowest degree first, degree n - k.
    Bits generator;
    BmaMode bma_mode = BmaMode::Serial;
    TimingProfile timing;

    /// Builds the narrow-sense generator (lcm of the minimal polynomials of
    /// alpha^1..alpha^2t) and shortens the primitive code to length n.
    /// Throws Error(InvalidCode) when (n, k, t) is inconsistent with it or
    /// violates the Hamming bound.
    static BchConfig make(std::size_t n, std::size_t k, unsigned t, unsigned m,
                          std::uint32_t reduction_poly, BmaMode mode, TimingProfile timing);

    /// Shortened BCH(15,7) -> (12,4), t = 2 over GF(16), with the preset that
    /// matches `mode`.
    static BchConfig defaults(BmaMode mode);
};

struct BmaResult {
    gf::GFPoly sigma;
    unsigned iterations = 0;
    /// LFSR length L; above t when the syndromes are not correctable.
    unsigned length = 0;
};

struct ChienResult {
    /// Error positions j < n, ascending.
    std::vector<std::size_t> positions;
    /// Roots found over the whole multiplicative group, including any that
    /// map into the shortened (always-zero) part of the code.
    std::size_t roots = 0;
    std::size_t evaluations = 0;
};

struct DecodeResult {
    Bits corrected;
    std::vector<std::size_t> error_positions;
    DecodeStatus status = DecodeStatus::Ok;
    Cycles cycles = 0;
    unsigned bma_iterations = 0;
    std::size_t chien_evaluations = 0;
};

/// Systematic: parity bits in positions [0, n-k), message in [n-k, n).
Bits encode(std::span<const std::uint8_t> message, const BchConfig& cfg);
/// Message bits of a (corrected) codeword.
Bits extract_message(std::span<const std::uint8_t> codeword, const BchConfig& cfg);

/// S_i = r(alpha^i) for i = 1..2t.
std::vector<gf::Element> syndromes(std::span<const std::uint8_t> received, const BchConfig& cfg);

/// Error-locator polynomial. The iteration count is 2t (parallel discrepancy
/// over all taps) or 2t^2 (serial, one tap per iteration), never data dependent.
BmaResult key_equation_bma(std::span<const gf::Element> syndromes, const BchConfig& cfg);

/// Positions j with sigma(alpha^-j) == 0; scans all 2^m - 1 nonzero elements.
ChienResult chien_search(const gf::GFPoly& sigma, const BchConfig& cfg);

Cycles decode_cycles(const BchConfig& cfg, unsigned bma_iterations);

DecodeResult decode(std::span<const std::uint8_t> received, const BchConfig& cfg);

}  // namespace pufecc::bch
