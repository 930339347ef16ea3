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
#include <map>
#include <span>
#include <vector>

#include "pufecc/common.hpp"
#include "pufecc/gf.hpp"
#include "pufecc/timing.hpp"

/**
 * Reed-Solomon codec modelled as syndrome -> extended Euclid -> Chien + Forney.
 *
 * Unlike the BCH pipeline the key-equation stage here stops as soon as the
 * remainder degree drops below t, and a clean word skips it altogether. Under
 * a speed-optimized profile the decode latency therefore reveals how many
 * symbols were wrong; a worst-case-pipelined profile pads every stage to its
 * maximum and removes that dependence.
 */
namespace pufecc::rs {

using Symbols = std::vector<gf::Element>;

struct RsConfig {
    std::size_t n = 8;
    std::size_t k = 4;
    unsigned t = 2;
    unsigned symbol_bits = 8;
    gf::GFContext gf{8, gf::kDefaultPoly8};
    /// prod_{i=1..2t} (x - alpha^i)
    gf::GFPoly generator;
    TimingProfile timing;

    /// Throws Error(InvalidCode) unless n - k == 2t and n <= 2^symbol_bits - 1.
    static RsConfig make(std::size_t n, std::size_t k, unsigned t, unsigned symbol_bits,
                         std::uint32_t reduction_poly, TimingProfile timing);
    /// RS(8,4), t = 2, 8-bit symbols under the named preset.
    static RsConfig defaults(TimingMode mode = TimingMode::SpeedOptimized);
};

struct EuclidResult {
    gf::GFPoly sigma;  // normalized so sigma(0) == 1
    gf::GFPoly omega;
    /// Quotient-degree steps; one per located error symbol when correctable.
    unsigned iterations = 0;
    /// Polynomial divisions (loop passes) actually performed.
    unsigned divisions = 0;
};

struct ChienResult {
    std::vector<std::size_t> positions;
    std::size_t roots = 0;
    std::size_t evaluations = 0;
};

struct RsDecodeResult {
    Symbols corrected;
    std::vector<std::size_t> error_positions;
    std::map<std::size_t, gf::Element> error_values;
    DecodeStatus status = DecodeStatus::Ok;
    Cycles cycles = 0;
    unsigned ea_iterations = 0;
    unsigned ea_divisions = 0;
    std::size_t chien_evaluations = 0;
    std::vector<gf::Element> syndromes;
    gf::GFPoly sigma;
    gf::GFPoly omega;
};

/// Systematic: parity in positions [0, 2t), message symbols in [2t, n).
Symbols encode(std::span<const gf::Element> message, const RsConfig& cfg);
Symbols extract_message(std::span<const gf::Element> codeword, const RsConfig& cfg);

/// S_i = r(alpha^i), i = 1..2t.
std::vector<gf::Element> syndromes(std::span<const gf::Element> received, const RsConfig& cfg);

/// Solves omega = S * sigma mod x^2t by the remainder sequence started from
/// R_{-1} = x^2t, R_0 = S(x), iterating while deg R_i >= t. An all-zero
/// syndrome short-circuits to sigma = 1, omega = 0, zero iterations.
EuclidResult euclid_key_solver(std::span<const gf::Element> syndromes, const RsConfig& cfg);

/// Positions j < n with sigma(alpha^-j) == 0; always scans the whole group.
ChienResult chien_search(const gf::GFPoly& sigma, const RsConfig& cfg);

/// e_j = omega(X_j^-1) / sigma'(X_j^-1) (the sign vanishes in characteristic 2).
/// Throws Error(ForneyDivideByZero) if the derivative vanishes at a root.
std::map<std::size_t, gf::Element> forney(const gf::GFPoly& sigma, const gf::GFPoly& omega,
                                          std::span<const std::size_t> positions, const RsConfig& cfg);

/// Latency of a decode given whether the syndrome was zero and the EA step count.
Cycles decode_cycles(const RsConfig& cfg, bool zero_syndrome, unsigned ea_iterations);

RsDecodeResult decode(std::span<const gf::Element> received, const RsConfig& cfg);

/// Codeword symbols as bits: symbol j occupies bits [j*s, j*s+s), LSB first.
Bits symbols_to_bits(std::span<const gf::Element> symbols, unsigned symbol_bits);
Symbols bits_to_symbols(std::span<const std::uint8_t> bits, unsigned symbol_bits);

}  // namespace pufecc::rs
