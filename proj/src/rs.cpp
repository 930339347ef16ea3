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

#include "pufecc/rs.hpp"

#include <algorithm>
#include <string>

#include "pufecc/error.hpp"

namespace pufecc::rs {

RsConfig RsConfig::make(std::size_t n, std::size_t k, unsigned t, unsigned symbol_bits,
                        std::uint32_t reduction_poly, TimingProfile timing) {
    RsConfig cfg;
    cfg.gf = gf::GFContext(symbol_bits, reduction_poly);
    cfg.n = n;
    cfg.k = k;
    cfg.t = t;
    cfg.symbol_bits = symbol_bits;
    cfg.timing = std::move(timing);
    if (t == 0 || k == 0 || n <= k || n - k != 2 * static_cast<std::size_t>(t)) {
        throw Error(ErrorCode::InvalidCode, "RS requires n - k == 2t with t, k >= 1");
    }
    if (n > cfg.gf.order()) throw Error(ErrorCode::InvalidCode, "RS length exceeds 2^s - 1");

    cfg.generator = gf::GFPoly::constant(1);
    for (unsigned i = 1; i <= 2 * t; ++i) {
        cfg.generator = gf::poly_mul(cfg.gf, cfg.generator, gf::GFPoly{cfg.gf.alpha_pow(i), 1});
    }
    return cfg;
}

RsConfig RsConfig::defaults(TimingMode mode) {
    const auto& profile =
        builtin_profile(mode == TimingMode::SpeedOptimized ? kProfileRs : kProfileRsWorstCase);
    return make(8, 4, 2, 8, gf::kDefaultPoly8, profile);
}

Symbols encode(std::span<const gf::Element> message, const RsConfig& cfg) {
    if (message.size() != cfg.k) {
        throw Error(ErrorCode::LengthMismatch, "RS message must have " + std::to_string(cfg.k) + " symbols");
    }
    const std::size_t parity = cfg.n - cfg.k;
    std::vector<gf::Element> shifted(cfg.n, 0);
    for (std::size_t i = 0; i < cfg.k; ++i) {
        if (message[i] >= cfg.gf.size()) throw Error(ErrorCode::LengthMismatch, "symbol out of field range");
        shifted[parity + i] = message[i];
    }
    const auto rem = gf::poly_mod(cfg.gf, gf::GFPoly(shifted), cfg.generator);
    for (std::size_t i = 0; i < parity; ++i) shifted[i] = rem[i];
    return shifted;
}

Symbols extract_message(std::span<const gf::Element> codeword, const RsConfig& cfg) {
    if (codeword.size() != cfg.n) {
        throw Error(ErrorCode::LengthMismatch, "RS codeword must have " + std::to_string(cfg.n) + " symbols");
    }
    return Symbols(codeword.begin() + static_cast<std::ptrdiff_t>(cfg.n - cfg.k), codeword.end());
}

std::vector<gf::Element> syndromes(std::span<const gf::Element> received, const RsConfig& cfg) {
    if (received.size() != cfg.n) {
        throw Error(ErrorCode::LengthMismatch, "RS word must have " + std::to_string(cfg.n) + " symbols");
    }
    std::vector<gf::Element> s(2 * cfg.t, 0);
    for (unsigned i = 1; i <= 2 * cfg.t; ++i) {
        // Horner over r(x) at alpha^i.
        const gf::Element x = cfg.gf.alpha_pow(i);
        gf::Element acc = 0;
        for (std::size_t j = cfg.n; j-- > 0;) acc = cfg.gf.mul(acc, x) ^ received[j];
        s[i - 1] = acc;
    }
    return s;
}

EuclidResult euclid_key_solver(std::span<const gf::Element> syndromes, const RsConfig& cfg) {
    const auto& f = cfg.gf;
    const int t = static_cast<int>(cfg.t);
    EuclidResult out;

    gf::GFPoly s_poly(std::vector<gf::Element>(syndromes.begin(), syndromes.end()));
    if (s_poly.is_zero()) {
        out.sigma = gf::GFPoly::constant(1);
        return out;
    }

    gf::GFPoly r_prev = gf::GFPoly::monomial(1, 2 * t);
    gf::GFPoly r_cur = s_poly;
    gf::GFPoly u_prev;  // L_0 = 0
    gf::GFPoly u_cur = gf::GFPoly::constant(1);

    // Each division lowers deg R by at least one, so 2t passes always suffice.
    while (r_cur.degree() >= t && out.divisions < 2 * cfg.t) {
        auto [q, rem] = gf::poly_divmod(f, r_prev, r_cur);
        gf::GFPoly u_next = gf::poly_add(u_prev, gf::poly_mul(f, q, u_cur));
        out.iterations += static_cast<unsigned>(q.degree());
        ++out.divisions;
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
    }

    const gf::Element lambda = u_cur[0];
    if (lambda == 0) {
        // Degenerate locator; leave unnormalized and let the caller reject it.
        out.sigma = std::move(u_cur);
        out.omega = std::move(r_cur);
        return out;
    }
    const gf::Element scale = f.inv(lambda);
    out.sigma = gf::poly_scale(f, u_cur, scale);
    out.omega = gf::poly_scale(f, r_cur, scale);
    return out;
}

ChienResult chien_search(const gf::GFPoly& sigma, const RsConfig& cfg) {
    ChienResult out;
    const std::uint32_t full = cfg.gf.order();
    for (std::uint32_t i = 0; i < full; ++i) {
        ++out.evaluations;
        if (gf::poly_eval(cfg.gf, sigma, cfg.gf.alpha_pow(i)) != 0) continue;
        ++out.roots;
        const std::size_t pos = (full - i) % full;
        if (pos < cfg.n) out.positions.push_back(pos);
    }
    std::sort(out.positions.begin(), out.positions.end());
    return out;
}

std::map<std::size_t, gf::Element> forney(const gf::GFPoly& sigma, const gf::GFPoly& omega,
                                          std::span<const std::size_t> positions, const RsConfig& cfg) {
    const auto& f = cfg.gf;
    const gf::GFPoly deriv = gf::poly_formal_derivative(sigma);
    std::map<std::size_t, gf::Element> values;
    for (auto pos : positions) {
        const gf::Element x_inv = f.alpha_pow(-static_cast<long long>(pos));
        const gf::Element denom = gf::poly_eval(f, deriv, x_inv);
        if (denom == 0) {
            throw Error(ErrorCode::ForneyDivideByZero,
                        "locator derivative vanishes at position " + std::to_string(pos));
        }
        values[pos] = f.div(gf::poly_eval(f, omega, x_inv), denom);
    }
    return values;
}

Cycles decode_cycles(const RsConfig& cfg, bool zero_syndrome, unsigned ea_iterations) {
    const auto& p = cfg.timing;
    Cycles c = p.syndrome_cycles + p.forney_cycles + p.output_cycles;
    if (p.mode == TimingMode::WorstCasePipelined) {
        return c + p.ea_fixed_cycles + cfg.t * p.ea_cycles_per_iteration + p.chien_cycles;
    }
    if (zero_syndrome) return c;
    return c + p.ea_fixed_cycles + ea_iterations * p.ea_cycles_per_iteration + p.chien_cycles;
}

RsDecodeResult decode(std::span<const gf::Element> received, const RsConfig& cfg) {
    RsDecodeResult out;
    out.syndromes = syndromes(received, cfg);
    out.corrected.assign(received.begin(), received.end());

    const bool zero = std::all_of(out.syndromes.begin(), out.syndromes.end(),
                                  [](gf::Element s) { return s == 0; });
    if (zero) {
        out.sigma = gf::GFPoly::constant(1);
        out.cycles = decode_cycles(cfg, true, 0);
        return out;
    }

    auto ea = euclid_key_solver(out.syndromes, cfg);
    out.ea_iterations = ea.iterations;
    out.ea_divisions = ea.divisions;
    out.sigma = std::move(ea.sigma);
    out.omega = std::move(ea.omega);
    out.cycles = decode_cycles(cfg, false, ea.iterations);

    const auto chien = chien_search(out.sigma, cfg);
    out.chien_evaluations = chien.evaluations;

    const int deg = out.sigma.degree();
    const bool locator_ok = out.sigma[0] == 1 && deg >= 1 && deg <= static_cast<int>(cfg.t) &&
                            chien.roots == static_cast<std::size_t>(deg) &&
                            chien.positions.size() == static_cast<std::size_t>(deg) &&
                            out.omega.degree() < deg;
    if (!locator_ok) {
        out.status = DecodeStatus::Uncorrectable;
        return out;
    }

    std::map<std::size_t, gf::Element> values;
    try {
        values = forney(out.sigma, out.omega, chien.positions, cfg);
    } catch (const Error&) {
        out.status = DecodeStatus::Uncorrectable;
        return out;
    }
    for (const auto& [pos, v] : values) {
        if (v == 0) {
            out.status = DecodeStatus::Uncorrectable;
            return out;
        }
    }
    for (const auto& [pos, v] : values) out.corrected[pos] ^= v;
    out.error_positions = chien.positions;
    out.error_values = std::move(values);
    return out;
}

Bits symbols_to_bits(std::span<const gf::Element> symbols, unsigned symbol_bits) {
    Bits out(symbols.size() * symbol_bits);
    for (std::size_t j = 0; j < symbols.size(); ++j) {
        for (unsigned b = 0; b < symbol_bits; ++b) out[j * symbol_bits + b] = (symbols[j] >> b) & 1;
    }
    return out;
}

Symbols bits_to_symbols(std::span<const std::uint8_t> bits, unsigned symbol_bits) {
    if (symbol_bits == 0 || bits.size() % symbol_bits != 0) {
        throw Error(ErrorCode::LengthMismatch, "bit length is not a whole number of symbols");
    }
    Symbols out(bits.size() / symbol_bits, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        for (unsigned b = 0; b < symbol_bits; ++b) {
            out[j] |= static_cast<gf::Element>((bits[j * symbol_bits + b] & 1) << b);
        }
    }
    return out;
}

}  // namespace pufecc::rs
