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

#include "pufecc/bch.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pufecc/error.hpp"

namespace pufecc::bch {

namespace {

double binomial(std::size_t n, std::size_t k) {
    double r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

/// Remainder of a(x) mod g(x) over GF(2).
Bits gf2_mod(Bits a, const Bits& g) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = a.size(); i-- > dg;) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j <= dg; ++j) a[i - dg + j] ^= g[j];
    }
    a.resize(std::min(a.size(), dg));
    return a;
}

}  // namespace

BchConfig BchConfig::make(std::size_t n, std::size_t k, unsigned t, unsigned m,
                          std::uint32_t reduction_poly, BmaMode mode, TimingProfile timing) {
    BchConfig cfg;
    cfg.gf = gf::GFContext(m, reduction_poly);
    cfg.n = n;
    cfg.k = k;
    cfg.t = t;
    cfg.bma_mode = mode;
    cfg.timing = std::move(timing);

    const std::uint32_t full = cfg.gf.order();
    if (t == 0) throw Error(ErrorCode::InvalidCode, "BCH requires t >= 1");
    if (n > full || k == 0 || k >= n) {
        throw Error(ErrorCode::InvalidCode, "BCH length must satisfy 0 < k < n <= 2^m - 1");
    }
    if (2 * t >= full) throw Error(ErrorCode::InvalidCode, "designed distance exceeds the field");

    // Union of the cyclotomic cosets of 1..2t gives the roots of g(x).
    std::set<std::uint32_t> exponents;
    for (std::uint32_t i = 1; i <= 2 * t; ++i) {
        std::uint32_t e = i % full;
        do {
            exponents.insert(e);
            e = (2 * e) % full;
        } while (e != i % full);
    }
    gf::GFPoly g = gf::GFPoly::constant(1);
    for (auto e : exponents) {
        g = gf::poly_mul(cfg.gf, g, gf::GFPoly{cfg.gf.alpha_pow(e), 1});
    }
    cfg.generator.resize(g.coeffs().size());
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        if (g.coeffs()[i] > 1) throw Error(ErrorCode::InvalidCode, "generator is not binary");
        cfg.generator[i] = static_cast<std::uint8_t>(g.coeffs()[i]);
    }

    const auto parity = static_cast<std::size_t>(g.degree());
    if (n - k != parity) {
        throw Error(ErrorCode::InvalidCode,
                    "n - k = " + std::to_string(n - k) + " but the t=" + std::to_string(t) +
                        " generator has degree " + std::to_string(parity));
    }

    Bits cyclic(full + 1, 0);
    cyclic.front() = 1;
    cyclic.back() = 1;
    const Bits rem = gf2_mod(cyclic, cfg.generator);
    if (std::any_of(rem.begin(), rem.end(), [](auto b) { return b != 0; })) {
        throw Error(ErrorCode::InvalidCode, "generator does not divide x^(2^m-1) - 1");
    }

    double sphere = 0;
    for (std::size_t i = 0; i <= t; ++i) sphere += binomial(n, i);
    if (sphere > static_cast<double>(std::uint64_t{1} << parity)) {
        throw Error(ErrorCode::InvalidCode, "Hamming bound violated");
    }
    return cfg;
}

BchConfig BchConfig::defaults(BmaMode mode) {
    const auto& profile =
        builtin_profile(mode == BmaMode::Serial ? kProfileBchSerial : kProfileBchParallel);
    return make(12, 4, 2, 4, gf::kDefaultPoly4, mode, profile);
}

Bits encode(std::span<const std::uint8_t> message, const BchConfig& cfg) {
    if (message.size() != cfg.k) {
        throw Error(ErrorCode::LengthMismatch,
                    "BCH message must have " + std::to_string(cfg.k) + " bits");
    }
    const std::size_t parity = cfg.n - cfg.k;
    Bits shifted(cfg.n, 0);
    for (std::size_t i = 0; i < cfg.k; ++i) shifted[parity + i] = message[i] & 1;
    const Bits rem = gf2_mod(shifted, cfg.generator);
    Bits codeword = shifted;
    for (std::size_t i = 0; i < rem.size(); ++i) codeword[i] = rem[i];
    return codeword;
}

Bits extract_message(std::span<const std::uint8_t> codeword, const BchConfig& cfg) {
    if (codeword.size() != cfg.n) {
        throw Error(ErrorCode::LengthMismatch, "BCH codeword must have " + std::to_string(cfg.n) + " bits");
    }
    return Bits(codeword.begin() + static_cast<std::ptrdiff_t>(cfg.n - cfg.k), codeword.end());
}

std::vector<gf::Element> syndromes(std::span<const std::uint8_t> received, const BchConfig& cfg) {
    if (received.size() != cfg.n) {
        throw Error(ErrorCode::LengthMismatch, "BCH word must have " + std::to_string(cfg.n) + " bits");
    }
    std::vector<gf::Element> s(2 * cfg.t, 0);
    for (unsigned i = 1; i <= 2 * cfg.t; ++i) {
        gf::Element acc = 0;
        for (std::size_t j = 0; j < cfg.n; ++j) {
            if (received[j] & 1) acc ^= cfg.gf.alpha_pow(static_cast<long long>(i) * static_cast<long long>(j));
        }
        s[i - 1] = acc;
    }
    return s;
}

BmaResult key_equation_bma(std::span<const gf::Element> syndromes, const BchConfig& cfg) {
    const unsigned t = cfg.t;
    const auto& f = cfg.gf;
    // Hardware-width locator registers: t + 1 taps.
    std::vector<gf::Element> c(t + 1, 0), b(t + 1, 0), saved;
    c[0] = b[0] = 1;
    unsigned len = 0;
    unsigned shift = 1;
    gf::Element last_d = 1;
    unsigned iterations = 0;

    for (unsigned r = 0; r < 2 * t; ++r) {
        gf::Element d = r < syndromes.size() ? syndromes[r] : 0;
        auto tap = [&](unsigned j) {
            if (j <= r) d ^= f.mul(c[j], syndromes[r - j]);
        };
        if (cfg.bma_mode == BmaMode::Serial) {
            for (unsigned j = 1; j <= t; ++j) {
                tap(j);
                ++iterations;
            }
        } else {
            for (unsigned j = 1; j <= t; ++j) tap(j);
            ++iterations;
        }

        if (d == 0) {
            ++shift;
            continue;
        }
        const gf::Element coef = f.div(d, last_d);
        saved = c;
        for (unsigned j = shift; j <= t; ++j) c[j] ^= f.mul(coef, b[j - shift]);
        if (2 * len <= r) {
            len = r + 1 - len;
            b = saved;
            last_d = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    return {gf::GFPoly(std::move(c)), iterations, len};
}

ChienResult chien_search(const gf::GFPoly& sigma, const BchConfig& cfg) {
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

Cycles decode_cycles(const BchConfig& cfg, unsigned bma_iterations) {
    const auto& p = cfg.timing;
    return p.syndrome_cycles + bma_iterations * p.bma_cycles_per_iteration + p.chien_cycles +
           p.correction_cycles;
}

DecodeResult decode(std::span<const std::uint8_t> received, const BchConfig& cfg) {
    const auto s = syndromes(received, cfg);
    const auto bma = key_equation_bma(s, cfg);
    const auto chien = chien_search(bma.sigma, cfg);

    DecodeResult out;
    out.corrected.assign(received.begin(), received.end());
    out.bma_iterations = bma.iterations;
    out.chien_evaluations = chien.evaluations;
    out.cycles = decode_cycles(cfg, bma.iterations);

    const auto deg = static_cast<std::size_t>(std::max(bma.sigma.degree(), 0));
    // A register length beyond t means taps were lost off the end of the
    // t+1-wide register, so sigma cannot be trusted even if it looks clean.
    const bool ok = bma.length <= cfg.t && deg == bma.length && chien.roots == deg && chien.positions.size() == deg;
    if (!ok) {
        out.status = DecodeStatus::Uncorrectable;
        return out;
    }
    for (auto pos : chien.positions) out.corrected[pos] ^= 1;
    out.error_positions = chien.positions;
    return out;
}

}  // namespace pufecc::bch
