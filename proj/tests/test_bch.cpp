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

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pufecc/bch.hpp"
#include "pufecc/error.hpp"

using namespace pufecc;
using namespace pufecc::bch;

namespace {

Bits message_bits(std::uint32_t m, std::size_t k) {
    Bits b(k);
    for (std::size_t i = 0; i < k; ++i) b[i] = m >> i & 1;
    return b;
}

// Every error vector of weight <= t over n bits.
std::vector<Bits> light_errors(std::size_t n, unsigned t) {
    std::vector<Bits> out{Bits(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        Bits e(n, 0);
        e[i] = 1;
        out.push_back(e);
        if (t >= 2)
            for (std::size_t j = i + 1; j < n; ++j) {
                Bits e2 = e;
                e2[j] = 1;
                out.push_back(e2);
            }
    }
    return out;
}

}  // namespace

TEST_SUITE("bch") {

TEST_CASE("default code parameters") {
    const auto cfg = BchConfig::defaults(BmaMode::Serial);
    CHECK(cfg.n == 12);
    CHECK(cfg.k == 4);
    CHECK(cfg.t == 2);
    CHECK(cfg.generator.size() == 9);
    // g(x) = x^8 + x^7 + x^6 + x^4 + 1 for the (15,7) code under x^4 + x + 1.
    CHECK(cfg.generator == Bits{1, 0, 0, 0, 1, 0, 1, 1, 1});
}

TEST_CASE("inconsistent parameters rejected") {
    const auto timing = builtin_profile(kProfileBchSerial);
    CHECK_THROWS_AS(BchConfig::make(12, 5, 2, 4, gf::kDefaultPoly4, BmaMode::Serial, timing), Error);
    CHECK_THROWS_AS(BchConfig::make(16, 8, 2, 4, gf::kDefaultPoly4, BmaMode::Serial, timing), Error);
    CHECK_NOTHROW(BchConfig::make(15, 7, 2, 4, gf::kDefaultPoly4, BmaMode::Serial, timing));
}

TEST_CASE("encode: zero, linearity, systematic, zero syndromes") {
    const auto cfg = BchConfig::defaults(BmaMode::Serial);
    CHECK(encode(Bits(4, 0), cfg) == Bits(12, 0));
    for (std::uint32_t a = 0; a < 16; ++a) {
        const auto ca = encode(message_bits(a, 4), cfg);
        CHECK(extract_message(ca, cfg) == message_bits(a, 4));
        for (auto s : syndromes(ca, cfg)) CHECK(s == 0);
        for (std::uint32_t b = 0; b < 16; ++b)
            CHECK(xor_bits(ca, encode(message_bits(b, 4), cfg)) == encode(message_bits(a ^ b, 4), cfg));
    }
    CHECK_THROWS_AS(encode(Bits(3, 0), cfg), Error);
}

TEST_CASE("codebook equals the multiples of the generator") {
    const auto cfg = BchConfig::defaults(BmaMode::Serial);
    auto book = oracle::bch_codebook(cfg);
    std::vector<Bits> mine;
    for (std::uint32_t m = 0; m < 16; ++m) mine.push_back(encode(message_bits(m, 4), cfg));
    std::sort(book.begin(), book.end());
    std::sort(mine.begin(), mine.end());
    CHECK(book == mine);
}

TEST_CASE("syndromes depend only on the error") {
    const auto cfg = BchConfig::defaults(BmaMode::Serial);
    const auto errors = light_errors(12, 2);
    for (std::uint32_t m = 0; m < 16; ++m) {
        const auto c = encode(message_bits(m, 4), cfg);
        for (const auto& e : errors) CHECK(syndromes(xor_bits(c, e), cfg) == syndromes(e, cfg));
    }
    for (std::size_t j = 0; j < 12; ++j) {
        Bits e(12, 0);
        e[j] = 1;
        const auto s = syndromes(e, cfg);
        for (unsigned i = 1; i <= 4; ++i) CHECK(s[i - 1] == cfg.gf.alpha_pow(static_cast<long long>(i * j)));
    }
}

TEST_CASE("BMA iteration count is fixed by the architecture") {
    for (auto mode : {BmaMode::Serial, BmaMode::Parallel}) {
        const auto cfg = BchConfig::defaults(mode);
        const unsigned expected = mode == BmaMode::Serial ? 8 : 4;
        const auto zero = key_equation_bma(std::vector<gf::Element>(4, 0), cfg);
        CHECK(zero.sigma == gf::GFPoly{1});
        CHECK(zero.iterations == expected);
        for (const auto& e : light_errors(12, 2)) CHECK(key_equation_bma(syndromes(e, cfg), cfg).iterations == expected);
        // Uncorrectable inputs too.
        Bits e3(12, 0);
        e3[0] = e3[4] = e3[9] = 1;
        CHECK(key_equation_bma(syndromes(e3, cfg), cfg).iterations == expected);
    }
}

TEST_CASE("single-error locator and Chien search") {
    for (auto mode : {BmaMode::Serial, BmaMode::Parallel}) {
        const auto cfg = BchConfig::defaults(mode);
        CHECK(chien_search(gf::GFPoly{1}, cfg).positions.empty());
        for (std::size_t j = 0; j < 12; ++j) {
            Bits e(12, 0);
            e[j] = 1;
            const auto sigma = key_equation_bma(syndromes(e, cfg), cfg).sigma;
            CHECK(sigma == gf::GFPoly{1, cfg.gf.alpha_pow(static_cast<long long>(j))});
            CHECK(gf::poly_eval(cfg.gf, sigma, cfg.gf.alpha_pow(-static_cast<long long>(j))) == 0);
            const auto ch = chien_search(sigma, cfg);
            CHECK(ch.positions == std::vector<std::size_t>{j});
            CHECK(ch.evaluations == 15);
        }
    }
}

TEST_CASE("Chien finds both positions of every double error and always scans the field") {
    const auto cfg = BchConfig::defaults(BmaMode::Parallel);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = i + 1; j < 12; ++j) {
            Bits e(12, 0);
            e[i] = e[j] = 1;
            const auto ch = chien_search(key_equation_bma(syndromes(e, cfg), cfg).sigma, cfg);
            CHECK(ch.positions == std::vector<std::size_t>{i, j});
            CHECK(ch.evaluations == 15);
        }
}

TEST_CASE("decode agrees with the nearest-codeword oracle on every correctable input") {
    for (auto mode : {BmaMode::Serial, BmaMode::Parallel}) {
        const auto cfg = BchConfig::defaults(mode);
        const auto book = oracle::bch_codebook(cfg);
        const Cycles expected = mode == BmaMode::Serial ? 28 : 21;
        std::size_t cases = 0;
        for (const auto& c : book)
            for (const auto& e : light_errors(12, 2)) {
                const auto r = xor_bits(c, e);
                const auto want = oracle::bch_nearest(book, r, 2);
                REQUIRE(want.has_value());
                const auto got = decode(r, cfg);
                CHECK(got.status == DecodeStatus::Ok);
                CHECK(got.corrected == *want);
                CHECK(got.cycles == expected);
                CHECK(got.error_positions.size() == hamming_distance(e, Bits(12, 0)));
                ++cases;
            }
        CHECK(cases == 1264);
    }
}

TEST_CASE("heavier errors: constant latency, never a wrong 'ok' away from the oracle") {
    const auto cfg = BchConfig::defaults(BmaMode::Serial);
    const auto book = oracle::bch_codebook(cfg);
    for (std::uint32_t pattern = 0; pattern < (1u << 12); ++pattern) {
        const auto r = message_bits(pattern, 12);
        const auto got = decode(r, cfg);
        CHECK(got.cycles == 28);
        const auto want = oracle::bch_nearest(book, r, 2);
        if (want) {
            CHECK(got.status == DecodeStatus::Ok);
            CHECK(got.corrected == *want);
        } else {
            CHECK(got.status == DecodeStatus::Uncorrectable);
            CHECK(got.corrected == r);
        }
    }
}

TEST_CASE("decode of a codeword reports the preset latency") {
    CHECK(decode(Bits(12, 0), BchConfig::defaults(BmaMode::Serial)).cycles == 28);
    CHECK(decode(Bits(12, 0), BchConfig::defaults(BmaMode::Parallel)).cycles == 21);
    CHECK_THROWS_AS(decode(Bits(11, 0), BchConfig::defaults(BmaMode::Serial)), Error);
}

}
