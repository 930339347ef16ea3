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

#include "pufecc/config.hpp"
#include "pufecc/error.hpp"

#ifndef PUFECC_DATA_DIR
#error "PUFECC_DATA_DIR must point at the data directory"
#endif

using namespace pufecc;

TEST_SUITE("config") {

TEST_CASE("shipped profile file matches the built-in presets") {
    const auto loaded = config::load_profiles(std::string(PUFECC_DATA_DIR) + "/timing_profiles.ini");
    const auto& builtin = builtin_profiles();
    REQUIRE(loaded.size() == builtin.size());
    for (const auto& p : builtin) CHECK(find_profile(loaded, p.name) == p);
}

TEST_CASE("profile parsing errors") {
    CHECK_THROWS_AS(config::parse_profiles("[meta]\nversion = 2\n"), Error);
    CHECK_THROWS_AS(config::parse_profiles("[x]\nfamily = tape\n"), Error);
    CHECK_THROWS_AS(find_profile(builtin_profiles(), "nope"), Error);
}

TEST_CASE("presets") {
    CHECK(config::make_codec(config::codec_preset("bch-serial")).timing().name == kProfileBchSerial);
    CHECK(config::make_codec(config::codec_preset("bch-parallel")).bch()->bma_mode == BmaMode::Parallel);
    CHECK(config::make_codec(config::codec_preset("rs")).id() == "rs(8,4,2)");
    CHECK(config::make_codec(config::codec_preset("rs-worstcase")).timing().mode == TimingMode::WorstCasePipelined);
    CHECK_THROWS_AS(config::codec_preset("ldpc"), Error);
}

TEST_CASE("experiment file") {
    const auto cfg = config::parse_config(R"(
[codec]
type = rs
timing_profile = paper-rs-worstcase

[device]
w = 0102030405060708
noise = bernoulli:0.01
noise_seed = 4

[paths]
helper = h.txt
)");
    CHECK(cfg.codec.type == CodeFamily::Rs);
    CHECK(cfg.codec.n == 8);
    CHECK(cfg.device.w_hex == "0102030405060708");
    CHECK(cfg.device.noise == doctest::Approx(0.01));
    CHECK(cfg.paths.helper == "h.txt");
    CHECK(config::make_codec(cfg.codec).timing().mode == TimingMode::WorstCasePipelined);
}

TEST_CASE("invalid code and mismatched profile rejected") {
    auto s = config::codec_preset("bch");
    s.k = 5;
    CHECK_THROWS_AS(config::make_codec(s), Error);
    auto r = config::codec_preset("rs");
    r.timing_profile = std::string(kProfileBchSerial);
    CHECK_THROWS_AS(config::make_codec(r), Error);
    CHECK_THROWS_AS(config::parse_config("[codec]\nn = twelve\n"), Error);
}

}
