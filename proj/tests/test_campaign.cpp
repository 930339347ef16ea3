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
#include <numeric>

#include "pufecc/campaign.hpp"
#include "pufecc/error.hpp"

using namespace pufecc;
using namespace pufecc::campaign;

namespace {

const Codec& bch_serial() {
    static const Codec c(bch::BchConfig::defaults(BmaMode::Serial));
    return c;
}
const Codec& bch_parallel() {
    static const Codec c(bch::BchConfig::defaults(BmaMode::Parallel));
    return c;
}
const Codec& rs_fast() {
    static const Codec c(rs::RsConfig::defaults());
    return c;
}
const Codec& rs_worst() {
    static const Codec c(rs::RsConfig::defaults(TimingMode::WorstCasePipelined));
    return c;
}

CampaignSpec varying(ParamSet p) {
    CampaignSpec s;
    s.varied = p;
    return s;
}

}  // namespace

TEST_SUITE("campaign") {

TEST_CASE("parameter lists") {
    CHECK(parse_param_list("error_number,error_position") == ParamSet{Param::ErrorNumber, Param::ErrorPosition});
    CHECK(to_string(ParamSet{Param::ErrorValue, Param::CodewordValue}) == "codeword_value,error_value");
    CHECK(to_string(ParamSet{}) == "none");
    CHECK(parse_param_list("") == ParamSet{});
    CHECK_THROWS_AS(parse_param_list("error_colour"), Error);
}

TEST_CASE("closed-form stimulus counts") {
    CHECK(16 * error_pattern_count(12, 2, 1) == 1264);
    CHECK(error_pattern_count(8, 2, 8) == 1822741);
    CHECK(error_pattern_count(15, 3, 1) == 1 + 15 + 105 + 455);
    const ParamSet all{Param::CodewordValue, Param::ErrorNumber, Param::ErrorPosition};
    CHECK(StimulusSpace(varying(all), bch_serial()).size() == 1264);
    CHECK(StimulusSpace(varying({Param::ErrorNumber, Param::ErrorPosition, Param::ErrorValue}), rs_fast()).size() ==
          1822741);
    CampaignSpec zero = varying({Param::CodewordValue});
    zero.fixed.error_number = 0;
    CHECK(StimulusSpace(zero, bch_serial()).size() == 16);
}

TEST_CASE("general configurations match the closed form") {
    const Codec bch15(bch::BchConfig::make(15, 7, 2, 4, gf::kDefaultPoly4, BmaMode::Parallel,
                                           builtin_profile(kProfileBchParallel)));
    CampaignSpec s = varying({Param::ErrorNumber, Param::ErrorPosition});
    s.codeword_count = 3;
    CHECK(StimulusSpace(s, bch15).size() == 3 * error_pattern_count(15, 2, 1));
    const Codec rs4(rs::RsConfig::make(15, 11, 2, 4, gf::kDefaultPoly4, builtin_profile(kProfileRs)));
    CampaignSpec r = varying({Param::ErrorNumber, Param::ErrorPosition, Param::ErrorValue});
    CHECK(StimulusSpace(r, rs4).size() == error_pattern_count(15, 2, 4));
}

TEST_CASE("stimuli carry exactly the advertised errors") {
    const StimulusSpace space(varying({Param::ErrorNumber, Param::ErrorPosition, Param::ErrorValue}), rs_fast());
    const auto& cw = space.codewords().at(0);
    for (std::size_t i = 0; i < space.size(); i += 977) {
        const auto s = space.at(i);
        const auto r = space.received(s);
        std::size_t diff = 0;
        for (std::size_t j = 0; j < r.size(); ++j) diff += r[j] != cw[j];
        CHECK(diff == s.error_number);
    }
}

TEST_CASE("malformed specs rejected") {
    CampaignSpec bad = varying({Param::ErrorValue});
    CHECK_THROWS_AS(StimulusSpace(bad, bch_serial()), Error);
    CampaignSpec too_many = varying({Param::ErrorPosition});
    too_many.fixed.error_number = 3;
    CHECK_THROWS_AS(StimulusSpace(too_many, rs_fast()), Error);
    CampaignSpec pos = varying({Param::ErrorNumber});
    pos.fixed.error_positions = std::vector<std::size_t>{12, 0};
    CHECK_THROWS_AS(StimulusSpace(pos, bch_serial()), Error);
    CampaignSpec cw = varying({Param::ErrorNumber});
    cw.fixed.codeword_index = 16;
    CHECK_THROWS_AS(StimulusSpace(cw, bch_serial()), Error);
}

TEST_CASE("BCH table: one latency everywhere") {
    for (auto [codec, cycles] : {std::pair{&bch_serial(), Cycles{28}}, std::pair{&bch_parallel(), Cycles{21}}}) {
        const auto report = run_table({}, *codec);
        CHECK(report.rows.size() == 11);
        CHECK(report.verdict == Verdict::NotVulnerable);
        for (const auto& row : report.rows) {
            if (!row.applicable) {
                CHECK(row.varied.contains(Param::ErrorValue));
                continue;
            }
            CHECK(row.t_d == 1);
            CHECK(row.distinct_cycle_values == std::set<Cycles>{cycles});
            CHECK(row.decode_failures == 0);
        }
        const auto full = run(varying({Param::CodewordValue, Param::ErrorNumber, Param::ErrorPosition}), *codec);
        CHECK(full.total_runs == 1264);
        CHECK(full.rows.at(0).t_d_notation() == "T_d:1 {" + std::to_string(cycles) + "}");
    }
}

TEST_CASE("RS: frozen error count gives one latency per group") {
    CampaignSpec s = varying({Param::ErrorPosition});
    s.sampling = Sampling::sampled(3, 20000);
    const auto row = run(s, rs_fast()).rows.at(0);
    CHECK(row.t_d == 1);
    CHECK(row.distinct_cycle_values == std::set<Cycles>{38, 66, 72});
    CHECK(row.t_d_notation() == "T_d:1 {38}‖{66}‖{72}");
    CHECK(row.code() == "C/V");

    CampaignSpec v = varying({Param::ErrorValue, Param::ErrorPosition});
    v.sampling = Sampling::sampled(4, 20000);
    CHECK(run(v, rs_fast()).rows.at(0).t_d == 1);
}

TEST_CASE("RS: varying the error count leaks, worst-case profile does not") {
    CampaignSpec s = varying({Param::ErrorNumber, Param::ErrorPosition, Param::ErrorValue});
    s.sampling = Sampling::sampled(9, 100000);
    const auto report = run(s, rs_fast());
    CHECK(report.total_runs == 100000);
    CHECK(report.rows.at(0).t_d_notation() == "T_d:3 {38, 66, 72}");
    CHECK(report.rows.at(0).code() == "NC/V");
    CHECK(report.verdict == Verdict::Vulnerable);
    const auto padded = run(s, rs_worst());
    CHECK(padded.rows.at(0).t_d == 1);
    CHECK(padded.verdict == Verdict::NotVulnerable);
}

TEST_CASE("codeword variation alone is not attacker-relevant") {
    CampaignSpec s = varying({Param::CodewordValue});
    s.codeword_count = 4;
    s.fixed.error_number = 1;
    const auto row = run(s, rs_fast()).rows.at(0);
    CHECK_FALSE(row.attacker_relevant());
    CHECK(row.code() == "C/NV");
}

TEST_CASE("serial and parallel kernels agree") {
    const StimulusSpace bch(varying({Param::CodewordValue, Param::ErrorNumber, Param::ErrorPosition}), bch_serial());
    std::vector<std::size_t> all(bch.size());
    std::iota(all.begin(), all.end(), 0);
    const auto ref = decode_serial(bch, all, bch_serial());
    for (int jobs : {1, 2, 4, 0}) {
        const auto par = decode_parallel(bch, all, bch_serial(), jobs);
        REQUIRE(par.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(par[i].cycles == ref[i].cycles);
            CHECK(par[i].corrected == ref[i].corrected);
        }
    }

    CampaignSpec spec = varying({Param::ErrorNumber, Param::ErrorPosition, Param::ErrorValue});
    spec.sampling = Sampling::sampled(12, 50000);
    CHECK(run(spec, rs_fast(), {false, 0}) == run(spec, rs_fast(), {true, 3}));
}

TEST_CASE("stratified sample is reproducible and covers every block") {
    CampaignSpec spec = varying({Param::ErrorNumber, Param::ErrorPosition, Param::ErrorValue});
    spec.sampling = Sampling::sampled(1, 1000);
    const StimulusSpace space(spec, rs_fast());
    const auto a = select_indices(space, spec);
    CHECK(a == select_indices(space, spec));
    CHECK(a.size() == 1000);
    CHECK(std::is_sorted(a.begin(), a.end()));
    for (auto [offset, size] : space.strata()) {
        const auto hit = std::lower_bound(a.begin(), a.end(), offset);
        CHECK((hit != a.end() && *hit < offset + size));
    }
    spec.sampling.seed = 2;
    CHECK(a != select_indices(space, spec));
}

TEST_CASE("rendering") {
    const auto report = run_table({}, bch_parallel());
    const auto text = render(report, Format::Text);
    CHECK(text.find("error_position varied: T_d:1 {21}") != std::string::npos);
    CHECK(text == render(report, Format::Text));
    CHECK(text.find("verdict: not_vulnerable") != std::string::npos);

    const auto baseline = render(run(varying({}), bch_serial()), Format::Text);
    CHECK(baseline.find("baseline (nothing varied)") != std::string::npos);

    const auto csv = render(report, Format::Csv);
    CHECK(csv.rfind("frozen_params,varied_params,cycles", 0) == 0);

    const auto j = nlohmann::json::parse(render(report, Format::Json));
    CHECK(j.at("format") == "pufecc-campaign");
    CHECK(report_from_json(j) == report);
}

}
