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

#include <iomanip>
#include <sstream>

#include "pufecc/campaign.hpp"
#include "pufecc/error.hpp"

namespace pufecc::campaign {

std::optional<Format> parse_format(std::string_view s) noexcept {
    if (s == "text" || s == "text-table") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    return std::nullopt;
}

namespace {

std::string row_label(const CampaignRow& row) {
    if (row.varied.empty()) return "baseline (nothing varied)";
    return to_string(row.varied) + " varied";
}

std::string render_text(const CampaignReport& report) {
    std::ostringstream os;
    os << "timing campaign: codec " << report.codec_id << ", profile " << report.profile << " ("
       << to_string(report.mode) << ")\n";
    os << "cw num pos val | row\n";
    for (const auto& row : report.rows) {
        for (auto p : kAllParams) os << (row.varied.contains(p) ? " * " : " - ") << (p == Param::ErrorValue ? "" : " ");
        os << "| " << row_label(row) << ": " << row.t_d_notation();
        if (row.applicable) os << "  " << row.code() << "  runs=" << row.runs;
        if (row.decode_failures) os << "  failures=" << row.decode_failures;
        os << '\n';
    }
    os << "verdict: " << to_string(report.verdict) << " (" << report.total_runs << " decodes)\n";
    return os.str();
}

std::string render_csv(const CampaignReport& report) {
    std::ostringstream os;
    os << "frozen_params,varied_params,cycles\n";
    for (const auto& row : report.rows) {
        if (!row.applicable) continue;
        for (const auto& g : row.groups) {
            os << '"' << g.frozen << "\",\"" << to_string(row.varied) << "\",\"";
            bool first = true;
            for (auto c : g.cycles) {
                if (!first) os << ' ';
                os << c;
                first = false;
            }
            os << "\"\n";
        }
    }
    return os.str();
}

}  // namespace

nlohmann::json to_json(const CampaignReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json varied = nlohmann::json::array();
        for (auto p : kAllParams) {
            if (row.varied.contains(p)) varied.push_back(to_string(p));
        }
        nlohmann::json groups = nlohmann::json::array();
        for (const auto& g : row.groups) {
            groups.push_back({{"frozen", g.frozen}, {"cycles", g.cycles}, {"runs", g.runs}});
        }
        rows.push_back({{"varied", std::move(varied)},
                        {"applicable", row.applicable},
                        {"t_d", row.t_d},
                        {"t_d_notation", row.t_d_notation()},
                        {"code", row.code()},
                        {"distinct_cycle_values", row.distinct_cycle_values},
                        {"runs", row.runs},
                        {"decode_failures", row.decode_failures},
                        {"groups", std::move(groups)}});
    }
    return {{"format", "pufecc-campaign"},
            {"version", 1},
            {"codec", report.codec_id},
            {"profile", report.profile},
            {"mode", to_string(report.mode)},
            {"verdict", to_string(report.verdict)},
            {"total_runs", report.total_runs},
            {"rows", std::move(rows)}};
}

CampaignReport report_from_json(const nlohmann::json& j) {
    try {
        if (j.at("format") != "pufecc-campaign") throw Error(ErrorCode::ParseError, "not a campaign report");
        CampaignReport r;
        r.codec_id = j.at("codec").get<std::string>();
        r.profile = j.at("profile").get<std::string>();
        const auto mode = parse_timing_mode(j.at("mode").get<std::string>());
        if (!mode) throw Error(ErrorCode::ParseError, "unknown timing mode in report");
        r.mode = *mode;
        r.verdict = j.at("verdict") == "vulnerable" ? Verdict::Vulnerable : Verdict::NotVulnerable;
        r.total_runs = j.at("total_runs").get<std::size_t>();
        for (const auto& jr : j.at("rows")) {
            CampaignRow row;
            for (const auto& name : jr.at("varied")) {
                const auto p = parse_param(name.get<std::string>());
                if (!p) throw Error(ErrorCode::ParseError, "unknown parameter in report");
                row.varied.insert(*p);
            }
            row.applicable = jr.at("applicable").get<bool>();
            row.t_d = jr.at("t_d").get<std::size_t>();
            row.distinct_cycle_values = jr.at("distinct_cycle_values").get<std::set<Cycles>>();
            row.runs = jr.at("runs").get<std::size_t>();
            row.decode_failures = jr.at("decode_failures").get<std::size_t>();
            for (const auto& jg : jr.at("groups")) {
                row.groups.push_back(GroupResult{jg.at("frozen").get<std::string>(),
                                                 jg.at("cycles").get<std::set<Cycles>>(),
                                                 jg.at("runs").get<std::size_t>()});
            }
            r.rows.push_back(std::move(row));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed campaign report: ") + e.what());
    }
}

std::string render(const CampaignReport& report, Format format) {
    switch (format) {
        case Format::Text: return render_text(report);
        case Format::Csv: return render_csv(report);
        case Format::Json: return to_json(report).dump(2) + "\n";
    }
    return {};
}

}  // namespace pufecc::campaign
