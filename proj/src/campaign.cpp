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

#include "pufecc/campaign.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "pufecc/error.hpp"

namespace pufecc::campaign {

std::string_view to_string(Param p) noexcept {
    switch (p) {
        case Param::CodewordValue: return "codeword_value";
        case Param::ErrorNumber: return "error_number";
        case Param::ErrorPosition: return "error_position";
        case Param::ErrorValue: return "error_value";
    }
    return "?";
}

std::optional<Param> parse_param(std::string_view s) noexcept {
    for (auto p : kAllParams) {
        if (to_string(p) == s) return p;
    }
    return std::nullopt;
}

ParamSet parse_param_list(std::string_view csv) {
    ParamSet out;
    while (!csv.empty()) {
        const auto comma = csv.find(',');
        auto item = csv.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty() && item != "none") {
            const auto p = parse_param(item);
            if (!p) throw Error(ErrorCode::SpecInvalid, "unknown campaign parameter '" + std::string(item) + "'");
            out.insert(*p);
        }
        if (comma == std::string_view::npos) break;
        csv.remove_prefix(comma + 1);
    }
    return out;
}

std::string to_string(ParamSet set) {
    std::string out;
    for (auto p : kAllParams) {
        if (!set.contains(p)) continue;
        if (!out.empty()) out += ',';
        out += to_string(p);
    }
    return out.empty() ? "none" : out;
}

std::uint64_t error_pattern_count(std::size_t n, unsigned t, unsigned symbol_bits) {
    const std::uint64_t v = (std::uint64_t{1} << symbol_bits) - 1;
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, i)
    std::uint64_t vpow = 1;   // v^i
    for (unsigned i = 0; i <= t && i <= n; ++i) {
        total += binom * vpow;
        binom = binom * (n - i) / (i + 1);
        vpow *= v;
    }
    return total;
}

namespace {

std::vector<std::vector<gf::Element>> make_codewords(const CampaignSpec& spec, const Codec& codec) {
    const std::size_t k_bits = codec.message_bits();
    std::vector<std::vector<gf::Element>> out;
    auto to_symbols = [&](const Bits& codeword_bits) {
        if (codec.family() == CodeFamily::Bch) return std::vector<gf::Element>(codeword_bits.begin(), codeword_bits.end());
        return rs::bits_to_symbols(codeword_bits, codec.symbol_bits());
    };

    if (codec.family() == CodeFamily::Bch && k_bits <= 20) {
        const std::size_t all = std::size_t{1} << k_bits;
        const std::size_t count = spec.codeword_count == 0 ? all : spec.codeword_count;
        if (count >= all) {
            for (std::size_t m = 0; m < all; ++m) {
                Bits msg(k_bits);
                for (std::size_t b = 0; b < k_bits; ++b) msg[b] = (m >> b) & 1;
                out.push_back(to_symbols(codec.encode(msg)));
            }
            return out;
        }
    }

    const std::size_t count = spec.codeword_count == 0 ? 1 : spec.codeword_count;
    std::mt19937_64 rng(spec.codeword_seed);
    for (std::size_t i = 0; i < count; ++i) {
        Bits msg(k_bits);
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 1);
        out.push_back(to_symbols(codec.encode(msg)));
    }
    return out;
}

void combinations(std::size_t n, std::size_t r, std::size_t start, std::array<std::uint16_t, kMaxErrors>& cur,
                  std::size_t depth, std::vector<std::array<std::uint16_t, kMaxErrors>>& out) {
    if (depth == r) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur[depth] = static_cast<std::uint16_t>(i);
        combinations(n, r, i + 1, cur, depth + 1, out);
    }
}

std::string join_values(const auto& values, std::size_t count) {
    std::string s;
    for (std::size_t i = 0; i < count; ++i) {
        if (i) s += ' ';
        s += std::to_string(values[i]);
    }
    return s;
}

}  // namespace

StimulusSpace::StimulusSpace(const CampaignSpec& spec, const Codec& codec) {
    const auto& varied = spec.varied;
    const auto& fixed = spec.fixed;
    const bool binary = codec.family() == CodeFamily::Bch;
    const std::size_t n = codec.length();
    const unsigned t = codec.t();

    auto invalid = [](const std::string& why) { throw Error(ErrorCode::SpecInvalid, why); };
    if (t > kMaxErrors) invalid("campaigns support t <= " + std::to_string(kMaxErrors));
    if (binary && (varied.contains(Param::ErrorValue) || fixed.error_values)) {
        invalid("error_value applies only to symbol codecs");
    }
    if ((varied.contains(Param::CodewordValue) && fixed.codeword_index) ||
        (varied.contains(Param::ErrorNumber) && fixed.error_number) ||
        (varied.contains(Param::ErrorPosition) && fixed.error_positions) ||
        (varied.contains(Param::ErrorValue) && fixed.error_values)) {
        invalid("a parameter cannot be both varied and fixed");
    }
    if (!spec.sampling.exhaustive && spec.sampling.count == 0) invalid("sampled campaigns need a positive count");

    codewords_ = make_codewords(spec, codec);
    if (fixed.codeword_index && *fixed.codeword_index >= codewords_.size()) {
        invalid("codeword index " + std::to_string(*fixed.codeword_index) + " outside a set of " +
                std::to_string(codewords_.size()));
    }
    if (fixed.error_number && *fixed.error_number > t) invalid("error_number exceeds t");

    const unsigned max_errors = fixed.error_number ? *fixed.error_number : t;

    if (fixed.error_positions) {
        anchor_positions_ = *fixed.error_positions;
    } else {
        anchor_positions_.resize(t);
        std::iota(anchor_positions_.begin(), anchor_positions_.end(), std::size_t{0});
    }
    if (!varied.contains(Param::ErrorPosition)) {
        if (anchor_positions_.size() < max_errors) invalid("error_position anchor shorter than error_number");
        auto sorted = anchor_positions_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) invalid("error positions repeat");
        if (!sorted.empty() && sorted.back() >= n) invalid("error position outside the codeword");
    }

    const std::uint32_t field_max = (std::uint32_t{1} << codec.symbol_bits()) - 1;
    if (fixed.error_values) {
        anchor_values_ = *fixed.error_values;
    } else {
        anchor_values_.assign(t, 1);
    }
    if (!varied.contains(Param::ErrorValue)) {
        if (anchor_values_.size() < max_errors) invalid("error_value anchor shorter than error_number");
        for (auto v : anchor_values_) {
            if (v == 0 || v > field_max) invalid("error values must be nonzero field elements");
        }
    }
    value_radix_ = binary ? 1 : field_max;

    if (varied.contains(Param::ErrorPosition)) {
        combos_.resize(t + 1);
        for (unsigned nu = 0; nu <= t; ++nu) {
            std::array<std::uint16_t, kMaxErrors> cur{};
            combinations(n, nu, 0, cur, 0, combos_[nu]);
        }
    }

    std::vector<std::size_t> cw_list;
    if (fixed.codeword_index) {
        cw_list.push_back(*fixed.codeword_index);
    } else {
        cw_list.resize(codewords_.size());
        std::iota(cw_list.begin(), cw_list.end(), std::size_t{0});
    }
    std::vector<unsigned> nu_list;
    if (fixed.error_number) {
        nu_list.push_back(*fixed.error_number);
    } else {
        for (unsigned nu = 0; nu <= t; ++nu) nu_list.push_back(nu);
    }

    const bool cw_frozen = !varied.contains(Param::CodewordValue);
    const bool nu_frozen = !varied.contains(Param::ErrorNumber);
    const bool pos_varied = varied.contains(Param::ErrorPosition);
    const bool val_varied = varied.contains(Param::ErrorValue) && !binary;

    std::map<std::pair<std::size_t, unsigned>, std::uint32_t> group_ids;
    for (auto cw : cw_list) {
        for (auto nu : nu_list) {
            const auto key = std::make_pair(cw_frozen ? cw : 0, nu_frozen ? nu : 0u);
            auto [it, inserted] = group_ids.try_emplace(key, static_cast<std::uint32_t>(group_labels_.size()));
            if (inserted) {
                std::string label;
                auto add = [&](const std::string& part) {
                    if (!label.empty()) label += ';';
                    label += part;
                };
                if (cw_frozen) add("codeword=" + std::to_string(cw));
                if (nu_frozen) add("error_number=" + std::to_string(nu));
                if (!pos_varied && nu > 0 && nu_frozen) add("error_position=" + join_values(anchor_positions_, nu));
                if (!pos_varied && !nu_frozen) add("error_position=anchor(" + join_values(anchor_positions_, max_errors) + ")");
                if (!binary && !val_varied && nu > 0 && nu_frozen) add("error_value=" + join_values(anchor_values_, nu));
                if (!binary && !val_varied && !nu_frozen) add("error_value=anchor(" + join_values(anchor_values_, max_errors) + ")");
                group_labels_.push_back(label.empty() ? "all" : label);
            }

            std::size_t size = pos_varied ? combos_[nu].size() : 1;
            if (val_varied) {
                for (unsigned i = 0; i < nu; ++i) size *= value_radix_;
            }
            blocks_.push_back(Block{static_cast<std::uint32_t>(cw), it->second, static_cast<std::uint8_t>(nu),
                                    pos_varied, val_varied, size, total_});
            total_ += size;
        }
    }
}

Stimulus StimulusSpace::at(std::size_t index) const {
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                               [](std::size_t i, const Block& b) { return i < b.offset; });
    const Block& b = *std::prev(it);
    std::size_t local = index - b.offset;

    Stimulus s;
    s.codeword = b.codeword;
    s.group = b.group;
    s.error_number = b.error_number;
    const unsigned nu = b.error_number;

    std::size_t value_index = 0;
    if (b.values_varied) {
        std::size_t per_position = 1;
        for (unsigned i = 0; i < nu; ++i) per_position *= value_radix_;
        value_index = local % per_position;
        local /= per_position;
    }
    for (unsigned i = 0; i < nu; ++i) {
        s.positions[i] = b.positions_varied ? combos_[nu][local][i] : static_cast<std::uint16_t>(anchor_positions_[i]);
        if (b.values_varied) {
            s.values[i] = static_cast<gf::Element>(1 + value_index % value_radix_);
            value_index /= value_radix_;
        } else {
            s.values[i] = value_radix_ == 1 ? gf::Element{1} : anchor_values_[i];
        }
    }
    return s;
}

std::vector<std::pair<std::size_t, std::size_t>> StimulusSpace::strata() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.emplace_back(b.offset, b.size);
    return out;
}

std::vector<gf::Element> StimulusSpace::received(const Stimulus& s) const {
    auto word = codewords_[s.codeword];
    for (unsigned i = 0; i < s.error_number; ++i) word[s.positions[i]] ^= s.values[i];
    return word;
}

std::vector<std::size_t> select_indices(const StimulusSpace& space, const CampaignSpec& spec) {
    std::vector<std::size_t> out;
    if (spec.sampling.exhaustive || spec.sampling.count >= space.size()) {
        out.resize(space.size());
        std::iota(out.begin(), out.end(), std::size_t{0});
        return out;
    }
    // Stratified per block so rare classes such as the error-free word
    // always keep a representative. Quotas are proportional (largest
    // remainder) with a floor of one, so the total is exactly `count` unless
    // there are more blocks than that.
    const auto strata = space.strata();
    const long double total = static_cast<long double>(space.size());
    std::vector<std::size_t> quota(strata.size());
    std::vector<std::pair<long double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t b = 0; b < strata.size(); ++b) {
        const long double exact = static_cast<long double>(spec.sampling.count) * strata[b].second / total;
        quota[b] = std::clamp<std::size_t>(static_cast<std::size_t>(exact), 1, strata[b].second);
        remainders.push_back({exact - static_cast<long double>(quota[b]), b});
        assigned += quota[b];
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [rem, b] : remainders) {
        if (assigned >= spec.sampling.count) break;
        if (quota[b] < strata[b].second) {
            ++quota[b];
            ++assigned;
        }
    }

    // Floyd's algorithm: `quota` distinct offsets per block.
    std::mt19937_64 rng(spec.sampling.seed);
    for (std::size_t b = 0; b < strata.size(); ++b) {
        const auto [begin, size] = strata[b];
        std::unordered_set<std::size_t> chosen;
        for (std::size_t j = size - quota[b]; j < size; ++j) {
            const std::size_t v = std::uniform_int_distribution<std::size_t>(0, j)(rng);
            chosen.insert(chosen.count(v) ? j : v);
        }
        const std::size_t first = out.size();
        for (auto v : chosen) out.push_back(begin + v);
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
    }
    return out;
}

bool CampaignRow::attacker_relevant() const noexcept {
    return (varied.raw() & kAttackerParams.raw()) != 0;
}

std::string CampaignRow::code() const {
    if (!applicable) return "n/a";
    return std::string(constant() ? "C" : "NC") + "/" + (attacker_relevant() ? "V" : "NV");
}

std::string CampaignRow::t_d_notation() const {
    if (!applicable) return "n/a";
    std::ostringstream os;
    os << "T_d:" << t_d << ' ';
    if (t_d <= 1) {
        bool first = true;
        for (auto c : distinct_cycle_values) {
            if (!first) os << "‖";
            os << '{' << c << '}';
            first = false;
        }
    } else {
        os << '{';
        bool first = true;
        for (auto c : distinct_cycle_values) {
            if (!first) os << ", ";
            os << c;
            first = false;
        }
        os << '}';
    }
    return os.str();
}

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Vulnerable ? "vulnerable" : "not_vulnerable";
}

Verdict classify(const std::vector<CampaignRow>& rows) {
    for (const auto& r : rows) {
        if (r.applicable && r.attacker_relevant() && !r.constant()) return Verdict::Vulnerable;
    }
    return Verdict::NotVulnerable;
}

namespace {

CampaignRow aggregate(const StimulusSpace& space, const CampaignSpec& spec, std::span<const std::size_t> indices,
                      std::span<const Outcome> outcomes) {
    CampaignRow row;
    row.varied = spec.varied;
    row.groups.resize(space.group_count());
    for (std::size_t g = 0; g < row.groups.size(); ++g) row.groups[g].frozen = space.group_label(g);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        auto& g = row.groups[space.at(indices[i]).group];
        g.cycles.insert(outcomes[i].cycles);
        ++g.runs;
        if (!outcomes[i].corrected) ++row.decode_failures;
    }
    std::erase_if(row.groups, [](const GroupResult& g) { return g.runs == 0; });
    for (const auto& g : row.groups) {
        row.t_d = std::max(row.t_d, g.cycles.size());
        row.distinct_cycle_values.insert(g.cycles.begin(), g.cycles.end());
        row.runs += g.runs;
    }
    return row;
}

CampaignRow run_row(const CampaignSpec& spec, const Codec& codec, const RunOptions& options) {
    const StimulusSpace space(spec, codec);
    const auto indices = select_indices(space, spec);
    const auto outcomes = options.parallel ? decode_parallel(space, indices, codec, options.jobs)
                                           : decode_serial(space, indices, codec);
    return aggregate(space, spec, indices, outcomes);
}

void finish(CampaignReport& report, const Codec& codec) {
    report.codec_id = codec.id();
    report.profile = codec.timing().name;
    report.mode = codec.timing().mode;
    report.verdict = classify(report.rows);
    report.total_runs = 0;
    for (const auto& r : report.rows) report.total_runs += r.runs;
}

}  // namespace

CampaignReport run(const CampaignSpec& spec, const Codec& codec, const RunOptions& options) {
    CampaignReport report;
    report.rows.push_back(run_row(spec, codec, options));
    finish(report, codec);
    return report;
}

const std::vector<ParamSet>& table_rows() {
    using P = Param;
    static const std::vector<ParamSet> rows = {
        {P::ErrorValue},
        {P::ErrorPosition},
        {P::ErrorPosition, P::ErrorValue},
        {P::ErrorNumber},
        {P::ErrorNumber, P::ErrorPosition},
        {P::ErrorNumber, P::ErrorValue},
        {P::ErrorNumber, P::ErrorPosition, P::ErrorValue},
        {P::CodewordValue},
        {P::CodewordValue, P::ErrorNumber},
        {P::CodewordValue, P::ErrorNumber, P::ErrorPosition},
        {P::CodewordValue, P::ErrorPosition},
    };
    return rows;
}

CampaignReport run_table(const CampaignSpec& base, const Codec& codec, const RunOptions& options) {
    CampaignReport report;
    const bool binary = codec.family() == CodeFamily::Bch;
    for (const auto& varied : table_rows()) {
        if (binary && varied.contains(Param::ErrorValue)) {
            CampaignRow na;
            na.varied = varied;
            na.applicable = false;
            report.rows.push_back(std::move(na));
            continue;
        }
        CampaignSpec spec = base;
        spec.varied = varied;
        if (varied.contains(Param::CodewordValue)) spec.fixed.codeword_index.reset();
        if (varied.contains(Param::ErrorNumber)) spec.fixed.error_number.reset();
        if (varied.contains(Param::ErrorPosition)) spec.fixed.error_positions.reset();
        if (varied.contains(Param::ErrorValue) || binary) spec.fixed.error_values.reset();
        report.rows.push_back(run_row(spec, codec, options));
    }
    finish(report, codec);
    return report;
}

}  // namespace pufecc::campaign
