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

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pufecc/codec.hpp"

/**
 * Timing campaigns: exhaustive (or stratified-sampled) sweeps over the four
 * stimulus parameters, decode-latency collection and constancy verdicts.
 *
 * Parameters that are varied change inside one group of stimuli. Frozen
 * parameters are held constant per group: codeword and error count are
 * swept across groups unless bound, error positions and values fall back to
 * an anchor tuple whose first nu entries are used for a nu-error stimulus.
 * T_d is the largest number of distinct latencies seen within a group.
 */
namespace pufecc::campaign {

enum class Param : std::uint8_t {
    CodewordValue = 1,
    ErrorNumber = 2,
    ErrorPosition = 4,
    ErrorValue = 8,
};

inline constexpr std::array<Param, 4> kAllParams = {Param::CodewordValue, Param::ErrorNumber,
                                                    Param::ErrorPosition, Param::ErrorValue};

/// Small bit set of parameters.
class ParamSet {
public:
    constexpr ParamSet() = default;
    constexpr ParamSet(std::initializer_list<Param> ps) {
        for (auto p : ps) bits_ |= static_cast<std::uint8_t>(p);
    }
    constexpr bool contains(Param p) const noexcept { return bits_ & static_cast<std::uint8_t>(p); }
    constexpr void insert(Param p) noexcept { bits_ |= static_cast<std::uint8_t>(p); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::uint8_t raw() const noexcept { return bits_; }
    constexpr bool operator==(const ParamSet&) const = default;

private:
    std::uint8_t bits_ = 0;
};

std::string_view to_string(Param p) noexcept;
std::optional<Param> parse_param(std::string_view s) noexcept;
/// Comma-separated list; throws Error(SpecInvalid) on unknown names.
ParamSet parse_param_list(std::string_view csv);
/// Comma-joined in canonical order, "none" when empty.
std::string to_string(ParamSet set);

/// error_number, error_position and error_value reach the decoder through
/// injected faults; codeword_value does not.
inline constexpr ParamSet kAttackerParams = {Param::ErrorNumber, Param::ErrorPosition, Param::ErrorValue};

struct FixedValues {
    /// Index into the campaign's codeword set.
    std::optional<std::size_t> codeword_index;
    std::optional<unsigned> error_number;
    /// Anchor positions; a nu-error stimulus uses the first nu.
    std::optional<std::vector<std::size_t>> error_positions;
    /// Anchor symbol values (symbol codecs only).
    std::optional<std::vector<gf::Element>> error_values;
};

struct Sampling {
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::size_t count = 0;

    static Sampling sampled(std::uint64_t seed, std::size_t count) { return {false, seed, count}; }
};

struct CampaignSpec {
    ParamSet varied;
    FixedValues fixed;
    Sampling sampling;
    /// Codewords in the sweep; 0 selects the default (every message for BCH,
    /// a single seed-selected codeword for RS).
    std::size_t codeword_count = 0;
    std::uint64_t codeword_seed = 1;
};

inline constexpr std::size_t kMaxErrors = 8;

/// One decoder input: codeword plus an error pattern.
struct Stimulus {
    std::uint32_t codeword = 0;
    std::uint32_t group = 0;
    std::uint8_t error_number = 0;
    std::array<std::uint16_t, kMaxErrors> positions{};
    std::array<gf::Element, kMaxErrors> values{};
};

/// Random-access view of the stimuli of one campaign row.
class StimulusSpace {
public:
    /// Throws Error(SpecInvalid) if the spec does not fit the codec.
    StimulusSpace(const CampaignSpec& spec, const Codec& codec);

    std::size_t size() const noexcept { return total_; }
    Stimulus at(std::size_t index) const;

    const std::vector<std::vector<gf::Element>>& codewords() const noexcept { return codewords_; }
    std::size_t group_count() const noexcept { return group_labels_.size(); }
    const std::string& group_label(std::size_t g) const { return group_labels_[g]; }

    /// (offset, size) of each contiguous block sharing codeword and error count.
    std::vector<std::pair<std::size_t, std::size_t>> strata() const;

    /// Word the decoder sees for a stimulus (symbols; bits as 0/1 for BCH).
    std::vector<gf::Element> received(const Stimulus& s) const;

private:
    struct Block {
        std::uint32_t codeword;
        std::uint32_t group;
        std::uint8_t error_number;
        bool positions_varied;
        bool values_varied;
        std::size_t size;
        std::size_t offset;
    };

    std::vector<Block> blocks_;
    std::vector<std::vector<gf::Element>> codewords_;
    // combos_[nu] lists every nu-subset of positions in lexicographic order.
    std::vector<std::vector<std::array<std::uint16_t, kMaxErrors>>> combos_;
    std::vector<std::size_t> anchor_positions_;
    std::vector<gf::Element> anchor_values_;
    std::vector<std::string> group_labels_;
    std::uint32_t value_radix_ = 1;
    std::size_t total_ = 0;
};

/// Stimulus indices a row will decode, ascending and distinct: all of them, or a
/// stratified sample in which every block keeps at least one representative.
std::vector<std::size_t> select_indices(const StimulusSpace& space, const CampaignSpec& spec);

/// Per-stimulus outcome written by the kernels.
struct Outcome {
    std::uint32_t cycles = 0;
    std::uint8_t corrected = 0;
};

/// Reference kernel: plain loop, one decode per selected stimulus.
std::vector<Outcome> decode_serial(const StimulusSpace& space, std::span<const std::size_t> indices,
                                   const Codec& codec);
/// OpenMP kernel; output identical to decode_serial for any thread count.
std::vector<Outcome> decode_parallel(const StimulusSpace& space, std::span<const std::size_t> indices,
                                     const Codec& codec, int jobs = 0);

struct GroupResult {
    std::string frozen;
    std::set<Cycles> cycles;
    std::size_t runs = 0;

    bool operator==(const GroupResult&) const = default;
};

struct CampaignRow {
    ParamSet varied;
    /// False for rows that do not exist for the codec (error_value on BCH).
    bool applicable = true;
    std::vector<GroupResult> groups;
    std::set<Cycles> distinct_cycle_values;
    std::size_t t_d = 0;
    std::size_t runs = 0;
    std::size_t decode_failures = 0;

    bool constant() const noexcept { return t_d <= 1; }
    bool attacker_relevant() const noexcept;
    /// Two-letter constancy/relevance code, e.g. "NC/V".
    std::string code() const;
    /// "T_d:1 {28}", "T_d:1 {38}‖{66}‖{72}" or "T_d:3 {38, 66, 72}".
    std::string t_d_notation() const;

    bool operator==(const CampaignRow&) const = default;
};

enum class Verdict { Vulnerable, NotVulnerable };
std::string_view to_string(Verdict v) noexcept;

struct CampaignReport {
    std::string codec_id;
    std::string profile;
    TimingMode mode = TimingMode::SpeedOptimized;
    std::vector<CampaignRow> rows;
    Verdict verdict = Verdict::NotVulnerable;
    std::size_t total_runs = 0;

    bool operator==(const CampaignReport&) const = default;
};

struct RunOptions {
    /// Use the OpenMP kernel; the serial reference otherwise.
    bool parallel = true;
    int jobs = 0;
};

/// Runs one row. Throws Error(SpecInvalid) on a malformed spec.
CampaignReport run(const CampaignSpec& spec, const Codec& codec, const RunOptions& options = {});

/// The eleven varied-parameter combinations laid out as in the timing table.
const std::vector<ParamSet>& table_rows();

/// Every table row under `base` (its varied set is replaced per row).
CampaignReport run_table(const CampaignSpec& base, const Codec& codec, const RunOptions& options = {});

/// Vulnerable iff some attacker-relevant row shows a non-constant group.
Verdict classify(const std::vector<CampaignRow>& rows);

enum class Format { Text, Csv, Json };
std::optional<Format> parse_format(std::string_view s) noexcept;

std::string render(const CampaignReport& report, Format format);
nlohmann::json to_json(const CampaignReport& report);
CampaignReport report_from_json(const nlohmann::json& j);

/// Closed-form count sum_{i<=t} C(n,i) (2^s - 1)^i per codeword.
std::uint64_t error_pattern_count(std::size_t n, unsigned t, unsigned symbol_bits);

}  // namespace pufecc::campaign
