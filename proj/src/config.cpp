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

#include "pufecc/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <sstream>

#include "pufecc/error.hpp"

namespace pufecc::config {

namespace pt = boost::property_tree;

namespace {

pt::ptree read_ini(std::string_view text) {
    std::istringstream is{std::string(text)};
    pt::ptree tree;
    try {
        pt::read_ini(is, tree);
    } catch (const pt::ini_parser_error& e) {
        throw Error(ErrorCode::ConfigError, std::string("malformed INI: ") + e.message());
    }
    return tree;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(value, &used, 0);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ConfigError, "'" + key + "' must be an unsigned integer, got '" + value + "'");
    }
}

template <class T>
void read_uint(const pt::ptree& section, const std::string& key, T& out) {
    if (auto v = section.get_optional<std::string>(key)) out = static_cast<T>(parse_uint(key, *v));
}

}  // namespace

CodecSection codec_preset(std::string_view name) {
    CodecSection c;
    if (name == "bch" || name == "bch-serial" || name == "bch-parallel") {
        c.type = CodeFamily::Bch;
        c.n = 12;
        c.k = 4;
        c.t = 2;
        c.m = 4;
        c.reduction_poly = gf::kDefaultPoly4;
        c.bma_mode = name == "bch-parallel" ? BmaMode::Parallel : BmaMode::Serial;
        c.timing_profile = std::string(name == "bch-parallel" ? kProfileBchParallel : kProfileBchSerial);
        return c;
    }
    if (name == "rs" || name == "rs-worstcase") {
        c.type = CodeFamily::Rs;
        c.n = 8;
        c.k = 4;
        c.t = 2;
        c.m = 8;
        c.reduction_poly = gf::kDefaultPoly8;
        c.timing_profile = std::string(name == "rs" ? kProfileRs : kProfileRsWorstCase);
        return c;
    }
    throw Error(ErrorCode::ConfigError, "unknown codec '" + std::string(name) +
                                            "' (expected bch-serial, bch-parallel, rs or rs-worstcase)");
}

std::vector<TimingProfile> parse_profiles(std::string_view text) {
    const auto tree = read_ini(text);
    if (auto meta = tree.get_child_optional("meta")) {
        const auto version = meta->get<int>("version", kProfilesVersion);
        if (version != kProfilesVersion) {
            throw Error(ErrorCode::ConfigError, "unsupported profile file version " + std::to_string(version));
        }
    }
    std::vector<TimingProfile> out;
    for (const auto& [name, section] : tree) {
        if (name == "meta") continue;
        TimingProfile p;
        p.name = name;
        const auto family = parse_code_family(section.get<std::string>("family", ""));
        if (!family) throw Error(ErrorCode::ConfigError, "profile '" + name + "' needs family = bch|rs");
        p.family = *family;
        const auto mode = parse_timing_mode(section.get<std::string>("mode", "speed-optimized"));
        if (!mode) throw Error(ErrorCode::ConfigError, "profile '" + name + "' has an unknown mode");
        p.mode = *mode;
        if (auto bma = section.get_optional<std::string>("bma_mode")) {
            p.bma_mode = parse_bma_mode(*bma);
            if (!p.bma_mode) throw Error(ErrorCode::ConfigError, "profile '" + name + "' has an unknown bma_mode");
        }
        read_uint(section, "syndrome_cycles", p.syndrome_cycles);
        read_uint(section, "chien_cycles", p.chien_cycles);
        read_uint(section, "bma_cycles_per_iteration", p.bma_cycles_per_iteration);
        read_uint(section, "correction_cycles", p.correction_cycles);
        read_uint(section, "ea_fixed_cycles", p.ea_fixed_cycles);
        read_uint(section, "ea_cycles_per_iteration", p.ea_cycles_per_iteration);
        read_uint(section, "forney_cycles", p.forney_cycles);
        read_uint(section, "output_cycles", p.output_cycles);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<TimingProfile> load_profiles(const std::filesystem::path& path) {
    return parse_profiles(read_file(path));
}

ExperimentConfig parse_config(std::string_view text) {
    const auto tree = read_ini(text);
    ExperimentConfig cfg;

    const auto codec = tree.get_child("codec", pt::ptree{});
    const auto type_name = codec.get<std::string>("type", "bch");
    const auto family = parse_code_family(type_name);
    if (!family) throw Error(ErrorCode::ConfigError, "codec type must be bch or rs, got '" + type_name + "'");
    std::string preset = type_name;
    if (*family == CodeFamily::Bch) {
        preset = codec.get<std::string>("bma_mode", "serial") == "parallel" ? "bch-parallel" : "bch-serial";
    }
    cfg.codec = codec_preset(preset);
    read_uint(codec, "n", cfg.codec.n);
    read_uint(codec, "k", cfg.codec.k);
    read_uint(codec, "t", cfg.codec.t);
    read_uint(codec, "m", cfg.codec.m);
    read_uint(codec, "reduction_poly", cfg.codec.reduction_poly);
    if (auto bma = codec.get_optional<std::string>("bma_mode")) {
        const auto mode = parse_bma_mode(*bma);
        if (!mode) throw Error(ErrorCode::ConfigError, "bma_mode must be serial or parallel");
        cfg.codec.bma_mode = *mode;
    }
    cfg.codec.timing_profile = codec.get<std::string>("timing_profile", cfg.codec.timing_profile);

    const auto device = tree.get_child("device", pt::ptree{});
    if (auto w = device.get_optional<std::string>("w")) cfg.device.w_hex = *w;
    read_uint(device, "seed", cfg.device.seed);
    read_uint(device, "noise_seed", cfg.device.noise_seed);
    if (auto noise = device.get_optional<std::string>("noise")) {
        if (*noise == "none") {
            cfg.device.noise = 0.0;
        } else {
            const std::string_view v = *noise;
            const auto number = v.starts_with("bernoulli:") ? v.substr(10) : v;
            try {
                cfg.device.noise = std::stod(std::string(number));
            } catch (const std::exception&) {
                throw Error(ErrorCode::ConfigError, "noise must be none, a probability or bernoulli:<p>");
            }
        }
    }

    const auto paths = tree.get_child("paths", pt::ptree{});
    cfg.paths.helper = paths.get<std::string>("helper", cfg.paths.helper);
    cfg.paths.report = paths.get<std::string>("report", cfg.paths.report);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) { return parse_config(read_file(path)); }

Codec make_codec(const CodecSection& section, const std::vector<TimingProfile>& profiles) {
    const TimingProfile& profile = find_profile(profiles, section.timing_profile);
    if (profile.family != section.type) {
        throw Error(ErrorCode::ConfigError, "profile '" + profile.name + "' is for " +
                                                std::string(to_string(profile.family)) + " codecs");
    }
    try {
        if (section.type == CodeFamily::Bch) {
            if (profile.bma_mode && *profile.bma_mode != section.bma_mode) {
                throw Error(ErrorCode::ConfigError, "profile '" + profile.name + "' is calibrated for " +
                                                        std::string(to_string(*profile.bma_mode)) + " BMA");
            }
            return Codec(bch::BchConfig::make(section.n, section.k, section.t, section.m, section.reduction_poly,
                                              section.bma_mode, profile));
        }
        return Codec(rs::RsConfig::make(section.n, section.k, section.t, section.m, section.reduction_poly, profile));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        throw Error(ErrorCode::ConfigError, std::string("invalid codec configuration: ") + e.what());
    }
}

}  // namespace pufecc::config
