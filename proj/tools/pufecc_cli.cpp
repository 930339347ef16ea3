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

// pufecc: encode/decode words, enroll and reconstruct fuzzy-extractor keys,
// run timing campaigns and the fault + timing attack.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pufecc/attack.hpp"
#include "pufecc/campaign.hpp"
#include "pufecc/config.hpp"
#include "pufecc/device.hpp"
#include "pufecc/error.hpp"
#include "pufecc/fe.hpp"

namespace {

using namespace pufecc;
using json = nlohmann::json;

constexpr std::uint64_t kSecretSeedSalt = 0x5EED5EC12E7ULL;

struct CommonOptions {
    std::string config_path;
    std::string codec;
    std::string profile;
    std::string profiles_path;
    std::string format = "text";
    std::uint64_t seed = 1;
    bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--config", o.config_path, "Experiment config file (INI)")->check(CLI::ExistingFile);
    cmd->add_option("--codec", o.codec, "Codec preset: bch-serial, bch-parallel, rs, rs-worstcase");
    cmd->add_option("--profile", o.profile, "Timing profile name");
    cmd->add_option("--profiles", o.profiles_path, "Timing profile data file")->check(CLI::ExistingFile);
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--seed", o.seed, "Seed for every random choice");
}

struct Context {
    config::ExperimentConfig cfg;
    Codec codec;
};

Context resolve(const CommonOptions& o) {
    config::ExperimentConfig cfg;
    if (!o.config_path.empty()) cfg = config::load_config(o.config_path);
    if (!o.codec.empty()) cfg.codec = config::codec_preset(o.codec);
    const auto profiles = o.profiles_path.empty() ? builtin_profiles() : config::load_profiles(o.profiles_path);
    if (!o.profile.empty()) {
        cfg.codec.timing_profile = o.profile;
        const auto& p = find_profile(profiles, o.profile);
        if (p.bma_mode) cfg.codec.bma_mode = *p.bma_mode;
    }
    Codec codec = config::make_codec(cfg.codec, profiles);
    return {std::move(cfg), std::move(codec)};
}

Bits device_response(const Context& ctx, const std::string& w_hex, const CommonOptions& o) {
    if (!w_hex.empty()) return bits_from_hex(w_hex, ctx.codec.width_bits());
    if (ctx.cfg.device.w_hex && !o.seed_given) return bits_from_hex(*ctx.cfg.device.w_hex, ctx.codec.width_bits());
    return device::random_response(ctx.codec.width_bits(), o.seed_given ? o.seed : ctx.cfg.device.seed);
}

Bits secret_message(const Context& ctx, const std::string& secret_hex, const CommonOptions& o) {
    if (!secret_hex.empty()) return bits_from_hex(secret_hex, ctx.codec.message_bits());
    const std::uint64_t seed = o.seed_given ? o.seed : ctx.cfg.device.seed;
    return fe::random_secret(ctx.codec, seed ^ kSecretSeedSalt);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + path);
    out << text;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

// --- encode ----------------------------------------------------------------

int cmd_encode(const CommonOptions& o, const std::string& message_hex) {
    const auto ctx = resolve(o);
    const Bits msg = secret_message(ctx, message_hex, o);
    const Bits cw = ctx.codec.encode(msg);
    if (o.format == "json") {
        std::cout << json{{"codec", ctx.codec.id()}, {"message", bits_to_hex(msg)}, {"codeword", bits_to_hex(cw)}}.dump()
                  << '\n';
    } else {
        std::cout << "message=" << bits_to_hex(msg) << " codeword=" << bits_to_hex(cw) << '\n';
    }
    return 0;
}

// --- decode ----------------------------------------------------------------

int cmd_decode(const CommonOptions& o, const std::string& in_hex) {
    const auto ctx = resolve(o);
    const Bits received = bits_from_hex(in_hex, ctx.codec.width_bits());

    json j = {{"codec", ctx.codec.id()}, {"profile", ctx.codec.timing().name}, {"received", in_hex}};
    std::ostringstream text;
    if (const auto* cfg = ctx.codec.bch()) {
        const auto r = bch::decode(received, *cfg);
        j["corrected"] = bits_to_hex(r.corrected);
        j["status"] = to_string(r.status);
        j["error_positions"] = r.error_positions;
        j["cycles"] = r.cycles;
        j["bma_iterations"] = r.bma_iterations;
        text << "corrected=" << bits_to_hex(r.corrected) << " status=" << to_string(r.status) << " errors=["
             << join(r.error_positions) << "] cycles=" << r.cycles << '\n';
    } else {
        const auto& rcfg = *ctx.codec.rs();
        const auto r = rs::decode(rs::bits_to_symbols(received, rcfg.symbol_bits), rcfg);
        const auto corrected = bits_to_hex(rs::symbols_to_bits(r.corrected, rcfg.symbol_bits));
        json values = json::object();
        std::string value_text;
        for (const auto& [pos, v] : r.error_values) {
            values[std::to_string(pos)] = v;
            value_text += (value_text.empty() ? "" : ",") + std::to_string(pos) + ":" + std::to_string(v);
        }
        j["corrected"] = corrected;
        j["status"] = to_string(r.status);
        j["error_positions"] = r.error_positions;
        j["error_values"] = values;
        j["cycles"] = r.cycles;
        j["ea_iterations"] = r.ea_iterations;
        text << "corrected=" << corrected << " status=" << to_string(r.status) << " errors=[" << value_text
             << "] cycles=" << r.cycles << '\n';
    }
    std::cout << (o.format == "json" ? j.dump() + "\n" : text.str());
    return 0;
}

// --- fe-gen / fe-rec -------------------------------------------------------

int cmd_fe_gen(const CommonOptions& o, const std::string& w_hex, const std::string& secret_hex,
               std::string helper_path) {
    const auto ctx = resolve(o);
    if (helper_path.empty()) helper_path = ctx.cfg.paths.helper;
    const Bits w = device_response(ctx, w_hex, o);
    const Bits secret = secret_message(ctx, secret_hex, o);
    const auto enrollment = fe::generate(w, secret, ctx.codec);
    fe::save_helper(helper_path, enrollment.helper);
    if (o.format == "json") {
        std::cout << json{{"codec", ctx.codec.id()}, {"helper", helper_path}, {"key", enrollment.key.hex()}}.dump()
                  << '\n';
    } else {
        std::cout << "key=" << enrollment.key.hex() << " helper=" << helper_path << '\n';
    }
    return 0;
}

int cmd_fe_rec(const CommonOptions& o, const std::string& w_hex, std::string helper_path,
               const std::string& fault) {
    const auto ctx = resolve(o);
    if (helper_path.empty()) helper_path = ctx.cfg.paths.helper;
    const auto helper = fe::load_helper(helper_path, ctx.codec.width_bits());

    device::PufDevice dev(device_response(ctx, w_hex, o), {ctx.cfg.device.noise, ctx.cfg.device.noise_seed});
    if (!fault.empty()) {
        const auto colon = fault.find(':');
        if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "--fault expects <position>:<0|1>");
        dev.inject_fault({std::stoul(fault.substr(0, colon)), static_cast<std::uint8_t>(std::stoul(fault.substr(colon + 1)))});
    }
    const auto rec = fe::reconstruct(dev.measure(), helper, ctx.codec);
    if (o.format == "json") {
        std::cout << json{{"codec", ctx.codec.id()},
                          {"key", rec.key.hex()},
                          {"cycles", rec.cycles},
                          {"status", to_string(rec.status)},
                          {"corrected_errors", rec.corrected_errors}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "key=" << rec.key.hex() << " cycles=" << rec.cycles << " status=" << to_string(rec.status) << '\n';
    }
    return 0;
}

// --- campaign --------------------------------------------------------------

struct CampaignOptions {
    std::string vary;
    std::vector<std::string> fix;
    bool table = false;
    std::size_t sample = 0;
    std::size_t codewords = 0;
    int jobs = 0;
    bool serial = false;
    std::string out;
};

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoul(item, nullptr, 0));
        } catch (const std::exception&) {
            throw Error(ErrorCode::SpecInvalid, "bad list element '" + item + "'");
        }
    }
    return out;
}

void apply_fix(campaign::FixedValues& fixed, const std::string& binding) {
    const auto eq = binding.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::SpecInvalid, "--fix expects name=value, got '" + binding + "'");
    const auto name = binding.substr(0, eq);
    const auto values = parse_list(binding.substr(eq + 1));
    const auto p = campaign::parse_param(name);
    if (!p || values.empty()) throw Error(ErrorCode::SpecInvalid, "bad --fix binding '" + binding + "'");
    switch (*p) {
        case campaign::Param::CodewordValue: fixed.codeword_index = values.front(); break;
        case campaign::Param::ErrorNumber: fixed.error_number = static_cast<unsigned>(values.front()); break;
        case campaign::Param::ErrorPosition: fixed.error_positions = values; break;
        case campaign::Param::ErrorValue:
            fixed.error_values.emplace();
            for (auto v : values) fixed.error_values->push_back(static_cast<gf::Element>(v));
            break;
    }
}

int cmd_campaign(const CommonOptions& o, const CampaignOptions& c) {
    const auto ctx = resolve(o);
    campaign::CampaignSpec spec;
    for (const auto& f : c.fix) apply_fix(spec.fixed, f);
    if (c.sample > 0) spec.sampling = campaign::Sampling::sampled(o.seed, c.sample);
    spec.codeword_count = c.codewords;
    spec.codeword_seed = o.seed;

    const campaign::RunOptions run{!c.serial, c.jobs};
    campaign::CampaignReport report;
    if (c.table || c.vary.empty()) {
        report = campaign::run_table(spec, ctx.codec, run);
    } else {
        spec.varied = campaign::parse_param_list(c.vary);
        report = campaign::run(spec, ctx.codec, run);
    }
    const auto format = campaign::parse_format(o.format).value_or(campaign::Format::Text);
    const auto out = c.out.empty() ? ctx.cfg.paths.report : c.out;
    write_output(campaign::render(report, format), out);
    return 0;
}

// --- attack ----------------------------------------------------------------

struct AttackCliOptions {
    std::string w_hex;
    std::string helper_path;
    unsigned polarity = 1;
    std::uint64_t jitter = 0;
    std::size_t probes = 4;
    std::string out;
};

int cmd_attack(const CommonOptions& o, const AttackCliOptions& a) {
    const auto ctx = resolve(o);
    const Bits w = device_response(ctx, a.w_hex, o);
    fe::HelperData helper;
    if (!a.helper_path.empty()) {
        helper = fe::load_helper(a.helper_path, ctx.codec.width_bits());
    } else {
        helper = fe::generate(w, secret_message(ctx, "", o), ctx.codec).helper;
    }

    device::PufDevice dev(w, {ctx.cfg.device.noise, ctx.cfg.device.noise_seed});
    attack::CalibrationOptions cal_opts;
    cal_opts.probe_positions = a.probes;
    const auto leakage = attack::calibrate(dev, helper, ctx.codec, cal_opts);

    attack::AttackOptions opts;
    opts.polarity = static_cast<std::uint8_t>(a.polarity);
    opts.jitter = a.jitter;
    opts.jitter_seed = o.seed;
    const auto trace = attack::run(dev, helper, ctx.codec, leakage, opts);

    std::string text;
    if (o.format == "json") {
        text = attack::to_json(trace).dump(2) + "\n";
    } else {
        text = attack::render_table(trace);
    }
    write_output(text, a.out);
    if (!a.out.empty() && !trace.recovered) std::cout << "undecidable: constant-time target\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pufecc: cycle-accurate PUF fuzzy-extractor ECC simulator and timing attack tool"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string message_hex, in_hex, w_hex, secret_hex, helper_path, fault;
    CampaignOptions camp;
    AttackCliOptions atk;

    auto* enc = app.add_subcommand("encode", "Encode a message");
    add_common(enc, common);
    enc->add_option("--message", message_hex, "Message bits as packed LSB-first hex (random from --seed if absent)");

    auto* dec = app.add_subcommand("decode", "Decode a received word and report its latency");
    add_common(dec, common);
    dec->add_option("--in", in_hex, "Received word as packed LSB-first hex")->required();

    auto* gen = app.add_subcommand("fe-gen", "Fuzzy-extractor enrollment: write helper data, print key");
    add_common(gen, common);
    gen->add_option("--w", w_hex, "PUF response W (hex); drawn from the config or --seed if absent");
    gen->add_option("--secret", secret_hex, "Secret message S0 (hex); drawn from --seed if absent");
    gen->add_option("--helper", helper_path, "Helper-data output file");

    auto* rec = app.add_subcommand("fe-rec", "Fuzzy-extractor reconstruction from a measurement");
    add_common(rec, common);
    rec->add_option("--w", w_hex, "Measured response W' (hex)");
    rec->add_option("--helper", helper_path, "Helper-data file");
    rec->add_option("--fault", fault, "Transient fault <position>:<value> applied to the measurement");

    auto* cam = app.add_subcommand("campaign", "Timing campaign over the stimulus parameters");
    add_common(cam, common);
    cam->add_option("--vary", camp.vary, "Comma list of codeword_value,error_number,error_position,error_value");
    cam->add_option("--fix", camp.fix, "Bind a frozen parameter, e.g. error_number=1 or error_position=3,5");
    cam->add_flag("--table", camp.table, "Run every row of the timing table (default without --vary)");
    cam->add_option("--sample", camp.sample, "Stratified sample of N stimuli instead of the full sweep");
    cam->add_option("--codewords", camp.codewords, "Number of codewords in the sweep (0 = codec default)");
    cam->add_option("--jobs", camp.jobs, "Worker threads (0 = all)");
    cam->add_flag("--serial", camp.serial, "Use the serial reference kernel");
    cam->add_option("--out", camp.out, "Report file (stdout if absent)");

    auto* att = app.add_subcommand("attack", "Fault-injection + timing attack on a simulated device");
    add_common(att, common);
    att->add_option("--w", atk.w_hex, "Device response W (hex); drawn from the config or --seed if absent");
    att->add_option("--helper", atk.helper_path, "Helper-data file (enrolls the device itself if absent)");
    att->add_option("--polarity", atk.polarity, "Injected logic value f")->check(CLI::Range(0, 1));
    att->add_option("--jitter", atk.jitter, "Uniform +-jitter on observed latencies");
    att->add_option("--probes", atk.probes, "Calibration probe positions");
    att->add_option("--out", atk.out, "Trace output file (stdout if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    for (auto* cmd : app.get_subcommands()) {
        if (cmd->count("--seed") > 0) common.seed_given = true;
    }

    try {
        if (enc->parsed()) return cmd_encode(common, message_hex);
        if (dec->parsed()) return cmd_decode(common, in_hex);
        if (gen->parsed()) return cmd_fe_gen(common, w_hex, secret_hex, helper_path);
        if (rec->parsed()) return cmd_fe_rec(common, w_hex, helper_path, fault);
        if (cam->parsed()) return cmd_campaign(common, camp);
        if (att->parsed()) return cmd_attack(common, atk);
    } catch (const Error& e) {
        std::cerr << "error code=" << to_string(e.code()) << " message=" << json(e.what()).dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error code=Internal message=" << json(e.what()).dump() << '\n';
        return 1;
    }
    return 2;
}
