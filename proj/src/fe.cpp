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

#include "pufecc/fe.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <random>
#include <sstream>

#include "pufecc/error.hpp"

namespace pufecc::fe {

std::string FEKey::hex() const { return to_hex(key_bytes); }

FEKey derive_key(std::span<const std::uint8_t> w, KeySource source, std::size_t key_bytes) {
    if (key_bytes == 0 || key_bytes > 32) {
        throw Error(ErrorCode::ConfigError, "key length must be within 1..32 bytes");
    }
    const auto packed = pack_bits(w);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(packed.data(), packed.size(), digest, &len, EVP_sha256(), nullptr) != 1 || len != 32) {
        throw Error(ErrorCode::ConfigError, "SHA-256 digest failed");
    }
    return FEKey{std::vector<std::uint8_t>(digest, digest + key_bytes), source};
}

Bits random_secret(const Codec& codec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    Bits s(codec.message_bits());
    for (auto& b : s) b = coin(rng) ? 1 : 0;
    return s;
}

Enrollment generate(std::span<const std::uint8_t> w, std::span<const std::uint8_t> secret,
                    const Codec& codec, std::size_t key_bytes) {
    if (w.size() != codec.width_bits()) {
        throw Error(ErrorCode::LengthMismatch, "PUF response must be " + std::to_string(codec.width_bits()) +
                                                   " bits for " + codec.id());
    }
    const Bits codeword = codec.encode(secret);
    return Enrollment{HelperData{xor_bits(w, codeword), codec.id()},
                      derive_key(w, KeySource::Generated, key_bytes)};
}

Reconstruction reconstruct(std::span<const std::uint8_t> w_prime, const HelperData& helper,
                           const Codec& codec, std::size_t key_bytes) {
    if (w_prime.size() != codec.width_bits() || helper.mask.size() != codec.width_bits()) {
        throw Error(ErrorCode::LengthMismatch, "measurement or helper width does not match " + codec.id());
    }
    if (helper.codec_id != codec.id()) {
        throw Error(ErrorCode::LengthMismatch,
                    "helper data was produced by " + helper.codec_id + ", not " + codec.id());
    }
    const auto decoded = codec.decode(xor_bits(w_prime, helper.mask));
    if (decoded.status != DecodeStatus::Ok) {
        throw Error(ErrorCode::ReconstructFailed,
                    "decoder could not correct the measurement (cycles=" + std::to_string(decoded.cycles) + ")");
    }
    const Bits secret = codec.extract_message(decoded.corrected);
    const Bits w = xor_bits(helper.mask, codec.encode(secret));
    return Reconstruction{derive_key(w, KeySource::Reconstructed, key_bytes), decoded.cycles, decoded.status,
                          decoded.error_count};
}

std::string format_helper(const HelperData& helper) {
    std::ostringstream os;
    os << kHelperMagic << ' ' << helper.codec_id << '\n' << bits_to_hex(helper.mask) << '\n';
    return os.str();
}

HelperData parse_helper(std::string_view text, std::size_t width_bits) {
    std::istringstream is{std::string(text)};
    std::string magic, codec_id, hex;
    if (!(is >> magic >> codec_id >> hex) || magic != kHelperMagic) {
        throw Error(ErrorCode::ParseError, "not a helper-data file (expected '" + std::string(kHelperMagic) + "')");
    }
    return HelperData{bits_from_hex(hex, width_bits), codec_id};
}

void save_helper(const std::filesystem::path& path, const HelperData& helper) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + path.string());
    out << format_helper(helper);
}

HelperData load_helper(const std::filesystem::path& path, std::size_t width_bits) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_helper(buf.str(), width_bits);
}

}  // namespace pufecc::fe
