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

#include <omp.h>

#include <algorithm>

#include "pufecc/campaign.hpp"

namespace pufecc::campaign {

namespace {

Outcome decode_one(const StimulusSpace& space, std::size_t index, const Codec& codec) {
    const Stimulus s = space.at(index);
    const auto word = space.received(s);
    const auto& expected = space.codewords()[s.codeword];

    if (const auto* cfg = codec.bch()) {
        const Bits bits(word.begin(), word.end());
        const auto r = bch::decode(bits, *cfg);
        const bool ok = r.status == DecodeStatus::Ok &&
                        std::equal(r.corrected.begin(), r.corrected.end(), expected.begin(), expected.end());
        return {static_cast<std::uint32_t>(r.cycles), static_cast<std::uint8_t>(ok)};
    }
    const auto r = rs::decode(word, *codec.rs());
    const bool ok = r.status == DecodeStatus::Ok && r.corrected == expected;
    return {static_cast<std::uint32_t>(r.cycles), static_cast<std::uint8_t>(ok)};
}

}  // namespace

std::vector<Outcome> decode_serial(const StimulusSpace& space, std::span<const std::size_t> indices,
                                   const Codec& codec) {
    std::vector<Outcome> out(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) out[i] = decode_one(space, indices[i], codec);
    return out;
}

std::vector<Outcome> decode_parallel(const StimulusSpace& space, std::span<const std::size_t> indices,
                                     const Codec& codec, int jobs) {
    std::vector<Outcome> out(indices.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const auto count = static_cast<std::ptrdiff_t>(indices.size());

    // Each slot is written by exactly one iteration, so the result does not
    // depend on scheduling.
#pragma omp parallel for schedule(dynamic, 1024) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = decode_one(space, indices[static_cast<std::size_t>(i)], codec);
    }
    return out;
}

}  // namespace pufecc::campaign
