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

#include "pufecc/device.hpp"

#include <string>

#include "pufecc/error.hpp"

namespace pufecc::device {

PufDevice::PufDevice(Bits secret_w, NoiseModel noise)
    : secret_w_(std::move(secret_w)), noise_(noise), rng_(noise.seed) {
    for (auto& b : secret_w_) b &= 1;
    if (noise_.flip_probability < 0.0 || noise_.flip_probability > 1.0) {
        throw Error(ErrorCode::ConfigError, "noise flip probability must lie in [0, 1]");
    }
}

Bits PufDevice::measure() {
    Bits out = secret_w_;
    if (pending_) {
        out[pending_->position] = pending_->value;
        pending_.reset();
    }
    if (noise_.flip_probability > 0.0) {
        std::bernoulli_distribution flip(noise_.flip_probability);
        for (auto& b : out) b ^= flip(rng_) ? 1 : 0;
    }
    ++measurements_;
    return out;
}

void PufDevice::inject_fault(FaultSpec fault) {
    if (fault.position >= secret_w_.size()) {
        throw Error(ErrorCode::PositionOutOfRange, "fault position " + std::to_string(fault.position) +
                                                       " outside a " + std::to_string(secret_w_.size()) +
                                                       "-bit response");
    }
    fault.value &= 1;
    pending_ = fault;
    ++injections_;
}

Bits random_response(std::size_t width, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Bits w(width);
    for (auto& b : w) b = static_cast<std::uint8_t>(rng() & 1);
    return w;
}

}  // namespace pufecc::device
