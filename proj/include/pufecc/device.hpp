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

#include <cstdint>
#include <optional>
#include <random>

#include "pufecc/common.hpp"

namespace pufecc::device {

/// Force bit `position` to `value` during the next measurement only.
struct FaultSpec {
    std::size_t position = 0;
    std::uint8_t value = 0;
};

struct NoiseModel {
    /// Independent flip probability per bit; 0 disables noise.
    double flip_probability = 0.0;
    std::uint64_t seed = 0;
};

/// Memory-based PUF with transient single-bit fault injection.
///
/// Not thread-safe: a measurement consumes the pending fault.
class PufDevice {
public:
    explicit PufDevice(Bits secret_w, NoiseModel noise = {});

    std::size_t width() const noexcept { return secret_w_.size(); }
    /// Ground truth, for experiment bookkeeping only; the attack never reads it.
    const Bits& secret() const noexcept { return secret_w_; }
    const std::optional<FaultSpec>& pending_fault() const noexcept { return pending_; }

    /// Response with the pending fault applied (then cleared) and noise on top.
    Bits measure();
    /// Replaces any pending fault. Throws Error(PositionOutOfRange).
    void inject_fault(FaultSpec fault);

    std::size_t measurements() const noexcept { return measurements_; }
    std::size_t injections() const noexcept { return injections_; }

private:
    Bits secret_w_;
    NoiseModel noise_;
    std::mt19937_64 rng_;
    std::optional<FaultSpec> pending_;
    std::size_t measurements_ = 0;
    std::size_t injections_ = 0;
};

/// Uniformly random response of `width` bits from a seeded generator.
Bits random_response(std::size_t width, std::uint64_t seed);

}  // namespace pufecc::device
