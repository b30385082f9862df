// SPDX-License-Identifier: Apache-2.0
//
// fdmimo - full-duplex large-scale MIMO self-interference cancellation simulator
// Copyright (C) 2026 The fdmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <random>

namespace fdmimo {

/// Reproducible random stream identified by (master_seed, stream_index).
///
/// Two streams built from the same pair yield identical draw sequences. The
/// engine state is derived from both words through std::seed_seq, so every
/// Monte Carlo trial can own its own stream and be evaluated in any order
/// or on any thread.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    /// Independent child stream for a named purpose inside one trial
    /// (e.g. channel draws vs. estimation-error draws).
    RngStream fork(std::uint64_t tag) const;

    double standard_normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace fdmimo
