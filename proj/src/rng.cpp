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
#include "fdmimo/rng.hpp"

namespace fdmimo {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t master_seed, std::uint64_t stream_index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream_index), static_cast<std::uint32_t>(stream_index >> 32)};
    return std::mt19937_64(seq);
}

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index), engine_(seeded_engine(master_seed, stream_index))
{
}

RngStream RngStream::fork(std::uint64_t tag) const
{
    return RngStream(mix64(master_seed_ ^ mix64(tag + 1)), stream_index_);
}

} // namespace fdmimo
