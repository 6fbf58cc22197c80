// SPDX-License-Identifier: Apache-2.0
//
// irsq - performance-loss analysis for IRS-aided links with discrete phase shifters
// Copyright (C) 2026 the irsq authors
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

#ifndef IRSQ_RANDOM_HPP
#define IRSQ_RANDOM_HPP

#include <cstdint>
#include <random>

namespace irsq {

// SplitMix64 mixing step. Used only to derive child seeds from a master seed.
std::uint64_t splitmix64(std::uint64_t state);

/// Seeded random source with stateless substream derivation.
///
/// substream(i) depends only on (seed, i) and never on draw history, so a set
/// of trials can be executed serially or in parallel and see bit-identical
/// streams. The uniform/normal transforms are hand-derived from the engine's
/// standardized 64-bit outputs: std::uniform_real_distribution and
/// std::normal_distribution are not bit-stable across standard library
/// implementations.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);

    // Child stream fully determined by (seed(), index); independent of any
    // draws already made on this stream.
    RandomStream substream(std::uint64_t index) const;

    std::uint64_t seed() const noexcept { return seed_; }

    double uniform01();                      // [0, 1), 53-bit resolution
    double uniform(double lo, double hi);    // [lo, hi)
    double gaussian();                       // standard normal (Box-Muller)

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

} // namespace irsq

#endif
