// Copyright 2026 The Cheshire Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHESHIRE_SAMPLING_HPP
#define CHESHIRE_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cheshire/pointer.hpp"

namespace cheshire {

/// Reproducible random stream: a mt19937_64 engine seeded through
/// splitmix64, with uniforms built from the top 53 bits of the raw output.
/// Avoiding std::uniform_real_distribution keeps the stream identical
/// across standard libraries; sub-streams for parallel workers come from
/// sub_seed(). Fixed seed => byte-identical sample stream.
class SampleRng {
   public:
    explicit SampleRng(uint64_t seed) : engine_(splitmix64(seed)) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    static uint64_t splitmix64(uint64_t x);
    static uint64_t sub_seed(uint64_t seed, uint64_t stream);

   private:
    std::mt19937_64 engine_;
};

/// The exact conditional readout distributions after post-selection:
/// probability mass per grid value, sorted ascending by value.
struct ConditionalDistribution {
    std::vector<double> values;
    std::vector<double> pmf;
    std::vector<double> cdf;

    double sample(double u) const;  // inverse-CDF lookup for u in [0,1)
    double mean() const;
};

ConditionalDistribution position_distribution(const PointerState &pointer);
ConditionalDistribution momentum_distribution(const PointerState &pointer);

/// Simulates n_trials post-selected weak-measurement events: each trial
/// passes post-selection with the exact probability, and accepted events
/// draw a position and a momentum reading from the exact conditional
/// distributions (inverse-CDF on the grid). Returns empirical means with
/// standard errors ~ sigma / sqrt(n_trials * postselect_prob).
/// Deterministic for a fixed seed.
PointerReadout sample_clicks(const TwoStateVector &tsv, const LabeledOperator &observable,
                             const CouplingConfig &config, long long n_trials, uint64_t seed);

/// Combines readouts from workers running on disjoint sub-seeds. The
/// merge is associative: it reconstructs and adds the underlying count
/// and moment sums. Both inputs need sample counts.
PointerReadout merge_readouts(const PointerReadout &a, const PointerReadout &b);

}  // namespace cheshire

#endif
