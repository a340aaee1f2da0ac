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

#include "cheshire/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cheshire/errors.hpp"

namespace cheshire {

uint64_t SampleRng::splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t SampleRng::sub_seed(uint64_t seed, uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x5851F42D4C957F2Dull));
}

double ConditionalDistribution::sample(double u) const {
    auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= values.size()) {
        idx = values.size() - 1;
    }
    return values[idx];
}

double ConditionalDistribution::mean() const {
    double total = 0;
    for (std::size_t k = 0; k < values.size(); k++) {
        total += values[k] * pmf[k];
    }
    return total;
}

namespace {

ConditionalDistribution finalize(std::vector<double> values, std::vector<double> weights) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    ConditionalDistribution out;
    out.values.resize(values.size());
    out.pmf.resize(values.size());
    out.cdf.resize(values.size());
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    double running = 0;
    for (std::size_t k = 0; k < order.size(); k++) {
        out.values[k] = values[order[k]];
        out.pmf[k] = weights[order[k]] / total;
        running += out.pmf[k];
        out.cdf[k] = running;
    }
    out.cdf.back() = 1.0;
    return out;
}

}  // namespace

ConditionalDistribution position_distribution(const PointerState &pointer) {
    std::vector<double> values(pointer.n_points());
    for (std::size_t k = 0; k < pointer.n_points(); k++) {
        values[k] = pointer.position(k);
    }
    return finalize(std::move(values), pointer.position_density());
}

ConditionalDistribution momentum_distribution(const PointerState &pointer) {
    return finalize(pointer.momentum_grid(), pointer.momentum_density());
}

PointerReadout sample_clicks(const TwoStateVector &tsv, const LabeledOperator &observable,
                             const CouplingConfig &config, long long n_trials, uint64_t seed) {
    if (n_trials < 1) {
        throw Error("sample_clicks needs at least one trial");
    }
    PointerState initial = PointerState::gaussian(config.sigma);
    ConditionalPointer conditional = couple_and_postselect(tsv, observable, config, initial);
    if (conditional.postselect_prob < 1e-12) {
        throw StarvationError(
            "post-selection probability " + std::to_string(conditional.postselect_prob) +
            " is too small to sample");
    }
    ConditionalDistribution in_position = position_distribution(conditional.pointer);
    ConditionalDistribution in_momentum = momentum_distribution(conditional.pointer);

    SampleRng rng(seed);
    long long accepted = 0;
    double sum_x = 0, sum_xx = 0, sum_p = 0, sum_pp = 0;
    for (long long t = 0; t < n_trials; t++) {
        if (rng.uniform() >= conditional.postselect_prob) {
            continue;
        }
        accepted++;
        double x = in_position.sample(rng.uniform());
        double p = in_momentum.sample(rng.uniform());
        sum_x += x;
        sum_xx += x * x;
        sum_p += p;
        sum_pp += p * p;
    }
    if (accepted < 2) {
        throw StarvationError("post-selection accepted fewer than two of " +
                              std::to_string(n_trials) + " trials");
    }

    double n = static_cast<double>(accepted);
    PointerReadout out;
    out.mean_position = sum_x / n;
    out.mean_momentum = sum_p / n;
    out.postselect_prob = conditional.postselect_prob;
    out.momentum_variance = initial.momentum_variance();
    out.n_samples = accepted;
    double var_x = std::max(0.0, (sum_xx - n * out.mean_position * out.mean_position) / (n - 1));
    double var_p = std::max(0.0, (sum_pp - n * out.mean_momentum * out.mean_momentum) / (n - 1));
    out.std_error_position = std::sqrt(var_x / n);
    out.std_error_momentum = std::sqrt(var_p / n);
    return out;
}

namespace {

struct MomentSums {
    double n = 0;
    double sum = 0;
    double sum_sq = 0;
};

MomentSums recover(double n, double mean, double std_error) {
    MomentSums out;
    out.n = n;
    out.sum = n * mean;
    out.sum_sq = std_error * std_error * n * (n - 1) + n * mean * mean;
    return out;
}

void fold(const MomentSums &total, double &mean, std::optional<double> &std_error) {
    mean = total.sum / total.n;
    double var = std::max(0.0, (total.sum_sq - total.n * mean * mean) / (total.n - 1));
    std_error = std::sqrt(var / total.n);
}

}  // namespace

PointerReadout merge_readouts(const PointerReadout &a, const PointerReadout &b) {
    if (!a.n_samples.has_value() || !b.n_samples.has_value() ||
        !a.std_error_position.has_value() || !b.std_error_position.has_value() ||
        !a.std_error_momentum.has_value() || !b.std_error_momentum.has_value()) {
        throw Error("merge_readouts needs sampled readouts with counts and standard errors");
    }
    double na = static_cast<double>(*a.n_samples);
    double nb = static_cast<double>(*b.n_samples);
    MomentSums x{na + nb, 0, 0};
    MomentSums xa = recover(na, a.mean_position, *a.std_error_position);
    MomentSums xb = recover(nb, b.mean_position, *b.std_error_position);
    x.sum = xa.sum + xb.sum;
    x.sum_sq = xa.sum_sq + xb.sum_sq;
    MomentSums p{na + nb, 0, 0};
    MomentSums pa = recover(na, a.mean_momentum, *a.std_error_momentum);
    MomentSums pb = recover(nb, b.mean_momentum, *b.std_error_momentum);
    p.sum = pa.sum + pb.sum;
    p.sum_sq = pa.sum_sq + pb.sum_sq;

    PointerReadout out;
    out.postselect_prob = a.postselect_prob;
    out.momentum_variance = a.momentum_variance;
    out.n_samples = *a.n_samples + *b.n_samples;
    fold(x, out.mean_position, out.std_error_position);
    fold(p, out.mean_momentum, out.std_error_momentum);
    return out;
}

}  // namespace cheshire
