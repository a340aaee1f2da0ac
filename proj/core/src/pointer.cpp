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

#include "cheshire/pointer.hpp"

#include <cmath>

#include "cheshire/errors.hpp"
#include "cheshire/fft.hpp"
#include "cheshire/hermitian_eig.hpp"

namespace cheshire {

PointerState::PointerState(double grid_min, double grid_max, std::vector<Complex> amplitudes)
    : min_(grid_min), max_(grid_max), amps_(std::move(amplitudes)) {
    if (!(grid_min < grid_max) || !std::isfinite(grid_min) || !std::isfinite(grid_max)) {
        throw Error("pointer grid bounds must satisfy grid_min < grid_max");
    }
    if (!is_power_of_two(amps_.size())) {
        throw Error("pointer grid size must be a power of two");
    }
    for (const Complex &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error("non-finite pointer amplitude");
        }
    }
    double n2 = norm_sq();
    if (std::abs(n2 - 1.0) > 1e-9) {
        throw Error("pointer state must be normalized (got norm^2 = " + std::to_string(n2) + ")");
    }
    // Make the normalization exact after the tolerance gate.
    double correction = 1.0 / std::sqrt(n2);
    for (Complex &a : amps_) {
        a *= correction;
    }
    if (boundary_density_ratio() > kBoundaryDensityRatioMax) {
        throw Error("pointer grid too narrow: boundary density above the allowed ratio");
    }
}

PointerState PointerState::gaussian(double sigma, std::size_t n_points,
                                    double half_width_sigmas) {
    if (!(sigma > 0)) {
        throw Error("pointer sigma must be positive");
    }
    if (!is_power_of_two(n_points)) {
        throw Error("pointer grid size must be a power of two");
    }
    double half = half_width_sigmas * sigma;
    double dx = 2 * half / static_cast<double>(n_points);
    std::vector<Complex> amps(n_points);
    double total = 0;
    for (std::size_t k = 0; k < n_points; k++) {
        double x = -half + (static_cast<double>(k) + 0.5) * dx;
        double a = std::exp(-x * x / (4 * sigma * sigma));
        amps[k] = Complex{a, 0};
        total += a * a * dx;
    }
    double scale = 1.0 / std::sqrt(total);
    for (Complex &a : amps) {
        a *= scale;
    }
    return PointerState(-half, half, std::move(amps));
}

double PointerState::dx() const {
    return (max_ - min_) / static_cast<double>(amps_.size());
}

double PointerState::position(std::size_t index) const {
    return min_ + (static_cast<double>(index) + 0.5) * dx();
}

double PointerState::norm_sq() const {
    double total = 0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total * dx();
}

double PointerState::mean_position() const {
    double num = 0, den = 0;
    for (std::size_t k = 0; k < amps_.size(); k++) {
        double w = std::norm(amps_[k]);
        num += position(k) * w;
        den += w;
    }
    return num / den;
}

std::vector<double> PointerState::momentum_grid() const {
    std::size_t n = amps_.size();
    std::vector<double> out(n);
    double dp = 2 * M_PI / (static_cast<double>(n) * dx());
    for (std::size_t k = 0; k < n; k++) {
        double f = (k < n / 2) ? static_cast<double>(k)
                               : static_cast<double>(k) - static_cast<double>(n);
        out[k] = f * dp;
    }
    return out;
}

std::vector<double> PointerState::momentum_density() const {
    std::vector<Complex> hat = amps_;
    fft_in_place(hat, false);
    std::vector<double> out(hat.size());
    double total = 0;
    for (std::size_t k = 0; k < hat.size(); k++) {
        out[k] = std::norm(hat[k]);
        total += out[k];
    }
    for (double &w : out) {
        w /= total;
    }
    return out;
}

std::vector<double> PointerState::position_density() const {
    std::vector<double> out(amps_.size());
    double total = 0;
    for (std::size_t k = 0; k < amps_.size(); k++) {
        out[k] = std::norm(amps_[k]);
        total += out[k];
    }
    for (double &w : out) {
        w /= total;
    }
    return out;
}

double PointerState::mean_momentum() const {
    std::vector<double> density = momentum_density();
    std::vector<double> p = momentum_grid();
    double mean = 0;
    for (std::size_t k = 0; k < density.size(); k++) {
        mean += p[k] * density[k];
    }
    return mean;
}

double PointerState::momentum_variance() const {
    std::vector<double> density = momentum_density();
    std::vector<double> p = momentum_grid();
    double mean = 0, second = 0;
    for (std::size_t k = 0; k < density.size(); k++) {
        mean += p[k] * density[k];
        second += p[k] * p[k] * density[k];
    }
    return second - mean * mean;
}

double PointerState::boundary_density_ratio() const {
    double peak = 0;
    for (const Complex &a : amps_) {
        peak = std::max(peak, std::norm(a));
    }
    if (peak == 0) {
        return 0;
    }
    double edge = std::max(std::norm(amps_.front()), std::norm(amps_.back()));
    return edge / peak;
}

PointerState shifted(const PointerState &pointer, double displacement) {
    std::vector<Complex> hat = pointer.amplitudes();
    fft_in_place(hat, false);
    std::vector<double> p = pointer.momentum_grid();
    for (std::size_t k = 0; k < hat.size(); k++) {
        hat[k] *= std::polar(1.0, -p[k] * displacement);
    }
    fft_in_place(hat, true);
    return PointerState(pointer.grid_min(), pointer.grid_max(), std::move(hat));
}

namespace {

struct FullSpaceProblem {
    std::vector<Complex> pre;       // unit-normalized ket amplitudes
    std::vector<Complex> post;      // unit-normalized bra amplitudes (pre-conjugated)
    std::vector<Complex> observable;  // block-diagonal copies of A
    std::size_t dim = 0;
};

// Realizes a multi-term two-state vector as a single pre/post pair on a
// larger space: one orthogonal block per term (the ancilla construction),
// with each term's weight folded into its ket block. Weak values of
// block-diagonal A on the pair equal weak values of A on the terms.
FullSpaceProblem flatten_to_full_space(const TwoStateVector &tsv, const LabeledOperator &a) {
    std::size_t d = a.dim();
    std::size_t n_terms = tsv.terms().size();
    FullSpaceProblem out;
    out.dim = d * n_terms;
    out.pre.assign(out.dim, Complex{0, 0});
    out.post.assign(out.dim, Complex{0, 0});
    out.observable.assign(out.dim * out.dim, Complex{0, 0});
    for (std::size_t t = 0; t < n_terms; t++) {
        const TsvTerm &term = tsv.terms()[t];
        for (std::size_t k = 0; k < d; k++) {
            out.pre[t * d + k] = term.weight * term.ket.amplitude(k);
            out.post[t * d + k] = term.bra.amplitude(k);
        }
        for (std::size_t r = 0; r < d; r++) {
            for (std::size_t c = 0; c < d; c++) {
                out.observable[(t * d + r) * out.dim + (t * d + c)] = a.entry(r, c);
            }
        }
    }
    double pre_norm = 0, post_norm = 0;
    for (std::size_t k = 0; k < out.dim; k++) {
        pre_norm += std::norm(out.pre[k]);
        post_norm += std::norm(out.post[k]);
    }
    pre_norm = std::sqrt(pre_norm);
    post_norm = std::sqrt(post_norm);
    if (pre_norm == 0 || post_norm == 0) {
        throw Error("cannot couple a pointer to a zero pre- or post-selection");
    }
    for (std::size_t k = 0; k < out.dim; k++) {
        out.pre[k] /= pre_norm;
        out.post[k] /= post_norm;
    }
    return out;
}

}  // namespace

ConditionalPointer couple_and_postselect(const TwoStateVector &tsv,
                                         const LabeledOperator &observable,
                                         const CouplingConfig &config,
                                         const PointerState &initial) {
    if (observable.space() != tsv.space()) {
        throw SpaceMismatchError("observable space does not match the two-state vector");
    }
    if (config.g < 0) {
        throw Error("coupling strength must be non-negative");
    }
    Complex denominator = tsv.denominator();
    if (std::abs(denominator) < kSingularDenominatorTol) {
        throw SingularDenominatorError(denominator);
    }

    FullSpaceProblem full = flatten_to_full_space(tsv, observable);
    HermitianEigenSystem eig = hermitian_eigensystem(full.observable, full.dim);

    // In the eigenbasis of the observable the coupling shifts each
    // component's pointer by g * eigenvalue; the post-selection then
    // collapses the system, leaving
    //     phi(x) = sum_j <post|v_j><v_j|pre> phi_0(x - g a_j).
    std::vector<Complex> hat = initial.amplitudes();
    fft_in_place(hat, false);
    std::vector<double> p = initial.momentum_grid();
    std::vector<Complex> acc(hat.size(), Complex{0, 0});
    for (std::size_t j = 0; j < full.dim; j++) {
        Complex from_pre{0, 0};
        Complex into_post{0, 0};
        for (std::size_t k = 0; k < full.dim; k++) {
            from_pre += std::conj(eig.vector_entry(k, j)) * full.pre[k];
            into_post += full.post[k] * eig.vector_entry(k, j);
        }
        Complex alpha = into_post * from_pre;
        if (alpha == Complex{0, 0}) {
            continue;
        }
        double shift = config.g * eig.eigenvalues[j];
        for (std::size_t k = 0; k < hat.size(); k++) {
            acc[k] += alpha * std::polar(1.0, -p[k] * shift) * hat[k];
        }
    }
    fft_in_place(acc, true);

    double raw_prob = 0;
    for (const Complex &a : acc) {
        raw_prob += std::norm(a);
    }
    raw_prob *= initial.dx();
    if (raw_prob < 1e-30) {
        throw SingularDenominatorError(denominator);
    }
    double prob = raw_prob > 1.0 ? 1.0 : raw_prob;

    double scale = 1.0 / std::sqrt(raw_prob);
    std::vector<Complex> conditional(acc.size());
    for (std::size_t k = 0; k < acc.size(); k++) {
        conditional[k] = acc[k] * scale;
    }
    // Detect support wrapped around the periodic grid.
    double peak = 0, edge = 0;
    for (const Complex &a : conditional) {
        peak = std::max(peak, std::norm(a));
    }
    edge = std::max(std::norm(conditional.front()), std::norm(conditional.back()));
    if (peak > 0 && edge / peak > kBoundaryDensityRatioMax) {
        throw GridOverflowError(config.g,
                                "post-shift pointer support reaches the grid boundary");
    }
    return ConditionalPointer{
        PointerState(initial.grid_min(), initial.grid_max(), std::move(conditional)), prob};
}

PointerReadout exact_readout(const ConditionalPointer &conditional, const PointerState &initial) {
    PointerReadout out;
    out.mean_position = conditional.pointer.mean_position();
    out.mean_momentum = conditional.pointer.mean_momentum();
    out.postselect_prob = conditional.postselect_prob;
    out.momentum_variance = initial.momentum_variance();
    return out;
}

Complex weak_limit_extrapolate(const std::vector<std::pair<double, PointerReadout>> &readouts) {
    if (readouts.size() < 3) {
        throw Error("weak-limit extrapolation needs at least three g values");
    }
    for (const auto &[g, r] : readouts) {
        if (!(g > 0)) {
            throw Error("weak-limit extrapolation needs positive g values");
        }
        if (!(r.momentum_variance > 0)) {
            throw Error("readout is missing the initial pointer momentum variance");
        }
    }
    for (std::size_t a = 0; a < readouts.size(); a++) {
        for (std::size_t b = a + 1; b < readouts.size(); b++) {
            if (readouts[a].first == readouts[b].first) {
                throw Error("weak-limit extrapolation needs distinct g values");
            }
        }
    }

    // Both channels are exact functions of g^2 for a real Gaussian pointer;
    // a least-squares line in u = g^2, evaluated at u = 0, removes the
    // leading finite-strength correction.
    auto extrapolate = [&](auto channel) {
        double su = 0, sy = 0, suu = 0, suy = 0;
        double n = static_cast<double>(readouts.size());
        for (const auto &[g, r] : readouts) {
            double u = g * g;
            double y = channel(g, r);
            su += u;
            sy += y;
            suu += u * u;
            suy += u * y;
        }
        double det = n * suu - su * su;
        if (det == 0) {
            throw Error("degenerate g samples in weak-limit extrapolation");
        }
        double slope = (n * suy - su * sy) / det;
        return (sy - slope * su) / n;
    };

    double re = extrapolate(
        [](double g, const PointerReadout &r) { return r.mean_position / g; });
    double im = extrapolate([](double g, const PointerReadout &r) {
        return r.mean_momentum / (2 * g * r.momentum_variance);
    });
    return Complex{re, im};
}

}  // namespace cheshire
