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

#ifndef CHESHIRE_POINTER_HPP
#define CHESHIRE_POINTER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cheshire/tsvf.hpp"

namespace cheshire {

inline constexpr std::size_t kDefaultGridPoints = 2048;
inline constexpr double kDefaultHalfWidthSigmas = 8.0;

/// Largest allowed relative probability density |psi|^2 at the grid edge,
/// as a fraction of the peak density.
inline constexpr double kBoundaryDensityRatioMax = 1e-8;

/// A discretized 1-D pointer wavefunction on a uniform grid. Amplitudes
/// are sampled at cell centers x_i = grid_min + (i + 1/2) dx with
/// dx = (grid_max - grid_min) / n_points; n_points must be a power of two
/// (momentum statistics go through an FFT on the same grid).
///
/// Construction enforces unit normalization (sum |psi|^2 dx = 1 within
/// 1e-9 before the exact renormalization applied here) and the boundary
/// density invariant.
class PointerState {
   public:
    PointerState(double grid_min, double grid_max, std::vector<Complex> amplitudes);

    /// Gaussian of position standard deviation sigma centered at 0 on a
    /// grid spanning +-half_width_sigmas * sigma.
    static PointerState gaussian(double sigma, std::size_t n_points = kDefaultGridPoints,
                                 double half_width_sigmas = kDefaultHalfWidthSigmas);

    std::size_t n_points() const { return amps_.size(); }
    double grid_min() const { return min_; }
    double grid_max() const { return max_; }
    double dx() const;
    double position(std::size_t index) const;
    const std::vector<Complex> &amplitudes() const { return amps_; }

    double norm_sq() const;
    double mean_position() const;
    double mean_momentum() const;
    double momentum_variance() const;

    /// |psi|^2 at the outermost grid cells relative to the peak density.
    double boundary_density_ratio() const;

    /// FFT index -> momentum value (standard wrapped ordering).
    std::vector<double> momentum_grid() const;

    /// |psi_hat|^2 per FFT index, normalized to sum 1.
    std::vector<double> momentum_density() const;

    /// |psi_i|^2 dx per grid cell, normalized to sum 1.
    std::vector<double> position_density() const;

   private:
    PointerState() = default;
    double min_ = 0;
    double max_ = 0;
    std::vector<Complex> amps_;
};

/// Rigid displacement psi(x) -> psi(x - displacement), implemented as the
/// exact momentum-space phase and therefore exactly norm-preserving on the
/// periodic grid.
PointerState shifted(const PointerState &pointer, double displacement);

/// Impulsive von Neumann coupling exp(-i g A (x) p_hat): the pointer is
/// displaced by g times the measured eigenvalue.
struct CouplingConfig {
    double g = 0.0;      // pointer displacement per unit eigenvalue
    double sigma = 1.0;  // initial Gaussian pointer width

    /// Outside this regime the measurement visibly disturbs the system and
    /// pointer averages stop tracking weak values.
    bool weak_regime() const { return g <= 0.1 * sigma; }
};

/// Post-selected pointer statistics. For small g the position mean reads
/// g Re<A>_w and the momentum mean reads 2 g Var(p_hat) Im<A>_w, where
/// Var(p_hat) refers to the initial pointer (the `momentum_variance`
/// field).
struct PointerReadout {
    double mean_position = 0;
    double mean_momentum = 0;
    double postselect_prob = 0;
    double momentum_variance = 0;
    std::optional<long long> n_samples;
    std::optional<double> std_error_position;
    std::optional<double> std_error_momentum;
};

struct ConditionalPointer {
    PointerState pointer;
    double postselect_prob = 0;
};

/// Exact (non-perturbative) evolution of system (x) pointer under the
/// coupling, then projection onto the post-selection. Single-term states
/// are coupled directly; multi-term states go through the equivalent
/// full-space construction (one orthogonal ancilla block per term). The
/// pre state and the projecting post vector are unit-normalized, so the
/// returned probability is the physical post-selection rate.
ConditionalPointer couple_and_postselect(const TwoStateVector &tsv,
                                         const LabeledOperator &observable,
                                         const CouplingConfig &config,
                                         const PointerState &initial);

/// Exact readout (no sampling) of a conditional pointer state.
PointerReadout exact_readout(const ConditionalPointer &conditional, const PointerState &initial);

/// Recovers the complex weak value from finite-strength readouts: fits
/// mean_position/g and mean_momentum/(2 g Var(p_hat)) linearly against g^2
/// and extrapolates both channels to g = 0. Needs at least three distinct
/// positive g values.
Complex weak_limit_extrapolate(const std::vector<std::pair<double, PointerReadout>> &readouts);

}  // namespace cheshire

#endif
