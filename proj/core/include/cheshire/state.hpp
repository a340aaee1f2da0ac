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

#ifndef CHESHIRE_STATE_HPP
#define CHESHIRE_STATE_HPP

#include <vector>

#include "cheshire/basis.hpp"

namespace cheshire {

enum class Kind : uint8_t { Ket, Bra };

/// A vector (ket) or dual vector (bra) with complex amplitudes over a
/// labeled basis.
///
/// Bra amplitudes are stored already conjugated: a bra IS a dual vector,
/// so inner() is a plain bilinear sum and converting between ket and bra
/// conjugates exactly once. Amplitudes must be finite; normalization is
/// not required (weak values are normalization-invariant).
class LabeledState {
   public:
    LabeledState(Space space, Kind kind, std::vector<Complex> amplitudes);

    static LabeledState zero(Space space, Kind kind);

    /// Amplitude 1 on `label`, 0 elsewhere.
    static LabeledState basis(Space space, Kind kind, const BasisLabel &label);

    const Space &space() const { return space_; }
    Kind kind() const { return kind_; }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_.at(index); }
    Complex amplitude(const BasisLabel &label) const;

    /// Ket <-> bra conversion; conjugates the stored amplitudes once.
    LabeledState dual() const;

    double norm_sq() const;
    double norm() const;

    /// Throws if the norm is numerically zero.
    LabeledState normalized() const;

    LabeledState scaled(Complex factor) const;
    LabeledState operator+(const LabeledState &other) const;
    LabeledState operator-(const LabeledState &other) const;

    /// Exact structural equality (space, kind and bit-equal amplitudes).
    bool operator==(const LabeledState &other) const = default;

   private:
    Space space_;
    Kind kind_;
    std::vector<Complex> amps_;
};

/// Tensor product of two states of the same kind over disjoint tensor
/// factors. Amplitudes multiply; the result space is the canonical
/// combination of the factors.
LabeledState tensor(const LabeledState &a, const LabeledState &b);

/// Plain bilinear pairing sum_b bra(b) * ket(b). The bra's amplitudes are
/// stored pre-conjugated, so no conjugation happens here.
Complex inner(const LabeledState &bra, const LabeledState &ket);

/// min over phi of ||x - e^{i phi} y||; zero iff the states agree up to a
/// global phase.
double phase_aligned_distance(const LabeledState &x, const LabeledState &y);

}  // namespace cheshire

#endif
