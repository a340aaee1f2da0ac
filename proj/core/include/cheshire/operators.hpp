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

#ifndef CHESHIRE_OPERATORS_HPP
#define CHESHIRE_OPERATORS_HPP

#include <vector>

#include "cheshire/basis.hpp"
#include "cheshire/state.hpp"

namespace cheshire {

/// Dense complex matrix over a labeled basis. Houses the which-path
/// projectors, the polarization Paulis and their per-arm restrictions,
/// and circuit-element unitaries. Factors the constructor does not touch
/// are acted on as identity.
class LabeledOperator {
   public:
    LabeledOperator(Space space, std::vector<Complex> row_major);

    static LabeledOperator zero(Space space);
    static LabeledOperator identity(Space space);

    /// Which-path projector |arm><arm| (identity on the other factors).
    static LabeledOperator arm_projector(Space space, Arm arm);

    /// Pauli matrix on the photon polarization, identity elsewhere.
    /// Basis (H, V): sigma_z = |H><H| - |V><V|, sigma_x = |H><V| + |V><H|,
    /// sigma_y = -i|H><V| + i|V><H|.
    static LabeledOperator pauli(Space space, PauliAxis axis);

    /// Arm-restricted polarization measurement |arm><arm| sigma_axis.
    static LabeledOperator arm_pauli(Space space, Arm arm, PauliAxis axis);

    const Space &space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    const std::vector<Complex> &matrix() const { return m_; }

    Complex entry(std::size_t row, std::size_t col) const;
    Complex entry(const BasisLabel &row, const BasisLabel &col) const;

    /// Conjugate transpose.
    LabeledOperator adjoint() const;

    LabeledOperator scaled(Complex factor) const;
    LabeledOperator operator+(const LabeledOperator &other) const;
    LabeledOperator operator*(const LabeledOperator &other) const;

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    /// Largest entrywise |difference| against another operator.
    double max_abs_diff(const LabeledOperator &other) const;

    bool operator==(const LabeledOperator &other) const = default;

   private:
    Space space_;
    std::vector<Complex> m_;  // row-major, dim x dim
};

/// Matrix action on a state. Kets are multiplied from the left; a bra is
/// acted on from the right (<phi|A), which on the stored pre-conjugated
/// amplitudes is the row-vector product with no extra conjugation.
LabeledState apply(const LabeledOperator &op, const LabeledState &s);

}  // namespace cheshire

#endif
