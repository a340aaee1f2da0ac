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

#include "cheshire/operators.hpp"

#include <cmath>

#include "cheshire/errors.hpp"

namespace cheshire {

namespace {

// 2x2 Pauli entries in (H, V) order.
Complex pauli_entry(PauliAxis axis, Pol row, Pol col) {
    switch (axis) {
        case PauliAxis::X:
            return row != col ? Complex{1, 0} : Complex{0, 0};
        case PauliAxis::Y:
            if (row == Pol::H && col == Pol::V) {
                return Complex{0, -1};
            }
            if (row == Pol::V && col == Pol::H) {
                return Complex{0, 1};
            }
            return Complex{0, 0};
        default:
            if (row != col) {
                return Complex{0, 0};
            }
            return row == Pol::H ? Complex{1, 0} : Complex{-1, 0};
    }
}

bool same_except_pol(const BasisLabel &a, const BasisLabel &b) {
    return a.path == b.path && a.ancilla == b.ancilla;
}

}  // namespace

LabeledOperator::LabeledOperator(Space space, std::vector<Complex> row_major)
    : space_(space), m_(std::move(row_major)) {
    std::size_t d = space_.dim();
    if (m_.size() != d * d) {
        throw SpaceMismatchError("operator matrix is not dim x dim for space " + space_.str());
    }
    for (const Complex &v : m_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error("non-finite entry in operator");
        }
    }
}

LabeledOperator LabeledOperator::zero(Space space) {
    return LabeledOperator(space, std::vector<Complex>(space.dim() * space.dim(), Complex{0, 0}));
}

LabeledOperator LabeledOperator::identity(Space space) {
    LabeledOperator out = zero(space);
    for (std::size_t k = 0; k < space.dim(); k++) {
        out.m_[k * space.dim() + k] = Complex{1, 0};
    }
    return out;
}

LabeledOperator LabeledOperator::arm_projector(Space space, Arm arm) {
    if (!space.has_path()) {
        throw SpaceMismatchError("arm projector requires a path factor in " + space.str());
    }
    LabeledOperator out = zero(space);
    for (std::size_t k = 0; k < space.dim(); k++) {
        if (space.label(k).path == arm) {
            out.m_[k * space.dim() + k] = Complex{1, 0};
        }
    }
    return out;
}

LabeledOperator LabeledOperator::pauli(Space space, PauliAxis axis) {
    if (!space.has_pol()) {
        throw SpaceMismatchError("pauli requires a polarization factor in " + space.str());
    }
    LabeledOperator out = zero(space);
    std::size_t d = space.dim();
    for (std::size_t r = 0; r < d; r++) {
        BasisLabel lr = space.label(r);
        for (std::size_t c = 0; c < d; c++) {
            BasisLabel lc = space.label(c);
            if (same_except_pol(lr, lc)) {
                out.m_[r * d + c] = pauli_entry(axis, *lr.pol, *lc.pol);
            }
        }
    }
    return out;
}

LabeledOperator LabeledOperator::arm_pauli(Space space, Arm arm, PauliAxis axis) {
    if (!space.has_path() || !space.has_pol()) {
        throw SpaceMismatchError("arm pauli requires path and polarization factors");
    }
    LabeledOperator out = zero(space);
    std::size_t d = space.dim();
    for (std::size_t r = 0; r < d; r++) {
        BasisLabel lr = space.label(r);
        if (lr.path != arm) {
            continue;
        }
        for (std::size_t c = 0; c < d; c++) {
            BasisLabel lc = space.label(c);
            if (lc.path == arm && same_except_pol(lr, lc)) {
                out.m_[r * d + c] = pauli_entry(axis, *lr.pol, *lc.pol);
            }
        }
    }
    return out;
}

Complex LabeledOperator::entry(std::size_t row, std::size_t col) const {
    std::size_t d = dim();
    if (row >= d || col >= d) {
        throw Error("operator entry index out of range");
    }
    return m_[row * d + col];
}

Complex LabeledOperator::entry(const BasisLabel &row, const BasisLabel &col) const {
    return entry(space_.index(row), space_.index(col));
}

LabeledOperator LabeledOperator::adjoint() const {
    std::size_t d = dim();
    std::vector<Complex> out(d * d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            out[c * d + r] = std::conj(m_[r * d + c]);
        }
    }
    return LabeledOperator(space_, std::move(out));
}

LabeledOperator LabeledOperator::scaled(Complex factor) const {
    std::vector<Complex> out(m_.size());
    for (std::size_t k = 0; k < m_.size(); k++) {
        out[k] = factor * m_[k];
    }
    return LabeledOperator(space_, std::move(out));
}

LabeledOperator LabeledOperator::operator+(const LabeledOperator &other) const {
    if (space_ != other.space_) {
        throw SpaceMismatchError("cannot add operators over different spaces");
    }
    std::vector<Complex> out(m_.size());
    for (std::size_t k = 0; k < m_.size(); k++) {
        out[k] = m_[k] + other.m_[k];
    }
    return LabeledOperator(space_, std::move(out));
}

LabeledOperator LabeledOperator::operator*(const LabeledOperator &other) const {
    if (space_ != other.space_) {
        throw SpaceMismatchError("cannot multiply operators over different spaces");
    }
    std::size_t d = dim();
    std::vector<Complex> out(d * d, Complex{0, 0});
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t k = 0; k < d; k++) {
            Complex a = m_[r * d + k];
            if (a == Complex{0, 0}) {
                continue;
            }
            for (std::size_t c = 0; c < d; c++) {
                out[r * d + c] += a * other.m_[k * d + c];
            }
        }
    }
    return LabeledOperator(space_, std::move(out));
}

bool LabeledOperator::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) <= tol;
}

bool LabeledOperator::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(space_)) <= tol;
}

double LabeledOperator::max_abs_diff(const LabeledOperator &other) const {
    if (space_ != other.space_) {
        throw SpaceMismatchError("cannot compare operators over different spaces");
    }
    double worst = 0;
    for (std::size_t k = 0; k < m_.size(); k++) {
        worst = std::max(worst, std::abs(m_[k] - other.m_[k]));
    }
    return worst;
}

LabeledState apply(const LabeledOperator &op, const LabeledState &s) {
    if (op.space() != s.space()) {
        throw SpaceMismatchError(
            "apply() space mismatch: " + op.space().str() + " vs " + s.space().str());
    }
    std::size_t d = op.dim();
    std::vector<Complex> out(d, Complex{0, 0});
    if (s.kind() == Kind::Ket) {
        for (std::size_t r = 0; r < d; r++) {
            for (std::size_t c = 0; c < d; c++) {
                out[r] += op.entry(r, c) * s.amplitude(c);
            }
        }
    } else {
        // <phi|A: stored row vector times the matrix.
        for (std::size_t c = 0; c < d; c++) {
            for (std::size_t r = 0; r < d; r++) {
                out[c] += s.amplitude(r) * op.entry(r, c);
            }
        }
    }
    return LabeledState(s.space(), s.kind(), std::move(out));
}

}  // namespace cheshire
