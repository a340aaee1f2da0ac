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

#include "cheshire/state.hpp"

#include <cmath>

#include "cheshire/errors.hpp"

namespace cheshire {

namespace {

void check_finite(const std::vector<Complex> &amps) {
    for (const Complex &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error("non-finite amplitude in state");
        }
    }
}

}  // namespace

LabeledState::LabeledState(Space space, Kind kind, std::vector<Complex> amplitudes)
    : space_(space), kind_(kind), amps_(std::move(amplitudes)) {
    if (amps_.size() != space_.dim()) {
        throw SpaceMismatchError(
            "amplitude count " + std::to_string(amps_.size()) +
            " does not match dim(" + space_.str() + ") = " + std::to_string(space_.dim()));
    }
    check_finite(amps_);
}

LabeledState LabeledState::zero(Space space, Kind kind) {
    return LabeledState(space, kind, std::vector<Complex>(space.dim(), Complex{0, 0}));
}

LabeledState LabeledState::basis(Space space, Kind kind, const BasisLabel &label) {
    std::vector<Complex> amps(space.dim(), Complex{0, 0});
    amps[space.index(label)] = Complex{1, 0};
    return LabeledState(space, kind, std::move(amps));
}

Complex LabeledState::amplitude(const BasisLabel &label) const {
    return amps_[space_.index(label)];
}

LabeledState LabeledState::dual() const {
    std::vector<Complex> amps(amps_.size());
    for (std::size_t k = 0; k < amps_.size(); k++) {
        amps[k] = std::conj(amps_[k]);
    }
    return LabeledState(space_, kind_ == Kind::Ket ? Kind::Bra : Kind::Ket, std::move(amps));
}

double LabeledState::norm_sq() const {
    double total = 0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double LabeledState::norm() const {
    return std::sqrt(norm_sq());
}

LabeledState LabeledState::normalized() const {
    double n = norm();
    if (n <= 0 || !std::isfinite(1.0 / n)) {
        throw Error("cannot normalize a zero state");
    }
    return scaled(Complex{1.0 / n, 0});
}

LabeledState LabeledState::scaled(Complex factor) const {
    std::vector<Complex> amps(amps_.size());
    for (std::size_t k = 0; k < amps_.size(); k++) {
        amps[k] = factor * amps_[k];
    }
    return LabeledState(space_, kind_, std::move(amps));
}

LabeledState LabeledState::operator+(const LabeledState &other) const {
    if (space_ != other.space_ || kind_ != other.kind_) {
        throw SpaceMismatchError("cannot add states over different spaces or kinds");
    }
    std::vector<Complex> amps(amps_.size());
    for (std::size_t k = 0; k < amps_.size(); k++) {
        amps[k] = amps_[k] + other.amps_[k];
    }
    return LabeledState(space_, kind_, std::move(amps));
}

LabeledState LabeledState::operator-(const LabeledState &other) const {
    return *this + other.scaled(Complex{-1, 0});
}

LabeledState tensor(const LabeledState &a, const LabeledState &b) {
    if (a.kind() != b.kind()) {
        throw SpaceMismatchError("tensor product requires two kets or two bras");
    }
    if (!a.space().disjoint_with(b.space())) {
        throw SpaceMismatchError(
            "tensor factors overlap: " + a.space().str() + " vs " + b.space().str());
    }
    Space full = a.space().combined(b.space());
    std::vector<Complex> amps(full.dim());
    for (std::size_t k = 0; k < full.dim(); k++) {
        BasisLabel label = full.label(k);
        BasisLabel la = full.restrict_label(label, a.space());
        BasisLabel lb = full.restrict_label(label, b.space());
        amps[k] = a.amplitude(la) * b.amplitude(lb);
    }
    return LabeledState(full, a.kind(), std::move(amps));
}

Complex inner(const LabeledState &bra, const LabeledState &ket) {
    if (bra.kind() != Kind::Bra || ket.kind() != Kind::Ket) {
        throw SpaceMismatchError("inner() expects (bra, ket)");
    }
    if (bra.space() != ket.space()) {
        throw SpaceMismatchError(
            "inner() space mismatch: " + bra.space().str() + " vs " + ket.space().str());
    }
    Complex total{0, 0};
    for (std::size_t k = 0; k < bra.amplitudes().size(); k++) {
        total += bra.amplitude(k) * ket.amplitude(k);
    }
    return total;
}

double phase_aligned_distance(const LabeledState &x, const LabeledState &y) {
    if (x.space() != y.space()) {
        throw SpaceMismatchError("phase_aligned_distance() space mismatch");
    }
    Complex overlap{0, 0};
    for (std::size_t k = 0; k < x.amplitudes().size(); k++) {
        overlap += std::conj(x.amplitude(k)) * y.amplitude(k);
    }
    double d2 = x.norm_sq() + y.norm_sq() - 2.0 * std::abs(overlap);
    return std::sqrt(std::max(0.0, d2));
}

}  // namespace cheshire
