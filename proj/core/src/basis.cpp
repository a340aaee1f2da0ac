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

#include "cheshire/basis.hpp"

#include "cheshire/errors.hpp"

namespace cheshire {

char arm_name(Arm arm) {
    return arm == Arm::L ? 'L' : 'R';
}

char pol_name(Pol pol) {
    return pol == Pol::H ? 'H' : 'V';
}

char pauli_name(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X:
            return 'x';
        case PauliAxis::Y:
            return 'y';
        default:
            return 'z';
    }
}

std::string BasisLabel::str() const {
    std::string out;
    auto push = [&out](const std::string &part) {
        if (!out.empty()) {
            out += ',';
        }
        out += part;
    };
    if (path.has_value()) {
        push(std::string(1, arm_name(*path)));
    }
    if (pol.has_value()) {
        push(std::string(1, pol_name(*pol)));
    }
    if (ancilla.has_value()) {
        push(std::string("A") + pol_name(*ancilla));
    }
    return out;
}

Space Space::of(bool has_path, bool has_pol, bool has_ancilla) {
    Space s;
    s.path_ = has_path;
    s.pol_ = has_pol;
    s.anc_ = has_ancilla;
    return s;
}

Space Space::path() {
    return of(true, false, false);
}

Space Space::pol() {
    return of(false, true, false);
}

Space Space::path_pol() {
    return of(true, true, false);
}

Space Space::path_pol_ancilla() {
    return of(true, true, true);
}

std::size_t Space::dim() const {
    std::size_t d = 1;
    if (path_) {
        d *= 2;
    }
    if (pol_) {
        d *= 2;
    }
    if (anc_) {
        d *= 2;
    }
    return d;
}

BasisLabel Space::label(std::size_t index) const {
    if (index >= dim()) {
        throw Error("basis index out of range for space " + str());
    }
    BasisLabel out;
    // Polarization is the fastest index, ancilla the slowest.
    if (pol_) {
        out.pol = (index & 1) ? Pol::V : Pol::H;
        index >>= 1;
    }
    if (path_) {
        out.path = (index & 1) ? Arm::R : Arm::L;
        index >>= 1;
    }
    if (anc_) {
        out.ancilla = (index & 1) ? Pol::V : Pol::H;
        index >>= 1;
    }
    return out;
}

std::size_t Space::index(const BasisLabel &label) const {
    if (label.path.has_value() != path_ || label.pol.has_value() != pol_ ||
        label.ancilla.has_value() != anc_) {
        throw SpaceMismatchError(
            "label " + label.str() + " does not match space " + str());
    }
    std::size_t idx = 0;
    std::size_t stride = 1;
    if (pol_) {
        idx += stride * (label.pol == Pol::V ? 1 : 0);
        stride *= 2;
    }
    if (path_) {
        idx += stride * (label.path == Arm::R ? 1 : 0);
        stride *= 2;
    }
    if (anc_) {
        idx += stride * (label.ancilla == Pol::V ? 1 : 0);
    }
    return idx;
}

std::vector<BasisLabel> Space::labels() const {
    std::vector<BasisLabel> out;
    out.reserve(dim());
    for (std::size_t k = 0; k < dim(); k++) {
        out.push_back(label(k));
    }
    return out;
}

bool Space::disjoint_with(const Space &other) const {
    return !(path_ && other.path_) && !(pol_ && other.pol_) && !(anc_ && other.anc_);
}

Space Space::combined(const Space &other) const {
    return of(path_ || other.path_, pol_ || other.pol_, anc_ || other.anc_);
}

Space Space::without_ancilla() const {
    return of(path_, pol_, false);
}

BasisLabel Space::restrict_label(const BasisLabel &label, const Space &target) const {
    BasisLabel out;
    if (target.has_path()) {
        out.path = label.path;
    }
    if (target.has_pol()) {
        out.pol = label.pol;
    }
    if (target.has_ancilla()) {
        out.ancilla = label.ancilla;
    }
    return out;
}

std::string Space::str() const {
    std::string out;
    auto push = [&out](const char *part) {
        if (!out.empty()) {
            out += "(x)";
        }
        out += part;
    };
    if (path_) {
        push("path");
    }
    if (pol_) {
        push("pol");
    }
    if (anc_) {
        push("ancilla");
    }
    return out.empty() ? "(empty)" : out;
}

}  // namespace cheshire
