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

#include "cheshire/circuit.hpp"

#include <cmath>

#include "cheshire/errors.hpp"

namespace cheshire {

std::string element_kind_name(ElementKind kind) {
    switch (kind) {
        case ElementKind::BeamSplitter:
            return "BeamSplitter";
        case ElementKind::HalfWavePlate:
            return "HalfWavePlate";
        case ElementKind::PolarizingBeamSplitter:
            return "PolarizingBeamSplitter";
        case ElementKind::Mirror:
            return "Mirror";
        case ElementKind::SingletSource:
            return "SingletSource";
        default:
            return "Detector";
    }
}

std::string element_location_name(ElementLocation location) {
    switch (location) {
        case ElementLocation::PathFactor:
            return "path";
        case ElementLocation::ArmL:
            return "L";
        case ElementLocation::ArmR:
            return "R";
        default:
            return "pol";
    }
}

void Circuit::add_stage(CircuitElement element) {
    if (element.kind == ElementKind::Detector) {
        throw Error("detectors are declared separately, not as circuit stages");
    }
    stages_.push_back(element);
}

void Circuit::add_marker(const std::string &name) {
    if (markers_.count(name)) {
        throw Error("duplicate marker '" + name + "'");
    }
    markers_[name] = stages_.size();
}

void Circuit::add_detector(DetectorDef detector) {
    if (detector.bra.kind() != Kind::Bra || detector.bra.space() != space_) {
        throw SpaceMismatchError("detector '" + detector.name + "' must project via a full-space bra");
    }
    for (const DetectorDef &d : detectors_) {
        if (d.name == detector.name) {
            throw Error("duplicate detector '" + detector.name + "'");
        }
    }
    detectors_.push_back(std::move(detector));
}

std::size_t Circuit::marker_position(const std::string &name) const {
    auto it = markers_.find(name);
    if (it == markers_.end()) {
        throw Error("unknown marker '" + name + "'");
    }
    return it->second;
}

const DetectorDef &Circuit::detector(const std::string &name) const {
    for (const DetectorDef &d : detectors_) {
        if (d.name == name) {
            return d;
        }
    }
    throw Error("unknown detector '" + name + "'");
}

LabeledOperator Circuit::total_unitary() const {
    LabeledOperator total = LabeledOperator::identity(space_);
    for (const CircuitElement &stage : stages_) {
        total = element_unitary(stage, space_) * total;
    }
    return total;
}

namespace {

Arm arm_of(const CircuitElement &element) {
    if (element.location == ElementLocation::ArmL) {
        return Arm::L;
    }
    if (element.location == ElementLocation::ArmR) {
        return Arm::R;
    }
    throw Error(element_kind_name(element.kind) + " needs an arm location (L or R)");
}

LabeledOperator beam_splitter_unitary(const Space &space) {
    if (!space.has_path()) {
        throw SpaceMismatchError("beam splitter requires a path factor");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::size_t d = space.dim();
    std::vector<Complex> m(d * d, Complex{0, 0});
    for (std::size_t r = 0; r < d; r++) {
        BasisLabel lr = space.label(r);
        for (std::size_t c = 0; c < d; c++) {
            BasisLabel lc = space.label(c);
            if (lr.pol == lc.pol && lr.ancilla == lc.ancilla) {
                double h = (lr.path == Arm::R && lc.path == Arm::R) ? -inv_sqrt2 : inv_sqrt2;
                m[r * d + c] = Complex{h, 0};
            }
        }
    }
    return LabeledOperator(space, std::move(m));
}

LabeledOperator mirror_unitary(const Space &space, Arm arm, double phase) {
    if (!space.has_path()) {
        throw SpaceMismatchError("mirror requires a path factor");
    }
    std::size_t d = space.dim();
    std::vector<Complex> m(d * d, Complex{0, 0});
    for (std::size_t k = 0; k < d; k++) {
        m[k * d + k] = (space.label(k).path == arm) ? std::polar(1.0, phase) : Complex{1, 0};
    }
    return LabeledOperator(space, std::move(m));
}

LabeledOperator half_wave_plate_unitary(const Space &space, Arm arm) {
    if (!space.has_path() || !space.has_pol()) {
        throw SpaceMismatchError("half-wave plate requires path and polarization factors");
    }
    std::size_t d = space.dim();
    std::vector<Complex> m(d * d, Complex{0, 0});
    for (std::size_t c = 0; c < d; c++) {
        BasisLabel out = space.label(c);
        if (out.path == arm) {
            out.pol = (out.pol == Pol::H) ? Pol::V : Pol::H;
        }
        m[space.index(out) * d + c] = Complex{1, 0};
    }
    return LabeledOperator(space, std::move(m));
}

LabeledOperator polarizing_beam_splitter_unitary(const Space &space) {
    if (!space.has_path() || !space.has_pol()) {
        throw SpaceMismatchError("polarizing beam splitter requires path and polarization factors");
    }
    std::size_t d = space.dim();
    std::vector<Complex> m(d * d, Complex{0, 0});
    for (std::size_t c = 0; c < d; c++) {
        BasisLabel out = space.label(c);
        if (out.pol == Pol::V) {
            out.path = (out.path == Arm::L) ? Arm::R : Arm::L;
        }
        m[space.index(out) * d + c] = Complex{1, 0};
    }
    return LabeledOperator(space, std::move(m));
}

// Product polarization basis -> Bell basis, chosen so the reference input
// |H, AH> becomes the singlet (|H, AV> - |V, AH>)/sqrt2.
LabeledOperator singlet_source_unitary(const Space &space) {
    if (!space.has_pol() || !space.has_ancilla()) {
        throw SpaceMismatchError("singlet source requires polarization and ancilla factors");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::size_t d = space.dim();
    std::vector<Complex> m(d * d, Complex{0, 0});
    auto column = [&](Pol pol_in, Pol anc_in,
                      Pol pol_a, Pol anc_a, double amp_a,
                      Pol pol_b, Pol anc_b, double amp_b) {
        for (std::size_t c = 0; c < d; c++) {
            BasisLabel lc = space.label(c);
            if (lc.pol != pol_in || lc.ancilla != anc_in) {
                continue;
            }
            BasisLabel la = lc;
            la.pol = pol_a;
            la.ancilla = anc_a;
            BasisLabel lb = lc;
            lb.pol = pol_b;
            lb.ancilla = anc_b;
            m[space.index(la) * d + c] = Complex{amp_a * inv_sqrt2, 0};
            m[space.index(lb) * d + c] = Complex{amp_b * inv_sqrt2, 0};
        }
    };
    column(Pol::H, Pol::H, Pol::H, Pol::V, 1, Pol::V, Pol::H, -1);  // psi-
    column(Pol::H, Pol::V, Pol::H, Pol::V, 1, Pol::V, Pol::H, 1);   // psi+
    column(Pol::V, Pol::H, Pol::H, Pol::H, 1, Pol::V, Pol::V, -1);  // phi-
    column(Pol::V, Pol::V, Pol::H, Pol::H, 1, Pol::V, Pol::V, 1);   // phi+
    return LabeledOperator(space, std::move(m));
}

}  // namespace

LabeledOperator element_unitary(const CircuitElement &element, const Space &space) {
    switch (element.kind) {
        case ElementKind::BeamSplitter:
            return beam_splitter_unitary(space);
        case ElementKind::Mirror:
            return mirror_unitary(space, arm_of(element), element.phase);
        case ElementKind::HalfWavePlate:
            return half_wave_plate_unitary(space, arm_of(element));
        case ElementKind::PolarizingBeamSplitter:
            return polarizing_beam_splitter_unitary(space);
        case ElementKind::SingletSource:
            return singlet_source_unitary(space);
        default:
            throw Error("a detector has no unitary");
    }
}

LabeledState forward_evolve(const Circuit &circuit, const LabeledState &input,
                            const std::string &marker) {
    if (input.space() != circuit.space() || input.kind() != Kind::Ket) {
        throw SpaceMismatchError("forward_evolve expects a ket on the circuit space");
    }
    std::size_t upto = circuit.marker_position(marker);
    LabeledState state = input;
    for (std::size_t k = 0; k < upto; k++) {
        state = apply(element_unitary(circuit.stages()[k], circuit.space()), state);
    }
    return state;
}

LabeledState backward_evolve_from(const Circuit &circuit, const LabeledState &bra,
                                  const std::string &marker) {
    if (bra.space() != circuit.space() || bra.kind() != Kind::Bra) {
        throw SpaceMismatchError("backward_evolve expects a bra on the circuit space");
    }
    std::size_t upto = circuit.marker_position(marker);
    LabeledState state = bra;
    for (std::size_t k = circuit.stages().size(); k > upto; k--) {
        state = apply(element_unitary(circuit.stages()[k - 1], circuit.space()), state);
    }
    return state;
}

LabeledState backward_evolve(const Circuit &circuit, const std::string &detector,
                             const std::string &marker) {
    return backward_evolve_from(circuit, circuit.detector(detector).bra, marker);
}

double postselection_probability(const Circuit &circuit, const LabeledState &input,
                                 const LabeledState &pattern_bra) {
    if (std::abs(input.norm() - 1.0) > 1e-9) {
        throw Error("postselection_probability requires a normalized input state");
    }
    LabeledState out = input;
    for (const CircuitElement &stage : circuit.stages()) {
        out = apply(element_unitary(stage, circuit.space()), out);
    }
    Complex amplitude = inner(pattern_bra.normalized(), out);
    double p = std::norm(amplitude);
    return p > 1.0 ? 1.0 : p;
}

}  // namespace cheshire
