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

#ifndef CHESHIRE_CIRCUIT_HPP
#define CHESHIRE_CIRCUIT_HPP

#include <map>
#include <string>
#include <vector>

#include "cheshire/operators.hpp"
#include "cheshire/state.hpp"

namespace cheshire {

enum class ElementKind : uint8_t {
    BeamSplitter,
    HalfWavePlate,
    PolarizingBeamSplitter,
    Mirror,
    SingletSource,
    Detector,
};

/// Where a circuit element acts: the whole path factor (beam splitters),
/// one arm (wave plates, mirrors), or the polarization factors (the
/// entangled-pair source, which acts on photon (x) ancilla polarization).
enum class ElementLocation : uint8_t { PathFactor, ArmL, ArmR, PolFactor };

std::string element_kind_name(ElementKind kind);
std::string element_location_name(ElementLocation location);

struct CircuitElement {
    ElementKind kind;
    ElementLocation location;
    double phase = 0.0;  // Mirror only: extra phase in radians.

    bool operator==(const CircuitElement &other) const = default;
};

/// A named detection outcome: the (normalized or unnormalized) state the
/// detector projects onto, stored as a bra.
struct DetectorDef {
    std::string name;
    LabeledState bra;

    bool operator==(const DetectorDef &other) const = default;
};

/// An ordered optical circuit over a fixed labeled space: unitary stages,
/// named markers between stages, and the detectors at the output.
class Circuit {
   public:
    explicit Circuit(Space space) : space_(space) {}

    const Space &space() const { return space_; }
    const std::vector<CircuitElement> &stages() const { return stages_; }
    const std::map<std::string, std::size_t> &markers() const { return markers_; }
    const std::vector<DetectorDef> &detectors() const { return detectors_; }

    void add_stage(CircuitElement element);

    /// Marks the current position (after the stages added so far).
    void add_marker(const std::string &name);

    void add_detector(DetectorDef detector);

    std::size_t marker_position(const std::string &name) const;
    const DetectorDef &detector(const std::string &name) const;

    /// Product of all stage unitaries, in application order.
    LabeledOperator total_unitary() const;

    bool operator==(const Circuit &other) const = default;

   private:
    Space space_;
    std::vector<CircuitElement> stages_;
    std::map<std::string, std::size_t> markers_;
    std::vector<DetectorDef> detectors_;
};

/// The unitary of a single element on `space`, acting as identity on every
/// factor the element does not touch.
///
/// Conventions (fixed so that an equilibrated interferometer routes the
/// split input entirely back into the left mode):
///   - BeamSplitter: (1/sqrt2) [[1, 1], [1, -1]] on the path factor.
///   - Mirror: phase e^{i phase} on its arm (default 0, i.e. identity;
///     reflection phases are absorbed into the beam-splitter convention).
///   - HalfWavePlate: swaps H and V in its arm.
///   - PolarizingBeamSplitter: transmits H (mode kept), reflects V (mode
///     swapped).
///   - SingletSource: on photon (x) ancilla polarization, maps the product
///     basis to the Bell basis with |H, AH> -> (|H, AV> - |V, AH>)/sqrt2.
/// Detectors are not unitaries; passing one throws.
LabeledOperator element_unitary(const CircuitElement &element, const Space &space);

/// Applies the stage unitaries in order up to `marker` and returns the ket
/// there.
LabeledState forward_evolve(const Circuit &circuit, const LabeledState &input,
                            const std::string &marker);

/// Starts from the named detector's projecting bra and pulls it backwards
/// through the stages between the marker and the output; returns the bra
/// at the marker.
LabeledState backward_evolve(const Circuit &circuit, const std::string &detector,
                             const std::string &marker);

/// Same backward evolution from an explicit projecting bra (used for
/// coincidence patterns).
LabeledState backward_evolve_from(const Circuit &circuit, const LabeledState &bra,
                                  const std::string &marker);

/// Probability that the fully forward-evolved `input` is found in the
/// (unit-normalized) projecting state `pattern_bra`. `input` must be
/// normalized.
double postselection_probability(const Circuit &circuit, const LabeledState &input,
                                 const LabeledState &pattern_bra);

}  // namespace cheshire

#endif
