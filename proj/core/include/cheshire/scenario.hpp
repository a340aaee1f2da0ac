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

#ifndef CHESHIRE_SCENARIO_HPP
#define CHESHIRE_SCENARIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cheshire/circuit.hpp"
#include "cheshire/tsvf.hpp"

namespace cheshire {

/// The observables a scenario may probe: which-path projectors, per-arm
/// polarization Paulis, and the global identity.
enum class Observable : uint8_t { PiL, PiR, SxL, SyL, SzL, SxR, SyR, SzR, I };

const std::vector<Observable> &all_observables();
std::string observable_name(Observable obs);
bool observable_from_name(std::string_view name, Observable &out);

/// "left", "right" or "global" (for the identity probe).
std::string observable_arm(Observable obs);

LabeledOperator observable_operator(Observable obs, const Space &space);

/// Which detector clicks select an event. One name is a plain projection
/// onto that detector's state. Two names are a coincidence: the event is
/// kept when both fire, which projects onto the antisymmetric combination
/// (bra_first - bra_second)/sqrt2 of the two detector states -- for the
/// standard choice of detector states this is the singlet projection
/// realized by recombining system and ancilla on a balanced beam splitter.
struct Postselection {
    std::vector<std::string> detector_names;

    bool coincidence() const { return detector_names.size() == 2; }
    bool operator==(const Postselection &other) const = default;
};

/// A parsed experiment description: circuit, pre-selection input,
/// post-selection pattern, and the observables to probe. Probes are
/// evaluated at the first declared marker.
struct Scenario {
    std::string name;
    Circuit circuit;
    LabeledState input;
    Postselection postselect;
    std::vector<Observable> probes;
    std::vector<std::string> marker_order;

    const std::string &probe_marker() const;

    /// The projecting bra of the post-selection pattern (unnormalized).
    LabeledState postselect_bra() const;

    bool operator==(const Scenario &other) const = default;
};

/// Parses the line-oriented scenario grammar:
///
///     space path=L,R pol=H,V [ancilla=H,V]
///     input <ket-expr>
///     element <kind> <arm/mode> [params]
///     marker <name>
///     detector <name> <bra-expr>
///     postselect <detector-name> [& <detector-name>]
///     probe <observable>
///
/// '#' starts a comment. Throws ParseError with 1-based line/column on
/// syntax errors and semantic errors (unknown arm, duplicate detector,
/// unknown element kind, ...).
Scenario parse_scenario(std::string_view text, std::string name = "scenario");

/// Reads and parses a scenario file; the scenario name is the file's
/// basename without extension.
Scenario load_scenario_file(const std::string &path);

/// Emits the same grammar; parsing the output yields a Scenario equal to
/// the input.
std::string serialize_scenario(const Scenario &scenario);

/// The two-state vector a scenario describes at its probe marker: the
/// backward-evolved post-selection bra paired with the forward-evolved
/// input ket; with an ancilla, the pair is contracted into an entangled
/// pre- and post-selection.
TwoStateVector scenario_tsv(const Scenario &scenario);

/// Forward-evolves the full pre-selected state (system + ancilla) to the
/// probe marker, backward-evolves the coincidence projection to the same
/// point, and contracts the ancilla between them. Requires an ancilla
/// factor in the scenario space.
TwoStateVector build_entangled_tsv(const Scenario &scenario);

/// Probability of the scenario's post-selection pattern for its input.
double scenario_postselection_probability(const Scenario &scenario);

}  // namespace cheshire

#endif
