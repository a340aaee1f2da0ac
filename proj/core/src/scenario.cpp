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

#include "cheshire/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cheshire/errors.hpp"
#include "cheshire/state_expr.hpp"

namespace cheshire {

const std::vector<Observable> &all_observables() {
    static const std::vector<Observable> kAll = {
        Observable::PiL, Observable::PiR, Observable::SxL, Observable::SyL, Observable::SzL,
        Observable::SxR, Observable::SyR, Observable::SzR, Observable::I,
    };
    return kAll;
}

std::string observable_name(Observable obs) {
    switch (obs) {
        case Observable::PiL:
            return "PiL";
        case Observable::PiR:
            return "PiR";
        case Observable::SxL:
            return "SxL";
        case Observable::SyL:
            return "SyL";
        case Observable::SzL:
            return "SzL";
        case Observable::SxR:
            return "SxR";
        case Observable::SyR:
            return "SyR";
        case Observable::SzR:
            return "SzR";
        default:
            return "I";
    }
}

bool observable_from_name(std::string_view name, Observable &out) {
    for (Observable obs : all_observables()) {
        if (observable_name(obs) == name) {
            out = obs;
            return true;
        }
    }
    return false;
}

std::string observable_arm(Observable obs) {
    switch (obs) {
        case Observable::PiL:
        case Observable::SxL:
        case Observable::SyL:
        case Observable::SzL:
            return "left";
        case Observable::PiR:
        case Observable::SxR:
        case Observable::SyR:
        case Observable::SzR:
            return "right";
        default:
            return "global";
    }
}

LabeledOperator observable_operator(Observable obs, const Space &space) {
    switch (obs) {
        case Observable::PiL:
            return LabeledOperator::arm_projector(space, Arm::L);
        case Observable::PiR:
            return LabeledOperator::arm_projector(space, Arm::R);
        case Observable::SxL:
            return LabeledOperator::arm_pauli(space, Arm::L, PauliAxis::X);
        case Observable::SyL:
            return LabeledOperator::arm_pauli(space, Arm::L, PauliAxis::Y);
        case Observable::SzL:
            return LabeledOperator::arm_pauli(space, Arm::L, PauliAxis::Z);
        case Observable::SxR:
            return LabeledOperator::arm_pauli(space, Arm::R, PauliAxis::X);
        case Observable::SyR:
            return LabeledOperator::arm_pauli(space, Arm::R, PauliAxis::Y);
        case Observable::SzR:
            return LabeledOperator::arm_pauli(space, Arm::R, PauliAxis::Z);
        default:
            return LabeledOperator::identity(space);
    }
}

const std::string &Scenario::probe_marker() const {
    if (marker_order.empty()) {
        throw Error("scenario '" + name + "' declares no marker to probe at");
    }
    return marker_order.front();
}

LabeledState Scenario::postselect_bra() const {
    if (postselect.detector_names.empty()) {
        throw Error("scenario '" + name + "' declares no post-selection");
    }
    if (!postselect.coincidence()) {
        return circuit.detector(postselect.detector_names[0]).bra;
    }
    const LabeledState &first = circuit.detector(postselect.detector_names[0]).bra;
    const LabeledState &second = circuit.detector(postselect.detector_names[1]).bra;
    return (first - second).scaled(Complex{1.0 / std::sqrt(2.0), 0});
}

namespace {

struct Line {
    int number;                       // 1-based
    std::string text;                 // comment-stripped
    std::vector<std::string> words;   // whitespace-separated
    std::vector<int> columns;         // 1-based start column per word
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        number++;
        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line;
        line.number = number;
        line.text = std::string(raw);
        std::size_t k = 0;
        while (k < raw.size()) {
            if (raw[k] == ' ' || raw[k] == '\t' || raw[k] == '\r') {
                k++;
                continue;
            }
            std::size_t word_start = k;
            while (k < raw.size() && raw[k] != ' ' && raw[k] != '\t' && raw[k] != '\r') {
                k++;
            }
            line.words.emplace_back(raw.substr(word_start, k - word_start));
            line.columns.push_back(static_cast<int>(word_start) + 1);
        }
        if (!line.words.empty()) {
            out.push_back(std::move(line));
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

class ScenarioParser {
   public:
    ScenarioParser(std::string_view text, std::string name)
        : lines_(split_lines(text)), name_(std::move(name)) {}

    Scenario parse() {
        if (lines_.empty()) {
            throw ParseError(1, 1, "empty scenario");
        }
        parse_space_line(lines_.front());

        Circuit circuit(space_);
        LabeledState input = LabeledState::zero(space_, Kind::Ket);
        bool have_input = false;
        Postselection postselect;
        std::vector<Observable> probes;
        std::vector<std::string> marker_order;

        for (std::size_t k = 1; k < lines_.size(); k++) {
            const Line &line = lines_[k];
            const std::string &keyword = line.words[0];
            if (keyword == "space") {
                throw ParseError(line.number, line.columns[0], "duplicate space line");
            } else if (keyword == "input") {
                if (have_input) {
                    throw ParseError(line.number, line.columns[0], "duplicate input line");
                }
                input = parse_full_space_expr(line, 1, Kind::Ket);
                have_input = true;
            } else if (keyword == "element") {
                circuit.add_stage(parse_element(line));
            } else if (keyword == "marker") {
                expect_word_count(line, 2);
                try {
                    circuit.add_marker(line.words[1]);
                } catch (const Error &e) {
                    throw ParseError(line.number, line.columns[1], e.what());
                }
                marker_order.push_back(line.words[1]);
            } else if (keyword == "detector") {
                if (line.words.size() < 3) {
                    throw ParseError(line.number, line.columns[0],
                                     "detector needs a name and a state expression");
                }
                LabeledState ket = parse_full_space_expr(line, 2, Kind::Ket);
                try {
                    circuit.add_detector(DetectorDef{line.words[1], ket.dual()});
                } catch (const Error &e) {
                    throw ParseError(line.number, line.columns[1], e.what());
                }
            } else if (keyword == "postselect") {
                if (!postselect.detector_names.empty()) {
                    throw ParseError(line.number, line.columns[0], "duplicate postselect line");
                }
                postselect = parse_postselect(line, circuit);
            } else if (keyword == "probe") {
                expect_word_count(line, 2);
                Observable obs;
                if (!observable_from_name(line.words[1], obs)) {
                    throw ParseError(line.number, line.columns[1],
                                     "unknown observable '" + line.words[1] + "'");
                }
                probes.push_back(obs);
            } else {
                throw ParseError(line.number, line.columns[0],
                                 "unknown directive '" + keyword + "'");
            }
        }

        if (!have_input) {
            throw ParseError(last_line(), 1, "missing input line");
        }
        if (postselect.detector_names.empty()) {
            throw ParseError(last_line(), 1, "missing postselect line");
        }
        if (!probes.empty() && marker_order.empty()) {
            throw ParseError(last_line(), 1, "probes need a marker to be evaluated at");
        }
        if (!circuit.total_unitary().is_unitary(1e-12)) {
            throw ParseError(last_line(), 1, "composed circuit is not unitary");
        }

        Scenario scenario{std::move(name_), std::move(circuit), std::move(input),
                          std::move(postselect), std::move(probes), std::move(marker_order)};
        return scenario;
    }

   private:
    int last_line() const { return lines_.back().number; }

    static void expect_word_count(const Line &line, std::size_t n) {
        if (line.words.size() != n) {
            throw ParseError(line.number, line.columns[0],
                             line.words[0] + " expects " + std::to_string(n - 1) +
                                 " argument(s), got " + std::to_string(line.words.size() - 1));
        }
    }

    void parse_space_line(const Line &line) {
        if (line.words[0] != "space") {
            throw ParseError(line.number, line.columns[0],
                             "the first directive must be the space line");
        }
        bool has_path = false, has_pol = false, has_anc = false;
        for (std::size_t k = 1; k < line.words.size(); k++) {
            const std::string &word = line.words[k];
            if (word == "path=L,R") {
                has_path = true;
            } else if (word == "pol=H,V") {
                has_pol = true;
            } else if (word == "ancilla=H,V") {
                has_anc = true;
            } else {
                throw ParseError(line.number, line.columns[k],
                                 "unknown space component '" + word + "'");
            }
        }
        if (!has_path || !has_pol) {
            throw ParseError(line.number, line.columns[0],
                             "space needs at least path=L,R and pol=H,V");
        }
        space_ = Space::of(has_path, has_pol, has_anc);
    }

    // Evaluates the expression starting at word `first_word` and checks it
    // covers the declared space.
    LabeledState parse_full_space_expr(const Line &line, std::size_t first_word, Kind kind) {
        if (line.words.size() <= first_word) {
            throw ParseError(line.number, line.columns[0], "missing state expression");
        }
        int offset = line.columns[first_word] - 1;
        LabeledState ket =
            parse_state_expr(std::string_view(line.text).substr(offset), line.number, offset);
        if (ket.space() != space_) {
            throw ParseError(line.number, line.columns[first_word],
                             "state covers " + ket.space().str() + " but the declared space is " +
                                 space_.str());
        }
        return kind == Kind::Ket ? ket : ket.dual();
    }

    CircuitElement parse_element(const Line &line) {
        if (line.words.size() < 3) {
            throw ParseError(line.number, line.columns[0],
                             "element needs a kind and a location");
        }
        const std::string &kind_word = line.words[1];
        CircuitElement element{};
        if (kind_word == "BeamSplitter") {
            element.kind = ElementKind::BeamSplitter;
        } else if (kind_word == "HalfWavePlate") {
            element.kind = ElementKind::HalfWavePlate;
        } else if (kind_word == "PolarizingBeamSplitter") {
            element.kind = ElementKind::PolarizingBeamSplitter;
        } else if (kind_word == "Mirror") {
            element.kind = ElementKind::Mirror;
        } else if (kind_word == "SingletSource") {
            element.kind = ElementKind::SingletSource;
        } else {
            throw ParseError(line.number, line.columns[1],
                             "unknown element kind '" + kind_word + "'");
        }

        const std::string &loc_word = line.words[2];
        bool arm_element =
            element.kind == ElementKind::HalfWavePlate || element.kind == ElementKind::Mirror;
        if (loc_word == "path" && !arm_element && element.kind != ElementKind::SingletSource) {
            element.location = ElementLocation::PathFactor;
        } else if (loc_word == "pol" && element.kind == ElementKind::SingletSource) {
            element.location = ElementLocation::PolFactor;
        } else if (loc_word == "L" && arm_element) {
            element.location = ElementLocation::ArmL;
        } else if (loc_word == "R" && arm_element) {
            element.location = ElementLocation::ArmR;
        } else {
            throw ParseError(line.number, line.columns[2],
                             "unknown arm/mode '" + loc_word + "' for " + kind_word);
        }

        if (line.words.size() > 3) {
            if (element.kind != ElementKind::Mirror || line.words.size() > 4) {
                throw ParseError(line.number, line.columns[3],
                                 "unexpected parameter for " + kind_word);
            }
            char *end = nullptr;
            element.phase = std::strtod(line.words[3].c_str(), &end);
            if (end == line.words[3].c_str() || *end != '\0' || !std::isfinite(element.phase)) {
                throw ParseError(line.number, line.columns[3],
                                 "bad mirror phase '" + line.words[3] + "'");
            }
        }
        return element;
    }

    Postselection parse_postselect(const Line &line, const Circuit &circuit) {
        Postselection out;
        if (line.words.size() == 2) {
            out.detector_names = {line.words[1]};
        } else if (line.words.size() == 4 && line.words[2] == "&") {
            if (line.words[1] == line.words[3]) {
                throw ParseError(line.number, line.columns[3],
                                 "coincidence needs two distinct detectors");
            }
            out.detector_names = {line.words[1], line.words[3]};
        } else {
            throw ParseError(line.number, line.columns[0],
                             "postselect expects one detector or 'A & B'");
        }
        for (std::size_t k = 0; k < out.detector_names.size(); k++) {
            try {
                circuit.detector(out.detector_names[k]);
            } catch (const Error &e) {
                throw ParseError(line.number, line.columns[k == 0 ? 1 : 3], e.what());
            }
        }
        return out;
    }

    std::vector<Line> lines_;
    std::string name_;
    Space space_;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Scenario parse_scenario(std::string_view text, std::string name) {
    return ScenarioParser(text, std::move(name)).parse();
}

Scenario load_scenario_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open scenario file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string name = path;
    std::size_t slash = name.find_last_of("/\\");
    if (slash != std::string::npos) {
        name = name.substr(slash + 1);
    }
    std::size_t dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) {
        name = name.substr(0, dot);
    }
    return parse_scenario(buffer.str(), name);
}

std::string serialize_scenario(const Scenario &scenario) {
    const Space &space = scenario.circuit.space();
    std::string out = "space path=L,R pol=H,V";
    if (space.has_ancilla()) {
        out += " ancilla=H,V";
    }
    out += "\n";
    out += "input " + serialize_state_expr(scenario.input) + "\n";

    // Stages interleaved with markers at their recorded positions.
    std::vector<std::vector<std::string>> markers_at(scenario.circuit.stages().size() + 1);
    for (const std::string &name : scenario.marker_order) {
        markers_at[scenario.circuit.marker_position(name)].push_back(name);
    }
    for (std::size_t k = 0; k <= scenario.circuit.stages().size(); k++) {
        for (const std::string &name : markers_at[k]) {
            out += "marker " + name + "\n";
        }
        if (k < scenario.circuit.stages().size()) {
            const CircuitElement &e = scenario.circuit.stages()[k];
            out += "element " + element_kind_name(e.kind) + " " + element_location_name(e.location);
            if (e.kind == ElementKind::Mirror && e.phase != 0) {
                out += " " + format_double(e.phase);
            }
            out += "\n";
        }
    }
    for (const DetectorDef &d : scenario.circuit.detectors()) {
        out += "detector " + d.name + " " + serialize_state_expr(d.bra.dual()) + "\n";
    }
    out += "postselect " + scenario.postselect.detector_names[0];
    if (scenario.postselect.coincidence()) {
        out += " & " + scenario.postselect.detector_names[1];
    }
    out += "\n";
    for (Observable obs : scenario.probes) {
        out += "probe " + observable_name(obs) + "\n";
    }
    return out;
}

TwoStateVector build_entangled_tsv(const Scenario &scenario) {
    if (!scenario.circuit.space().has_ancilla()) {
        throw Error("scenario '" + scenario.name +
                    "' declares no ancilla; nothing to contract");
    }
    const std::string &marker = scenario.probe_marker();
    LabeledState pre_full = forward_evolve(scenario.circuit, scenario.input, marker);
    LabeledState post_full =
        backward_evolve_from(scenario.circuit, scenario.postselect_bra(), marker);
    return contract_ancilla(pre_full, post_full);
}

TwoStateVector scenario_tsv(const Scenario &scenario) {
    if (scenario.circuit.space().has_ancilla()) {
        return build_entangled_tsv(scenario);
    }
    const std::string &marker = scenario.probe_marker();
    LabeledState ket = forward_evolve(scenario.circuit, scenario.input, marker);
    LabeledState bra = backward_evolve_from(scenario.circuit, scenario.postselect_bra(), marker);
    return TwoStateVector::single(std::move(bra), std::move(ket));
}

double scenario_postselection_probability(const Scenario &scenario) {
    return postselection_probability(scenario.circuit, scenario.input.normalized(),
                                     scenario.postselect_bra());
}

}  // namespace cheshire
