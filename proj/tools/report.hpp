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

#ifndef CHESHIRE_TOOLS_REPORT_HPP
#define CHESHIRE_TOOLS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cheshire/pointer.hpp"
#include "cheshire/scenario.hpp"

namespace cheshire::cli {

enum class Format { Text, Csv, Json };

struct TableRow {
    std::string arm;
    std::string observable;
    Complex value;
};

struct PointerRun {
    double g = 0;  // absolute, pointer units
    PointerReadout readout;
};

/// Everything a command computed, in one machine-renderable bundle. Every
/// weak value in here comes straight out of the core library.
struct Report {
    std::string command;
    std::string scenario_name;
    std::string observable;  // pointer-sweep / montecarlo only
    double sigma = 1.0;
    std::optional<uint64_t> seed;
    std::optional<long long> n_trials;
    Complex denominator{0, 0};
    double postselect_prob = 0;
    std::vector<TableRow> table;
    std::vector<PointerRun> pointer_runs;
    std::optional<Complex> estimate;
    std::optional<double> estimate_stderr_re;
    std::optional<double> estimate_stderr_im;
};

/// 12 significant digits, the machine-format contract.
std::string format_machine(double v);

/// Short human form: snaps to 0 / 1 / i / a+bi integers when within 1e-10,
/// machine digits otherwise.
std::string format_weak_human(Complex v);

/// Normalized channel readings for one run: mean_x/g and
/// mean_p / (2 g Var p).
Complex run_estimate(const PointerRun &run);

std::string render(const Report &report, Format format);

}  // namespace cheshire::cli

#endif
