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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cheshire/tsvf.hpp"
#include "cheshire/version.hpp"
#include "json.hpp"

namespace cheshire::cli {

namespace {

constexpr double kHumanSnapTol = 1e-10;

std::string format_machine_complex(Complex v) {
    std::string out = format_machine(v.real());
    out += (v.imag() >= 0) ? "+" : "-";
    out += format_machine(std::abs(v.imag()));
    out += "i";
    return out;
}

bool near_int(double v, long long &out) {
    double r = std::round(v);
    if (std::abs(v - r) <= kHumanSnapTol) {
        out = static_cast<long long>(r);
        return true;
    }
    return false;
}

std::string pad(const std::string &s, std::size_t width) {
    std::string out = s;
    while (out.size() < width) {
        out += ' ';
    }
    return out;
}

// Layout of the headline 2x4 grid: per arm, sigma_x sigma_y sigma_z and
// the which-path projector under the "I" column.
struct GridCell {
    const char *arm;
    const char *probe;
};

const GridCell kGrid[2][4] = {
    {{"left", "SxL"}, {"left", "SyL"}, {"left", "SzL"}, {"left", "PiL"}},
    {{"right", "SxR"}, {"right", "SyR"}, {"right", "SzR"}, {"right", "PiR"}},
};

bool find_row(const Report &report, const std::string &probe, Complex &out) {
    for (const TableRow &row : report.table) {
        if (row.observable == probe) {
            out = row.value;
            return true;
        }
    }
    return false;
}

bool has_classic_grid(const Report &report) {
    Complex unused;
    for (const auto &row : kGrid) {
        for (const GridCell &cell : row) {
            if (!find_row(report, cell.probe, unused)) {
                return false;
            }
        }
    }
    return true;
}

std::string render_text(const Report &report) {
    std::ostringstream out;
    out << "scenario: " << report.scenario_name << "\n";
    out << "command: " << report.command << "\n";
    if (!report.observable.empty()) {
        out << "observable: " << report.observable << "\n";
    }
    if (report.command != "table") {
        out << "sigma: " << format_machine(report.sigma) << "\n";
    }
    if (report.n_trials.has_value()) {
        out << "n: " << *report.n_trials;
        if (report.seed.has_value()) {
            out << "   seed: " << *report.seed;
        }
        out << "\n";
    }
    out << "denominator: " << format_weak_human(report.denominator) << "\n";
    out << "postselect probability: " << format_machine(report.postselect_prob) << "\n";

    if (!report.table.empty()) {
        out << "\n";
        if (has_classic_grid(report)) {
            out << "  " << pad("arm", 8) << pad("sigma_x", 9) << pad("sigma_y", 9)
                << pad("sigma_z", 9) << "I\n";
            for (const auto &row : kGrid) {
                out << "  " << pad(row[0].arm, 8);
                for (std::size_t c = 0; c < 4; c++) {
                    Complex v;
                    find_row(report, row[c].probe, v);
                    std::string cell = format_weak_human(v);
                    out << (c == 3 ? cell : pad(cell, 9));
                }
                out << "\n";
            }
            Complex v;
            if (find_row(report, "I", v)) {
                out << "  identity: " << format_weak_human(v) << "\n";
            }
        } else {
            for (const TableRow &row : report.table) {
                out << "  " << pad(row.observable, 5) << " (" << row.arm
                    << "): " << format_weak_human(row.value) << "\n";
            }
        }
    }

    if (!report.pointer_runs.empty()) {
        out << "\n  " << pad("g", 14) << pad("mean_x/g", 22) << pad("mean_p/(2gVarp)", 22)
            << pad("P(post)", 18);
        if (report.command == "montecarlo") {
            out << "accepted";
        }
        out << "\n";
        for (const PointerRun &run : report.pointer_runs) {
            Complex est = run_estimate(run);
            out << "  " << pad(format_machine(run.g), 14) << pad(format_machine(est.real()), 22)
                << pad(format_machine(est.imag()), 22)
                << pad(format_machine(run.readout.postselect_prob), 18);
            if (run.readout.n_samples.has_value()) {
                out << *run.readout.n_samples;
            }
            out << "\n";
        }
    }

    if (report.estimate.has_value()) {
        out << "\n";
        out << (report.command == "montecarlo" ? "estimated weak value: "
                                               : "extrapolated weak value: ");
        out << format_weak_human(*report.estimate);
        if (report.estimate_stderr_re.has_value()) {
            out << "   (stderr " << format_machine(*report.estimate_stderr_re) << " re, "
                << format_machine(*report.estimate_stderr_im) << " im)";
        }
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const Report &report) {
    std::ostringstream out;
    if (report.command == "table" || report.command == "validate") {
        out << "scenario,arm,observable,weak_re,weak_im\n";
        for (const TableRow &row : report.table) {
            out << report.scenario_name << "," << row.arm << "," << row.observable << ","
                << format_machine(row.value.real()) << "," << format_machine(row.value.imag())
                << "\n";
        }
        return out.str();
    }
    out << "scenario,observable,g,mean_position,mean_momentum,postselect_prob,n_accepted,"
           "estimate_re,estimate_im\n";
    for (const PointerRun &run : report.pointer_runs) {
        Complex est = run_estimate(run);
        out << report.scenario_name << "," << report.observable << "," << format_machine(run.g)
            << "," << format_machine(run.readout.mean_position) << ","
            << format_machine(run.readout.mean_momentum) << ","
            << format_machine(run.readout.postselect_prob) << ",";
        if (run.readout.n_samples.has_value()) {
            out << *run.readout.n_samples;
        }
        out << "," << format_machine(est.real()) << "," << format_machine(est.imag()) << "\n";
    }
    if (report.estimate.has_value()) {
        // The extrapolated / final estimate appears as the g = 0 row.
        out << report.scenario_name << "," << report.observable << ",0,,,"
            << format_machine(report.postselect_prob) << ",,"
            << format_machine(report.estimate->real()) << ","
            << format_machine(report.estimate->imag()) << "\n";
    }
    return out.str();
}

nlohmann::json complex_json(Complex v) {
    return {{"re", v.real()}, {"im", v.imag()}};
}

std::string render_json(const Report &report) {
    nlohmann::json j;
    j["schema"] = "cheshire-report/1";
    j["tool_version"] = kVersion;
    j["command"] = report.command;
    j["scenario"] = report.scenario_name;
    j["tolerances"] = {{"singular_denominator", kSingularDenominatorTol},
                       {"human_snap", kHumanSnapTol}};
    j["denominator"] = complex_json(report.denominator);
    j["postselect_probability"] = report.postselect_prob;
    if (!report.observable.empty()) {
        j["observable"] = report.observable;
    }
    if (report.command != "table") {
        j["sigma"] = report.sigma;
    }
    if (report.seed.has_value()) {
        j["seed"] = *report.seed;
    }
    if (report.n_trials.has_value()) {
        j["n"] = *report.n_trials;
    }
    if (!report.table.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const TableRow &row : report.table) {
            rows.push_back({{"arm", row.arm},
                            {"observable", row.observable},
                            {"re", row.value.real()},
                            {"im", row.value.imag()}});
        }
        j["table"] = rows;
    }
    if (!report.pointer_runs.empty()) {
        nlohmann::json runs = nlohmann::json::array();
        for (const PointerRun &run : report.pointer_runs) {
            Complex est = run_estimate(run);
            nlohmann::json r = {{"g", run.g},
                                {"mean_position", run.readout.mean_position},
                                {"mean_momentum", run.readout.mean_momentum},
                                {"postselect_prob", run.readout.postselect_prob},
                                {"momentum_variance", run.readout.momentum_variance},
                                {"estimate", complex_json(est)}};
            if (run.readout.n_samples.has_value()) {
                r["n_samples"] = *run.readout.n_samples;
            }
            if (run.readout.std_error_position.has_value()) {
                r["stderr_position"] = *run.readout.std_error_position;
            }
            if (run.readout.std_error_momentum.has_value()) {
                r["stderr_momentum"] = *run.readout.std_error_momentum;
            }
            runs.push_back(r);
        }
        j["pointer_runs"] = runs;
    }
    if (report.estimate.has_value()) {
        j["estimate"] = complex_json(*report.estimate);
        if (report.estimate_stderr_re.has_value()) {
            j["estimate_stderr"] = {{"re", *report.estimate_stderr_re},
                                    {"im", *report.estimate_stderr_im}};
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace

std::string format_machine(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_weak_human(Complex v) {
    long long re = 0, im = 0;
    if (near_int(v.real(), re) && near_int(v.imag(), im)) {
        if (im == 0) {
            return std::to_string(re);
        }
        std::string imag_part;
        if (im == 1) {
            imag_part = "i";
        } else if (im == -1) {
            imag_part = "-i";
        } else {
            imag_part = std::to_string(im) + "i";
        }
        if (re == 0) {
            return imag_part;
        }
        return std::to_string(re) + (im > 0 ? "+" : "") + imag_part;
    }
    return format_machine_complex(v);
}

Complex run_estimate(const PointerRun &run) {
    double re = run.readout.mean_position / run.g;
    double im = run.readout.mean_momentum / (2 * run.g * run.readout.momentum_variance);
    return {re, im};
}

std::string render(const Report &report, Format format) {
    switch (format) {
        case Format::Text:
            return render_text(report);
        case Format::Csv:
            return render_csv(report);
        default:
            return render_json(report);
    }
}

}  // namespace cheshire::cli
