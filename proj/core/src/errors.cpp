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

#include "cheshire/errors.hpp"

#include <sstream>

namespace cheshire {

namespace {

std::string describe_denominator(std::complex<double> d) {
    std::ostringstream out;
    out << "two-state vector is weak-value singular: denominator " << d.real();
    if (d.imag() >= 0) {
        out << "+" << d.imag() << "i";
    } else {
        out << d.imag() << "i";
    }
    return out.str();
}

std::string describe_position(int line, int column, const std::string &message) {
    std::ostringstream out;
    out << line << ":" << column << ": " << message;
    return out.str();
}

}  // namespace

SingularDenominatorError::SingularDenominatorError(std::complex<double> d)
    : Error(describe_denominator(d)), denominator(d) {}

ParseError::ParseError(int line_no, int column_no, const std::string &message)
    : Error(describe_position(line_no, column_no, message)), line(line_no), column(column_no) {}

GridOverflowError::GridOverflowError(double g_value, const std::string &message)
    : Error(message + " (g = " + std::to_string(g_value) + ")"), g(g_value) {}

}  // namespace cheshire
