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

#ifndef CHESHIRE_ERRORS_HPP
#define CHESHIRE_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace cheshire {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two states (or a state and an operator) live on different labeled bases.
struct SpaceMismatchError : Error {
    using Error::Error;
};

/// The two-state-vector denominator is numerically zero; weak values are
/// undefined. Carries the offending denominator.
struct SingularDenominatorError : Error {
    std::complex<double> denominator;
    explicit SingularDenominatorError(std::complex<double> d);
};

/// Scenario text failed to parse. `line` and `column` are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line, int column, const std::string &message);
};

/// Post-selection succeeds too rarely (or never) to produce samples.
struct StarvationError : Error {
    using Error::Error;
};

/// The displaced pointer wavefunction reaches the grid boundary; results
/// would wrap around. Carries the coupling strength that caused it.
struct GridOverflowError : Error {
    double g;
    explicit GridOverflowError(double g_value, const std::string &message);
};

}  // namespace cheshire

#endif
