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

#ifndef CHESHIRE_STATE_EXPR_HPP
#define CHESHIRE_STATE_EXPR_HPP

#include <string>
#include <string_view>

#include "cheshire/state.hpp"

namespace cheshire {

/// Parses a ket expression such as "(L+R)/sqrt2 (x) H" or
/// "L (x) (H (x) AV - V (x) AH)/sqrt2".
///
/// Atoms: L R (path), H V (photon polarization), AH AV (ancilla
/// polarization). Scalars: decimal numbers, i, and quotients by integers
/// or sqrtN (e.g. 1/sqrt2, i/2, 3/4). (x) is the tensor product and binds
/// tighter than + and -.
///
/// `line` and `column_offset` locate the expression inside a larger file
/// for error reporting.
LabeledState parse_state_expr(std::string_view text, int line = 1, int column_offset = 0);

/// Emits an expression that parse_state_expr() evaluates back to exactly
/// `ket` (coefficients are printed with enough digits to round-trip).
std::string serialize_state_expr(const LabeledState &ket);

}  // namespace cheshire

#endif
