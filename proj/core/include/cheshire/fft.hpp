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

#ifndef CHESHIRE_FFT_HPP
#define CHESHIRE_FFT_HPP

#include <cstddef>
#include <vector>

#include "cheshire/basis.hpp"

namespace cheshire {

bool is_power_of_two(std::size_t n);

/// In-place radix-2 FFT. Forward: X_k = sum_m x_m e^{-2 pi i k m / n};
/// inverse includes the 1/n factor. Size must be a power of two.
void fft_in_place(std::vector<Complex> &data, bool inverse);

}  // namespace cheshire

#endif
