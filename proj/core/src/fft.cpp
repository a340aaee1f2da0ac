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

#include "cheshire/fft.hpp"

#include <cmath>

#include "cheshire/errors.hpp"

namespace cheshire {

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

void fft_in_place(std::vector<Complex> &data, bool inverse) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) {
        throw Error("fft size must be a power of two, got " + std::to_string(n));
    }

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; i++) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }

    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = sign * 2.0 * M_PI / static_cast<double>(len);
        const Complex w_len = std::polar(1.0, angle);
        for (std::size_t start = 0; start < n; start += len) {
            Complex w{1, 0};
            for (std::size_t k = 0; k < len / 2; k++) {
                Complex even = data[start + k];
                Complex odd = data[start + k + len / 2] * w;
                data[start + k] = even + odd;
                data[start + k + len / 2] = even - odd;
                w *= w_len;
            }
        }
    }

    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (Complex &x : data) {
            x *= inv_n;
        }
    }
}

}  // namespace cheshire
