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

#include "cheshire/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cheshire/errors.hpp"

namespace cheshire {

namespace {

double off_diagonal_norm(const std::vector<Complex> &a, std::size_t d) {
    double total = 0;
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            if (r != c) {
                total += std::norm(a[r * d + c]);
            }
        }
    }
    return std::sqrt(total);
}

}  // namespace

HermitianEigenSystem hermitian_eigensystem(const std::vector<Complex> &matrix, std::size_t dim) {
    if (matrix.size() != dim * dim) {
        throw Error("hermitian_eigensystem: matrix is not dim x dim");
    }
    double scale = 0;
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            scale = std::max(scale, std::abs(matrix[r * dim + c]));
            if (std::abs(matrix[r * dim + c] - std::conj(matrix[c * dim + r])) > 1e-10) {
                throw Error("hermitian_eigensystem: matrix is not Hermitian");
            }
        }
    }

    std::vector<Complex> a = matrix;
    std::vector<Complex> v(dim * dim, Complex{0, 0});
    for (std::size_t k = 0; k < dim; k++) {
        v[k * dim + k] = Complex{1, 0};
    }

    const double stop = std::max(scale, 1.0) * 1e-15;
    for (int sweep = 0; sweep < 64 && off_diagonal_norm(a, dim) > stop; sweep++) {
        for (std::size_t p = 0; p + 1 < dim; p++) {
            for (std::size_t q = p + 1; q < dim; q++) {
                Complex apq = a[p * dim + q];
                double r = std::abs(apq);
                if (r <= stop * 1e-2) {
                    continue;
                }
                // Factor out the phase of a_pq, then a real Jacobi rotation
                // zeroes the off-diagonal pair: the plane rotation is
                // G = [[c, s], [-conj(s), c]] with s = sin(theta) e^{i phase}.
                double app = a[p * dim + p].real();
                double aqq = a[q * dim + q].real();
                Complex phase = apq / r;
                double tau = (aqq - app) / (2 * r);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1.0 / std::sqrt(1 + t * t);
                Complex s = t * c * phase;

                for (std::size_t k = 0; k < dim; k++) {
                    Complex akp = a[k * dim + p];
                    Complex akq = a[k * dim + q];
                    a[k * dim + p] = c * akp - std::conj(s) * akq;
                    a[k * dim + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < dim; k++) {
                    Complex apk = a[p * dim + k];
                    Complex aqk = a[q * dim + k];
                    a[p * dim + k] = c * apk - s * aqk;
                    a[q * dim + k] = std::conj(s) * apk + c * aqk;
                }
                for (std::size_t k = 0; k < dim; k++) {
                    Complex vkp = v[k * dim + p];
                    Complex vkq = v[k * dim + q];
                    v[k * dim + p] = c * vkp - std::conj(s) * vkq;
                    v[k * dim + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    // Sort ascending by eigenvalue, permuting eigenvector columns along.
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * dim + x].real() < a[y * dim + y].real();
    });

    HermitianEigenSystem out;
    out.dim = dim;
    out.eigenvalues.resize(dim);
    out.eigenvectors.resize(dim * dim);
    for (std::size_t j = 0; j < dim; j++) {
        out.eigenvalues[j] = a[order[j] * dim + order[j]].real();
        for (std::size_t k = 0; k < dim; k++) {
            out.eigenvectors[k * dim + j] = v[k * dim + order[j]];
        }
    }
    return out;
}

HermitianEigenSystem hermitian_eigensystem(const LabeledOperator &op) {
    return hermitian_eigensystem(op.matrix(), op.dim());
}

}  // namespace cheshire
