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

#ifndef CHESHIRE_HERMITIAN_EIG_HPP
#define CHESHIRE_HERMITIAN_EIG_HPP

#include <cstddef>
#include <vector>

#include "cheshire/basis.hpp"
#include "cheshire/operators.hpp"

namespace cheshire {

/// Result of diagonalizing a Hermitian matrix: A V = V diag(eigenvalues),
/// with V unitary. `eigenvectors` is row-major; column j is the j-th
/// eigenvector.
struct HermitianEigenSystem {
    std::vector<double> eigenvalues;
    std::vector<Complex> eigenvectors;
    std::size_t dim = 0;

    Complex vector_entry(std::size_t row, std::size_t j) const {
        return eigenvectors[row * dim + j];
    }
};

/// Cyclic complex Jacobi diagonalization. Intended for the small matrices
/// this library works with (dim <= 16); throws if `matrix` is not
/// Hermitian to within 1e-10.
HermitianEigenSystem hermitian_eigensystem(const std::vector<Complex> &matrix, std::size_t dim);

HermitianEigenSystem hermitian_eigensystem(const LabeledOperator &op);

}  // namespace cheshire

#endif
