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

#ifndef CHESHIRE_BASIS_HPP
#define CHESHIRE_BASIS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cheshire {

using Complex = std::complex<double>;

/// Interferometer arm (spatial mode).
enum class Arm : uint8_t { L, R };

/// Linear polarization.
enum class Pol : uint8_t { H, V };

/// Pauli axis for polarization observables.
enum class PauliAxis : uint8_t { X, Y, Z };

char arm_name(Arm arm);
char pol_name(Pol pol);
char pauli_name(PauliAxis axis);

/// One basis vector of a labeled tensor-product space. A label carries a
/// value for each tensor factor the surrounding space has: interferometer
/// arm, photon polarization and (optionally) the polarization of the
/// ancilla photon.
struct BasisLabel {
    std::optional<Arm> path;
    std::optional<Pol> pol;
    std::optional<Pol> ancilla;

    bool operator==(const BasisLabel &other) const = default;

    /// Human-readable form, e.g. "L,H" or "R,V,AH". Ancilla values are
    /// prefixed with 'A' to distinguish them from the photon polarization.
    std::string str() const;
};

/// Which tensor factors a state or operator is defined over, together with
/// the canonical enumeration of its basis. Polarization varies fastest,
/// then path; the ancilla polarization, when present, is the slowest index.
/// For path(x)pol that gives (L,H), (L,V), (R,H), (R,V).
class Space {
   public:
    Space() = default;

    static Space of(bool has_path, bool has_pol, bool has_ancilla);
    static Space path();
    static Space pol();
    static Space path_pol();
    static Space path_pol_ancilla();

    bool has_path() const { return path_; }
    bool has_pol() const { return pol_; }
    bool has_ancilla() const { return anc_; }
    bool empty() const { return !path_ && !pol_ && !anc_; }

    std::size_t dim() const;

    /// Label of the index-th canonical basis vector.
    BasisLabel label(std::size_t index) const;

    /// Canonical index of a label. The label must carry exactly this
    /// space's components.
    std::size_t index(const BasisLabel &label) const;

    std::vector<BasisLabel> labels() const;

    /// True when the two spaces share no tensor factor.
    bool disjoint_with(const Space &other) const;

    /// Union of tensor factors.
    Space combined(const Space &other) const;

    /// This space with the ancilla factor removed.
    Space without_ancilla() const;

    /// Restrict a label of this space to the components of `target`.
    BasisLabel restrict_label(const BasisLabel &label, const Space &target) const;

    bool operator==(const Space &other) const = default;

    /// e.g. "path(x)pol(x)ancilla".
    std::string str() const;

   private:
    bool path_ = false;
    bool pol_ = false;
    bool anc_ = false;
};

}  // namespace cheshire

#endif
