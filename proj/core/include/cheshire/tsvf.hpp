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

#ifndef CHESHIRE_TSVF_HPP
#define CHESHIRE_TSVF_HPP

#include <vector>

#include "cheshire/operators.hpp"
#include "cheshire/state.hpp"

namespace cheshire {

/// Below this |denominator| a two-state vector is weak-value singular and
/// weak values are refused rather than silently blowing up.
inline constexpr double kSingularDenominatorTol = 1e-10;

/// One pre/post-selection pair. The bra is the post-selection, the ket the
/// pre-selection; the weight scales the pair inside a superposition.
struct TsvTerm {
    LabeledState bra;
    LabeledState ket;
    Complex weight{1, 0};

    bool operator==(const TsvTerm &other) const = default;
};

/// A weighted superposition of pre- and post-selected state pairs,
///     sum_k w_k <bra_k| |ket_k>.
/// The single-term case is an ordinary pre/post-selected state. No
/// normalization is applied or required: weak values are invariant under
/// a common rescaling of the terms.
class TwoStateVector {
   public:
    static TwoStateVector single(LabeledState bra, LabeledState ket, Complex weight = {1, 0});

    const std::vector<TsvTerm> &terms() const { return terms_; }
    const Space &space() const;

    /// sum_k w_k <bra_k|ket_k>.
    Complex denominator() const;

    bool singular(double tol = kSingularDenominatorTol) const;

    friend TwoStateVector superpose(std::vector<TsvTerm> terms);

   private:
    explicit TwoStateVector(std::vector<TsvTerm> terms) : terms_(std::move(terms)) {}
    std::vector<TsvTerm> terms_;
};

struct WeakValueResult {
    Complex value;
    Complex denominator;
};

/// Builds a two-state vector from explicit terms. The terms are stored
/// verbatim; all bras and kets must share one space.
TwoStateVector superpose(std::vector<TsvTerm> terms);

/// The weak value of `observable` on the two-state vector:
///     [sum_k w_k <bra_k|A|ket_k>] / [sum_k w_k <bra_k|ket_k>].
/// Complex results are first-class; throws SingularDenominatorError when
/// |denominator| < kSingularDenominatorTol.
WeakValueResult weak_value(const TwoStateVector &tsv, const LabeledOperator &observable);

/// Swaps the H and V amplitudes of the photon polarization in every term,
/// leaving path (and ancilla) labels alone. An involution.
LabeledState flip_polarization(const LabeledState &s);

/// Contracts the ancilla between a full-space pre-selection ket and
/// post-selection bra: for each ancilla basis value the system-space
/// component pair becomes one term with weight 1. The result lives on the
/// system space only and is not renormalized.
TwoStateVector contract_ancilla(const LabeledState &pre_full, const LabeledState &post_full);

}  // namespace cheshire

#endif
