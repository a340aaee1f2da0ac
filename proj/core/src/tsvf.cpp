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

#include "cheshire/tsvf.hpp"

#include <cmath>

#include "cheshire/errors.hpp"

namespace cheshire {

TwoStateVector TwoStateVector::single(LabeledState bra, LabeledState ket, Complex weight) {
    return superpose({TsvTerm{std::move(bra), std::move(ket), weight}});
}

const Space &TwoStateVector::space() const {
    return terms_.front().ket.space();
}

Complex TwoStateVector::denominator() const {
    Complex total{0, 0};
    for (const TsvTerm &t : terms_) {
        total += t.weight * inner(t.bra, t.ket);
    }
    return total;
}

bool TwoStateVector::singular(double tol) const {
    return std::abs(denominator()) < tol;
}

TwoStateVector superpose(std::vector<TsvTerm> terms) {
    if (terms.empty()) {
        throw Error("a two-state vector needs at least one term");
    }
    const Space &space = terms.front().ket.space();
    for (const TsvTerm &t : terms) {
        if (t.bra.kind() != Kind::Bra || t.ket.kind() != Kind::Ket) {
            throw SpaceMismatchError("each term must pair a bra with a ket");
        }
        if (t.bra.space() != space || t.ket.space() != space) {
            throw SpaceMismatchError("all terms of a two-state vector must share one space");
        }
        if (!std::isfinite(t.weight.real()) || !std::isfinite(t.weight.imag())) {
            throw Error("non-finite term weight");
        }
    }
    return TwoStateVector(std::move(terms));
}

WeakValueResult weak_value(const TwoStateVector &tsv, const LabeledOperator &observable) {
    if (observable.space() != tsv.space()) {
        throw SpaceMismatchError(
            "observable space " + observable.space().str() +
            " does not match two-state vector space " + tsv.space().str());
    }
    Complex denominator = tsv.denominator();
    if (std::abs(denominator) < kSingularDenominatorTol) {
        throw SingularDenominatorError(denominator);
    }
    Complex numerator{0, 0};
    for (const TsvTerm &t : tsv.terms()) {
        numerator += t.weight * inner(t.bra, apply(observable, t.ket));
    }
    return WeakValueResult{numerator / denominator, denominator};
}

LabeledState flip_polarization(const LabeledState &s) {
    const Space &space = s.space();
    if (!space.has_pol()) {
        throw SpaceMismatchError("flip_polarization requires a polarization factor");
    }
    std::vector<Complex> out(space.dim());
    for (std::size_t k = 0; k < space.dim(); k++) {
        BasisLabel flipped = space.label(k);
        flipped.pol = (flipped.pol == Pol::H) ? Pol::V : Pol::H;
        out[space.index(flipped)] = s.amplitude(k);
    }
    return LabeledState(space, s.kind(), std::move(out));
}

TwoStateVector contract_ancilla(const LabeledState &pre_full, const LabeledState &post_full) {
    const Space &full = pre_full.space();
    if (!full.has_ancilla() || !post_full.space().has_ancilla()) {
        throw SpaceMismatchError("contract_ancilla requires states with an ancilla factor");
    }
    if (post_full.space() != full) {
        throw SpaceMismatchError("pre and post states must share one full space");
    }
    if (pre_full.kind() != Kind::Ket || post_full.kind() != Kind::Bra) {
        throw SpaceMismatchError("contract_ancilla expects (pre ket, post bra)");
    }

    Space system = full.without_ancilla();
    std::vector<TsvTerm> terms;
    for (Pol a : {Pol::H, Pol::V}) {
        std::vector<Complex> ket_amps(system.dim());
        std::vector<Complex> bra_amps(system.dim());
        for (std::size_t k = 0; k < system.dim(); k++) {
            BasisLabel label = system.label(k);
            label.ancilla = a;
            ket_amps[k] = pre_full.amplitude(label);
            bra_amps[k] = post_full.amplitude(label);
        }
        terms.push_back(TsvTerm{
            LabeledState(system, Kind::Bra, std::move(bra_amps)),
            LabeledState(system, Kind::Ket, std::move(ket_amps)),
            Complex{1, 0},
        });
    }
    return superpose(std::move(terms));
}

}  // namespace cheshire
