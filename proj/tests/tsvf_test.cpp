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

#include <random>

#include "gtest/gtest.h"

#include "cheshire/errors.hpp"
#include "cheshire/scenario.hpp"
#include "cheshire/tsvf.hpp"
#include "oracle_reference.hpp"
#include "test_states.hpp"

using namespace cheshire;

namespace {

void expect_weak(const TwoStateVector &tsv, const LabeledOperator &a, Complex expected,
                 double tol = 1e-12) {
    WeakValueResult result = weak_value(tsv, a);
    EXPECT_NEAR(result.value.real(), expected.real(), tol);
    EXPECT_NEAR(result.value.imag(), expected.imag(), tol);
}

TwoStateVector random_nonsingular_tsv(std::mt19937_64 &rng, int max_terms = 3) {
    Space sp = Space::path_pol();
    for (;;) {
        std::vector<TsvTerm> terms;
        int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_terms));
        for (int k = 0; k < n; k++) {
            terms.push_back({testfix::random_state(sp, Kind::Bra, rng),
                             testfix::random_state(sp, Kind::Ket, rng),
                             testfix::random_amplitude(rng)});
        }
        TwoStateVector tsv = superpose(std::move(terms));
        if (!tsv.singular(1e-3)) {
            return tsv;
        }
    }
}

}  // namespace

TEST(WeakValue, partial_cat_which_path) {
    TwoStateVector tsv = testfix::partial_cat_tsv();
    Space sp = tsv.space();
    expect_weak(tsv, LabeledOperator::arm_projector(sp, Arm::L), {1, 0});
    expect_weak(tsv, LabeledOperator::arm_projector(sp, Arm::R), {0, 0});
}

TEST(WeakValue, partial_cat_full_table) {
    // Left arm (sigma_x, sigma_y, sigma_z, Pi) = (0, 0, 1, 1);
    // right arm (1, i, 0, 0).
    TwoStateVector tsv = testfix::partial_cat_tsv();
    Space sp = tsv.space();
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::L, PauliAxis::X), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::L, PauliAxis::Y), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::L, PauliAxis::Z), {1, 0});
    expect_weak(tsv, LabeledOperator::arm_projector(sp, Arm::L), {1, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::R, PauliAxis::X), {1, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::R, PauliAxis::Y), {0, 1});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::R, PauliAxis::Z), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_projector(sp, Arm::R), {0, 0});
}

TEST(WeakValue, complete_cat_full_table) {
    // Left arm (0, 0, 0, 1); right arm (1, 0, 0, 0).
    TwoStateVector tsv = testfix::complete_cat_tsv();
    Space sp = tsv.space();
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::L, PauliAxis::X), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::L, PauliAxis::Y), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::L, PauliAxis::Z), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_projector(sp, Arm::L), {1, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::R, PauliAxis::X), {1, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::R, PauliAxis::Y), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::R, PauliAxis::Z), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_projector(sp, Arm::R), {0, 0});
}

TEST(WeakValue, identity_gives_one_on_any_nonsingular_tsv) {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 200; k++) {
        TwoStateVector tsv = random_nonsingular_tsv(rng);
        expect_weak(tsv, LabeledOperator::identity(tsv.space()), {1, 0});
    }
}

TEST(WeakValue, matches_reference_formula_on_random_single_pairs) {
    std::mt19937_64 rng(102);
    Space sp = Space::path_pol();
    for (int k = 0; k < 200; k++) {
        LabeledState post_ket = testfix::random_state(sp, Kind::Ket, rng);
        LabeledState pre = testfix::random_state(sp, Kind::Ket, rng);
        LabeledOperator a = testfix::random_hermitian(sp, rng);
        TwoStateVector tsv = TwoStateVector::single(post_ket.dual(), pre);
        if (tsv.singular(1e-3)) {
            continue;
        }
        oracle::CMat m{4, a.matrix()};
        oracle::Complex expected =
            oracle::weak_value(post_ket.amplitudes(), m, pre.amplitudes());
        expect_weak(tsv, a, expected, 1e-10);
    }
}

TEST(WeakValue, singular_denominator_raises_with_the_denominator_attached) {
    Space sp = Space::path_pol();
    LabeledState pre = LabeledState::basis(sp, Kind::Ket, sp.label(0));
    LabeledState post = LabeledState::basis(sp, Kind::Ket, sp.label(1)).dual();
    TwoStateVector tsv = TwoStateVector::single(post, pre);
    try {
        weak_value(tsv, LabeledOperator::identity(sp));
        FAIL() << "expected SingularDenominatorError";
    } catch (const SingularDenominatorError &e) {
        EXPECT_LT(std::abs(e.denominator), 1e-15);
    }
}

TEST(WeakValue, rejects_space_mismatch) {
    EXPECT_THROW(
        weak_value(testfix::partial_cat_tsv(), LabeledOperator::identity(Space::pol())),
        SpaceMismatchError);
}

TEST(Superpose, single_term_matches_the_plain_pair) {
    TwoStateVector tsv = superpose({{testfix::post_h(), testfix::pre_h(), {1, 0}}});
    EXPECT_EQ(tsv.terms().size(), 1u);
    Complex d = tsv.denominator();
    EXPECT_NEAR(d.real(), 0.5, 1e-15);
    EXPECT_NEAR(d.imag(), 0.0, 1e-15);
}

TEST(Superpose, rejects_empty_and_inconsistent_input) {
    EXPECT_THROW(superpose({}), Error);
    BasisLabel h;
    h.pol = Pol::H;
    LabeledState pol_only = LabeledState::basis(Space::pol(), Kind::Ket, h);
    EXPECT_THROW(superpose({{testfix::pre_h().dual(), pol_only, {1, 0}}}), SpaceMismatchError);
    // Kets in the bra slot are rejected too.
    EXPECT_THROW(superpose({{testfix::pre_h(), testfix::pre_h(), {1, 0}}}), SpaceMismatchError);
}

TEST(Superpose, common_rescaling_leaves_weak_values_unchanged) {
    std::mt19937_64 rng(103);
    for (int k = 0; k < 1000; k++) {
        TwoStateVector tsv = random_nonsingular_tsv(rng);
        Complex c = testfix::random_amplitude(rng);
        if (std::abs(c) < 0.1) {
            c += Complex{1, 0};
        }
        std::vector<TsvTerm> scaled_terms;
        for (const TsvTerm &t : tsv.terms()) {
            scaled_terms.push_back({t.bra, t.ket, t.weight * c});
        }
        TwoStateVector scaled = superpose(std::move(scaled_terms));
        LabeledOperator a = testfix::random_hermitian(tsv.space(), rng);
        Complex w1 = weak_value(tsv, a).value;
        Complex w2 = weak_value(scaled, a).value;
        EXPECT_NEAR(w1.real(), w2.real(), 1e-12 * std::max(1.0, std::abs(w1)));
        EXPECT_NEAR(w1.imag(), w2.imag(), 1e-12 * std::max(1.0, std::abs(w1)));
    }
}

TEST(Superpose, moving_scale_between_bra_and_weight_preserves_weak_values) {
    std::mt19937_64 rng(104);
    for (int k = 0; k < 1000; k++) {
        TwoStateVector tsv = random_nonsingular_tsv(rng, 2);
        Complex c = testfix::random_amplitude(rng);
        if (std::abs(c) < 0.1) {
            c += Complex{1, 0};
        }
        std::vector<TsvTerm> terms = tsv.terms();
        terms[0].bra = terms[0].bra.scaled(c);
        terms[0].weight = terms[0].weight / c;
        TwoStateVector moved = superpose(std::move(terms));
        LabeledOperator a = testfix::random_hermitian(tsv.space(), rng);
        Complex w1 = weak_value(tsv, a).value;
        Complex w2 = weak_value(moved, a).value;
        EXPECT_NEAR(w1.real(), w2.real(), 1e-12 * std::max(1.0, std::abs(w1)));
        EXPECT_NEAR(w1.imag(), w2.imag(), 1e-12 * std::max(1.0, std::abs(w1)));
    }
}

TEST(FlipPolarization, maps_the_partial_cat_states_to_their_flipped_partners) {
    EXPECT_EQ(flip_polarization(testfix::pre_h()), testfix::pre_v());
    EXPECT_EQ(flip_polarization(testfix::post_h()), testfix::post_v());
}

TEST(FlipPolarization, is_an_involution) {
    std::mt19937_64 rng(105);
    for (int k = 0; k < 1000; k++) {
        LabeledState s = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
        EXPECT_EQ(flip_polarization(flip_polarization(s)), s);
    }
}

TEST(ContractAncilla, full_space_pair_reproduces_the_complete_cat) {
    // Build pre = sum_a |psi_a> (x) |a>_anc and post likewise, then check
    // the contraction equals <post_h||pre_h> + <post_v||pre_v> up to one
    // common factor (here exactly, by construction).
    Space full = Space::path_pol_ancilla();
    std::vector<Complex> pre_amps(8), post_amps(8);
    for (std::size_t k = 0; k < 4; k++) {
        pre_amps[k] = testfix::pre_h().amplitude(k);       // ancilla H block
        pre_amps[4 + k] = testfix::pre_v().amplitude(k);   // ancilla V block
        post_amps[k] = testfix::post_h().amplitude(k);
        post_amps[4 + k] = testfix::post_v().amplitude(k);
    }
    LabeledState pre_full(full, Kind::Ket, pre_amps);
    LabeledState post_full(full, Kind::Bra, post_amps);
    TwoStateVector tsv = contract_ancilla(pre_full, post_full);
    ASSERT_EQ(tsv.terms().size(), 2u);
    EXPECT_EQ(tsv.terms()[0].ket, testfix::pre_h());
    EXPECT_EQ(tsv.terms()[0].bra, testfix::post_h());
    EXPECT_EQ(tsv.terms()[1].ket, testfix::pre_v());
    EXPECT_EQ(tsv.terms()[1].bra, testfix::post_v());
    Space sp = Space::path_pol();
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::L, PauliAxis::Z), {0, 0});
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::R, PauliAxis::X), {1, 0});
}

TEST(ContractAncilla, product_ancilla_collapses_to_the_partial_cat) {
    BasisLabel av;
    av.ancilla = Pol::V;
    Space anc = Space::of(false, false, true);
    LabeledState anc_v = LabeledState::basis(anc, Kind::Ket, av);
    LabeledState pre_full = tensor(testfix::pre_h(), anc_v);
    LabeledState post_full = tensor(testfix::post_h().dual(), anc_v).dual();
    TwoStateVector tsv = contract_ancilla(pre_full, post_full);
    ASSERT_EQ(tsv.terms().size(), 2u);
    // The ancilla-H term is identically zero and contributes nothing.
    EXPECT_NEAR(tsv.terms()[0].ket.norm_sq(), 0.0, 1e-30);
    EXPECT_NEAR(tsv.terms()[0].bra.norm_sq(), 0.0, 1e-30);
    Space sp = Space::path_pol();
    expect_weak(tsv, LabeledOperator::arm_pauli(sp, Arm::R, PauliAxis::Y), {0, 1});
    expect_weak(tsv, LabeledOperator::arm_projector(sp, Arm::L), {1, 0});
}

TEST(ContractAncilla, equals_full_space_weak_values_on_random_eight_dim_pairs) {
    // For operators acting as identity on the ancilla, the weak value on
    // the full 8-dim pair equals the weak value of the contracted
    // two-term state. The full-space side is computed by the raw
    // reference formula, independent of the library.
    std::mt19937_64 rng(106);
    Space full = Space::path_pol_ancilla();
    Space sys = Space::path_pol();
    int checked = 0;
    while (checked < 150) {
        LabeledState pre = testfix::random_state(full, Kind::Ket, rng);
        LabeledState post_ket = testfix::random_state(full, Kind::Ket, rng);
        LabeledOperator a_sys = testfix::random_hermitian(sys, rng);
        TwoStateVector contracted = contract_ancilla(pre, post_ket.dual());
        if (contracted.singular(1e-3)) {
            continue;
        }
        checked++;
        // A (x) I on the full space, with the ancilla as the slow index.
        oracle::CMat a_full = oracle::lift_system_to_8(oracle::CMat{4, a_sys.matrix()});
        Complex expected = oracle::weak_value(post_ket.amplitudes(), a_full, pre.amplitudes());
        Complex got = weak_value(contracted, a_sys).value;
        EXPECT_NEAR(got.real(), expected.real(), 1e-10);
        EXPECT_NEAR(got.imag(), expected.imag(), 1e-10);
    }
}

TEST(ContractAncilla, rejects_states_without_an_ancilla) {
    EXPECT_THROW(contract_ancilla(testfix::pre_h(), testfix::post_h()), SpaceMismatchError);
}

TEST(Properties, weak_value_is_linear_in_the_observable) {
    std::mt19937_64 rng(107);
    for (int k = 0; k < 1000; k++) {
        TwoStateVector tsv = random_nonsingular_tsv(rng);
        Space sp = tsv.space();
        LabeledOperator a = testfix::random_hermitian(sp, rng);
        LabeledOperator b = testfix::random_hermitian(sp, rng);
        Complex alpha = testfix::random_amplitude(rng);
        Complex beta = testfix::random_amplitude(rng);
        LabeledOperator combo = a.scaled(alpha) + b.scaled(beta);
        Complex lhs = alpha * weak_value(tsv, a).value + beta * weak_value(tsv, b).value;
        // combo is not Hermitian in general; weak values stay linear.
        Complex rhs;
        {
            Complex num{0, 0};
            for (const TsvTerm &t : tsv.terms()) {
                num += t.weight * inner(t.bra, apply(combo, t.ket));
            }
            rhs = num / tsv.denominator();
        }
        double scale = std::max(1.0, std::abs(lhs));
        EXPECT_NEAR(lhs.real(), rhs.real(), 1e-11 * scale);
        EXPECT_NEAR(lhs.imag(), rhs.imag(), 1e-11 * scale);
    }
}

TEST(Properties, which_path_completeness_and_arm_decomposition) {
    std::mt19937_64 rng(108);
    for (int k = 0; k < 1000; k++) {
        TwoStateVector tsv = random_nonsingular_tsv(rng);
        Space sp = tsv.space();
        Complex left = weak_value(tsv, LabeledOperator::arm_projector(sp, Arm::L)).value;
        Complex right = weak_value(tsv, LabeledOperator::arm_projector(sp, Arm::R)).value;
        EXPECT_NEAR((left + right).real(), 1.0, 1e-10);
        EXPECT_NEAR((left + right).imag(), 0.0, 1e-10);
        for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            Complex arm_l = weak_value(tsv, LabeledOperator::arm_pauli(sp, Arm::L, axis)).value;
            Complex arm_r = weak_value(tsv, LabeledOperator::arm_pauli(sp, Arm::R, axis)).value;
            Complex total = weak_value(tsv, LabeledOperator::pauli(sp, axis)).value;
            EXPECT_NEAR((arm_l + arm_r).real(), total.real(), 1e-10 * std::max(1.0, std::abs(total)));
            EXPECT_NEAR((arm_l + arm_r).imag(), total.imag(), 1e-10 * std::max(1.0, std::abs(total)));
        }
    }
}
