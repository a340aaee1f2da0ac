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
#include "cheshire/fft.hpp"
#include "cheshire/hermitian_eig.hpp"
#include "cheshire/operators.hpp"
#include "cheshire/state.hpp"
#include "test_states.hpp"

using namespace cheshire;
using testfix::kInvSqrt2;

namespace {

void expect_complex_near(Complex actual, Complex expected, double tol = 1e-12) {
    EXPECT_NEAR(actual.real(), expected.real(), tol);
    EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

LabeledState path_ket(Arm arm) {
    BasisLabel label;
    label.path = arm;
    return LabeledState::basis(Space::path(), Kind::Ket, label);
}

LabeledState pol_ket(Pol pol) {
    BasisLabel label;
    label.pol = pol;
    return LabeledState::basis(Space::pol(), Kind::Ket, label);
}

}  // namespace

TEST(Space, canonical_order_is_pol_fastest_ancilla_slowest) {
    Space sp = Space::path_pol();
    EXPECT_EQ(sp.label(0).str(), "L,H");
    EXPECT_EQ(sp.label(1).str(), "L,V");
    EXPECT_EQ(sp.label(2).str(), "R,H");
    EXPECT_EQ(sp.label(3).str(), "R,V");

    Space full = Space::path_pol_ancilla();
    EXPECT_EQ(full.dim(), 8u);
    EXPECT_EQ(full.label(0).str(), "L,H,AH");
    EXPECT_EQ(full.label(3).str(), "R,V,AH");
    EXPECT_EQ(full.label(4).str(), "L,H,AV");
    EXPECT_EQ(full.label(7).str(), "R,V,AV");
    for (std::size_t k = 0; k < full.dim(); k++) {
        EXPECT_EQ(full.index(full.label(k)), k);
    }
}

TEST(Tensor, basis_product) {
    LabeledState lh = tensor(path_ket(Arm::L), pol_ket(Pol::H));
    EXPECT_EQ(lh.space(), Space::path_pol());
    BasisLabel expect;
    expect.path = Arm::L;
    expect.pol = Pol::H;
    expect_complex_near(lh.amplitude(expect), {1, 0});
    EXPECT_NEAR(lh.norm_sq(), 1.0, 1e-15);
}

TEST(Tensor, split_photon_times_h_gives_the_partial_cat_preselection) {
    LabeledState split = (path_ket(Arm::L) + path_ket(Arm::R)).scaled({kInvSqrt2, 0});
    LabeledState state = tensor(split, pol_ket(Pol::H));
    EXPECT_EQ(state, testfix::pre_h());
}

TEST(Tensor, bilinear_in_scalar_factors) {
    Complex a{0.3, -0.7};
    Complex b{-1.25, 0.5};
    LabeledState state = tensor(path_ket(Arm::L).scaled(a), pol_ket(Pol::H).scaled(b));
    BasisLabel lh;
    lh.path = Arm::L;
    lh.pol = Pol::H;
    expect_complex_near(state.amplitude(lh), a * b);
}

TEST(Tensor, bilinear_in_both_state_arguments) {
    std::mt19937_64 rng(70);
    for (int k = 0; k < 1000; k++) {
        LabeledState x = testfix::random_state(Space::path(), Kind::Ket, rng);
        LabeledState y = testfix::random_state(Space::path(), Kind::Ket, rng);
        LabeledState z = testfix::random_state(Space::pol(), Kind::Ket, rng);
        Complex c = testfix::random_amplitude(rng);
        LabeledState lhs = tensor(x.scaled(c) + y, z);
        LabeledState rhs = tensor(x, z).scaled(c) + tensor(y, z);
        LabeledState lhs2 = tensor(z, x.scaled(c) + y);
        LabeledState rhs2 = tensor(z, x).scaled(c) + tensor(z, y);
        for (std::size_t b = 0; b < 4; b++) {
            expect_complex_near(lhs.amplitude(b), rhs.amplitude(b));
            expect_complex_near(lhs2.amplitude(b), rhs2.amplitude(b));
        }
    }
}

TEST(Tensor, rejects_mismatched_kinds_and_overlapping_factors) {
    EXPECT_THROW(tensor(path_ket(Arm::L), pol_ket(Pol::H).dual()), SpaceMismatchError);
    EXPECT_THROW(tensor(pol_ket(Pol::H), pol_ket(Pol::V)), SpaceMismatchError);
}

TEST(Inner, post_with_pre_is_one_half) {
    expect_complex_near(inner(testfix::post_h(), testfix::pre_h()), {0.5, 0});
    expect_complex_near(inner(testfix::post_v(), testfix::pre_v()), {0.5, 0});
}

TEST(Inner, normalized_self_overlap_is_one) {
    std::mt19937_64 rng(71);
    for (int k = 0; k < 50; k++) {
        LabeledState v = testfix::random_state(Space::path_pol(), Kind::Ket, rng).normalized();
        expect_complex_near(inner(v.dual(), v), {1, 0});
    }
}

TEST(Inner, conjugate_symmetric) {
    std::mt19937_64 rng(72);
    for (int k = 0; k < 200; k++) {
        LabeledState x = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
        LabeledState y = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
        Complex xy = inner(y.dual(), x);
        Complex yx = inner(x.dual(), y);
        expect_complex_near(xy, std::conj(yx));
    }
}

TEST(Inner, rejects_space_mismatch) {
    EXPECT_THROW(inner(pol_ket(Pol::H).dual(), testfix::pre_h()), SpaceMismatchError);
}

TEST(Apply, sigma_x_flips_h_to_v) {
    LabeledState out = apply(LabeledOperator::pauli(Space::pol(), PauliAxis::X), pol_ket(Pol::H));
    EXPECT_EQ(out, pol_ket(Pol::V));
}

TEST(Apply, identity_fixes_any_state) {
    std::mt19937_64 rng(73);
    LabeledOperator id = LabeledOperator::identity(Space::path_pol());
    for (int k = 0; k < 50; k++) {
        LabeledState s = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
        LabeledState out = apply(id, s);
        for (std::size_t b = 0; b < 4; b++) {
            expect_complex_near(out.amplitude(b), s.amplitude(b));
        }
    }
}

TEST(Apply, sigma_y_sends_h_to_i_v) {
    LabeledState out = apply(LabeledOperator::pauli(Space::pol(), PauliAxis::Y), pol_ket(Pol::H));
    BasisLabel v;
    v.pol = Pol::V;
    expect_complex_near(out.amplitude(v), {0, 1});
    BasisLabel h;
    h.pol = Pol::H;
    expect_complex_near(out.amplitude(h), {0, 0});
}

TEST(Apply, bra_side_acts_as_the_adjoint_from_the_right) {
    // <phi|(A|psi>) must equal (<phi|A)|psi> for random data.
    std::mt19937_64 rng(74);
    for (int k = 0; k < 200; k++) {
        LabeledState phi = testfix::random_state(Space::path_pol(), Kind::Bra, rng);
        LabeledState psi = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
        LabeledOperator a = testfix::random_hermitian(Space::path_pol(), rng);
        expect_complex_near(inner(apply(a, phi), psi), inner(phi, apply(a, psi)));
    }
}

TEST(Apply, linear_in_the_state) {
    std::mt19937_64 rng(75);
    for (int k = 0; k < 200; k++) {
        LabeledState x = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
        LabeledState y = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
        Complex c = testfix::random_amplitude(rng);
        LabeledOperator a = testfix::random_hermitian(Space::path_pol(), rng);
        LabeledState lhs = apply(a, x.scaled(c) + y);
        LabeledState rhs = apply(a, x).scaled(c) + apply(a, y);
        for (std::size_t b = 0; b < 4; b++) {
            expect_complex_near(lhs.amplitude(b), rhs.amplitude(b));
        }
    }
}

TEST(Adjoint, pauli_y_and_projectors_are_hermitian) {
    Space sp = Space::path_pol();
    LabeledOperator sy = LabeledOperator::pauli(sp, PauliAxis::Y);
    EXPECT_EQ(sy.adjoint(), sy);
    LabeledOperator pl = LabeledOperator::arm_projector(sp, Arm::L);
    EXPECT_EQ(pl.adjoint(), pl);
    std::mt19937_64 rng(76);
    LabeledOperator random = testfix::random_hermitian(sp, rng);
    EXPECT_EQ(random.adjoint().adjoint(), random);
}

TEST(Operators, projectors_sum_to_identity_and_paulis_square_to_identity) {
    Space sp = Space::path_pol();
    LabeledOperator sum =
        LabeledOperator::arm_projector(sp, Arm::L) + LabeledOperator::arm_projector(sp, Arm::R);
    EXPECT_LE(sum.max_abs_diff(LabeledOperator::identity(sp)), 1e-15);
    for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
        LabeledOperator s = LabeledOperator::pauli(sp, axis);
        EXPECT_LE((s * s).max_abs_diff(LabeledOperator::identity(sp)), 1e-15);
        EXPECT_TRUE(s.is_hermitian(1e-15));
    }
}

TEST(Operators, arm_pauli_is_projector_times_pauli) {
    Space sp = Space::path_pol();
    for (Arm arm : {Arm::L, Arm::R}) {
        for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            LabeledOperator expected =
                LabeledOperator::arm_projector(sp, arm) * LabeledOperator::pauli(sp, axis);
            EXPECT_LE(LabeledOperator::arm_pauli(sp, arm, axis).max_abs_diff(expected), 1e-15);
        }
    }
}

TEST(Operators, rejects_non_finite_entries) {
    std::vector<Complex> bad(4, Complex{0, 0});
    bad[0] = Complex{std::numeric_limits<double>::quiet_NaN(), 0};
    EXPECT_THROW(LabeledOperator(Space::pol(), bad), Error);
    EXPECT_THROW(LabeledState(Space::pol(), Kind::Ket,
                              {Complex{1, 0}, Complex{0, std::numeric_limits<double>::infinity()}}),
                 Error);
}

TEST(PhaseAlignedDistance, detects_equality_up_to_global_phase) {
    std::mt19937_64 rng(77);
    LabeledState x = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
    LabeledState y = x.scaled(std::polar(1.0, 1.234));
    EXPECT_LE(phase_aligned_distance(x, y), 1e-12);
    LabeledState z = testfix::random_state(Space::path_pol(), Kind::Ket, rng);
    EXPECT_GT(phase_aligned_distance(x, z), 1e-6);
}

TEST(HermitianEig, reconstructs_random_matrices) {
    std::mt19937_64 rng(78);
    for (std::size_t dim : {2u, 4u, 8u}) {
        for (int rep = 0; rep < 40; rep++) {
            std::vector<Complex> m(dim * dim);
            for (auto &v : m) {
                v = testfix::random_amplitude(rng);
            }
            // Symmetrize.
            for (std::size_t r = 0; r < dim; r++) {
                for (std::size_t c = r; c < dim; c++) {
                    Complex avg = (m[r * dim + c] + std::conj(m[c * dim + r])) * 0.5;
                    m[r * dim + c] = avg;
                    m[c * dim + r] = std::conj(avg);
                }
            }
            HermitianEigenSystem eig = hermitian_eigensystem(m, dim);
            // A v_j = lambda_j v_j.
            for (std::size_t j = 0; j < dim; j++) {
                for (std::size_t r = 0; r < dim; r++) {
                    Complex av{0, 0};
                    for (std::size_t c = 0; c < dim; c++) {
                        av += m[r * dim + c] * eig.vector_entry(c, j);
                    }
                    expect_complex_near(av, eig.eigenvalues[j] * eig.vector_entry(r, j), 1e-11);
                }
            }
            // V is unitary.
            for (std::size_t a = 0; a < dim; a++) {
                for (std::size_t b = 0; b < dim; b++) {
                    Complex dot{0, 0};
                    for (std::size_t r = 0; r < dim; r++) {
                        dot += std::conj(eig.vector_entry(r, a)) * eig.vector_entry(r, b);
                    }
                    expect_complex_near(dot, a == b ? Complex{1, 0} : Complex{0, 0}, 1e-12);
                }
            }
        }
    }
}

TEST(HermitianEig, rejects_non_hermitian_input) {
    std::vector<Complex> m = {{0, 0}, {1, 0}, {0, 0}, {0, 0}};
    EXPECT_THROW(hermitian_eigensystem(m, 2), Error);
}

TEST(Fft, inverse_undoes_forward_and_preserves_norm) {
    std::mt19937_64 rng(79);
    std::vector<Complex> data(256);
    for (auto &v : data) {
        v = testfix::random_amplitude(rng);
    }
    std::vector<Complex> copy = data;
    double norm_before = 0;
    for (const auto &v : data) {
        norm_before += std::norm(v);
    }
    fft_in_place(data, false);
    double norm_hat = 0;
    for (const auto &v : data) {
        norm_hat += std::norm(v);
    }
    EXPECT_NEAR(norm_hat, norm_before * 256, norm_before * 1e-9);
    fft_in_place(data, true);
    for (std::size_t k = 0; k < data.size(); k++) {
        expect_complex_near(data[k], copy[k], 1e-12);
    }
}

TEST(Fft, matches_naive_dft) {
    std::mt19937_64 rng(80);
    std::vector<Complex> data(32);
    for (auto &v : data) {
        v = testfix::random_amplitude(rng);
    }
    std::vector<Complex> fast = data;
    fft_in_place(fast, false);
    for (std::size_t k = 0; k < data.size(); k++) {
        Complex slow{0, 0};
        for (std::size_t m = 0; m < data.size(); m++) {
            slow += data[m] * std::polar(1.0, -2.0 * M_PI * double(k) * double(m) / 32.0);
        }
        expect_complex_near(fast[k], slow, 1e-10);
    }
}

TEST(Fft, rejects_non_power_of_two) {
    std::vector<Complex> data(12);
    EXPECT_THROW(fft_in_place(data, false), Error);
}
