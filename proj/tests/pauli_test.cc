// Copyright 2026 The steerqc Authors
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

#include "steerqc/pauli.h"

#include <array>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "steerqc/errors.h"
#include "test_util.h"

using namespace steerqc;
using steerqc::testing::random_pauli;

namespace {

using Mat2 = std::array<std::complex<double>, 4>;

Mat2 matrix_of(char c) {
    using C = std::complex<double>;
    switch (c) {
        case 'X':
            return {C(0), C(1), C(1), C(0)};
        case 'Y':
            return {C(0), C(0, -1), C(0, 1), C(0)};
        case 'Z':
            return {C(1), C(0), C(0), C(-1)};
        default:
            return {C(1), C(0), C(0), C(1)};
    }
}

Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Phase c with a*b = c * (letters of the product), by explicit 2x2 products.
std::complex<double> matrix_phase(const PauliString &a, const PauliString &b, const PauliString &product) {
    std::complex<double> total = (double)(a.sign() * b.sign());
    for (size_t q = 0; q < a.num_qubits(); q++) {
        Mat2 m = matmul(matrix_of(a.at(q)), matrix_of(b.at(q)));
        Mat2 ref = matrix_of(product.at(q));
        for (size_t k = 0; k < 4; k++) {
            if (std::abs(ref[k]) > 0.5) {
                total *= m[k] / ref[k];
                break;
            }
        }
    }
    return total;
}

std::complex<double> phase_of(const PhasedPauli &p) {
    static const std::complex<double> kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowI[p.log_i & 3];
}

}  // namespace

TEST(pauli, parse_dense) {
    PauliString zz = PauliString::parse("+ZZ");
    EXPECT_EQ(zz.num_qubits(), 2u);
    EXPECT_FALSE(zz.x(0) || zz.x(1));
    EXPECT_TRUE(zz.z(0) && zz.z(1));
    EXPECT_EQ(zz.sign(), +1);

    PauliString mx = PauliString::parse("-X");
    EXPECT_TRUE(mx.x(0));
    EXPECT_FALSE(mx.z(0));
    EXPECT_EQ(mx.sign(), -1);

    PauliString y = PauliString::parse("IY");
    EXPECT_TRUE(y.x(1) && y.z(1));
    EXPECT_EQ(y.str(), "+IY");
}

TEST(pauli, parse_errors_report_position) {
    try {
        PauliString::parse("+XQZ");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position, 2u);
    }
    EXPECT_THROW(PauliString::parse(""), ParseError);
    EXPECT_THROW(PauliString::parse("-"), ParseError);
    EXPECT_THROW(PauliString::parse_sparse(4, "X5"), ParseError);
    EXPECT_THROW(PauliString::parse_sparse(4, "X0"), ParseError);
}

TEST(pauli, parse_sparse) {
    PauliString p = PauliString::parse_sparse(4, "-X1Z2Z3X4");
    EXPECT_EQ(p.str(), "-XZZX");
    EXPECT_EQ(p.sparse_str(), "-X1Z2Z3X4");
    EXPECT_EQ(PauliString::parse_sparse(3, "I").str(), "+III");
    EXPECT_EQ(PauliString::on_sites(6, "XYX", 2).str(), "+IIXYXI");
}

TEST(pauli, xyx_pair_gives_xzzx) {
    PauliString a = PauliString::parse_sparse(4, "X1Y2X3");
    PauliString b = PauliString::parse_sparse(4, "X2Y3X4");
    EXPECT_EQ(multiply(a, b), PauliString::parse("+XZZX"));
}

TEST(pauli, z_products_xor) {
    PauliString a = PauliString::parse_sparse(8, "Z3Z6");
    PauliString b = PauliString::parse_sparse(8, "Z1Z3Z7");
    EXPECT_EQ(multiply(a, b), PauliString::parse_sparse(8, "Z1Z6Z7"));
}

TEST(pauli, anti_hermitian_product_is_rejected) {
    PauliString x = PauliString::parse("X");
    PauliString z = PauliString::parse("Z");
    EXPECT_THROW(multiply(x, z), PhaseError);
    PhasedPauli xz = multiply_phased(x, z);
    EXPECT_EQ(xz.pauli.str(), "+Y");
    EXPECT_EQ(xz.log_i, 3);  // XZ = -iY
    EXPECT_THROW(multiply(x, PauliString(2)), DimensionError);
}

TEST(pauli, phases_match_matrix_products) {
    std::mt19937_64 rng(7);
    for (size_t trial = 0; trial < 2000; trial++) {
        size_t n = 1 + rng() % 70;
        PauliString a = random_pauli(n, rng);
        PauliString b = random_pauli(n, rng);
        PhasedPauli ab = multiply_phased(a, b);
        EXPECT_FALSE(ab.pauli.negative());
        std::complex<double> expected = matrix_phase(a, b, ab.pauli);
        EXPECT_LT(std::abs(phase_of(ab) - expected), 1e-9) << a << " * " << b;
    }
}

TEST(pauli, commutes_symmetric_and_matches_products) {
    std::mt19937_64 rng(11);
    for (size_t trial = 0; trial < 2000; trial++) {
        size_t n = 1 + rng() % 130;
        PauliString a = random_pauli(n, rng);
        PauliString b = random_pauli(n, rng);
        EXPECT_EQ(commutes(a, b), commutes(b, a));
        PhasedPauli ab = multiply_phased(a, b);
        PhasedPauli ba = multiply_phased(b, a);
        ASSERT_EQ(ab.pauli, ba.pauli);
        EXPECT_EQ(commutes(a, b), ab.log_i == ba.log_i);
    }
}

TEST(pauli, associative_with_phase) {
    std::mt19937_64 rng(13);
    for (size_t trial = 0; trial < 1000; trial++) {
        size_t n = 1 + rng() % 90;
        PauliString a = random_pauli(n, rng);
        PauliString b = random_pauli(n, rng);
        PauliString c = random_pauli(n, rng);
        PhasedPauli ab = multiply_phased(a, b);
        PhasedPauli ab_c = multiply_phased(ab.pauli, c);
        PhasedPauli bc = multiply_phased(b, c);
        PhasedPauli a_bc = multiply_phased(a, bc.pauli);
        EXPECT_EQ(ab_c.pauli, a_bc.pauli);
        EXPECT_EQ((ab.log_i + ab_c.log_i) & 3, (bc.log_i + a_bc.log_i) & 3);
    }
}

TEST(pauli, square_is_identity) {
    std::mt19937_64 rng(17);
    for (size_t trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 200;
        PauliString p = random_pauli(n, rng);
        PauliString sq = multiply(p, p);
        EXPECT_TRUE(sq.is_identity());
        EXPECT_FALSE(sq.negative());
    }
}

TEST(pauli, render_round_trip) {
    std::mt19937_64 rng(19);
    for (size_t trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 150;
        PauliString p = random_pauli(n, rng);
        EXPECT_EQ(PauliString::parse(p.str()), p);
        EXPECT_EQ(PauliString::parse(p.str()).str(), p.str());
        if (!p.is_identity()) {
            EXPECT_EQ(PauliString::parse_sparse(n, p.sparse_str()), p);
        }
    }
}

TEST(pauli, weight_and_negation) {
    PauliString p = PauliString::parse("+XIYZI");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ((-p).str(), "-XIYZI");
    EXPECT_TRUE(p.same_support_and_letters(-p));
    EXPECT_FALSE(p == -p);
}
