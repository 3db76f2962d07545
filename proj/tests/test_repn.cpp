// Copyright 2026 The spinrep Authors
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

#include "spinrep/spin_rep.hpp"

#include "spinrep/lie_algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

using namespace spinrep;
using std::numbers::pi;

TEST_CASE("ladder factors") {
    CHECK(ladder_factor(HalfInt(1), HalfInt(1), Ladder::minus) == SqrtRational::sqrt_of(Rational(2)));
    CHECK(ladder_factor(HalfInt::half(), HalfInt::half(), Ladder::plus).is_zero());
    CHECK(ladder_factor(HalfInt::half(), HalfInt::half(), Ladder::minus) == SqrtRational::one());

    CHECK_THROWS_AS(ladder_factor(HalfInt::half(), HalfInt::from_twice(3), Ladder::plus), std::domain_error);
    CHECK_THROWS_AS(ladder_factor(HalfInt(-1), HalfInt(0), Ladder::plus), std::domain_error);

    // down from m equals up from -m, for every valid rung
    for (Int twice_s = 0; twice_s <= 12; ++twice_s) {
        HalfInt s = HalfInt::from_twice(twice_s);
        for (HalfInt m = -s; m <= s; ++m) {
            CHECK(ladder_factor(s, m, Ladder::minus) == ladder_factor(s, -m, Ladder::plus));
        }
    }
}

TEST_CASE("representation construction") {
    SpinRep half = build_rep(HalfInt::half());
    CHECK(half.dim == 2);
    CHECK(half.s3_diag == std::vector<HalfInt>{HalfInt::half(), -HalfInt::half()});
    REQUIRE(half.plus_factors.size() == 1);
    CHECK(half.plus_factors[0] == SqrtRational::one());
    CHECK(splus_matrix(half)(0, 1).rational_value() == 1);
    CHECK(splus_matrix(half)(1, 0).is_zero());
    CHECK(s3_matrix(half)(0, 0).rational_value() == make_rational(1, 2));
    CHECK(s3_matrix(half)(1, 1).rational_value() == make_rational(-1, 2));

    SpinRep zero = build_rep(HalfInt(0));
    CHECK(zero.dim == 1);
    CHECK(s3_matrix(zero).is_zero());
    CHECK(splus_matrix(zero).is_zero());
    CHECK(sminus_matrix(zero).is_zero());

    SpinRep one = build_rep(HalfInt(1));
    SqrtRational root2 = SqrtRational::sqrt_of(Rational(2));
    CHECK(one.plus_factors == std::vector<SqrtRational>{root2, root2});

    CHECK_THROWS_AS(build_rep(HalfInt::from_twice(-1)), std::domain_error);

    // the stored data is what determines the rep: diagonal strictly
    // descending from s to -s, superdiagonal factors strictly positive
    SpinRep seven_halves = build_rep(HalfInt::from_twice(7));
    HalfInt sum(0);
    for (int k = 0; k < seven_halves.dim; ++k) {
        CHECK(seven_halves.s3_diag[k] == seven_halves.s - HalfInt(k));
        sum += seven_halves.s3_diag[k];
    }
    CHECK(sum == HalfInt(0));
    for (const SqrtRational& b : seven_halves.plus_factors) CHECK(b.sign() == 1);
}

TEST_CASE("verify_rep flags a corrupted representation") {
    SpinRep rep = build_rep(HalfInt(2));
    rep.plus_factors[1] = rep.plus_factors[1] * SqrtRational::from_rational(2);
    RepReport report = verify_rep(rep);
    CHECK_FALSE(report.all_pass());

    SpinRep shifted = build_rep(HalfInt(2));
    shifted.s3_diag[0] = HalfInt(3);
    CHECK_FALSE(verify_rep(shifted).all_pass());
}

TEST_CASE("casimir acts as s(s+1)") {
    CHECK(casimir(build_rep(HalfInt::half())) ==
          SqrtSum(make_rational(3, 4)) * SqrtSumMatrix::identity(2));
    CHECK(casimir(build_rep(HalfInt(0))).is_zero());
    CHECK(casimir(build_rep(HalfInt(1))) == SqrtSum(Rational(2)) * SqrtSumMatrix::identity(3));
}

TEST_CASE("verify_rep passes exactly for every spin up to 5") {
    for (Int twice_s = 0; twice_s <= 10; ++twice_s) {
        SpinRep rep = build_rep(HalfInt::from_twice(twice_s));
        RepReport report = verify_rep(rep);
        INFO("s = " << rep.s.to_string());
        CHECK(report.all_pass());
        CHECK(report.checks.size() == 6);
    }
}

TEST_CASE("S+ action reproduces the ladder factors exactly") {
    for (Int twice_s : {1, 2, 5, 8}) {
        SpinRep rep = build_rep(HalfInt::from_twice(twice_s));
        SqrtSumMatrix sp = splus_matrix(rep);
        for (int k = 0; k < rep.dim; ++k) {
            std::vector<SqrtSum> basis_vec(rep.dim);
            basis_vec[k] = SqrtSum(Rational(1));
            auto image = sp.apply(basis_vec);
            SqrtRational factor = ladder_factor(rep.s, rep.s3_diag[k], Ladder::plus);
            for (int r = 0; r < rep.dim; ++r) {
                if (r == k - 1) {
                    CHECK(image[r] == SqrtSum(factor));
                } else {
                    CHECK(image[r].is_zero());
                }
            }
        }
    }
}

TEST_CASE("float views line up with the 2x2 generators") {
    SpinRep half = build_rep(HalfInt::half());

    CHECK(max_abs_entry(rep_to_float(half, RepMatrix::S1) - spin_matrix(1)) < 1e-15);
    CHECK(max_abs_entry(rep_to_float(half, RepMatrix::S2) - spin_matrix(2)) < 1e-15);
    CHECK(max_abs_entry(rep_to_float(half, RepMatrix::S3) - spin_matrix(3)) < 1e-15);
    for (int j = 1; j <= 3; ++j) {
        RepMatrix which = j == 1 ? RepMatrix::X1 : j == 2 ? RepMatrix::X2 : RepMatrix::X3;
        CHECK(max_abs_entry(rep_to_float(half, which) - generator_x(j)) < 1e-15);
    }

    ComplexMatrix s3 = rep_to_float(build_rep(HalfInt(1)), RepMatrix::S3);
    CHECK(s3(0, 0) == std::complex<double>(1.0));
    CHECK(s3(1, 1) == std::complex<double>(0.0));
    CHECK(s3(2, 2) == std::complex<double>(-1.0));
}

TEST_CASE("exponentials of represented algebra elements land in SU(2s+1)") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (Int twice_s = 1; twice_s <= 8; ++twice_s) {
        SpinRep rep = build_rep(HalfInt::from_twice(twice_s));
        ComplexMatrix xs[3] = {rep_to_float(rep, RepMatrix::X1), rep_to_float(rep, RepMatrix::X2),
                               rep_to_float(rep, RepMatrix::X3)};
        for (int trial = 0; trial < 25; ++trial) {
            double a[3] = {coeff(rng), coeff(rng), coeff(rng)};
            double len = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
            double scale = len > 0 ? 3.0 * coeff(rng) / len : 0.0;
            ComplexMatrix x = scale * (a[0] * xs[0] + a[1] * xs[1] + a[2] * xs[2]);
            REQUIRE(in_su_algebra(x, 1e-12));
            CHECK(in_su_group(matexp(x), 1e-9));
        }
    }
}

TEST_CASE("double cover: exp(2 pi i S3) is plus or minus the identity") {
    const std::complex<double> i(0.0, 1.0);
    for (Int twice_s = 0; twice_s <= 8; ++twice_s) {
        SpinRep rep = build_rep(HalfInt::from_twice(twice_s));
        ComplexMatrix s3 = rep_to_float(rep, RepMatrix::S3);
        ComplexMatrix id = ComplexMatrix::Identity(rep.dim, rep.dim);
        double parity = twice_s % 2 == 0 ? 1.0 : -1.0;
        CHECK(max_abs_entry(matexp(2.0 * pi * i * s3) - parity * id) < 1e-10);
        CHECK(max_abs_entry(matexp(4.0 * pi * i * s3) - id) < 1e-10);
    }
}
