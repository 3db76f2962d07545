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

#include "spinrep/states.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spinrep;

namespace {

const HalfInt kHalf = HalfInt::half();

StateVector triplet_zero() {
    return StateVector::coupled_basis_state(kHalf, kHalf, HalfInt(1), HalfInt(0));
}

StateVector singlet() {
    return StateVector::coupled_basis_state(kHalf, kHalf, HalfInt(0), HalfInt(0));
}

}  // namespace

TEST_CASE("coupled basis enumeration follows the block listing") {
    CoupledBasis basis(kHalf, kHalf);
    CHECK(basis.size() == 4);
    CHECK(basis.index_of(HalfInt(1), HalfInt(1)) == 0);
    CHECK(basis.index_of(HalfInt(1), HalfInt(0)) == 1);
    CHECK(basis.index_of(HalfInt(1), HalfInt(-1)) == 2);
    CHECK(basis.index_of(HalfInt(0), HalfInt(0)) == 3);
    for (int i = 0; i < 4; ++i) {
        auto [s, m] = basis.at(i);
        CHECK(basis.index_of(s, m) == i);
    }
    CHECK_THROWS_AS(basis.index_of(HalfInt(2), HalfInt(0)), std::domain_error);
    CHECK_THROWS_AS(basis.index_of(HalfInt(1), HalfInt(2)), std::domain_error);
}

TEST_CASE("state construction validates normalization") {
    SqrtRational inv_sqrt2 = SqrtRational::sqrt_of(make_rational(1, 2));
    StateVector bell = StateVector::make(
        BasisKind::uncoupled, kHalf, kHalf,
        {SqrtRational::zero(), inv_sqrt2, inv_sqrt2, SqrtRational::zero()});
    CHECK(bell.amplitudes().size() == 4);

    CHECK_THROWS_AS(StateVector::make(BasisKind::uncoupled, kHalf, kHalf,
                                      {SqrtRational::one(), SqrtRational::one(), SqrtRational::zero(),
                                       SqrtRational::zero()}),
                    std::domain_error);
    CHECK_THROWS_AS(StateVector::make(BasisKind::uncoupled, kHalf, kHalf, {SqrtRational::one()}),
                    std::domain_error);
}

TEST_CASE("basis changes reproduce the worked example") {
    CGTable table(kHalf, kHalf);
    SqrtRational inv_sqrt2 = SqrtRational::sqrt_of(make_rational(1, 2));

    StateVector ten = to_uncoupled(triplet_zero(), table);
    CHECK(ten.amplitudes() ==
          std::vector<SqrtRational>{SqrtRational::zero(), inv_sqrt2, inv_sqrt2, SqrtRational::zero()});

    StateVector top = to_uncoupled(StateVector::coupled_basis_state(kHalf, kHalf, HalfInt(1), HalfInt(1)), table);
    CHECK(top == StateVector::uncoupled_basis_state(kHalf, kHalf, kHalf, kHalf));

    CHECK(to_coupled(to_uncoupled(singlet(), table), table) == singlet());

    CGTable wrong(HalfInt(1), kHalf);
    CHECK_THROWS_AS(to_uncoupled(singlet(), wrong), std::domain_error);
}

TEST_CASE("round trip is the identity on every basis state up to spin 3/2") {
    for (int ts1 = 0; ts1 <= 3; ++ts1) {
        for (int ts2 = 0; ts2 <= 3; ++ts2) {
            HalfInt a = HalfInt::from_twice(ts1);
            HalfInt b = HalfInt::from_twice(ts2);
            CGTable table(a, b);
            CoupledBasis coupled(a, b);
            for (int i = 0; i < coupled.size(); ++i) {
                auto [s, m] = coupled.at(i);
                StateVector v = StateVector::coupled_basis_state(a, b, s, m);
                CHECK(to_coupled(to_uncoupled(v, table), table) == v);
            }
            UncoupledBasis uncoupled(a, b);
            for (int i = 0; i < uncoupled.size(); ++i) {
                auto [m1, m2] = uncoupled.at(i);
                StateVector v = StateVector::uncoupled_basis_state(a, b, m1, m2);
                CHECK(to_uncoupled(to_coupled(v, table), table) == v);
            }
        }
    }
}

TEST_CASE("a general superposition can leave the single-radical amplitude model") {
    CGTable table(kHalf, kHalf);
    // (1/2)|10> + (sqrt(3)/2)|00> puts sqrt(1/8) + sqrt(3/8) on one ket
    StateVector v = StateVector::make(BasisKind::coupled, kHalf, kHalf,
                                      {SqrtRational::zero(), SqrtRational::make(1, 1, 2, 1),
                                       SqrtRational::zero(), SqrtRational::make(1, 1, 2, 3)});
    CHECK_THROWS_AS(to_uncoupled(v, table), std::domain_error);
}

TEST_CASE("measurement probabilities are exact rationals") {
    CGTable table(kHalf, kHalf);
    Rational half_p = make_rational(1, 2);

    auto probs = measure_probabilities(triplet_zero(), 1, table);
    REQUIRE(probs.size() == 2);
    CHECK(probs[0] == std::pair<HalfInt, Rational>{kHalf, half_p});
    CHECK(probs[1] == std::pair<HalfInt, Rational>{-kHalf, half_p});

    auto certain = measure_probabilities(
        StateVector::coupled_basis_state(kHalf, kHalf, HalfInt(1), HalfInt(1)), 1, table);
    REQUIRE(certain.size() == 1);
    CHECK(certain[0] == std::pair<HalfInt, Rational>{kHalf, Rational(1)});

    auto partner = measure_probabilities(singlet(), 2, table);
    REQUIRE(partner.size() == 2);
    CHECK(partner[0].second == half_p);
    CHECK(partner[1].second == half_p);

    CHECK_THROWS_AS(measure_probabilities(singlet(), 3, table), std::domain_error);

    // distributions sum to exactly one on every coupled basis state
    for (int ts1 = 0; ts1 <= 3; ++ts1) {
        for (int ts2 = 0; ts2 <= 3; ++ts2) {
            HalfInt a = HalfInt::from_twice(ts1);
            HalfInt b = HalfInt::from_twice(ts2);
            CGTable t(a, b);
            CoupledBasis basis(a, b);
            for (int i = 0; i < basis.size(); ++i) {
                auto [s, m] = basis.at(i);
                StateVector v = StateVector::coupled_basis_state(a, b, s, m);
                for (int particle : {1, 2}) {
                    Rational total = 0;
                    for (const auto& [mv, p] : measure_probabilities(v, particle, t)) total += p;
                    CHECK(total == 1);
                }
            }
        }
    }
}

TEST_CASE("collapse determines the partner state") {
    CGTable table(kHalf, kHalf);

    StateVector after = collapse(triplet_zero(), 1, kHalf, table);
    CHECK(after == StateVector::uncoupled_basis_state(kHalf, kHalf, kHalf, -kHalf));

    StateVector upup = StateVector::uncoupled_basis_state(kHalf, kHalf, kHalf, kHalf);
    CHECK(collapse(upup, 1, kHalf, table) == upup);

    // global sign is kept as computed: projecting |00> onto m1 = -1/2
    StateVector down = collapse(singlet(), 1, -kHalf, table);
    std::vector<SqrtRational> expected(4);
    expected[2] = -SqrtRational::one();
    CHECK(down.amplitudes() == expected);

    CHECK_THROWS_AS(collapse(upup, 1, -kHalf, table), std::domain_error);

    // measuring the measured particle again is deterministic
    auto again = measure_probabilities(after, 1, table);
    REQUIRE(again.size() == 1);
    CHECK(again[0] == std::pair<HalfInt, Rational>{kHalf, Rational(1)});
}

TEST_CASE("sampling is seeded and deterministic") {
    CGTable table(kHalf, kHalf);

    StateVector top = StateVector::coupled_basis_state(kHalf, kHalf, HalfInt(1), HalfInt(1));
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        auto [m, post] = sample(top, 1, table, seed);
        CHECK(m == kHalf);
        CHECK(post == StateVector::uncoupled_basis_state(kHalf, kHalf, kHalf, kHalf));
    }

    auto first = sample(triplet_zero(), 1, table, 42);
    auto second = sample(triplet_zero(), 1, table, 42);
    CHECK(first.first == second.first);
    CHECK(first.second == second.second);

    // 10000 shots: frequency of +1/2 within 3 sigma = 0.015 of one half
    MeasurementRng rng(20260810);
    int ups = 0;
    for (int shot = 0; shot < 10000; ++shot) {
        if (sample(triplet_zero(), 1, table, rng).first == kHalf) ++ups;
    }
    CHECK(ups > 4850);
    CHECK(ups < 5150);
}

TEST_CASE("entanglement detection by exact 2x2 minors") {
    CGTable table(kHalf, kHalf);

    CHECK(is_entangled(singlet(), table));
    CHECK(is_entangled(triplet_zero(), table));
    CHECK_FALSE(is_entangled(StateVector::uncoupled_basis_state(kHalf, kHalf, kHalf, -kHalf), table));

    // every product basis state is unentangled; coupled states split by the
    // rank of their coefficient matrix
    for (int ts1 = 0; ts1 <= 2; ++ts1) {
        for (int ts2 = 0; ts2 <= 2; ++ts2) {
            HalfInt a = HalfInt::from_twice(ts1);
            HalfInt b = HalfInt::from_twice(ts2);
            CGTable t(a, b);
            UncoupledBasis basis(a, b);
            for (int i = 0; i < basis.size(); ++i) {
                auto [m1, m2] = basis.at(i);
                CHECK_FALSE(is_entangled(StateVector::uncoupled_basis_state(a, b, m1, m2), t));
            }
            for (const auto& block : t.blocks()) {
                for (const CGState& state : block.states) {
                    StateVector v = StateVector::coupled_basis_state(a, b, state.s, state.m);
                    CHECK(is_entangled(v, t) == (state.terms.size() >= 2));
                }
            }
        }
    }

    // collapse never leaves an entangled state behind
    for (const auto& [m, p] : measure_probabilities(singlet(), 1, table)) {
        CHECK_FALSE(is_entangled(collapse(singlet(), 1, m, table), table));
    }
}
