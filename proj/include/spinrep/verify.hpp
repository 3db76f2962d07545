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

#pragma once

#include "spinrep/coupling.hpp"
#include "spinrep/lie_algebra.hpp"
#include "spinrep/spin_rep.hpp"
#include "spinrep/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace spinrep {

struct VerifyOptions {
    HalfInt max_spin = HalfInt(4);
    double tol = 1e-9;  // float-layer tolerance; the exact suites ignore it
    std::uint64_t seed = 20260810;
};

struct VerifyCheck {
    std::string name;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.name);
        return out;
    }
};

namespace detail {

inline std::string pair_label(const HalfInt& a, const HalfInt& b) {
    return a.to_string() + " (x) " + b.to_string();
}

inline bool check_cg_pair(const HalfInt& a, const HalfInt& b) {
    CGTable table(a, b);
    UncoupledBasis basis(a, b);
    SqrtSumMatrix sp = total_operator(a, b, TotalKind::Plus).matrix;
    SqrtSumMatrix sm = total_operator(a, b, TotalKind::Minus).matrix;
    SqrtSumMatrix s3 = total_operator(a, b, TotalKind::S3).matrix;
    SqrtSumMatrix s2op = total_operator(a, b, TotalKind::Squared).matrix;
    if (!(s2op == total_spin_squared_tensor(a, b))) return false;

    // dimension identity
    Int dim_sum = 0;
    for (const auto& block : table.blocks()) dim_sum += multiplet_dim(block.s);
    if (dim_sum != multiplet_dim(a) * multiplet_dim(b)) return false;

    for (const auto& block : table.blocks()) {
        for (const CGState& state : block.states) {
            Rational norm2 = 0;
            for (const CGTerm& t : state.terms) {
                if (t.m1 + t.m2 != state.m) return false;
                if (t.coeff.is_zero()) return false;
                norm2 += t.coeff.square();
            }
            if (norm2 != 1) return false;
            if (state.terms.empty() || state.terms.front().coeff.sign() != 1) return false;

            std::vector<SqrtSum> vec(basis.size());
            for (const CGTerm& t : state.terms) vec[basis.index_of(t.m1, t.m2)] = SqrtSum(t.coeff);

            auto s3vec = s3.apply(vec);
            auto s2vec = s2op.apply(vec);
            SqrtSum mval{Rational(to_rational(state.m))};
            SqrtSum c2{casimir_eigenvalue(state.s)};
            for (int i = 0; i < basis.size(); ++i) {
                if (!(s3vec[i] == mval * vec[i])) return false;
                if (!(s2vec[i] == c2 * vec[i])) return false;
            }
            if (state.m == state.s) {
                for (const auto& e : sp.apply(vec))
                    if (!e.is_zero()) return false;
            }
            if (state.m == -state.s) {
                for (const auto& e : sm.apply(vec))
                    if (!e.is_zero()) return false;
            }
        }
    }

    // orthonormality inside each m-sector, sector sizes matching degeneracy
    for (HalfInt m = -(a + b); m <= a + b; ++m) {
        std::vector<const CGState*> sector;
        for (const auto& block : table.blocks()) {
            for (const CGState& state : block.states) {
                if (state.m == m) sector.push_back(&state);
            }
        }
        if (Int(sector.size()) != degeneracy(a, b, m)) return false;
        for (size_t p = 0; p < sector.size(); ++p) {
            for (size_t q = p; q < sector.size(); ++q) {
                SqrtSum dot;
                for (const CGTerm& tp : sector[p]->terms) {
                    for (const CGTerm& tq : sector[q]->terms) {
                        if (tp.m1 == tq.m1 && tp.m2 == tq.m2) dot += SqrtSum(tp.coeff) * SqrtSum(tq.coeff);
                    }
                }
                if (!dot.is_rational() || dot.rational_value() != (p == q ? 1 : 0)) return false;
            }
        }
    }
    return true;
}

inline bool check_closed_form(const HalfInt& s1) {
    const HalfInt half = HalfInt::half();
    CGTable table(s1, half);
    for (const HalfInt& s : decompose(s1, half)) {
        bool upper = s == s1 + half;
        for (HalfInt m = -s; m <= s; ++m) {
            ClosedFormHalf tbl = cg_closed_form_half(s1, s, m, HalfConvention::table);
            ClosedFormHalf ppr = cg_closed_form_half(s1, s, m, HalfConvention::paper);
            for (const CGTerm* t : {&tbl.spin_up, &tbl.spin_down}) {
                if (t->coeff.is_zero()) continue;
                if (!(table.coefficient(s, m, t->m1, t->m2) == t->coeff)) return false;
            }
            for (const CGTerm* t : {&ppr.spin_up, &ppr.spin_down}) {
                if (t->coeff.is_zero()) continue;
                SqrtRational expected = table.coefficient(s, m, t->m1, t->m2);
                if (!(t->coeff == (upper ? expected : -expected))) return false;
            }
        }
    }
    return true;
}

inline bool check_states_pair(const HalfInt& a, const HalfInt& b) {
    CGTable table(a, b);
    CoupledBasis coupled(a, b);
    UncoupledBasis uncoupled(a, b);

    for (int i = 0; i < coupled.size(); ++i) {
        auto [s, m] = coupled.at(i);
        StateVector v = StateVector::coupled_basis_state(a, b, s, m);
        if (!(to_coupled(to_uncoupled(v, table), table) == v)) return false;
        for (int particle : {1, 2}) {
            Rational total = 0;
            for (const auto& [mv, p] : measure_probabilities(v, particle, table)) {
                total += p;
                StateVector after = collapse(v, particle, mv, table);
                Rational norm2 = 0;
                for (const SqrtRational& amp : after.amplitudes()) norm2 += amp.square();
                if (norm2 != 1) return false;
                if (is_entangled(after, table)) return false;
            }
            if (total != 1) return false;
        }
        if (is_entangled(v, table) != (table.state(s, m).terms.size() >= 2)) return false;
    }
    for (int i = 0; i < uncoupled.size(); ++i) {
        auto [m1, m2] = uncoupled.at(i);
        StateVector v = StateVector::uncoupled_basis_state(a, b, m1, m2);
        if (!(to_uncoupled(to_coupled(v, table), table) == v)) return false;
        if (is_entangled(v, table)) return false;
    }
    return true;
}

inline bool check_float_rep(const HalfInt& s, double tol, std::uint64_t seed) {
    using std::numbers::pi;
    const std::complex<double> i(0.0, 1.0);
    SpinRep rep = build_rep(s);
    ComplexMatrix xs[3] = {rep_to_float(rep, RepMatrix::X1), rep_to_float(rep, RepMatrix::X2),
                           rep_to_float(rep, RepMatrix::X3)};
    std::mt19937_64 rng(seed + s.twice().convert_to<std::uint64_t>());
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        ComplexMatrix x = coeff(rng) * xs[0] + coeff(rng) * xs[1] + coeff(rng) * xs[2];
        double norm = one_norm(x);
        if (norm > 3.0) x *= 3.0 / norm;
        if (!in_su_group(matexp(x), tol)) return false;
    }
    ComplexMatrix s3 = rep_to_float(rep, RepMatrix::S3);
    ComplexMatrix id = ComplexMatrix::Identity(rep.dim, rep.dim);
    double parity = s.is_integer() ? 1.0 : -1.0;
    if (max_abs_entry(matexp(2.0 * pi * i * s3) - parity * id) > 1e-10) return false;
    if (max_abs_entry(matexp(4.0 * pi * i * s3) - id) > 1e-10) return false;
    return true;
}

inline bool check_u1(double tol, std::uint64_t seed) {
    using std::numbers::pi;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-2.0 * pi, 2.0 * pi);
    for (long long n = -3; n <= 3; ++n) {
        U1Irrep phi = u1_irrep(n);
        if (std::abs(phi(2.0 * pi) - 1.0) > tol) return false;
        for (int trial = 0; trial < 100; ++trial) {
            double t1 = angle(rng);
            double t2 = angle(rng);
            if (std::abs(phi(t1 + t2) - phi(t1) * phi(t2)) > tol) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Runs the exact structural suites (representations, coupling tables,
/// states) and the float suites (exponentials, U(1)) up to the configured
/// spin bound. Every failed check is a bug, not a data problem.
inline VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;

    for (HalfInt s(0); s <= options.max_spin; s += HalfInt::half()) {
        SpinRep rep = build_rep(s);
        bool ok = verify_rep(rep).all_pass();
        // ladder symmetry and the S+ action while the rep is at hand
        SqrtSumMatrix sp = splus_matrix(rep);
        for (HalfInt m = -s; m <= s && ok; ++m) {
            if (!(ladder_factor(s, m, Ladder::minus) == ladder_factor(s, -m, Ladder::plus))) ok = false;
        }
        for (int k = 0; k < rep.dim && ok; ++k) {
            std::vector<SqrtSum> e(rep.dim);
            e[k] = SqrtSum(Rational(1));
            auto image = sp.apply(e);
            SqrtRational f = ladder_factor(s, rep.s3_diag[k], Ladder::plus);
            for (int r = 0; r < rep.dim && ok; ++r) {
                SqrtSum expected = r == k - 1 ? SqrtSum(f) : SqrtSum();
                if (!(image[r] == expected)) ok = false;
            }
        }
        report.checks.push_back({"rep structure s = " + s.to_string(), ok});
    }

    for (HalfInt a(0); a <= options.max_spin; a += HalfInt::half()) {
        for (HalfInt b(0); b <= a; b += HalfInt::half()) {
            report.checks.push_back(
                {"cg table invariants " + detail::pair_label(a, b), detail::check_cg_pair(a, b)});
        }
    }

    for (HalfInt s1(0); s1 <= options.max_spin; s1 += HalfInt::half()) {
        report.checks.push_back(
            {"closed form s2 = 1/2 vs ladder, s1 = " + s1.to_string(), detail::check_closed_form(s1)});
    }

    {
        HalfInt state_bound = min(options.max_spin, HalfInt(2));
        for (HalfInt a(0); a <= state_bound; a += HalfInt::half()) {
            for (HalfInt b(0); b <= a; b += HalfInt::half()) {
                report.checks.push_back(
                    {"state transforms and measurement " + detail::pair_label(a, b),
                     detail::check_states_pair(a, b)});
            }
        }
    }

    {
        bool ok = true;
        for (int i = 1; i <= 3 && ok; ++i) {
            int j = i % 3 + 1;
            int k = 6 - i - j;
            if (max_abs_entry(commutator(generator_x(i), generator_x(j)) - generator_x(k)) > 1e-14) ok = false;
            const std::complex<double> im(0.0, 1.0);
            if (max_abs_entry(commutator(spin_matrix(i), spin_matrix(j)) - im * spin_matrix(k)) > 1e-14)
                ok = false;
        }
        report.checks.push_back({"su(2) generator commutators", ok});
    }
    {
        bool ok = true;
        for (int n : {2, 3}) {
            auto basis = su_basis(n);
            if (!linearly_independent(basis)) ok = false;
            std::mt19937_64 rng(options.seed + n);
            std::uniform_real_distribution<double> coeff(-1.0, 1.0);
            for (int trial = 0; trial < 100 && ok; ++trial) {
                ComplexMatrix x = ComplexMatrix::Zero(n, n);
                for (const auto& m : basis) x += coeff(rng) * m;
                if (!in_su_group(matexp(x), options.tol)) ok = false;
            }
        }
        report.checks.push_back({"random su(n) exponentials land in SU(n)", ok});
    }
    for (HalfInt s(0); s <= min(options.max_spin, HalfInt(4)); s += HalfInt::half()) {
        report.checks.push_back({"rep exponentials and double cover s = " + s.to_string(),
                                 detail::check_float_rep(s, options.tol, options.seed)});
    }
    report.checks.push_back({"u(1) irrep homomorphism and periodicity", detail::check_u1(1e-12, options.seed)});

    return report;
}

}  // namespace spinrep
