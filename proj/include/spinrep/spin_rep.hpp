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

#include "spinrep/complex_matrix.hpp"
#include "spinrep/exact_matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace spinrep {

enum class Ladder { plus, minus };

/// The exact ladder factor sqrt(s(s+1) - m(m±1)): the amplitude picked up
/// by S± acting on |s m>. Exactly zero when the step would leave the
/// multiplet (m = s going up, m = -s going down).
inline SqrtRational ladder_factor(const HalfInt& s, const HalfInt& m, Ladder dir) {
    if (s < HalfInt(0)) throw std::domain_error("ladder_factor: spin must be nonnegative");
    if (abs(m) > s) throw std::domain_error("ladder_factor: |m| exceeds s");
    Rational mr = to_rational(m);
    Rational shifted = dir == Ladder::plus ? Rational(mr * (mr + 1)) : Rational(mr * (mr - 1));
    return SqrtRational::sqrt_of(casimir_eigenvalue(s) - shifted);
}

/// The spin-s representation, stored by what determines it: the S3
/// diagonal (s, s-1, ..., -s) and the superdiagonal ladder factors
/// b_{s-1}, ..., b_{-s} of S+. Dense exact views are materialized on
/// demand; S- is the transpose of S+ (all entries real), and S1/S2/X_j
/// need the imaginary unit so they exist only in the float layer.
struct SpinRep {
    HalfInt s;
    int dim = 0;
    std::vector<HalfInt> s3_diag;
    std::vector<SqrtRational> plus_factors;
};

inline SpinRep build_rep(const HalfInt& s) {
    if (s < HalfInt(0)) throw std::domain_error("build_rep: spin must be nonnegative, got " + s.to_string());
    SpinRep rep;
    rep.s = s;
    rep.dim = multiplet_dim_i(s);
    rep.s3_diag.reserve(rep.dim);
    for (HalfInt m = s; -s <= m; --m) rep.s3_diag.push_back(m);
    rep.plus_factors.reserve(rep.dim - 1);
    for (int k = 0; k + 1 < rep.dim; ++k) {
        rep.plus_factors.push_back(ladder_factor(s, rep.s3_diag[k + 1], Ladder::plus));
    }
    return rep;
}

inline SqrtSumMatrix s3_matrix(const SpinRep& rep) {
    SqrtSumMatrix m(rep.dim, rep.dim);
    for (int k = 0; k < rep.dim; ++k) m(k, k) = Rational(to_rational(rep.s3_diag[k]));
    return m;
}

inline SqrtSumMatrix splus_matrix(const SpinRep& rep) {
    SqrtSumMatrix m(rep.dim, rep.dim);
    for (int k = 0; k + 1 < rep.dim; ++k) m(k, k + 1) = rep.plus_factors[k];
    return m;
}

inline SqrtSumMatrix sminus_matrix(const SpinRep& rep) { return splus_matrix(rep).transposed(); }

/// S^2 = S+S- - S3 + S3^2, evaluated exactly; equals s(s+1) * I for a
/// correctly built representation.
inline SqrtSumMatrix casimir(const SpinRep& rep) {
    SqrtSumMatrix sp = splus_matrix(rep);
    SqrtSumMatrix sm = sminus_matrix(rep);
    SqrtSumMatrix s3 = s3_matrix(rep);
    return sp * sm - s3 + s3 * s3;
}

struct RepCheck {
    std::string name;
    bool pass = false;
};

struct RepReport {
    HalfInt s;
    std::vector<RepCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Structural verification, all exact: the su(2) commutation relations,
/// the Casimir, tracelessness of S3, and S- = transpose(S+).
inline RepReport verify_rep(const SpinRep& rep) {
    SqrtSumMatrix sp = splus_matrix(rep);
    SqrtSumMatrix sm = sminus_matrix(rep);
    SqrtSumMatrix s3 = s3_matrix(rep);

    RepReport report;
    report.s = rep.s;
    report.checks.push_back({"[S3,S+] = S+", exact_commutator(s3, sp) == sp});
    report.checks.push_back({"[S3,S-] = -S-", (exact_commutator(s3, sm) + sm).is_zero()});
    report.checks.push_back(
        {"[S+,S-] = 2S3", exact_commutator(sp, sm) == SqrtSum(Rational(2)) * s3});
    report.checks.push_back(
        {"S^2 = s(s+1) I",
         casimir(rep) == SqrtSum(casimir_eigenvalue(rep.s)) * SqrtSumMatrix::identity(rep.dim)});
    report.checks.push_back({"tr S3 = 0", s3.trace().is_zero()});
    report.checks.push_back({"S- = transpose(S+)", sm == splus_matrix(rep).transposed()});
    return report;
}

enum class RepMatrix { S1, S2, S3, Splus, Sminus, X1, X2, X3 };

/// Double-precision view of the representation matrices. S1 = (S+ + S-)/2,
/// S2 = (S+ - S-)/2i, X_j = -i S_j.
inline ComplexMatrix rep_to_float(const SpinRep& rep, RepMatrix which) {
    const std::complex<double> i(0.0, 1.0);
    ComplexMatrix sp = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (int k = 0; k + 1 < rep.dim; ++k) sp(k, k + 1) = rep.plus_factors[k].to_double();
    ComplexMatrix sm = sp.transpose();

    switch (which) {
        case RepMatrix::Splus:
            return sp;
        case RepMatrix::Sminus:
            return sm;
        case RepMatrix::S1:
            return 0.5 * (sp + sm);
        case RepMatrix::X1:
            return -0.5 * i * (sp + sm);
        case RepMatrix::S2:
            return -0.5 * i * (sp - sm);
        case RepMatrix::X2:
            return -0.5 * (sp - sm);
        case RepMatrix::S3:
        case RepMatrix::X3: {
            ComplexMatrix s3 = ComplexMatrix::Zero(rep.dim, rep.dim);
            for (int k = 0; k < rep.dim; ++k) s3(k, k) = rep.s3_diag[k].to_double();
            return which == RepMatrix::S3 ? s3 : ComplexMatrix(-i * s3);
        }
    }
    throw std::domain_error("rep_to_float: unknown matrix selector");
}

}  // namespace spinrep
