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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace spinrep {

// Membership predicates default to 1e-10: the matexp backward error
// dominates and this leaves two orders of margin.
inline constexpr double kMembershipTol = 1e-10;

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "commutator");
    require_same_shape(a, b, "commutator");
    return a * b - b * a;
}

/// Matrix exponential by scaling-and-squaring with a truncated Taylor
/// series: halve until the 1-norm is <= 1/2, sum terms until one falls
/// below 1e-16, then square back up. Desk-scale dimensions need nothing
/// fancier; backward error stays below ~1e-13 * |A| for |A|_1 <= 10.
inline ComplexMatrix matexp(const ComplexMatrix& a) {
    require_square(a, "matexp");
    const auto n = a.rows();
    int squarings = 0;
    for (double norm = one_norm(a); norm > 0.5; norm *= 0.5) ++squarings;
    ComplexMatrix scaled = a * std::ldexp(1.0, -squarings);

    ComplexMatrix sum = ComplexMatrix::Identity(n, n);
    ComplexMatrix term = ComplexMatrix::Identity(n, n);
    for (int k = 1; k <= 64; ++k) {
        term = (term * scaled / static_cast<double>(k)).eval();
        sum += term;
        if (one_norm(term) < 1e-16) break;
    }
    for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
    return sum;
}

inline bool in_u_algebra(const ComplexMatrix& x, double tol = kMembershipTol) {
    require_square(x, "in_u_algebra");
    return max_abs_entry(x + x.adjoint()) <= tol;
}

inline bool in_su_algebra(const ComplexMatrix& x, double tol = kMembershipTol) {
    return in_u_algebra(x, tol) && std::abs(x.trace()) <= tol;
}

inline bool in_u_group(const ComplexMatrix& u, double tol = kMembershipTol) {
    require_square(u, "in_u_group");
    const auto n = u.rows();
    return max_abs_entry(u.adjoint() * u - ComplexMatrix::Identity(n, n)) <= tol;
}

inline bool in_su_group(const ComplexMatrix& u, double tol = kMembershipTol) {
    return in_u_group(u, tol) && std::abs(u.determinant() - std::complex<double>(1.0)) <= tol;
}

/// Basis of u(n): n^2 skew-Hermitian matrices.
inline std::vector<ComplexMatrix> u_basis(int n) {
    if (n < 1) throw std::domain_error("u_basis: n must be positive");
    const std::complex<double> i(0.0, 1.0);
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            ComplexMatrix a = ComplexMatrix::Zero(n, n);
            a(j, k) = 1.0;
            a(k, j) = -1.0;
            basis.push_back(a);
            ComplexMatrix b = ComplexMatrix::Zero(n, n);
            b(j, k) = i;
            b(k, j) = i;
            basis.push_back(b);
        }
    }
    for (int j = 0; j < n; ++j) {
        ComplexMatrix d = ComplexMatrix::Zero(n, n);
        d(j, j) = i;
        basis.push_back(d);
    }
    return basis;
}

/// Basis of su(n): n^2 - 1 traceless skew-Hermitian matrices.
inline std::vector<ComplexMatrix> su_basis(int n) {
    if (n < 1) throw std::domain_error("su_basis: n must be positive");
    const std::complex<double> i(0.0, 1.0);
    std::vector<ComplexMatrix> basis = u_basis(n);
    basis.resize(basis.size() - n);  // drop the diagonal i*e_jj family
    for (int j = 0; j + 1 < n; ++j) {
        ComplexMatrix d = ComplexMatrix::Zero(n, n);
        d(j, j) = i;
        d(j + 1, j + 1) = -i;
        basis.push_back(d);
    }
    return basis;
}

/// Real-linear independence, certified by the Gram matrix of the matrices
/// vectorized over R (re and im parts stacked) having full rank: smallest
/// eigenvalue above tol. u(n)/su(n) are real vector spaces, so independence
/// must be tested over R, not C.
inline bool linearly_independent(const std::vector<ComplexMatrix>& mats, double tol = kMembershipTol) {
    if (mats.empty()) return true;
    const auto k = static_cast<Eigen::Index>(mats.size());
    Eigen::MatrixXd gram(k, k);
    for (Eigen::Index p = 0; p < k; ++p) {
        for (Eigen::Index q = p; q < k; ++q) {
            // Re tr(A† B) is the real inner product of the vectorizations
            double g = (mats[p].adjoint() * mats[q]).trace().real();
            gram(p, q) = g;
            gram(q, p) = g;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    return es.eigenvalues().minCoeff() > tol;
}

/// The su(2) generators X_1, X_2, X_3.
inline ComplexMatrix generator_x(int j) {
    const std::complex<double> i(0.0, 1.0);
    ComplexMatrix x(2, 2);
    switch (j) {
        case 1:
            x << 0.0, -0.5 * i, -0.5 * i, 0.0;
            break;
        case 2:
            x << 0.0, -0.5, 0.5, 0.0;
            break;
        case 3:
            x << -0.5 * i, 0.0, 0.0, 0.5 * i;
            break;
        default:
            throw std::domain_error("generator index must be 1, 2, or 3");
    }
    return x;
}

/// Pauli matrix sigma_j = 2i X_j.
inline ComplexMatrix pauli(int j) {
    const std::complex<double> i(0.0, 1.0);
    return 2.0 * i * generator_x(j);
}

/// Spin operator S_j = sigma_j / 2 = i X_j (the s = 1/2 case).
inline ComplexMatrix spin_matrix(int j) { return 0.5 * pauli(j); }

/// The U(1) irrep phi_n : e^{i theta} -> e^{i n theta}.
class U1Irrep {
  public:
    explicit U1Irrep(long long n) : n_(n) {}
    long long n() const { return n_; }
    std::complex<double> operator()(double theta) const {
        return std::exp(std::complex<double>(0.0, static_cast<double>(n_) * theta));
    }

  private:
    long long n_;
};

inline U1Irrep u1_irrep(long long n) { return U1Irrep(n); }

}  // namespace spinrep
