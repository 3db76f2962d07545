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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace spinrep {

// Dense row-major complex matrix; the whole float verification layer runs
// on these.
using ComplexMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline void require_square(const ComplexMatrix& m, const std::string& what) {
    if (m.rows() != m.cols()) throw std::domain_error(what + ": matrix must be square");
}

inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const std::string& what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::domain_error(what + ": shape mismatch");
}

/// Max-absolute-entry norm; the norm all membership predicates use.
inline double max_abs_entry(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Induced 1-norm (max column sum); used for exponential scaling.
inline double one_norm(const ComplexMatrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

inline bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

}  // namespace spinrep
