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

#include "spinrep/sqrt_sum.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace spinrep {

/// Dense matrix over the exact sqrt-sum ring, for desk-scale dimensions.
/// Spin operators are extremely sparse, so entry-wise products short-circuit
/// on exact zeros (empty term maps).
class SqrtSumMatrix {
  public:
    SqrtSumMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0) throw std::domain_error("matrix dimensions must be positive");
    }

    static SqrtSumMatrix identity(int n) {
        SqrtSumMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    SqrtSum& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }
    const SqrtSum& operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    SqrtSumMatrix& operator+=(const SqrtSumMatrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    SqrtSumMatrix& operator-=(const SqrtSumMatrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }

    friend SqrtSumMatrix operator+(SqrtSumMatrix a, const SqrtSumMatrix& b) {
        a += b;
        return a;
    }
    friend SqrtSumMatrix operator-(SqrtSumMatrix a, const SqrtSumMatrix& b) {
        a -= b;
        return a;
    }

    friend SqrtSumMatrix operator*(const SqrtSumMatrix& a, const SqrtSumMatrix& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("matrix product shape mismatch");
        SqrtSumMatrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const SqrtSum& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const SqrtSum& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend SqrtSumMatrix operator*(const SqrtSum& k, const SqrtSumMatrix& m) {
        SqrtSumMatrix out(m.rows_, m.cols_);
        for (size_t i = 0; i < m.entries_.size(); ++i) out.entries_[i] = k * m.entries_[i];
        return out;
    }

    SqrtSumMatrix transposed() const {
        SqrtSumMatrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    SqrtSum trace() const {
        if (rows_ != cols_) throw std::domain_error("trace of non-square matrix");
        SqrtSum t;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const SqrtSumMatrix& a, const SqrtSumMatrix& b) = default;

    std::vector<SqrtSum> apply(const std::vector<SqrtSum>& v) const {
        if (static_cast<size_t>(cols_) != v.size()) throw std::domain_error("matrix-vector shape mismatch");
        std::vector<SqrtSum> out(rows_);
        for (int c = 0; c < cols_; ++c) {
            if (v[c].is_zero()) continue;
            for (int r = 0; r < rows_; ++r) {
                const SqrtSum& e = (*this)(r, c);
                if (!e.is_zero()) out[r] += e * v[c];
            }
        }
        return out;
    }

  private:
    void require_same_shape(const SqrtSumMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix shape mismatch");
    }

    int rows_;
    int cols_;
    std::vector<SqrtSum> entries_;  // row-major
};

inline SqrtSumMatrix exact_commutator(const SqrtSumMatrix& a, const SqrtSumMatrix& b) {
    return a * b - b * a;
}

/// Kronecker product; block (i1, j1) is a(i1, j1) * b.
inline SqrtSumMatrix kron(const SqrtSumMatrix& a, const SqrtSumMatrix& b) {
    SqrtSumMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1) {
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const SqrtSum& f = a(i1, j1);
            if (f.is_zero()) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2) {
                for (int j2 = 0; j2 < b.cols(); ++j2) {
                    const SqrtSum& g = b(i2, j2);
                    if (!g.is_zero()) out(i1 * b.rows() + i2, j1 * b.cols() + j2) = f * g;
                }
            }
        }
    }
    return out;
}

}  // namespace spinrep
