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

#include "spinrep/sqrt_rational.hpp"

#include <map>
#include <string>

namespace spinrep {

/// A formal finite sum  sum_d q_d * sqrt(d)  over square-free radicands d
/// with nonzero rational coefficients q_d. Square roots of distinct
/// square-free integers are linearly independent over Q, so equality of
/// values is equality of term maps and the empty map is the unique zero.
///
/// This is the ring in which inner products and operator products are
/// evaluated exactly (unitarity and Casimir checks); single values that are
/// known to be radicals live in SqrtRational instead.
class SqrtSum {
  public:
    SqrtSum() = default;

    SqrtSum(const SqrtRational& x) {
        if (x.sign() != 0) terms_[x.radicand()] = Rational(x.sign()) * x.coeff();
    }
    SqrtSum(const Rational& q) {
        if (q != 0) terms_[1] = q;
    }
    SqrtSum(int n) : SqrtSum(Rational(n)) {}

    bool is_zero() const { return terms_.empty(); }
    const std::map<Int, Rational>& terms() const { return terms_; }

    SqrtSum& operator+=(const SqrtSum& o) {
        for (const auto& [d, q] : o.terms_) add_term(d, q);
        return *this;
    }
    SqrtSum& operator-=(const SqrtSum& o) {
        for (const auto& [d, q] : o.terms_) add_term(d, -q);
        return *this;
    }

    friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) {
        a += b;
        return a;
    }
    friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) {
        a -= b;
        return a;
    }
    SqrtSum operator-() const {
        SqrtSum r;
        for (const auto& [d, q] : terms_) r.terms_[d] = -q;
        return r;
    }

    friend SqrtSum operator*(const SqrtSum& a, const SqrtSum& b) {
        SqrtSum out;
        for (const auto& [da, qa] : a.terms_) {
            for (const auto& [db, qb] : b.terms_) {
                if (da == db) {
                    out.add_term(1, qa * qb * Rational(da));
                } else {
                    SquarefreeParts p = squarefree_decompose(da * db);
                    out.add_term(p.core, qa * qb * Rational(p.root));
                }
            }
        }
        return out;
    }

    friend bool operator==(const SqrtSum& a, const SqrtSum& b) = default;

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }

    Rational rational_value() const {
        if (terms_.empty()) return 0;
        if (!is_rational()) throw std::domain_error("sqrt-sum value is irrational: " + to_string());
        return terms_.begin()->second;
    }

    /// Collapses to a single radical; throws if more than one term remains.
    SqrtRational as_sqrt_rational() const {
        if (terms_.empty()) return SqrtRational::zero();
        if (terms_.size() > 1) throw std::domain_error("sqrt-sum is not a single radical: " + to_string());
        const auto& [d, q] = *terms_.begin();
        return SqrtRational::make(1, numerator(q), denominator(q), d);
    }

    double to_double() const {
        double v = 0.0;
        for (const auto& [d, q] : terms_) {
            v += spinrep::to_double(q) * std::sqrt(d.convert_to<double>());
        }
        if (!std::isfinite(v)) throw std::range_error("sqrt-sum overflows double");
        return v;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [d, q] : terms_) {
            Rational mag = abs(q);
            if (first) {
                if (q < 0) out += "-";
            } else {
                out += q < 0 ? " - " : " + ";
            }
            first = false;
            if (d == 1) {
                out += spinrep::to_string(mag);
            } else {
                if (mag != 1) {
                    out += denominator(mag) == 1 ? numerator(mag).str() : "(" + spinrep::to_string(mag) + ")";
                }
                out += "√" + d.str();
            }
        }
        return out;
    }

  private:
    void add_term(const Int& d, const Rational& q) {
        if (q == 0) return;
        auto [it, inserted] = terms_.try_emplace(d, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Int, Rational> terms_;  // square-free radicand -> nonzero coefficient
};

}  // namespace spinrep
