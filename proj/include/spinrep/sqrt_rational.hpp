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

#include "spinrep/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace spinrep {

/// Thrown when two exact radicals with distinct square-free radicands are
/// added. Everywhere the ladder engine adds radicals the theory guarantees
/// equal radicands, so this surfacing means an internal logic fault, not a
/// bad input.
class IncommensurateAdd : public std::logic_error {
  public:
    IncommensurateAdd(const Int& lhs, const Int& rhs)
        : std::logic_error("incommensurate exact add: sqrt(" + lhs.str() + ") + sqrt(" + rhs.str() + ")") {}
};

struct SquarefreeParts {
    Int root;
    Int core;
};

/// Factors n >= 1 as root^2 * core with core square-free, by trial division
/// up to sqrt(n). Radicands stay small at desk scale; no factoring library
/// is warranted.
inline SquarefreeParts squarefree_decompose(Int n) {
    if (n < 1) throw std::domain_error("squarefree_decompose requires n >= 1");
    SquarefreeParts out{1, 1};
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int exp = 0;
        while (n % p == 0) {
            n /= p;
            ++exp;
        }
        for (int i = 0; i < exp / 2; ++i) out.root *= p;
        if (exp % 2 != 0) out.core *= p;
    }
    out.core *= n;  // leftover factor is prime
    return out;
}

/// An exact scalar sign * coeff * sqrt(radicand) with coeff a positive
/// rational and radicand square-free. This is the closed scalar type of all
/// representation-matrix entries and Clebsch-Gordan coefficients: products
/// and quotients stay inside it, and the only sums the algorithms need are
/// commensurate (equal radicands).
///
/// Canonical zero is sign 0, coeff 1, radicand 1.
class SqrtRational {
  public:
    SqrtRational() : sign_(0), coeff_(1), radicand_(1) {}

    static SqrtRational zero() { return {}; }
    static SqrtRational one() { return from_rational(1); }

    static SqrtRational from_rational(const Rational& q) {
        SqrtRational r;
        r.sign_ = sign_of(q);
        if (r.sign_ != 0) r.coeff_ = abs(q);
        return r;
    }

    /// Exact square root of q >= 0: sqrt(a/b) = (root/b) * sqrt(core) where
    /// a*b = root^2 * core.
    static SqrtRational sqrt_of(const Rational& q) {
        if (q < 0) throw std::domain_error("square root of negative rational: " + spinrep::to_string(q));
        if (q == 0) return zero();
        SquarefreeParts p = squarefree_decompose(numerator(q) * denominator(q));
        SqrtRational r;
        r.sign_ = 1;
        r.coeff_ = make_rational(p.root, denominator(q));
        r.radicand_ = p.core;
        return r;
    }

    /// Canonicalizing constructor: sign * (num/den) * sqrt(radicand), e.g.
    /// (+1, 1, 1, 8) -> +2*sqrt(2). A sign carried by num is folded in.
    static SqrtRational make(int sign, Int num, Int den, Int radicand) {
        if (sign < -1 || sign > 1) throw std::domain_error("sqrt-rational sign must be -1, 0, or +1");
        if (den <= 0) throw std::domain_error("sqrt-rational denominator must be positive");
        if (radicand <= 0) throw std::domain_error("sqrt-rational radicand must be positive");
        if (sign == 0 || num == 0) return zero();
        if (num < 0) {
            sign = -sign;
            num = -num;
        }
        SquarefreeParts p = squarefree_decompose(radicand);
        SqrtRational r;
        r.sign_ = sign;
        r.coeff_ = make_rational(num * p.root, std::move(den));
        r.radicand_ = p.core;
        return r;
    }

    int sign() const { return sign_; }
    const Rational& coeff() const { return coeff_; }
    const Int& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    /// coeff^2 * radicand, an exact rational (the squared magnitude).
    Rational square() const {
        if (sign_ == 0) return 0;
        return coeff_ * coeff_ * Rational(radicand_);
    }

    bool is_rational() const { return sign_ == 0 || radicand_ == 1; }

    Rational rational_value() const {
        if (sign_ == 0) return 0;
        if (radicand_ != 1) throw std::domain_error("value is irrational: " + to_string());
        return sign_ < 0 ? Rational(-coeff_) : coeff_;
    }

    SqrtRational operator-() const {
        SqrtRational r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return zero();
        SqrtRational r;
        if (a.radicand_ == b.radicand_) {
            r.radicand_ = 1;
            r.coeff_ = a.coeff_ * b.coeff_ * Rational(a.radicand_);
        } else {
            SquarefreeParts p = squarefree_decompose(a.radicand_ * b.radicand_);
            r.radicand_ = p.core;
            r.coeff_ = a.coeff_ * b.coeff_ * Rational(p.root);
        }
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    friend SqrtRational operator/(const SqrtRational& a, const SqrtRational& b) {
        if (b.sign_ == 0) throw std::domain_error("division by exact zero");
        if (a.sign_ == 0) return zero();
        // sqrt(d1)/sqrt(d2) = sqrt(d1*d2)/d2
        SqrtRational r;
        if (a.radicand_ == b.radicand_) {
            r.radicand_ = 1;
            r.coeff_ = a.coeff_ / b.coeff_;
        } else {
            SquarefreeParts p = squarefree_decompose(a.radicand_ * b.radicand_);
            r.radicand_ = p.core;
            r.coeff_ = a.coeff_ * Rational(p.root) / (b.coeff_ * Rational(b.radicand_));
        }
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Commensurate addition only; throws IncommensurateAdd otherwise.
    friend SqrtRational operator+(const SqrtRational& a, const SqrtRational& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.radicand_ != b.radicand_) throw IncommensurateAdd(a.radicand_, b.radicand_);
        Rational q = Rational(a.sign_) * a.coeff_ + Rational(b.sign_) * b.coeff_;
        SqrtRational r;
        r.sign_ = sign_of(q);
        if (r.sign_ != 0) {
            r.coeff_ = abs(q);
            r.radicand_ = a.radicand_;
        }
        return r;
    }

    friend SqrtRational operator-(const SqrtRational& a, const SqrtRational& b) { return a + (-b); }

    friend SqrtRational operator*(const Rational& q, const SqrtRational& x) {
        return from_rational(q) * x;
    }

    friend bool operator==(const SqrtRational& a, const SqrtRational& b) = default;

    /// Nearest double; a few ulp at most (one rounding each for the
    /// rational, the square root, and the product).
    double to_double() const {
        if (sign_ == 0) return 0.0;
        double v = sign_ * coeff_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
        if (!std::isfinite(v)) throw std::range_error("sqrt-rational overflows double: " + to_string());
        return v;
    }

    /// Canonical text form: "0", "1", "-1/2", "√2", "2√2", "-(1/2)√2".
    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string out = sign_ < 0 ? "-" : "";
        if (radicand_ == 1) return out + spinrep::to_string(coeff_);
        if (coeff_ != 1) {
            if (denominator(coeff_) == 1) {
                out += numerator(coeff_).str();
            } else {
                out += "(" + spinrep::to_string(coeff_) + ")";
            }
        }
        return out + "√" + radicand_.str();
    }

  private:
    int sign_;
    Rational coeff_;
    Int radicand_;
};

}  // namespace spinrep
