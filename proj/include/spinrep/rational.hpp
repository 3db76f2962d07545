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

#include "spinrep/half_int.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace spinrep {

// Canonical arbitrary-precision rational: gcd(|num|, den) == 1, den >= 1,
// zero stored as 0/1. cpp_rational maintains exactly this form.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. cpp_rational rejects a negative
/// denominator outright, so the sign is moved into the numerator first.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Rational to_rational(const HalfInt& h) { return make_rational(h.twice(), 2); }

inline int sign_of(const Rational& q) {
    if (q < 0) return -1;
    return q > 0 ? 1 : 0;
}

/// s(s+1), the S^2 eigenvalue on the spin-s multiplet.
inline Rational casimir_eigenvalue(const HalfInt& s) {
    Rational r = to_rational(s);
    return r * (r + 1);
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace spinrep
