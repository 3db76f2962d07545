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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace spinrep {

using Int = boost::multiprecision::cpp_int;

/// An exact half-integer quantum number (a spin s or a magnetic number m).
///
/// Stores twice the value, so 3/2 <-> twice() == 3. Stepping m by one unit
/// is an exact integer operation, and "m runs from -s to s" is an ordinary
/// loop: `for (HalfInt m = -s; m <= s; ++m)`.
class HalfInt {
  public:
    HalfInt() = default;
    HalfInt(int whole) : twice_(2 * Int(whole)) {}
    HalfInt(const Int& whole) : twice_(2 * whole) {}

    static HalfInt from_twice(Int t) {
        HalfInt h;
        h.twice_ = std::move(t);
        return h;
    }
    static HalfInt half() { return from_twice(1); }

    const Int& twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }

    HalfInt operator-() const { return from_twice(-twice_); }
    HalfInt& operator+=(const HalfInt& o) {
        twice_ += o.twice_;
        return *this;
    }
    HalfInt& operator-=(const HalfInt& o) {
        twice_ -= o.twice_;
        return *this;
    }
    /// Steps by one unit (not one half).
    HalfInt& operator++() {
        twice_ += 2;
        return *this;
    }
    HalfInt& operator--() {
        twice_ -= 2;
        return *this;
    }

    friend HalfInt operator+(const HalfInt& a, const HalfInt& b) {
        return from_twice(a.twice_ + b.twice_);
    }
    friend HalfInt operator-(const HalfInt& a, const HalfInt& b) {
        return from_twice(a.twice_ - b.twice_);
    }

    friend bool operator==(const HalfInt& a, const HalfInt& b) {
        return a.twice_ == b.twice_;
    }
    friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
        if (a.twice_ < b.twice_) return std::strong_ordering::less;
        if (a.twice_ > b.twice_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const { return twice_.convert_to<double>() / 2.0; }

    /// "2", "3/2", "-1/2" -- the same grammar the CLI accepts.
    std::string to_string() const {
        if (is_integer()) return Int(twice_ / 2).str();
        return twice_.str() + "/2";
    }

  private:
    Int twice_;  // 2x the represented value
};

inline HalfInt abs(const HalfInt& h) { return h < HalfInt(0) ? -h : h; }
inline const HalfInt& min(const HalfInt& a, const HalfInt& b) { return b < a ? b : a; }
inline const HalfInt& max(const HalfInt& a, const HalfInt& b) { return a < b ? b : a; }

/// 2s+1, the dimension of the spin-s multiplet.
inline Int multiplet_dim(const HalfInt& s) { return s.twice() + 1; }

/// multiplet_dim as a machine int, for use as a matrix dimension.
inline int multiplet_dim_i(const HalfInt& s) {
    Int d = multiplet_dim(s);
    if (d < 1 || d > 1000000) throw std::domain_error("spin too large for a dense dimension: s = " + s.to_string());
    return d.convert_to<int>();
}

}  // namespace spinrep
