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
#include "spinrep/coupling.hpp"
#include "spinrep/spin_rep.hpp"
#include "spinrep/states.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace spinrep {

using ordered_json = nlohmann::ordered_json;

// Integers render as decimal strings throughout: the arbitrary-precision
// values do not fit JSON number types.

inline ordered_json json_of(const SqrtRational& x) {
    return ordered_json{{"sign", x.sign()},
                        {"num", numerator(x.coeff()).str()},
                        {"den", denominator(x.coeff()).str()},
                        {"radicand", x.radicand().str()}};
}

inline ordered_json json_of(const SpinRep& rep) {
    ordered_json s3 = ordered_json::array();
    for (const HalfInt& m : rep.s3_diag) s3.push_back(m.to_string());
    ordered_json b = ordered_json::array();
    for (const SqrtRational& f : rep.plus_factors) b.push_back(json_of(f));
    return ordered_json{{"s", rep.s.to_string()}, {"dim", rep.dim}, {"s3", std::move(s3)}, {"b", std::move(b)}};
}

inline ordered_json json_of(const CGTable& table) {
    ordered_json blocks = ordered_json::array();
    for (const auto& block : table.blocks()) {
        ordered_json states = ordered_json::array();
        for (const CGState& state : block.states) {
            ordered_json terms = ordered_json::array();
            for (const CGTerm& t : state.terms) {
                terms.push_back(ordered_json{
                    {"m1", t.m1.to_string()}, {"m2", t.m2.to_string()}, {"coeff", json_of(t.coeff)}});
            }
            states.push_back(ordered_json{{"m", state.m.to_string()}, {"terms", std::move(terms)}});
        }
        blocks.push_back(ordered_json{{"s", block.s.to_string()}, {"states", std::move(states)}});
    }
    return ordered_json{
        {"s1", table.s1().to_string()}, {"s2", table.s2().to_string()}, {"blocks", std::move(blocks)}};
}

inline ordered_json json_of(const StateVector& v) {
    ordered_json amps = ordered_json::array();
    for (const SqrtRational& a : v.amplitudes()) amps.push_back(json_of(a));
    return ordered_json{{"basis", v.kind() == BasisKind::coupled ? "coupled" : "uncoupled"},
                        {"s1", v.s1().to_string()},
                        {"s2", v.s2().to_string()},
                        {"amplitudes", std::move(amps)}};
}

/// Matrices render as nested arrays of [re, im] pairs.
inline ordered_json json_of(const ComplexMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(ordered_json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// CSV export of a table: one row per nonzero coefficient, sorted by
/// (s desc, m desc, m1 desc) -- the table's natural iteration order.
inline std::string csv_of(const CGTable& table) {
    std::ostringstream out;
    out << "s1,s2,s,m,m1,m2,sign,num,den,radicand\n";
    for (const auto& block : table.blocks()) {
        for (const CGState& state : block.states) {
            for (const CGTerm& t : state.terms) {
                out << table.s1().to_string() << ',' << table.s2().to_string() << ','
                    << block.s.to_string() << ',' << state.m.to_string() << ',' << t.m1.to_string() << ','
                    << t.m2.to_string() << ',' << t.coeff.sign() << ',' << numerator(t.coeff.coeff()) << ','
                    << denominator(t.coeff.coeff()) << ',' << t.coeff.radicand() << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace spinrep
