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

#include "spinrep/spin_rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinrep {

/// Product-basis enumeration for a two-particle system:
/// index = k1*(2s2+1) + k2 with m1 = s1-k1 and m2 = s2-k2, so the magnetic
/// numbers descend within each particle.
class UncoupledBasis {
  public:
    UncoupledBasis(HalfInt s1, HalfInt s2) : s1_(std::move(s1)), s2_(std::move(s2)) {
        if (s1_ < HalfInt(0) || s2_ < HalfInt(0)) throw std::domain_error("spins must be nonnegative");
        dim1_ = multiplet_dim_i(s1_);
        dim2_ = multiplet_dim_i(s2_);
    }

    const HalfInt& s1() const { return s1_; }
    const HalfInt& s2() const { return s2_; }
    int dim1() const { return dim1_; }
    int dim2() const { return dim2_; }
    int size() const { return dim1_ * dim2_; }

    int index_of(const HalfInt& m1, const HalfInt& m2) const {
        return sub_index(s1_, m1, dim1_) * dim2_ + sub_index(s2_, m2, dim2_);
    }

    std::pair<HalfInt, HalfInt> at(int index) const {
        if (index < 0 || index >= size()) throw std::domain_error("uncoupled basis index out of range");
        HalfInt m1 = s1_ - HalfInt(index / dim2_);
        HalfInt m2 = s2_ - HalfInt(index % dim2_);
        return {m1, m2};
    }

    HalfInt total_m(int index) const {
        auto [m1, m2] = at(index);
        return m1 + m2;
    }

  private:
    static int sub_index(const HalfInt& s, const HalfInt& m, int dim) {
        Int step = s.twice() - m.twice();
        if (step % 2 != 0) throw std::domain_error("m = " + m.to_string() + " has wrong parity for s = " + s.to_string());
        Int k = step / 2;
        if (k < 0 || k >= dim) throw std::domain_error("m = " + m.to_string() + " out of range for s = " + s.to_string());
        return k.convert_to<int>();
    }

    HalfInt s1_;
    HalfInt s2_;
    int dim1_ = 0;
    int dim2_ = 0;
};

/// Number of product kets with m1 + m2 = m: the plateau 2*min(s1,s2)+1 for
/// |m| <= |s1-s2|, dropping by one per unit of |m| beyond.
inline Int degeneracy(const HalfInt& s1, const HalfInt& s2, const HalfInt& m) {
    if (s1 < HalfInt(0) || s2 < HalfInt(0)) throw std::domain_error("spins must be nonnegative");
    if ((s1.twice() + s2.twice() - m.twice()) % 2 != 0) {
        throw std::domain_error("m = " + m.to_string() + " has wrong parity for s1 + s2");
    }
    HalfInt lo = max(-s1, m - s2);
    HalfInt hi = min(s1, m + s2);
    if (hi < lo) return 0;
    return (hi - lo).twice() / 2 + 1;
}

/// Total spins occurring in V_{s1} (x) V_{s2}: s1+s2 down to |s1-s2|, each
/// exactly once.
inline std::vector<HalfInt> decompose(const HalfInt& s1, const HalfInt& s2) {
    if (s1 < HalfInt(0) || s2 < HalfInt(0)) throw std::domain_error("spins must be nonnegative");
    std::vector<HalfInt> out;
    HalfInt bottom = abs(s1 - s2);
    for (HalfInt s = s1 + s2; bottom <= s; --s) out.push_back(s);
    return out;
}

/// Iterated two-spin decomposition with multiplicity bookkeeping.
inline std::map<HalfInt, Int> decompose_many(const std::vector<HalfInt>& spins) {
    if (spins.empty()) throw std::domain_error("decompose_many: empty spin list");
    if (spins[0] < HalfInt(0)) throw std::domain_error("spins must be nonnegative");
    std::map<HalfInt, Int> acc{{spins[0], 1}};
    for (size_t i = 1; i < spins.size(); ++i) {
        std::map<HalfInt, Int> next;
        for (const auto& [s, mult] : acc) {
            for (const HalfInt& t : decompose(s, spins[i])) next[t] += mult;
        }
        acc = std::move(next);
    }
    return acc;
}

enum class TotalKind { S3, Plus, Minus, Squared };

/// A total spin operator S_i = S_i^(1) (x) 1 + 1 (x) S_i^(2) as an exact
/// matrix on the uncoupled product basis. S3 is diagonal with entries
/// m1 + m2; S± carry the Kronecker-sum sparsity; S^2 is assembled as
/// S+S- - S3 + S3^2.
struct TotalOperator {
    HalfInt s1, s2;
    TotalKind which;
    SqrtSumMatrix matrix;
};

inline TotalOperator total_operator(const HalfInt& s1, const HalfInt& s2, TotalKind which) {
    UncoupledBasis basis(s1, s2);
    const int n = basis.size();

    auto ladder = [&](Ladder dir) {
        SqrtSumMatrix m(n, n);
        for (int idx = 0; idx < n; ++idx) {
            auto [m1, m2] = basis.at(idx);
            HalfInt step(dir == Ladder::plus ? 1 : -1);
            SqrtRational f1 = ladder_factor(s1, m1, dir);
            if (!f1.is_zero()) m(basis.index_of(m1 + step, m2), idx) = f1;
            SqrtRational f2 = ladder_factor(s2, m2, dir);
            if (!f2.is_zero()) m(basis.index_of(m1, m2 + step), idx) = f2;
        }
        return m;
    };

    switch (which) {
        case TotalKind::S3: {
            SqrtSumMatrix m(n, n);
            for (int idx = 0; idx < n; ++idx) m(idx, idx) = Rational(to_rational(basis.total_m(idx)));
            return {s1, s2, which, std::move(m)};
        }
        case TotalKind::Plus:
            return {s1, s2, which, ladder(Ladder::plus)};
        case TotalKind::Minus:
            return {s1, s2, which, ladder(Ladder::minus)};
        case TotalKind::Squared: {
            SqrtSumMatrix sp = ladder(Ladder::plus);
            SqrtSumMatrix sm = ladder(Ladder::minus);
            SqrtSumMatrix s3 = total_operator(s1, s2, TotalKind::S3).matrix;
            return {s1, s2, which, sp * sm - s3 + s3 * s3};
        }
    }
    throw std::domain_error("total_operator: unknown kind");
}

/// The other route to the total S^2: the tensor expansion
/// S^2(1) (x) 1 + 1 (x) S^2(2) + 2 S3 (x) S3 + S+ (x) S- + S- (x) S+
/// (the S1/S2 cross terms rewritten through the ladder operators to stay
/// real). Must agree exactly with total_operator(..., Squared).
inline SqrtSumMatrix total_spin_squared_tensor(const HalfInt& s1, const HalfInt& s2) {
    SpinRep r1 = build_rep(s1);
    SpinRep r2 = build_rep(s2);
    SqrtSumMatrix id1 = SqrtSumMatrix::identity(r1.dim);
    SqrtSumMatrix id2 = SqrtSumMatrix::identity(r2.dim);
    SqrtSumMatrix cross = kron(s3_matrix(r1), s3_matrix(r2));
    return kron(casimir(r1), id2) + kron(id1, casimir(r2)) + (SqrtSum(Rational(2)) * cross) +
           kron(splus_matrix(r1), sminus_matrix(r2)) + kron(sminus_matrix(r1), splus_matrix(r2));
}

/// One term of a coupled ket expanded over the product basis.
struct CGTerm {
    HalfInt m1, m2;
    SqrtRational coeff;

    friend bool operator==(const CGTerm&, const CGTerm&) = default;
};

/// A coupled ket |s m> as a sparse unit vector over the product basis;
/// terms are m1-descending and hold only nonzero coefficients.
struct CGState {
    HalfInt s, m;
    std::vector<CGTerm> terms;
};

/// The m = s member of the spin-s multiplet inside s1 (x) s2: the unique
/// unit vector with S3 eigenvalue s that total S+ annihilates, its
/// highest-m1 coefficient positive (Condon-Shortley).
///
/// Annihilation by S+ forces the two-term recurrence
///   c_{m1+1} = -c_{m1} * b+^(1)(m1) / b+^(2)(s - m1 - 1),
/// so every coefficient is a single radical and no Gram-Schmidt against the
/// higher-s top states is needed; orthogonality comes for free.
inline CGState highest_weight_state(const HalfInt& s1, const HalfInt& s2, const HalfInt& s) {
    if (s1 < HalfInt(0) || s2 < HalfInt(0)) throw std::domain_error("spins must be nonnegative");
    if (s < abs(s1 - s2) || s1 + s2 < s) {
        throw std::domain_error("total spin s = " + s.to_string() + " outside [" + abs(s1 - s2).to_string() +
                                ", " + (s1 + s2).to_string() + "]");
    }
    if ((s1.twice() + s2.twice() - s.twice()) % 2 != 0) {
        throw std::domain_error("total spin s = " + s.to_string() + " has wrong parity for s1 + s2");
    }

    std::vector<std::pair<HalfInt, SqrtRational>> coeffs;  // (m1, c), m1 ascending
    HalfInt lo = max(-s1, s - s2);
    coeffs.emplace_back(lo, SqrtRational::one());
    for (HalfInt m1 = lo; m1 < s1; ++m1) {
        SqrtRational next = -(coeffs.back().second * ladder_factor(s1, m1, Ladder::plus) /
                              ladder_factor(s2, s - m1 - HalfInt(1), Ladder::plus));
        coeffs.emplace_back(m1 + HalfInt(1), next);
    }

    bool flip = coeffs.back().second.sign() < 0;
    Rational norm2 = 0;
    for (const auto& [m1, c] : coeffs) norm2 += c.square();
    SqrtRational norm = SqrtRational::sqrt_of(norm2);

    CGState out{s, s, {}};
    out.terms.reserve(coeffs.size());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        SqrtRational c = it->second / norm;
        out.terms.push_back({it->first, s - it->first, flip ? -c : c});
    }
    return out;
}

/// One rung down: applies total S- and divides by the ladder factor of the
/// coupled multiplet. Every ket collects at most two contributions and they
/// are always commensurate; an IncommensurateAdd escaping here is an
/// internal fault.
inline CGState lower_state(const HalfInt& s1, const HalfInt& s2, const CGState& state) {
    std::map<std::pair<HalfInt, HalfInt>, SqrtRational> acc;
    for (const CGTerm& t : state.terms) {
        SqrtRational down1 = t.coeff * ladder_factor(s1, t.m1, Ladder::minus);
        if (!down1.is_zero()) {
            auto key = std::make_pair(t.m1 - HalfInt(1), t.m2);
            acc[key] = acc[key] + down1;
        }
        SqrtRational down2 = t.coeff * ladder_factor(s2, t.m2, Ladder::minus);
        if (!down2.is_zero()) {
            auto key = std::make_pair(t.m1, t.m2 - HalfInt(1));
            acc[key] = acc[key] + down2;
        }
    }

    SqrtRational divisor = ladder_factor(state.s, state.m, Ladder::minus);
    CGState out{state.s, state.m - HalfInt(1), {}};
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second.is_zero()) continue;  // genuine zeros happen mid-multiplet
        out.terms.push_back({it->first.first, it->first.second, it->second / divisor});
    }
    return out;
}

/// The complete Clebsch-Gordan table for a spin pair, built by descending
/// each multiplet from its highest-weight state. Blocks are s-descending,
/// states m-descending within a block.
class CGTable {
  public:
    struct Block {
        HalfInt s;
        std::vector<CGState> states;
    };

    CGTable(HalfInt s1, HalfInt s2) : s1_(std::move(s1)), s2_(std::move(s2)) {
        for (const HalfInt& s : decompose(s1_, s2_)) {
            Block block{s, {}};
            block.states.push_back(highest_weight_state(s1_, s2_, s));
            for (HalfInt m = s; -s < m; --m) {
                block.states.push_back(lower_state(s1_, s2_, block.states.back()));
            }
            blocks_.push_back(std::move(block));
        }
    }

    const HalfInt& s1() const { return s1_; }
    const HalfInt& s2() const { return s2_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    const Block& block(const HalfInt& s) const {
        for (const Block& b : blocks_) {
            if (b.s == s) return b;
        }
        throw std::domain_error("no spin-" + s.to_string() + " block in " + s1_.to_string() + " (x) " +
                                s2_.to_string());
    }

    const CGState& state(const HalfInt& s, const HalfInt& m) const {
        const Block& b = block(s);
        Int steps = s.twice() - m.twice();
        if (steps < 0 || steps % 2 != 0 || m < -s) {
            throw std::domain_error("no state m = " + m.to_string() + " in the spin-" + s.to_string() + " block");
        }
        return b.states[(steps / 2).convert_to<size_t>()];
    }

    /// The coefficient <s1 m1; s2 m2 | s m>; exact zero when m1 + m2 != m
    /// or the ket does not appear in the expansion.
    SqrtRational coefficient(const HalfInt& s, const HalfInt& m, const HalfInt& m1, const HalfInt& m2) const {
        UncoupledBasis basis(s1_, s2_);
        basis.index_of(m1, m2);  // range/parity validation
        const CGState& st = state(s, m);
        if (m1 + m2 != m) return SqrtRational::zero();
        for (const CGTerm& t : st.terms) {
            if (t.m1 == m1 && t.m2 == m2) return t.coeff;
        }
        return SqrtRational::zero();
    }

  private:
    HalfInt s1_;
    HalfInt s2_;
    std::vector<Block> blocks_;
};

inline CGTable cg_table(const HalfInt& s1, const HalfInt& s2) { return CGTable(s1, s2); }

inline SqrtRational cg(const HalfInt& s1, const HalfInt& s2, const HalfInt& s, const HalfInt& m,
                       const HalfInt& m1, const HalfInt& m2) {
    return CGTable(s1, s2).coefficient(s, m, m1, m2);
}

enum class HalfConvention { paper, table };

/// Coupling an arbitrary spin s1 with s2 = 1/2 has the closed form
///   |s m> = A |s1 (m-1/2)>|up>  +/-  B |s1 (m+1/2)>|down>,
///   A = sqrt((s1 ± m + 1/2)/(2 s1 + 1)), B = sqrt((s1 ∓ m + 1/2)/(2 s1 + 1))
/// for s = s1 ± 1/2. Two sign conventions are in circulation: `paper` keeps
/// A positive on both multiplets, which breaks the highest-m1-positive rule
/// on s = s1 - 1/2; `table` negates that multiplet so the result matches
/// cg_table entry for entry.
struct ClosedFormHalf {
    CGTerm spin_up;    // the |1/2 +1/2> side
    CGTerm spin_down;  // the |1/2 -1/2> side
};

inline ClosedFormHalf cg_closed_form_half(const HalfInt& s1, const HalfInt& s, const HalfInt& m,
                                          HalfConvention convention) {
    if (s1 < HalfInt(0)) throw std::domain_error("s1 must be nonnegative");
    const HalfInt half = HalfInt::half();
    const bool upper = s == s1 + half;
    if (!upper && !(s1 >= half && s == s1 - half)) {
        throw std::domain_error("s must be s1 +/- 1/2, got s = " + s.to_string());
    }
    if (abs(m) > s) throw std::domain_error("|m| exceeds s");
    if ((s.twice() - m.twice()) % 2 != 0) throw std::domain_error("m has wrong parity for s");

    Rational den = Rational(s1.twice()) + 1;  // 2 s1 + 1
    Rational splus_m = to_rational(s1) + to_rational(m) + make_rational(1, 2);
    Rational sminus_m = to_rational(s1) - to_rational(m) + make_rational(1, 2);

    SqrtRational a = SqrtRational::sqrt_of((upper ? splus_m : sminus_m) / den);
    SqrtRational b = SqrtRational::sqrt_of((upper ? sminus_m : splus_m) / den);
    if (!upper) {
        b = -b;
        if (convention == HalfConvention::table) {
            a = -a;
            b = -b;
        }
    }
    return {{m - half, half, a}, {m + half, -half, b}};
}

}  // namespace spinrep
