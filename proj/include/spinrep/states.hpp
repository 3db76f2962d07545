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

#include "spinrep/coupling.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace spinrep {

/// Enumeration of the coupled |s m> basis of a spin pair: blocks are
/// s-descending from s1+s2 down to |s1-s2|, m descending inside each block.
class CoupledBasis {
  public:
    CoupledBasis(const HalfInt& s1, const HalfInt& s2) : spins_(decompose(s1, s2)) {
        size_ = 0;
        for (const HalfInt& s : spins_) size_ += multiplet_dim_i(s);
    }

    int size() const { return size_; }

    int index_of(const HalfInt& s, const HalfInt& m) const {
        int offset = 0;
        for (const HalfInt& block : spins_) {
            if (block == s) {
                Int steps = s.twice() - m.twice();
                if (steps < 0 || steps % 2 != 0 || m < -s) {
                    throw std::domain_error("m = " + m.to_string() + " not in the spin-" + s.to_string() +
                                            " multiplet");
                }
                return offset + (steps / 2).convert_to<int>();
            }
            offset += multiplet_dim_i(block);
        }
        throw std::domain_error("total spin s = " + s.to_string() + " does not occur in this pair");
    }

    std::pair<HalfInt, HalfInt> at(int index) const {
        if (index < 0 || index >= size_) throw std::domain_error("coupled basis index out of range");
        for (const HalfInt& s : spins_) {
            int dim = multiplet_dim_i(s);
            if (index < dim) return {s, s - HalfInt(index)};
            index -= dim;
        }
        throw std::domain_error("coupled basis index out of range");
    }

  private:
    std::vector<HalfInt> spins_;
    int size_ = 0;
};

enum class BasisKind { coupled, uncoupled };

/// An exact two-particle state: real SqrtRational amplitudes over either
/// the coupled |s m> or uncoupled |s1 m1>|s2 m2> enumeration, normalized so
/// that the squared amplitudes sum to exactly 1.
class StateVector {
  public:
    static StateVector make(BasisKind kind, HalfInt s1, HalfInt s2, std::vector<SqrtRational> amplitudes) {
        StateVector v(kind, std::move(s1), std::move(s2), std::move(amplitudes));
        size_t expected = kind == BasisKind::coupled
                              ? static_cast<size_t>(CoupledBasis(v.s1_, v.s2_).size())
                              : static_cast<size_t>(UncoupledBasis(v.s1_, v.s2_).size());
        if (v.amplitudes_.size() != expected) {
            throw std::domain_error("amplitude count does not match the basis size");
        }
        Rational norm2 = 0;
        for (const SqrtRational& a : v.amplitudes_) norm2 += a.square();
        if (norm2 != 1) throw std::domain_error("state is not normalized: |v|^2 = " + to_string(norm2));
        return v;
    }

    static StateVector coupled_basis_state(const HalfInt& s1, const HalfInt& s2, const HalfInt& s,
                                           const HalfInt& m) {
        CoupledBasis basis(s1, s2);
        std::vector<SqrtRational> amps(basis.size());
        amps[basis.index_of(s, m)] = SqrtRational::one();
        return StateVector(BasisKind::coupled, s1, s2, std::move(amps));
    }

    static StateVector uncoupled_basis_state(const HalfInt& s1, const HalfInt& s2, const HalfInt& m1,
                                             const HalfInt& m2) {
        UncoupledBasis basis(s1, s2);
        std::vector<SqrtRational> amps(basis.size());
        amps[basis.index_of(m1, m2)] = SqrtRational::one();
        return StateVector(BasisKind::uncoupled, s1, s2, std::move(amps));
    }

    BasisKind kind() const { return kind_; }
    const HalfInt& s1() const { return s1_; }
    const HalfInt& s2() const { return s2_; }
    const std::vector<SqrtRational>& amplitudes() const { return amplitudes_; }

    friend bool operator==(const StateVector&, const StateVector&) = default;

  private:
    StateVector(BasisKind kind, HalfInt s1, HalfInt s2, std::vector<SqrtRational> amplitudes)
        : kind_(kind), s1_(std::move(s1)), s2_(std::move(s2)), amplitudes_(std::move(amplitudes)) {}

    friend StateVector to_uncoupled(const StateVector&, const CGTable&);
    friend StateVector to_coupled(const StateVector&, const CGTable&);
    friend StateVector collapse(const StateVector&, int, const HalfInt&, const CGTable&);

    BasisKind kind_;
    HalfInt s1_;
    HalfInt s2_;
    std::vector<SqrtRational> amplitudes_;
};

namespace detail {

inline void require_same_pair(const StateVector& v, const CGTable& t) {
    if (v.s1() != t.s1() || v.s2() != t.s2()) {
        throw std::domain_error("state and table describe different spin pairs");
    }
}

// The scalar type is closed under the basis changes the engine needs
// (basis states map to single radicals per ket), but a general
// superposition can pile incommensurate radicals onto one ket; that is
// outside the single-radical amplitude model and reported as an error.
inline std::vector<SqrtRational> collapse_sums(std::vector<SqrtSum> sums) {
    std::vector<SqrtRational> out;
    out.reserve(sums.size());
    for (const SqrtSum& s : sums) out.push_back(s.as_sqrt_rational());
    return out;
}

}  // namespace detail

/// Expands a coupled state over the product basis through the CG table.
inline StateVector to_uncoupled(const StateVector& v, const CGTable& t) {
    detail::require_same_pair(v, t);
    if (v.kind() == BasisKind::uncoupled) return v;
    UncoupledBasis out_basis(v.s1(), v.s2());
    CoupledBasis in_basis(v.s1(), v.s2());
    std::vector<SqrtSum> acc(out_basis.size());
    for (const auto& block : t.blocks()) {
        for (const CGState& state : block.states) {
            const SqrtRational& amp = v.amplitudes()[in_basis.index_of(state.s, state.m)];
            if (amp.is_zero()) continue;
            for (const CGTerm& term : state.terms) {
                acc[out_basis.index_of(term.m1, term.m2)] += SqrtSum(amp) * SqrtSum(term.coeff);
            }
        }
    }
    return StateVector(BasisKind::uncoupled, v.s1(), v.s2(), detail::collapse_sums(std::move(acc)));
}

/// Inverse basis change; the CG matrix is real orthogonal, so the inverse
/// is its transpose.
inline StateVector to_coupled(const StateVector& v, const CGTable& t) {
    detail::require_same_pair(v, t);
    if (v.kind() == BasisKind::coupled) return v;
    UncoupledBasis in_basis(v.s1(), v.s2());
    CoupledBasis out_basis(v.s1(), v.s2());
    std::vector<SqrtSum> acc(out_basis.size());
    for (const auto& block : t.blocks()) {
        for (const CGState& state : block.states) {
            SqrtSum dot;
            for (const CGTerm& term : state.terms) {
                const SqrtRational& amp = v.amplitudes()[in_basis.index_of(term.m1, term.m2)];
                if (!amp.is_zero()) dot += SqrtSum(amp) * SqrtSum(term.coeff);
            }
            acc[out_basis.index_of(state.s, state.m)] = std::move(dot);
        }
    }
    return StateVector(BasisKind::coupled, v.s1(), v.s2(), detail::collapse_sums(std::move(acc)));
}

/// Outcome distribution of measuring S3 on one particle: p(m) is the sum of
/// squared amplitudes over the product kets with that particle at m. Exact
/// rationals; only nonzero outcomes are listed, m descending.
inline std::vector<std::pair<HalfInt, Rational>> measure_probabilities(const StateVector& v, int particle,
                                                                       const CGTable& t) {
    if (particle != 1 && particle != 2) throw std::domain_error("particle index must be 1 or 2");
    StateVector u = to_uncoupled(v, t);
    UncoupledBasis basis(u.s1(), u.s2());
    const HalfInt& s = particle == 1 ? u.s1() : u.s2();
    std::vector<std::pair<HalfInt, Rational>> out;
    for (HalfInt m = s; -s <= m; --m) {
        Rational p = 0;
        for (int i = 0; i < basis.size(); ++i) {
            auto [m1, m2] = basis.at(i);
            if ((particle == 1 ? m1 : m2) == m) p += u.amplitudes()[i].square();
        }
        if (p != 0) out.emplace_back(m, p);
    }
    return out;
}

/// Projects onto the measured particle's m-eigenspace and renormalizes by
/// the single radical sqrt(p). The global sign is kept as computed.
inline StateVector collapse(const StateVector& v, int particle, const HalfInt& m, const CGTable& t) {
    if (particle != 1 && particle != 2) throw std::domain_error("particle index must be 1 or 2");
    StateVector u = to_uncoupled(v, t);
    UncoupledBasis basis(u.s1(), u.s2());
    Rational p = 0;
    for (int i = 0; i < basis.size(); ++i) {
        auto [m1, m2] = basis.at(i);
        if ((particle == 1 ? m1 : m2) == m) p += u.amplitudes()[i].square();
    }
    if (p == 0) {
        throw std::domain_error("impossible outcome: m = " + m.to_string() + " has probability zero");
    }
    SqrtRational norm = SqrtRational::sqrt_of(p);
    std::vector<SqrtRational> amps(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        auto [m1, m2] = basis.at(i);
        if ((particle == 1 ? m1 : m2) == m) amps[i] = u.amplitudes()[i] / norm;
    }
    return StateVector(BasisKind::uncoupled, u.s1(), u.s2(), std::move(amps));
}

/// Deterministic sampling stream: a seeded mt19937_64 with doubles taken as
/// the top 53 bits over 2^53, so identical seeds reproduce identical
/// outcome sequences on every platform.
class MeasurementRng {
  public:
    explicit MeasurementRng(std::uint64_t seed) : engine_(seed) {}
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

/// Draws one S3 outcome with the exact probabilities (converted to floats)
/// and returns it with the collapsed state.
inline std::pair<HalfInt, StateVector> sample(const StateVector& v, int particle, const CGTable& t,
                                              MeasurementRng& rng) {
    auto probs = measure_probabilities(v, particle, t);
    double u = rng.next_unit();
    double cumulative = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
        cumulative += to_double(probs[i].second);
        if (u < cumulative || i + 1 == probs.size()) {
            return {probs[i].first, collapse(v, particle, probs[i].first, t)};
        }
    }
    throw std::logic_error("empty outcome distribution");  // unreachable for normalized states
}

inline std::pair<HalfInt, StateVector> sample(const StateVector& v, int particle, const CGTable& t,
                                              std::uint64_t seed) {
    MeasurementRng rng(seed);
    return sample(v, particle, t, rng);
}

/// A two-particle state is entangled iff its coefficient matrix over the
/// product basis has rank > 1, i.e. some 2x2 minor is nonzero (evaluated
/// exactly).
inline bool is_entangled(const StateVector& v, const CGTable& t) {
    StateVector u = to_uncoupled(v, t);
    UncoupledBasis basis(u.s1(), u.s2());
    const int rows = basis.dim1();
    const int cols = basis.dim2();
    auto amp = [&](int r, int c) { return SqrtSum(u.amplitudes()[r * cols + c]); };
    for (int r1 = 0; r1 < rows; ++r1) {
        for (int r2 = r1 + 1; r2 < rows; ++r2) {
            for (int c1 = 0; c1 < cols; ++c1) {
                for (int c2 = c1 + 1; c2 < cols; ++c2) {
                    SqrtSum minor = amp(r1, c1) * amp(r2, c2) - amp(r1, c2) * amp(r2, c1);
                    if (!minor.is_zero()) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace spinrep
