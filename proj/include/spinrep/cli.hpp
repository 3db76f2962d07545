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

#include "spinrep/json_io.hpp"
#include "spinrep/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace spinrep::cli {

/// Parses a spin literal: `-? digits ( "/" "2" )?`. "3/2", "2", "-1/2" are
/// valid; "1.5" and "3/4" are not.
inline HalfInt parse_spin(const std::string& text) {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw std::invalid_argument("not a spin literal: '" + text + "'");
    Int digits(text.substr(digits_start, pos - digits_start));
    Int twice;
    if (pos == text.size()) {
        twice = 2 * digits;
    } else if (text.compare(pos, std::string::npos, "/2") == 0) {
        twice = digits;
    } else {
        throw std::invalid_argument("not a spin literal: '" + text + "' (expected N or N/2)");
    }
    return HalfInt::from_twice(negative ? Int(-twice) : twice);
}

namespace detail {

inline std::string coupled_ket(const HalfInt& s, const HalfInt& m) {
    return "|" + s.to_string() + " " + m.to_string() + ">";
}

inline std::string uncoupled_ket(const HalfInt& m1, const HalfInt& m2) {
    return "|" + m1.to_string() + ", " + m2.to_string() + ">";
}

/// "c1 |ket1> + c2 |ket2>" with signs folded into the joins.
inline std::string term_sum(const std::vector<std::pair<SqrtRational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, ket] : terms) {
        SqrtRational c = coeff;
        if (!first) {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (c == SqrtRational::one()) {
            out += ket;
        } else if (-c == SqrtRational::one()) {
            out += "-" + ket;
        } else {
            out += c.to_string() + " " + ket;
        }
    }
    return out;
}

inline std::string state_text(const StateVector& v) {
    std::vector<std::pair<SqrtRational, std::string>> terms;
    if (v.kind() == BasisKind::uncoupled) {
        UncoupledBasis basis(v.s1(), v.s2());
        for (int i = 0; i < basis.size(); ++i) {
            if (v.amplitudes()[i].is_zero()) continue;
            auto [m1, m2] = basis.at(i);
            terms.emplace_back(v.amplitudes()[i], uncoupled_ket(m1, m2));
        }
    } else {
        CoupledBasis basis(v.s1(), v.s2());
        for (int i = 0; i < basis.size(); ++i) {
            if (v.amplitudes()[i].is_zero()) continue;
            auto [s, m] = basis.at(i);
            terms.emplace_back(v.amplitudes()[i], coupled_ket(s, m));
        }
    }
    return term_sum(terms);
}

inline std::string run_rep(const std::string& spin, const std::string& format) {
    SpinRep rep = build_rep(parse_spin(spin));
    if (format == "json") return json_of(rep).dump(2) + "\n";
    std::ostringstream out;
    out << "spin s = " << rep.s.to_string() << ", dim = " << rep.dim << "\n";
    out << "S3 diagonal:";
    for (const HalfInt& m : rep.s3_diag) out << " " << m.to_string();
    out << "\nS+ superdiagonal:";
    if (rep.plus_factors.empty()) out << " (none)";
    for (const SqrtRational& b : rep.plus_factors) out << " " << b.to_string();
    out << "\n";
    return out.str();
}

inline std::string run_decompose(const std::vector<std::string>& spin_texts, const std::string& format) {
    std::vector<HalfInt> spins;
    spins.reserve(spin_texts.size());
    for (const std::string& t : spin_texts) spins.push_back(parse_spin(t));
    auto terms = decompose_many(spins);

    if (format == "json") {
        ordered_json spins_json = ordered_json::array();
        for (const HalfInt& s : spins) spins_json.push_back(s.to_string());
        ordered_json terms_json = ordered_json::array();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            terms_json.push_back(
                ordered_json{{"s", it->first.to_string()}, {"multiplicity", it->second.str()}});
        }
        return ordered_json{{"spins", std::move(spins_json)}, {"terms", std::move(terms_json)}}.dump(2) +
               "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "s,multiplicity\n";
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            out << it->first.to_string() << ',' << it->second << '\n';
        }
        return out.str();
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) out << ' ';
        first = false;
        out << it->first.to_string() << ':' << it->second;
    }
    out << '\n';
    return out.str();
}

inline std::string run_cg_table(const CGTable& table, const std::string& format) {
    if (format == "json") return json_of(table).dump(2) + "\n";
    if (format == "csv") return csv_of(table);
    std::ostringstream out;
    out << "s1 = " << table.s1().to_string() << ", s2 = " << table.s2().to_string() << "\n";
    for (const auto& block : table.blocks()) {
        for (const CGState& state : block.states) {
            std::vector<std::pair<SqrtRational, std::string>> terms;
            for (const CGTerm& t : state.terms) terms.emplace_back(t.coeff, uncoupled_ket(t.m1, t.m2));
            out << coupled_ket(state.s, state.m) << " = " << term_sum(terms) << "\n";
        }
    }
    return out.str();
}

inline std::string run_cg_closed_form(const HalfInt& s1, HalfConvention convention,
                                      const std::string& format) {
    const HalfInt half = HalfInt::half();
    std::vector<CGState> states;
    for (const HalfInt& s : decompose(s1, half)) {
        for (HalfInt m = s; -s <= m; --m) {
            ClosedFormHalf cf = cg_closed_form_half(s1, s, m, convention);
            CGState state{s, m, {}};
            for (const CGTerm* t : {&cf.spin_down, &cf.spin_up}) {
                if (!t->coeff.is_zero()) state.terms.push_back(*t);
            }
            std::sort(state.terms.begin(), state.terms.end(),
                      [](const CGTerm& a, const CGTerm& b) { return b.m1 < a.m1; });
            states.push_back(std::move(state));
        }
    }

    if (format == "json") {
        ordered_json states_json = ordered_json::array();
        for (const CGState& state : states) {
            ordered_json terms = ordered_json::array();
            for (const CGTerm& t : state.terms) {
                terms.push_back(ordered_json{
                    {"m1", t.m1.to_string()}, {"m2", t.m2.to_string()}, {"coeff", json_of(t.coeff)}});
            }
            states_json.push_back(ordered_json{
                {"s", state.s.to_string()}, {"m", state.m.to_string()}, {"terms", std::move(terms)}});
        }
        return ordered_json{{"s1", s1.to_string()},
                            {"s2", "1/2"},
                            {"convention", convention == HalfConvention::paper ? "paper" : "table"},
                            {"states", std::move(states_json)}}
                   .dump(2) +
               "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "s1,s2,s,m,m1,m2,sign,num,den,radicand\n";
        for (const CGState& state : states) {
            for (const CGTerm& t : state.terms) {
                out << s1.to_string() << ",1/2," << state.s.to_string() << ',' << state.m.to_string() << ','
                    << t.m1.to_string() << ',' << t.m2.to_string() << ',' << t.coeff.sign() << ','
                    << numerator(t.coeff.coeff()) << ',' << denominator(t.coeff.coeff()) << ','
                    << t.coeff.radicand() << '\n';
            }
        }
        return out.str();
    }
    std::ostringstream out;
    out << "s1 = " << s1.to_string() << ", s2 = 1/2, closed form ("
        << (convention == HalfConvention::paper ? "paper" : "table") << " convention)\n";
    for (const CGState& state : states) {
        std::vector<std::pair<SqrtRational, std::string>> terms;
        for (const CGTerm& t : state.terms) terms.emplace_back(t.coeff, uncoupled_ket(t.m1, t.m2));
        out << coupled_ket(state.s, state.m) << " = " << term_sum(terms) << "\n";
    }
    return out.str();
}

inline std::string run_measure(const HalfInt& s1, const HalfInt& s2, const HalfInt& s, const HalfInt& m,
                               int particle, std::uint64_t seed, int shots, const std::string& format) {
    CGTable table(s1, s2);
    StateVector state = StateVector::coupled_basis_state(s1, s2, s, m);
    auto probs = measure_probabilities(state, particle, table);

    std::vector<std::pair<HalfInt, StateVector>> collapsed;
    for (const auto& [mv, p] : probs) collapsed.emplace_back(mv, collapse(state, particle, mv, table));

    std::vector<std::pair<HalfInt, long long>> counts;
    if (shots > 0) {
        for (const auto& [mv, p] : probs) counts.emplace_back(mv, 0);
        MeasurementRng rng(seed);
        for (int shot = 0; shot < shots; ++shot) {
            HalfInt outcome = sample(state, particle, table, rng).first;
            for (auto& [mv, count] : counts) {
                if (mv == outcome) ++count;
            }
        }
    }

    if (format == "json") {
        ordered_json probs_json = ordered_json::array();
        for (const auto& [mv, p] : probs) {
            probs_json.push_back(ordered_json{
                {"m", mv.to_string()}, {"num", numerator(p).str()}, {"den", denominator(p).str()}});
        }
        ordered_json collapsed_json = ordered_json::array();
        for (const auto& [mv, post] : collapsed) {
            collapsed_json.push_back(ordered_json{{"m", mv.to_string()}, {"state", json_of(post)}});
        }
        ordered_json doc{{"s1", s1.to_string()},     {"s2", s2.to_string()},
                         {"s", s.to_string()},       {"m", m.to_string()},
                         {"particle", particle},     {"probabilities", std::move(probs_json)},
                         {"collapsed", std::move(collapsed_json)}};
        if (shots > 0) {
            doc["shots"] = shots;
            doc["seed"] = seed;
            ordered_json counts_json = ordered_json::array();
            for (const auto& [mv, count] : counts) {
                counts_json.push_back(ordered_json{{"m", mv.to_string()}, {"count", count}});
            }
            doc["counts"] = std::move(counts_json);
        }
        return doc.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "m,num,den,count\n";
        for (size_t i = 0; i < probs.size(); ++i) {
            long long count = shots > 0 ? counts[i].second : 0;
            out << probs[i].first.to_string() << ',' << numerator(probs[i].second) << ','
                << denominator(probs[i].second) << ',' << count << '\n';
        }
        return out.str();
    }
    std::ostringstream out;
    out << "measuring S3 of particle " << particle << " on " << coupled_ket(s, m) << " of "
        << s1.to_string() << " (x) " << s2.to_string() << "\n";
    for (size_t i = 0; i < probs.size(); ++i) {
        out << "P(m = " << probs[i].first.to_string() << ") = " << to_string(probs[i].second)
            << ", collapsed state: " << state_text(collapsed[i].second) << "\n";
    }
    if (shots > 0) {
        out << "shots = " << shots << ", seed = " << seed << "\n";
        for (const auto& [mv, count] : counts) {
            out << "observed m = " << mv.to_string() << ": " << count << " ("
                << static_cast<double>(count) / shots << ")\n";
        }
    }
    return out.str();
}

inline std::string run_verify(const VerifyOptions& options, const std::string& format, int& exit_code) {
    VerifyReport report = run_verification(options);
    exit_code = report.all_pass() ? 0 : 1;
    if (format == "json") {
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks) checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}});
        ordered_json failures = ordered_json::array();
        for (const auto& name : report.failures()) failures.push_back(name);
        return ordered_json{{"max_spin", options.max_spin.to_string()},
                            {"tol", options.tol},
                            {"checks", std::move(checks)},
                            {"failures", std::move(failures)},
                            {"all_pass", report.all_pass()}}
                   .dump(2) +
               "\n";
    }
    std::ostringstream out;
    size_t failed = 0;
    for (const auto& c : report.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
        if (!c.pass) ++failed;
    }
    if (failed == 0) {
        out << "all " << report.checks.size() << " checks passed\n";
    } else {
        out << failed << " of " << report.checks.size() << " checks FAILED\n";
    }
    return out.str();
}

}  // namespace detail

/// Dispatches the CLI: exit 0 on success, 1 on verification failure, 2 on
/// usage errors. `args` is argv without the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact SU(2) spin representations, Clebsch-Gordan tables, and measurement"};
    app.require_subcommand(1);

    std::string output_file;
    app.add_option("--output", output_file, "write to FILE instead of standard output");

    auto add_format = [](CLI::App* cmd, std::string& var, std::vector<std::string> allowed) {
        cmd->add_option("--format", var, "output format")
            ->default_val("text")
            ->check(CLI::IsMember(allowed));
    };

    CLI::App* rep_cmd = app.add_subcommand("rep", "print the spin-s representation matrices data");
    std::string rep_spin;
    std::string rep_format;
    rep_cmd->add_option("--s", rep_spin, "spin, e.g. 2 or 3/2")->required();
    add_format(rep_cmd, rep_format, {"text", "json"});

    CLI::App* dec_cmd = app.add_subcommand("decompose", "decompose a tensor product of spins");
    std::vector<std::string> dec_spins;
    std::string dec_format;
    dec_cmd->add_option("spins", dec_spins, "two or more spins")->required();
    add_format(dec_cmd, dec_format, {"text", "json", "csv"});

    CLI::App* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan coefficients of a spin pair");
    std::string cg_s1, cg_s2, cg_format;
    bool cg_closed = false;
    std::string cg_convention = "table";
    cg_cmd->add_option("--s1", cg_s1, "first spin")->required();
    cg_cmd->add_option("--s2", cg_s2, "second spin")->required();
    cg_cmd->add_flag("--closed-form", cg_closed, "use the closed form (s2 must be 1/2)");
    cg_cmd->add_option("--convention", cg_convention, "closed-form sign convention")
        ->check(CLI::IsMember({"paper", "table"}));
    add_format(cg_cmd, cg_format, {"text", "json", "csv"});

    CLI::App* measure_cmd = app.add_subcommand("measure", "single-particle S3 measurement on |s m>");
    std::string me_s1, me_s2, me_s, me_m, me_format;
    int me_particle = 1;
    std::uint64_t me_seed = 0;
    int me_shots = 0;
    measure_cmd->add_option("--s1", me_s1, "first spin")->required();
    measure_cmd->add_option("--s2", me_s2, "second spin")->required();
    measure_cmd->add_option("--s", me_s, "total spin of the prepared state")->required();
    measure_cmd->add_option("--m", me_m, "magnetic number of the prepared state")->required();
    measure_cmd->add_option("--particle", me_particle, "particle to measure (1 or 2)")
        ->required()
        ->check(CLI::Range(1, 2));
    measure_cmd->add_option("--seed", me_seed, "sampling seed");
    measure_cmd->add_option("--shots", me_shots, "number of samples to draw")->check(CLI::NonNegativeNumber);
    add_format(measure_cmd, me_format, {"text", "json", "csv"});

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the structural verification suites");
    std::string ve_max_spin = "4";
    double ve_tol = 1e-9;
    std::string ve_format;
    verify_cmd->add_option("--max-spin", ve_max_spin, "largest spin to verify");
    verify_cmd->add_option("--tol", ve_tol, "float-layer tolerance")->check(CLI::PositiveNumber);
    add_format(verify_cmd, ve_format, {"text", "json"});

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string output;
        int exit_code = 0;
        if (rep_cmd->parsed()) {
            output = detail::run_rep(rep_spin, rep_format);
        } else if (dec_cmd->parsed()) {
            output = detail::run_decompose(dec_spins, dec_format);
        } else if (cg_cmd->parsed()) {
            HalfInt s1 = parse_spin(cg_s1);
            HalfInt s2 = parse_spin(cg_s2);
            if (cg_closed) {
                if (s2 != HalfInt::half()) {
                    throw std::invalid_argument("--closed-form requires --s2 1/2");
                }
                HalfConvention convention =
                    cg_convention == "paper" ? HalfConvention::paper : HalfConvention::table;
                output = detail::run_cg_closed_form(s1, convention, cg_format);
            } else {
                output = detail::run_cg_table(CGTable(s1, s2), cg_format);
            }
        } else if (measure_cmd->parsed()) {
            output = detail::run_measure(parse_spin(me_s1), parse_spin(me_s2), parse_spin(me_s),
                                         parse_spin(me_m), me_particle, me_seed, me_shots, me_format);
        } else if (verify_cmd->parsed()) {
            VerifyOptions options;
            options.max_spin = parse_spin(ve_max_spin);
            options.tol = ve_tol;
            output = detail::run_verify(options, ve_format, exit_code);
        }

        if (!output_file.empty()) {
            std::ofstream file(output_file, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file: " + output_file);
            file << output;
        } else {
            out << output;
        }
        return exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace spinrep::cli
