/*
 * Copyright 2026 The distext Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Constructive two-color extension for four blanks W satisfying the
// divisibility condition.  Pick the reflection centre w0 in W, enumerate the
// eight fillings of W \ {w0}, discard the (at most two) forbidden ones, and try
// to complete a surviving filling at w0.  When no survivor completes, the
// red/blue reflections of a survivor c1 compose to a rotation sigma; a second
// filling c2 is obtained by flipping W' and tried as well.  The exhaustive
// fallback at the end is a falsification detector: it never fires when the
// preconditions hold.

#ifndef DISTEXT_EXTENDER_HPP
#define DISTEXT_EXTENDER_HPP

#include "distext/circle.hpp"
#include "distext/dihedral.hpp"
#include "distext/error.hpp"
#include "distext/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace distext {

struct ReflectionPair
{
    Symmetry tau_red;
    Symmetry tau_blue;
    /// tau_blue o tau_red.
    Symmetry sigma;
    /// Every reflection preserving the red (resp. blue) completion; tau_* is the first.
    std::vector<Symmetry> red_reflections;
    std::vector<Symmetry> blue_reflections;
};

struct OrbitStats
{
    /// w0, sigma(w0), sigma^2(w0), ...
    std::vector<int> orbit;
    int red_count = 0;
    int blue_count = 0;
    /// Orbit indices left uncolored by c1 (just w0).
    std::vector<int> blank_positions;
    /// Orbit indices of points of the original blank set W.
    std::vector<int> w_positions;
};

struct ForbiddenExtension
{
    PartialColoring extension;
    /// The reflection about w0 and/or rotations that the extension permits.
    std::vector<Symmetry> permitted;
};

/// Reflections preserving c, canonical parameter order.
inline std::vector<Symmetry> permitted_reflections(const Coloring& c)
{
    std::vector<Symmetry> out;
    if (auto m = detail::two_color_mask(c.colors())) {
        const int n = c.n();
        const std::uint64_t neg = detail::negate(*m, n);
        for (int b = 0; b < n; ++b)
            if (detail::rotl(neg, b, n) == *m)
                out.push_back(Symmetry::reflection(n, b));
        return out;
    }
    for (int b = 0; b < c.n(); ++b) {
        auto s = Symmetry::reflection(c.n(), b);
        if (preserves(c, s))
            out.push_back(s);
    }
    return out;
}

/// Symmetries among {reflection about w0, rotations 1..n-1} that c1 permits.
inline std::vector<Symmetry> forbidding_symmetries(const PartialColoring& c1, int w0)
{
    std::vector<Symmetry> out;
    const int n = c1.n();
    auto tau0 = reflection_about(n, w0);
    if (permits(c1, tau0))
        out.push_back(tau0);
    for (int k = 1; k < n; ++k) {
        auto s = Symmetry::rotation(n, k);
        if (permits(c1, s))
            out.push_back(s);
    }
    return out;
}

inline bool is_forbidden(const PartialColoring& c1, int w0) { return !forbidding_symmetries(c1, w0).empty(); }

/// Fillings of every blank of c except w0, lexicographic in the colors of the
/// remaining blanks taken in increasing position (color 1 before color 2).
inline std::vector<PartialColoring> extensions_except(const PartialColoring& c, int w0)
{
    if (c.k() != 2)
        throw PreconditionError("constructive extension supports two colors only");
    if (w0 < 0 || w0 >= c.n() || !c.is_blank(w0))
        throw PreconditionError("w0 = " + std::to_string(w0) + " is not a blank");
    std::vector<int> rest;
    for (int w : c.blanks())
        if (w != w0)
            rest.push_back(w);
    if (rest.size() > 20)
        throw BudgetExceeded("too many blanks to enumerate fillings");
    std::vector<PartialColoring> out;
    const std::size_t m = rest.size();
    for (std::uint64_t a = 0; a < (1ULL << m); ++a) {
        auto e = c;
        for (std::size_t j = 0; j < m; ++j)
            e = e.with(rest[j], ((a >> (m - 1 - j)) & 1ULL) ? kBlue : kRed);
        out.push_back(std::move(e));
    }
    return out;
}

/// Every filling of W \ {w0} that permits the reflection about w0 or a rotation.
inline std::vector<ForbiddenExtension> forbidden_extensions(const PartialColoring& c, int w0)
{
    std::vector<ForbiddenExtension> out;
    for (auto& e : extensions_except(c, w0)) {
        auto syms = forbidding_symmetries(e, w0);
        if (!syms.empty())
            out.push_back({std::move(e), std::move(syms)});
    }
    return out;
}

namespace detail {

inline void require_single_blank(const PartialColoring& c1, int w0)
{
    auto b = c1.blanks();
    if (b.size() != 1 || b[0] != w0)
        throw PreconditionError("expected a coloring whose only blank is w0 = " + std::to_string(w0));
}

} // namespace detail

/// Completes c1 at w0 with red and with blue.  Returns none when either
/// completion is distinguishing; otherwise the red/blue reflections and sigma.
inline std::optional<ReflectionPair> generated_translation(const PartialColoring& c1, int w0)
{
    detail::require_single_blank(c1, w0);
    if (c1.k() != 2)
        throw PreconditionError("generated_translation: two colors only");
    const Coloring red = c1.with(w0, kRed).complete();
    const Coloring blue = c1.with(w0, kBlue).complete();
    if (is_distinguishing(red) || is_distinguishing(blue))
        return std::nullopt;
    auto rr = permitted_reflections(red);
    auto br = permitted_reflections(blue);
    if (rr.empty() || br.empty())
        throw ConsistencyError("completion of " + to_string(c1) +
                               " is preserved only by rotations; the filling is forbidden");
    if (rr.front() == br.front())
        throw ConsistencyError("red and blue reflections of " + to_string(c1) +
                               " coincide; the filling permits the reflection about w0");
    auto sigma = compose(br.front(), rr.front());
    if (!sigma.is_rotation() || sigma.is_identity())
        throw ConsistencyError("generated translation is not a non-trivial rotation");
    return ReflectionPair{rr.front(), br.front(), sigma, std::move(rr), std::move(br)};
}

struct PropertyCheck
{
    bool pass = true;
    std::vector<int> witnesses;
};

struct Fact31Report
{
    /// The only blank of c1 must be w0; otherwise these are the extra blanks seen.
    bool precondition_ok = true;
    std::vector<int> precondition_witnesses;
    PropertyCheck f0, f1, f2, f3;

    bool all_pass() const { return precondition_ok && f0.pass && f1.pass && f2.pass && f3.pass; }
};

/// Checks the near color-preservation of sigma on c1 against the pair's reflections.
inline Fact31Report check_fact31(const PartialColoring& c1, const ReflectionPair& pair, int w0)
{
    Fact31Report rep;
    const int n = c1.n();
    const Symmetry& sigma = pair.sigma;
    const Symmetry sigma_inv = inverse(sigma);
    const Symmetry sigma2 = compose(sigma, sigma);
    const int s_fwd = sigma(w0);
    const int s_back = sigma_inv(w0);
    const int t_red = pair.tau_red(w0);
    const int t_blue = pair.tau_blue(w0);

    for (int x : c1.blanks())
        if (x != w0)
            rep.precondition_witnesses.push_back(x);
    if (!rep.precondition_witnesses.empty()) {
        rep.precondition_ok = false;
        return rep;
    }
    auto colored = [&](int x) { return x != w0; };

    // F0
    if (!colored(s_fwd) || c1[s_fwd] != kRed) {
        rep.f0.pass = false;
        rep.f0.witnesses.push_back(s_fwd);
    }
    if (!colored(s_back) || c1[s_back] != kBlue) {
        rep.f0.pass = false;
        rep.f0.witnesses.push_back(s_back);
    }

    // F1: the red -> blue steps of sigma are exactly t_red -> t_blue.
    std::vector<int> red_to_blue, blue_to_red, blue_to_red2;
    for (int x = 0; x < n; ++x) {
        const int y = sigma(x), z = sigma2(x);
        if (colored(x) && colored(y)) {
            if (c1[x] == kRed && c1[y] == kBlue)
                red_to_blue.push_back(x);
            if (c1[x] == kBlue && c1[y] == kRed)
                blue_to_red.push_back(x);
        }
        if (colored(x) && colored(z) && c1[x] == kBlue && c1[z] == kRed)
            blue_to_red2.push_back(x);
    }
    if (red_to_blue != std::vector<int>{t_red} || sigma(t_red) != t_blue) {
        rep.f1.pass = false;
        for (int x : red_to_blue)
            if (x != t_red)
                rep.f1.witnesses.push_back(x);
        if (rep.f1.witnesses.empty())
            rep.f1.witnesses.push_back(t_red);
    }

    // F2: sigma never steps blue -> red; sigma^2 does so only from sigma^-1(w0).
    if (!blue_to_red.empty()) {
        rep.f2.pass = false;
        rep.f2.witnesses = blue_to_red;
    }
    if (blue_to_red2 != std::vector<int>{s_back}) {
        rep.f2.pass = false;
        for (int x : blue_to_red2)
            if (x != s_back)
                rep.f2.witnesses.push_back(x);
        if (std::find(blue_to_red2.begin(), blue_to_red2.end(), s_back) == blue_to_red2.end())
            rep.f2.witnesses.push_back(s_back);
    }

    // F3: sigma preserves colors off {t_red, sigma^-1(w0), w0}.
    for (int x = 0; x < n; ++x) {
        if (x == t_red || x == s_back || x == w0)
            continue;
        const int y = sigma(x);
        if (!colored(y) || c1[y] != c1[x]) {
            rep.f3.pass = false;
            rep.f3.witnesses.push_back(x);
        }
    }
    return rep;
}

inline OrbitStats orbit_stats(const PartialColoring& c1, const ReflectionPair& pair, int w0,
                              std::span<const int> blank_set)
{
    OrbitStats st;
    st.orbit = orbit(pair.sigma, w0);
    for (std::size_t i = 0; i < st.orbit.size(); ++i) {
        const int x = st.orbit[i];
        if (c1.is_blank(x))
            st.blank_positions.push_back(static_cast<int>(i));
        else if (c1[x] == kRed)
            ++st.red_count;
        else
            ++st.blue_count;
        if (std::find(blank_set.begin(), blank_set.end(), x) != blank_set.end())
            st.w_positions.push_back(static_cast<int>(i));
    }
    return st;
}

/// One filling of W \ {w0}, with what the selection learned about it.
struct Candidate
{
    explicit Candidate(PartialColoring e) : extension(std::move(e)) {}

    PartialColoring extension;
    bool forbidden = false;
    std::optional<Coloring> distinguishing_completion;
    std::optional<ReflectionPair> pair;
    std::optional<OrbitStats> stats;
};

struct C1Selection
{
    /// Every filling in lexicographic order.
    std::vector<Candidate> candidates;
    std::optional<std::size_t> early_success;
    std::optional<std::size_t> chosen;
    /// Candidates removed by the orbit non-containment rule; expected 0 on cycles.
    std::size_t c1_filtered = 0;
};

/// Picks c1 among the non-forbidden fillings: maximum |O0|, then no strictly
/// larger orbit of w0 under another candidate's rotation, then maximum
/// min(red, blue) on O0, then lexicographic.  A filling with a distinguishing
/// completion short-circuits the rules.
inline C1Selection select_c1(const PartialColoring& c, int w0)
{
    C1Selection sel;
    const auto blank_set = c.blanks();
    for (auto& e : extensions_except(c, w0)) {
        Candidate cand(std::move(e));
        cand.forbidden = is_forbidden(cand.extension, w0);
        if (!cand.forbidden) {
            cand.pair = generated_translation(cand.extension, w0);
            if (!cand.pair) {
                auto red = cand.extension.with(w0, kRed).complete();
                cand.distinguishing_completion =
                    is_distinguishing(red) ? red : cand.extension.with(w0, kBlue).complete();
            } else {
                cand.stats = orbit_stats(cand.extension, *cand.pair, w0, blank_set);
            }
        }
        sel.candidates.push_back(std::move(cand));
    }
    for (std::size_t i = 0; i < sel.candidates.size(); ++i)
        if (sel.candidates[i].distinguishing_completion) {
            sel.early_success = i;
            sel.chosen = i;
            return sel;
        }

    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < sel.candidates.size(); ++i)
        if (sel.candidates[i].pair)
            pool.push_back(i);
    if (pool.empty())
        return sel;

    // (C0)
    std::size_t best_len = 0;
    for (auto i : pool)
        best_len = std::max(best_len, sel.candidates[i].stats->orbit.size());
    std::erase_if(pool, [&](std::size_t i) { return sel.candidates[i].stats->orbit.size() != best_len; });

    // (C1)
    auto orbit_set = [&](std::size_t i) {
        const auto& o = sel.candidates[i].stats->orbit;
        return std::set<int>(o.begin(), o.end());
    };
    std::vector<std::size_t> kept;
    for (auto i : pool) {
        auto mine = orbit_set(i);
        bool contained = false;
        for (std::size_t j = 0; j < sel.candidates.size() && !contained; ++j) {
            if (j == i || !sel.candidates[j].pair)
                continue;
            auto other = orbit_set(j);
            contained = other.size() > mine.size() && std::includes(other.begin(), other.end(), mine.begin(), mine.end());
        }
        if (contained)
            ++sel.c1_filtered;
        else
            kept.push_back(i);
    }
    if (kept.empty())
        kept = pool;

    // (C2), ties to the lexicographically first.
    std::size_t best = kept.front();
    auto balance = [&](std::size_t i) {
        const auto& s = *sel.candidates[i].stats;
        return std::min(s.red_count, s.blue_count);
    };
    for (auto i : kept)
        if (balance(i) > balance(best))
            best = i;
    sel.chosen = best;
    return sel;
}

struct WPrimeChoice
{
    /// 1: both reflection images of w0 are blanks; 2: min(red, blue) > 1; 3: min = 1.
    int selection_case = 0;
    std::vector<int> points;
};

inline WPrimeChoice select_wprime(const PartialColoring& c1, const ReflectionPair& pair, const OrbitStats& stats,
                                  std::span<const int> blank_set, int w0)
{
    (void)c1;
    const int n = pair.sigma.n();
    auto in_w = [&](int x) { return std::find(blank_set.begin(), blank_set.end(), x) != blank_set.end(); };
    const int t_red = pair.tau_red(w0), t_blue = pair.tau_blue(w0);
    const int s_fwd = pair.sigma(w0), s_back = inverse(pair.sigma)(w0);
    if (in_w(t_red) && in_w(t_blue)) {
        std::vector<int> pts{t_red, t_blue};
        std::sort(pts.begin(), pts.end());
        return {1, pts};
    }
    const int balance = std::min(stats.red_count, stats.blue_count);
    std::vector<int> excluded{w0, s_fwd, s_back, t_red, t_blue};
    int selection_case = 2;
    if (balance <= 1) {
        selection_case = 3;
        if (n % 2 == 0) {
            excluded.push_back(mod(s_fwd + n / 2, n));
            excluded.push_back(mod(s_back + n / 2, n));
        }
    }
    std::vector<int> sorted(blank_set.begin(), blank_set.end());
    std::sort(sorted.begin(), sorted.end());
    for (int w : sorted)
        if (std::find(excluded.begin(), excluded.end(), w) == excluded.end())
            return {selection_case, {w}};
    throw ConsistencyError("no admissible w' in case " + std::to_string(selection_case) + " (w0 = " +
                           std::to_string(w0) + ", sigma = " + to_string(pair.sigma) + ", coloring " +
                           to_string(c1) + ")");
}

enum class Route { EarlySuccess, C1Red, C1Blue, C2Red, C2Blue, Fallback, None };

inline const char* to_string(Route r)
{
    switch (r) {
    case Route::EarlySuccess: return "early-success";
    case Route::C1Red: return "c1+R";
    case Route::C1Blue: return "c1+B";
    case Route::C2Red: return "c2+R";
    case Route::C2Blue: return "c2+B";
    case Route::Fallback: return "fallback";
    case Route::None: return "none";
    }
    return "?";
}

struct TraceFlags
{
    bool forbidden_overflow = false;
    bool no_candidate = false;
    bool c1_filter_nonvacuous = false;
    bool wprime_undefined = false;
    bool c2_forbidden = false;
    bool fallback_fired = false;
    bool no_extension = false;
};

struct ExtensionTrace
{
    ExtensionTrace(PartialColoring p, int centre) : pre(std::move(p)), w0(centre) {}

    PartialColoring pre;
    int w0 = 0;
    std::vector<PartialColoring> forbidden;
    std::vector<Candidate> examined;
    std::optional<PartialColoring> c1;
    std::optional<ReflectionPair> pair1;
    std::optional<OrbitStats> stats;
    int wprime_case = 0;
    std::vector<int> wprime;
    std::optional<PartialColoring> c2;
    std::optional<ReflectionPair> pair2;
    std::optional<Coloring> result;
    Route route = Route::None;
    TraceFlags flags;
    std::string note;
};

/// Runs the construction from a given centre w0 without checking the
/// preconditions; anything the theory rules out is recorded in the flags.
inline ExtensionTrace run_pipeline(const PartialColoring& pre, int w0)
{
    ExtensionTrace t(pre, w0);
    const auto blank_set = pre.blanks();
    auto sel = select_c1(pre, w0);
    for (const auto& cand : sel.candidates)
        if (cand.forbidden)
            t.forbidden.push_back(cand.extension);
    t.flags.forbidden_overflow = t.forbidden.size() > 2;
    t.flags.c1_filter_nonvacuous = sel.c1_filtered > 0;

    auto fallback = [&] {
        if (auto c = precoloring_extends(pre)) {
            t.result = *c;
            t.route = Route::Fallback;
            t.flags.fallback_fired = true;
        } else {
            t.route = Route::None;
            t.flags.no_extension = true;
        }
        t.examined = std::move(sel.candidates);
        return std::move(t);
    };

    if (!sel.chosen) {
        t.flags.no_candidate = true;
        return fallback();
    }
    const Candidate& chosen = sel.candidates[*sel.chosen];
    t.c1 = chosen.extension;
    if (sel.early_success) {
        t.result = chosen.distinguishing_completion;
        t.route = Route::EarlySuccess;
        t.examined = std::move(sel.candidates);
        return t;
    }
    t.pair1 = chosen.pair;
    t.stats = chosen.stats;

    for (auto [color, route] : {std::pair{kRed, Route::C1Red}, std::pair{kBlue, Route::C1Blue}}) {
        auto full = t.c1->with(w0, color).complete();
        if (is_distinguishing(full)) {
            t.result = std::move(full);
            t.route = route;
            t.examined = std::move(sel.candidates);
            return t;
        }
    }

    try {
        auto wp = select_wprime(*t.c1, *t.pair1, *t.stats, blank_set, w0);
        t.wprime_case = wp.selection_case;
        t.wprime = wp.points;
    } catch (const ConsistencyError& e) {
        t.flags.wprime_undefined = true;
        t.note = e.what();
        return fallback();
    }
    auto c2 = *t.c1;
    for (int w : t.wprime)
        c2 = c2.with(w, c2[w] == kRed ? kBlue : kRed);
    t.c2 = c2;
    t.flags.c2_forbidden = is_forbidden(c2, w0);
    if (!t.flags.c2_forbidden)
        t.pair2 = generated_translation(c2, w0);
    for (auto [color, route] : {std::pair{kRed, Route::C2Red}, std::pair{kBlue, Route::C2Blue}}) {
        auto full = c2.with(w0, color).complete();
        if (is_distinguishing(full)) {
            t.result = std::move(full);
            t.route = route;
            t.examined = std::move(sel.candidates);
            return t;
        }
    }
    return fallback();
}

/// Why an instance is outside the extender's hypotheses, or none.
inline std::optional<std::string> extension_precondition_failure(const GameInstance& g)
{
    if (g.k != 2)
        return "two colors required, got k = " + std::to_string(g.k);
    if (g.n < 6)
        return "n >= 6 required, got n = " + std::to_string(g.n);
    if (g.blanks.size() != 4)
        return "exactly four blanks required, got " + std::to_string(g.blanks.size());
    auto div = divisibility_condition(cycle_points_on_circle(g.n, g.blanks));
    if (!div) {
        const auto& v = *div.violation;
        return "blanks violate the divisibility condition: " + v.w_prime.value().str() + " - " +
               v.w.value().str() + " = " + std::to_string(v.i) + "/" + std::to_string(v.k) + " (mod 1)";
    }
    return std::nullopt;
}

/// Reflection centre for a four-point blank set of Z_n, via the circle embedding.
inline int find_w0_on_cycle(int n, std::span<const int> blanks)
{
    auto p = find_w0(cycle_points_on_circle(n, std::vector<int>(blanks.begin(), blanks.end())));
    return static_cast<int>((p.value() * Rational(n)).floor());
}

struct ExtendOutcome
{
    Coloring result;
    ExtensionTrace trace;
};

/// Distinguishing two-coloring agreeing with g.pre off W, with its certificate.
/// Throws PreconditionError outside the hypotheses (k = 2, n >= 6, |W| = 4, divisibility).
inline ExtendOutcome extend_distinguishing(const GameInstance& g)
{
    if (auto why = extension_precondition_failure(g))
        throw PreconditionError("extend_distinguishing: " + *why);
    const int w0 = find_w0_on_cycle(g.n, g.blanks);
    auto trace = run_pipeline(g.pre, w0);
    if (!trace.result)
        throw ConsistencyError("no distinguishing extension found for " + to_string(g.pre));
    Coloring result = *trace.result;
    return {std::move(result), std::move(trace)};
}

/// Theory-level properties a trace must satisfy when the preconditions hold.
inline std::vector<std::string> trace_violations(const ExtensionTrace& t)
{
    std::vector<std::string> out;
    if (t.flags.forbidden_overflow)
        out.push_back("more than two forbidden extensions (" + std::to_string(t.forbidden.size()) + ")");
    if (t.flags.no_candidate)
        out.push_back("every extension is forbidden");
    if (t.flags.c1_filter_nonvacuous)
        out.push_back("orbit non-containment rule removed a candidate");
    if (t.flags.wprime_undefined)
        out.push_back("W' selection undefined: " + t.note);
    if (t.flags.c2_forbidden)
        out.push_back("c2 is forbidden");
    if (t.flags.fallback_fired)
        out.push_back("exhaustive fallback fired");
    if (t.flags.no_extension)
        out.push_back("no distinguishing extension exists");
    if (t.result) {
        if (!is_distinguishing(*t.result))
            out.push_back("result is not distinguishing");
        for (int x = 0; x < t.pre.n(); ++x)
            if (!t.pre.is_blank(x) && t.pre[x] != (*t.result)[x]) {
                out.push_back("result disagrees with the precoloring at " + std::to_string(x));
                break;
            }
    }
    for (const auto& c : t.examined)
        if (c.pair && !check_fact31(c.extension, *c.pair, t.w0).all_pass())
            out.push_back("near color-preservation fails for candidate " + to_string(c.extension));
    if (t.c2 && t.pair2 && !check_fact31(*t.c2, *t.pair2, t.w0).all_pass())
        out.push_back("near color-preservation fails for c2");
    return out;
}

} // namespace distext

#endif // DISTEXT_EXTENDER_HPP
