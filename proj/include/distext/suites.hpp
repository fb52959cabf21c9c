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

// Exhaustive and seeded verification runs over the lemma-level claims.
// Each returns counts plus the first offending instance, if any.

#ifndef DISTEXT_SUITES_HPP
#define DISTEXT_SUITES_HPP

#include "distext/circle.hpp"
#include "distext/dihedral.hpp"
#include "distext/extender.hpp"
#include "distext/oracle.hpp"
#include "distext/parallel.hpp"
#include "distext/rng.hpp"

#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

namespace distext {

namespace detail {

/// Every m-subset of Z_n as a sorted list, in increasing mask order.
inline std::vector<std::vector<int>> subsets_of_size(int n, int m)
{
    if (n > 30)
        throw BudgetExceeded("subset enumeration limited to n <= 30");
    std::vector<std::vector<int>> out;
    for (std::uint64_t w = 0; w < (1ULL << n); ++w)
        if (std::popcount(w) == m)
            out.push_back(from_mask(w));
    return out;
}

/// The a-th two-color precoloring of Z_n \ W: bit j of a colors the j-th non-blank point blue.
inline PartialColoring nth_precoloring(int n, const std::vector<int>& w, std::uint64_t a)
{
    std::vector<Color> c(static_cast<std::size_t>(n), kRed);
    for (int x : w)
        c[static_cast<std::size_t>(x)] = kBlank;
    int j = 0;
    for (int x = 0; x < n; ++x)
        if (c[static_cast<std::size_t>(x)] != kBlank)
            c[static_cast<std::size_t>(x)] = ((a >> j++) & 1ULL) ? kBlue : kRed;
    return PartialColoring(CycleSize(n), 2, std::move(c));
}

inline bool cycle_divisibility(int n, const std::vector<int>& w)
{
    return static_cast<bool>(divisibility_condition(cycle_points_on_circle(n, w)));
}

} // namespace detail

struct W0Report
{
    int n = 0;
    std::uint64_t subsets = 0;
    std::uint64_t satisfying = 0;
    std::uint64_t found = 0;
    std::optional<std::vector<int>> first_failure;
};

/// find_w0 on every divisibility-satisfying 4-subset of {j/n}.
inline W0Report w0_suite(int n)
{
    W0Report r;
    r.n = n;
    for (const auto& w : detail::subsets_of_size(n, 4)) {
        ++r.subsets;
        const auto pts = cycle_points_on_circle(n, w);
        if (!divisibility_condition(pts))
            continue;
        ++r.satisfying;
        try {
            const auto w0 = find_w0(pts);
            auto tau = IsometryQ::reflection_about(w0);
            bool ok = pts.contains(w0);
            for (const auto& x : pts)
                if (x != w0 && pts.contains(tau(x)))
                    ok = false;
            if (ok) {
                ++r.found;
                continue;
            }
        } catch (const NoW0Error&) {
        }
        if (!r.first_failure)
            r.first_failure = w;
    }
    return r;
}

struct ForbiddenReport
{
    int n = 0;
    std::uint64_t instances = 0;
    std::uint64_t max_forbidden = 0;
    std::uint64_t overflow = 0;
    std::uint64_t discrepancies = 0;
    std::optional<PartialColoring> first_bad;
};

namespace detail {

/// Forbidden by definition: some completion at w0 is preserved by the
/// reflection about w0 or by a non-identity rotation.
inline bool forbidden_by_completion(const PartialColoring& e, int w0)
{
    const int n = e.n();
    for (Color b : {kRed, kBlue}) {
        const auto full = e.with(w0, b).complete();
        if (preserves(full, reflection_about(n, w0)))
            return true;
        for (int k = 1; k < n; ++k)
            if (preserves(full, Symmetry::rotation(n, k)))
                return true;
    }
    return false;
}

} // namespace detail

/// forbidden_extensions against the completion-level definition, all (W, precoloring).
inline ForbiddenReport forbidden_suite(int n, unsigned jobs = 1)
{
    ForbiddenReport r;
    r.n = n;
    std::vector<std::vector<int>> sets;
    for (auto& w : detail::subsets_of_size(n, 4))
        if (detail::cycle_divisibility(n, w))
            sets.push_back(std::move(w));
    std::vector<ForbiddenReport> parts(sets.size());
    parallel_for(sets.size(), jobs, [&](std::size_t i) {
        const auto& w = sets[i];
        auto& p = parts[i];
        const int w0 = find_w0_on_cycle(n, w);
        for (std::uint64_t a = 0; a < (1ULL << (n - 4)); ++a) {
            const auto pre = detail::nth_precoloring(n, w, a);
            ++p.instances;
            const auto listed = forbidden_extensions(pre, w0);
            p.max_forbidden = std::max<std::uint64_t>(p.max_forbidden, listed.size());
            bool bad = listed.size() > 2;
            if (bad)
                ++p.overflow;
            std::size_t brute = 0;
            for (const auto& e : extensions_except(pre, w0)) {
                const bool expect = detail::forbidden_by_completion(e, w0);
                brute += expect;
                bool in_list = false;
                for (const auto& f : listed)
                    in_list = in_list || f.extension == e;
                if (in_list != expect) {
                    ++p.discrepancies;
                    bad = true;
                }
            }
            if (brute != listed.size())
                bad = true;
            if (bad && !p.first_bad)
                p.first_bad = pre;
        }
    });
    for (auto& p : parts) {
        r.instances += p.instances;
        r.max_forbidden = std::max(r.max_forbidden, p.max_forbidden);
        r.overflow += p.overflow;
        r.discrepancies += p.discrepancies;
        if (!r.first_bad && p.first_bad)
            r.first_bad = p.first_bad;
    }
    return r;
}

struct FactCheckReport
{
    int n = 0;
    std::uint64_t blank_sets = 0;
    std::uint64_t satisfying_sets = 0;
    std::uint64_t instances = 0;
    std::array<std::uint64_t, 7> routes{};
    std::uint64_t pairs = 0;
    std::uint64_t fact31_failures = 0;
    std::uint64_t max_forbidden = 0;
    std::uint64_t not_distinguishing = 0;
    std::uint64_t violating_instances = 0;
    std::optional<PartialColoring> first_violation;
    std::vector<std::string> first_violation_reasons;
};

/// Runs extend_distinguishing on every precondition-satisfying instance of C_n.
inline FactCheckReport fact_check(int n, unsigned jobs = 1)
{
    if (n < 6 || n > 24)
        throw PreconditionError("fact-check needs 6 <= n <= 24");
    FactCheckReport r;
    r.n = n;
    std::vector<std::vector<int>> sets;
    for (auto& w : detail::subsets_of_size(n, 4)) {
        ++r.blank_sets;
        if (detail::cycle_divisibility(n, w))
            sets.push_back(std::move(w));
    }
    r.satisfying_sets = sets.size();
    std::vector<FactCheckReport> parts(sets.size());
    parallel_for(sets.size(), jobs, [&](std::size_t i) {
        auto& p = parts[i];
        for (std::uint64_t a = 0; a < (1ULL << (n - 4)); ++a) {
            const auto pre = detail::nth_precoloring(n, sets[i], a);
            ++p.instances;
            std::vector<std::string> reasons;
            try {
                auto out = extend_distinguishing(GameInstance(pre));
                const auto& t = out.trace;
                ++p.routes[static_cast<std::size_t>(t.route)];
                p.max_forbidden = std::max<std::uint64_t>(p.max_forbidden, t.forbidden.size());
                for (const auto& c : t.examined)
                    if (c.pair) {
                        ++p.pairs;
                        if (!check_fact31(c.extension, *c.pair, t.w0).all_pass())
                            ++p.fact31_failures;
                    }
                if (t.pair2) {
                    ++p.pairs;
                    if (!check_fact31(*t.c2, *t.pair2, t.w0).all_pass())
                        ++p.fact31_failures;
                }
                if (!is_distinguishing(out.result))
                    ++p.not_distinguishing;
                reasons = trace_violations(t);
            } catch (const ConsistencyError& e) {
                ++p.routes[static_cast<std::size_t>(Route::None)];
                reasons.push_back(e.what());
            }
            if (!reasons.empty()) {
                ++p.violating_instances;
                if (!p.first_violation) {
                    p.first_violation = pre;
                    p.first_violation_reasons = std::move(reasons);
                }
            }
        }
    });
    for (auto& p : parts) {
        r.instances += p.instances;
        for (std::size_t j = 0; j < r.routes.size(); ++j)
            r.routes[j] += p.routes[j];
        r.pairs += p.pairs;
        r.fact31_failures += p.fact31_failures;
        r.max_forbidden = std::max(r.max_forbidden, p.max_forbidden);
        r.not_distinguishing += p.not_distinguishing;
        r.violating_instances += p.violating_instances;
        if (!r.first_violation && p.first_violation) {
            r.first_violation = p.first_violation;
            r.first_violation_reasons = p.first_violation_reasons;
        }
    }
    return r;
}

/// Seeded random set of `count` distinct points j/q on the circle, q in [count, max_den].
inline BlankSet random_circle_set(CounterRng& rng, int count, std::int64_t max_den = 1000000)
{
    const std::int64_t q = rng.between(count, max_den);
    std::vector<Rational> v;
    std::vector<std::int64_t> used;
    while (static_cast<int>(v.size()) < count) {
        const std::int64_t j = rng.between(0, q - 1);
        if (std::find(used.begin(), used.end(), j) != used.end())
            continue;
        used.push_back(j);
        v.emplace_back(j, q);
    }
    return BlankSet(Mode::Circle, std::move(v));
}

/// Seeded random set of distinct rationals a/b with |a/b| <= range, b <= max_den.
inline BlankSet random_line_set(CounterRng& rng, int count, std::int64_t range = 100, std::int64_t max_den = 60)
{
    std::vector<Rational> v;
    while (static_cast<int>(v.size()) < count) {
        const std::int64_t b = rng.between(1, max_den);
        Rational x(rng.between(-range * b, range * b), b);
        if (std::find(v.begin(), v.end(), x) == v.end())
            v.push_back(x);
    }
    return BlankSet(Mode::Line, std::move(v));
}

struct PigeonholeReport
{
    std::uint64_t sets = 0;
    std::uint64_t found = 0;
    std::uint64_t passing = 0;
    bool fifteen_none = false;
    std::optional<BlankSet> first_failure;
};

inline PigeonholeReport pigeonhole_suite(std::uint64_t seed, int count)
{
    PigeonholeReport r;
    CounterRng rng(seed, 1);
    for (int i = 0; i < count; ++i) {
        const auto w = random_circle_set(rng, 16);
        ++r.sets;
        auto sub = pigeonhole_subset(w);
        if (sub)
            ++r.found;
        bool ok = sub && sub->size() == 4 && divisibility_condition(*sub);
        if (ok)
            for (const auto& p : *sub)
                ok = ok && w.contains(p);
        r.passing += ok;
        if (!ok && !r.first_failure)
            r.first_failure = w;
    }
    std::vector<Rational> fifteen;
    for (int i = 0; i < 15; ++i)
        fifteen.emplace_back(i, 15);
    r.fifteen_none = !pigeonhole_subset(BlankSet(Mode::Circle, fifteen)).has_value();
    return r;
}

struct LineReport
{
    std::uint64_t sets = 0;
    std::uint64_t w0_is_min = 0;
    std::uint64_t w0_valid = 0;
    std::uint64_t rescale_ok = 0;
    std::uint64_t rescaled = 0;
    std::optional<BlankSet> first_failure;
};

inline LineReport line_suite(std::uint64_t seed, int count)
{
    LineReport r;
    CounterRng rng(seed, 2);
    for (int i = 0; i < count; ++i) {
        const auto w = random_line_set(rng, 4);
        ++r.sets;
        const auto w0 = find_w0(w);
        const bool is_min = w0 == w[0];
        auto tau = IsometryQ::reflection_about(w0);
        bool valid = true;
        for (const auto& x : w)
            if (x != w0 && w.contains(tau(x)))
                valid = false;
        const auto res = rescale_line_blanks(w);
        bool scaled_ok = !res.alpha.is_zero() && divisibility_condition(res.scaled) && res.scaled.size() == w.size();
        for (std::size_t j = 0; j < w.size() && scaled_ok; ++j)
            scaled_ok = res.scaled[j].value() == w[j].value() * res.alpha;
        r.w0_is_min += is_min;
        r.w0_valid += valid;
        r.rescale_ok += scaled_ok;
        r.rescaled += !(res.alpha == Rational(1));
        if (!(is_min && valid && scaled_ok) && !r.first_failure)
            r.first_failure = w;
    }
    return r;
}

struct WPrimeSearchReport
{
    int max_n = 0;
    std::uint64_t runs = 0;
    std::uint64_t sigma_path = 0;
    std::array<std::uint64_t, 4> wprime_cases{};
    std::uint64_t wprime_undefined = 0;
    std::uint64_t c2_forbidden = 0;
    std::array<std::uint64_t, 7> routes{};
    std::uint64_t pairs = 0;
    std::uint64_t fact31_failures = 0;
    std::uint64_t fallback_fired = 0;
    std::uint64_t no_extension = 0;
    std::optional<PartialColoring> first_case1;
    std::optional<int> first_case1_w0;
    std::optional<PartialColoring> first_sigma_path;
    std::optional<int> first_sigma_path_w0;
};

/// Runs the pipeline outside its hypotheses, where early success can fail:
/// three or four blanks of C_n for 6 <= n <= max_n, divisibility ignored,
/// every centre w0 whose reflection moves the other blanks off W.  Blank sets
/// are taken up to symmetry.
inline WPrimeSearchReport wprime_search(int max_n, unsigned jobs = 1, std::vector<int> sizes = {3, 4},
                                        bool any_centre = false)
{
    if (max_n > 20)
        throw BudgetExceeded("wprime search limited to n <= 20");
    WPrimeSearchReport r;
    r.max_n = max_n;
    struct Item
    {
        int n;
        std::vector<int> w;
        int w0;
    };
    std::vector<Item> items;
    for (int n = 6; n <= max_n; ++n)
        for (int m : sizes)
        for (const auto& orb : detail::blank_set_orbits(n, true, m)) {
            const auto w = detail::from_mask(orb.mask);
            for (int w0 : w) {
                bool ok = true;
                if (!any_centre)
                    for (int x : w)
                        if (x != w0 && std::find(w.begin(), w.end(), mod(2LL * w0 - x, n)) != w.end())
                            ok = false;
                if (ok)
                    items.push_back({n, w, w0});
            }
        }
    std::vector<WPrimeSearchReport> parts(items.size());
    parallel_for(items.size(), jobs, [&](std::size_t i) {
        const auto& it = items[i];
        auto& p = parts[i];
        const int free_points = it.n - static_cast<int>(it.w.size());
        for (std::uint64_t a = 0; a < (1ULL << free_points); ++a) {
            const auto pre = detail::nth_precoloring(it.n, it.w, a);
            auto t = run_pipeline(pre, it.w0);
            p.fallback_fired += t.flags.fallback_fired;
            p.no_extension += t.flags.no_extension;
            ++p.runs;
            ++p.routes[static_cast<std::size_t>(t.route)];
            for (const auto& c : t.examined)
                if (c.pair) {
                    ++p.pairs;
                    p.fact31_failures += !check_fact31(c.extension, *c.pair, it.w0).all_pass();
                }
            if (!t.pair1)
                continue;
            ++p.sigma_path;
            if (!p.first_sigma_path) {
                p.first_sigma_path = pre;
                p.first_sigma_path_w0 = it.w0;
            }
            if (t.flags.wprime_undefined)
                ++p.wprime_undefined;
            else
                ++p.wprime_cases[static_cast<std::size_t>(t.wprime_case)];
            p.c2_forbidden += t.flags.c2_forbidden;
            if (t.wprime_case == 1 && !p.first_case1) {
                p.first_case1 = pre;
                p.first_case1_w0 = it.w0;
            }
        }
    });
    for (auto& p : parts) {
        r.runs += p.runs;
        r.sigma_path += p.sigma_path;
        for (std::size_t j = 0; j < 4; ++j)
            r.wprime_cases[j] += p.wprime_cases[j];
        r.wprime_undefined += p.wprime_undefined;
        r.c2_forbidden += p.c2_forbidden;
        for (std::size_t j = 0; j < r.routes.size(); ++j)
            r.routes[j] += p.routes[j];
        r.pairs += p.pairs;
        r.fact31_failures += p.fact31_failures;
        r.fallback_fired += p.fallback_fired;
        r.no_extension += p.no_extension;
        if (!r.first_sigma_path && p.first_sigma_path) {
            r.first_sigma_path = p.first_sigma_path;
            r.first_sigma_path_w0 = p.first_sigma_path_w0;
        }
        if (!r.first_case1 && p.first_case1) {
            r.first_case1 = p.first_case1;
            r.first_case1_w0 = p.first_case1_w0;
        }
    }
    return r;
}

} // namespace distext

#endif // DISTEXT_SUITES_HPP
