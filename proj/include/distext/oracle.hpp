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

// Brute-force ground truth for the Hero/Adversary extension game on C_n.
//
// ext_number() decides, for every fixing blank set W and every precoloring of
// its complement, whether some filling of W is distinguishing.  Blank sets are
// reduced to one representative per dihedral orbit.  For two colors the
// decision for all precolorings of a given W is made at once: start from the
// table D of distinguishing 2-colorings (one bit per coloring) and OR it along
// every coordinate of W; a precoloring fails iff its cell stays zero.

#ifndef DISTEXT_ORACLE_HPP
#define DISTEXT_ORACLE_HPP

#include "distext/dihedral.hpp"
#include "distext/error.hpp"
#include "distext/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace distext {

/// A precoloring handed to the Hero; `blanks` is exactly the blank set of `pre`.
struct GameInstance
{
    int n;
    int k;
    std::vector<int> blanks;
    PartialColoring pre;

    explicit GameInstance(PartialColoring p) : n(p.n()), k(p.k()), blanks(p.blanks()), pre(std::move(p)) {}
};

namespace detail {

/// Visits every coloring in k-ary counter order, position 0 least significant.
/// The visitor returns true to stop.
template <typename Visit>
bool for_each_assignment(std::vector<Color>& colors, std::span<const int> slots, int k, Visit&& visit)
{
    for (int x : slots)
        colors[static_cast<std::size_t>(x)] = 1;
    for (;;) {
        if (visit())
            return true;
        std::size_t i = 0;
        for (; i < slots.size(); ++i) {
            auto& c = colors[static_cast<std::size_t>(slots[i])];
            if (c < k) {
                ++c;
                break;
            }
            c = 1;
        }
        if (i == slots.size())
            return false;
    }
}

inline int first_distinguishing_palette(int n, int kmax)
{
    for (int k = 1; k <= kmax; ++k) {
        std::vector<Color> colors(static_cast<std::size_t>(n), 1);
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        bool found = for_each_assignment(colors, all, k, [&] {
            return static_cast<bool>(is_distinguishing(Coloring(CycleSize(n), k, colors)));
        });
        if (found)
            return k;
    }
    return kmax + 1;
}

} // namespace detail

/// Least k admitting a distinguishing k-coloring of C_n.
inline int distinguishing_number(int n)
{
    CycleSize size(n);
    // A coloring with n distinct colors is always distinguishing, so the search ends.
    return detail::first_distinguishing_palette(size, std::min(n, kMaxColors));
}

/// A distinguishing filling of the blanks, if one exists.  Fillings are tried as a
/// k-ary counter over the blanks in increasing position, the first blank least significant.
inline std::optional<Coloring> precoloring_extends(const PartialColoring& pre)
{
    const int n = pre.n(), k = pre.k();
    std::vector<Color> colors(pre.colors().begin(), pre.colors().end());
    const auto blanks = pre.blanks();
    if (k == 2 && n <= 64 && blanks.size() < 63) {
        std::uint64_t base = 0;
        for (int x = 0; x < n; ++x)
            if (colors[static_cast<std::size_t>(x)] == kBlue)
                base |= 1ULL << x;
        const std::uint64_t count = 1ULL << blanks.size();
        for (std::uint64_t a = 0; a < count; ++a) {
            std::uint64_t m = base;
            for (std::size_t j = 0; j < blanks.size(); ++j)
                if ((a >> j) & 1ULL)
                    m |= 1ULL << blanks[j];
            if (detail::mask_distinguishing(m, n)) {
                for (int x = 0; x < n; ++x)
                    colors[static_cast<std::size_t>(x)] = ((m >> x) & 1ULL) ? kBlue : kRed;
                return Coloring(CycleSize(n), k, colors);
            }
        }
        return std::nullopt;
    }
    std::optional<Coloring> found;
    detail::for_each_assignment(colors, blanks, k, [&] {
        Coloring c(CycleSize(n), k, colors);
        if (is_distinguishing(c)) {
            found = std::move(c);
            return true;
        }
        return false;
    });
    return found;
}

inline std::optional<Coloring> precoloring_extends(const GameInstance& g) { return precoloring_extends(g.pre); }

namespace detail {

inline std::uint64_t to_mask(std::span<const int> points, int n)
{
    std::uint64_t m = 0;
    for (int x : points) {
        int y = mod(x, n);
        if (m & (1ULL << y))
            throw PreconditionError("blank set has repeated point " + std::to_string(y));
        m |= 1ULL << y;
    }
    return m;
}

inline std::vector<int> from_mask(std::uint64_t m)
{
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Sorted-list lexicographic order on equal-size point sets.
inline bool lex_less(std::uint64_t a, std::uint64_t b) noexcept
{
    std::uint64_t d = a ^ b;
    return d != 0 && (a & d & (~d + 1)) != 0;
}

/// All 2n images of the point set m, identity first.
template <typename Visit>
void for_each_image(std::uint64_t m, int n, Visit&& visit)
{
    const std::uint64_t neg = negate(m, n);
    for (int k = 0; k < n; ++k)
        visit(rotl(m, k, n));
    for (int c = 0; c < n; ++c)
        visit(rotl(neg, c, n));
}

inline std::uint64_t canonical_mask(std::uint64_t m, int n)
{
    std::uint64_t best = m;
    for_each_image(m, n, [&](std::uint64_t img) {
        if (lex_less(img, best))
            best = img;
    });
    return best;
}

struct BlankOrbit
{
    std::uint64_t mask;
    std::uint64_t orbit_size;
};

/// One entry per dihedral orbit of nonempty subsets of Z_n (or per subset when
/// !reduce), ordered by size descending then lexicographically.
inline std::vector<BlankOrbit> blank_set_orbits(int n, bool reduce, int only_size = -1)
{
    if (n > 30)
        throw BudgetExceeded("blank set enumeration limited to n <= 30");
    std::vector<BlankOrbit> out;
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t m = 1; m < total; ++m) {
        if (only_size >= 0 && std::popcount(m) != only_size)
            continue;
        if (!reduce) {
            out.push_back({m, 1});
            continue;
        }
        bool canonical = true;
        std::uint64_t stabilizer = 0;
        for_each_image(m, n, [&](std::uint64_t img) {
            if (img == m)
                ++stabilizer;
            else if (lex_less(img, m))
                canonical = false;
        });
        if (canonical)
            out.push_back({m, 2ULL * static_cast<std::uint64_t>(n) / stabilizer});
    }
    std::stable_sort(out.begin(), out.end(), [](const BlankOrbit& a, const BlankOrbit& b) {
        int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
        if (pa != pb)
            return pa > pb;
        return lex_less(a.mask, b.mask);
    });
    return out;
}

inline bool mask_is_fixing(std::uint64_t m, int n)
{
    auto pts = from_mask(m);
    return is_fixing_set(n, pts);
}

/// Bit x set iff the two-coloring with mask x is distinguishing; padding bits are 1.
inline std::vector<std::uint64_t> distinguishing_table(int n)
{
    const std::uint64_t total = 1ULL << n;
    std::vector<std::uint64_t> words(static_cast<std::size_t>(std::max<std::uint64_t>(1, total / 64)), 0);
    if (total < 64)
        words[0] = ~0ULL << total;
    for (std::uint64_t x = 0; x < total; ++x)
        if (mask_distinguishing(x, n))
            words[x >> 6] |= 1ULL << (x & 63);
    return words;
}

/// cell[x] |= cell[x ^ (1 << b)] for every x.
inline void close_along(std::vector<std::uint64_t>& g, int b)
{
    static constexpr std::uint64_t kLow[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                              0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
    if (b < 6) {
        const std::uint64_t lo = kLow[b];
        const int s = 1 << b;
        for (auto& w : g)
            w |= ((w & lo) << s) | ((w >> s) & lo);
        return;
    }
    const std::size_t stride = std::size_t{1} << (b - 6);
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j & stride)
            continue;
        std::uint64_t v = g[j] | g[j + stride];
        g[j] = v;
        g[j + stride] = v;
    }
}

struct ClosureResult
{
    std::uint64_t failing_precolorings = 0;
    /// Lowest failing precoloring as a two-color mask over the complement.
    std::optional<std::uint64_t> first_failing;
    /// Lowest failing precoloring whose complement uses both colors.
    std::optional<std::uint64_t> first_failing_two_colored;
    std::uint64_t failing_two_colored = 0;
};

inline ClosureResult close_blank_set(const std::vector<std::uint64_t>& table, std::uint64_t w, int n,
                                     bool census = false)
{
    std::vector<std::uint64_t> g = table;
    for (std::uint64_t b = w; b; b &= b - 1)
        close_along(g, std::countr_zero(b));
    ClosureResult r;
    const int m = std::popcount(w);
    std::uint64_t zeros = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        std::uint64_t z = ~g[j];
        if (!z)
            continue;
        zeros += static_cast<std::uint64_t>(std::popcount(z));
        if (!r.first_failing)
            r.first_failing = ((static_cast<std::uint64_t>(j) << 6) | std::countr_zero(z)) & ~w;
        if (census) {
            const std::uint64_t comp = full_mask(n) & ~w;
            for (std::uint64_t bits = z; bits; bits &= bits - 1) {
                std::uint64_t x = (static_cast<std::uint64_t>(j) << 6) | std::countr_zero(bits);
                if (x & w)
                    continue;
                if (x != 0 && x != comp) {
                    ++r.failing_two_colored;
                    if (!r.first_failing_two_colored)
                        r.first_failing_two_colored = x;
                }
            }
        }
    }
    r.failing_precolorings = zeros >> m;
    return r;
}

inline PartialColoring precoloring_from_mask(std::uint64_t colored, std::uint64_t blanks, int n)
{
    std::vector<Color> colors(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        colors[static_cast<std::size_t>(x)] =
            ((blanks >> x) & 1ULL) ? kBlank : (((colored >> x) & 1ULL) ? kBlue : kRed);
    return PartialColoring(CycleSize(n), 2, std::move(colors));
}

inline std::uint64_t binomial(int n, int m)
{
    std::uint64_t r = 1;
    for (int i = 1; i <= m; ++i)
        r = r * static_cast<std::uint64_t>(n - m + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace detail

/// Lexicographically least image of W under the 2n symmetries, sorted.
inline std::vector<int> canonical_blank_set(std::span<const int> w, int n)
{
    CycleSize size(n);
    if (n > 64)
        throw PreconditionError("canonical_blank_set: n <= 64 supported");
    return detail::from_mask(detail::canonical_mask(detail::to_mask(w, n), size));
}

struct ExtOptions
{
    enum class Method { Auto, Bitset, Enumerate };

    unsigned jobs = 1;
    bool reduce_orbits = true;
    bool force = false;
    Method method = Method::Auto;
    std::optional<Clock::time_point> deadline;
};

struct SizeStats
{
    int m = 0;
    std::uint64_t blank_sets = 0;
    std::uint64_t fixing_sets = 0;
    std::uint64_t failing_sets = 0;
    /// Sum over failing fixing sets of the number of failing precolorings.
    std::uint64_t failing_precolorings = 0;
};

struct FailureWitness
{
    std::vector<int> blanks;
    PartialColoring pre;
};

struct ExtReport
{
    int n = 0;
    int k = 0;
    int value = 0;
    /// No fixing set fails at any size; value is then the least fixing-set size.
    bool vacuous = false;
    std::optional<FailureWitness> worst_failing;
    /// Sizes n down to 1.
    std::vector<SizeStats> per_size;
};

/// Largest n for which ext_number runs without `force`, for a given palette.
inline bool within_budget(int n, int k) { return static_cast<double>(n) * std::log2(static_cast<double>(k)) <= 26.0 + 1e-9; }

inline ExtReport ext_number(int n, int k, const ExtOptions& opt = {})
{
    CycleSize size(n);
    if (k < 1 || k > kMaxColors)
        throw PreconditionError("color count must be in 1..9");
    if (!opt.force && !within_budget(n, k))
        throw BudgetExceeded("ext_number(" + std::to_string(n) + ", " + std::to_string(k) +
                             ") exceeds the desk-scale budget; pass force to override");
    const int d = distinguishing_number(n);
    if (k < d)
        throw UndefinedQuantity("ext_D(C_" + std::to_string(n) + "; " + std::to_string(k) +
                                ") is undefined: D(C_" + std::to_string(n) + ") = " + std::to_string(d));

    bool bitset = k == 2 && n <= 30;
    if (opt.method == ExtOptions::Method::Enumerate)
        bitset = false;
    if (opt.method == ExtOptions::Method::Bitset && !bitset)
        throw PreconditionError("bitset method needs k = 2 and n <= 30");
    if (n > 30)
        throw BudgetExceeded("ext_number limited to n <= 30");

    const auto orbits = detail::blank_set_orbits(n, opt.reduce_orbits);
    std::vector<std::uint64_t> table;
    if (bitset)
        table = detail::distinguishing_table(n);

    struct ItemResult
    {
        bool fixing = false;
        std::uint64_t failing = 0;
        std::optional<std::uint64_t> first_failing;
    };
    std::vector<ItemResult> results(orbits.size());

    parallel_for(orbits.size(), opt.jobs, [&](std::size_t i) {
        if (opt.deadline && Clock::now() > *opt.deadline)
            throw Timeout("ext_number(" + std::to_string(n) + ") timed out");
        const std::uint64_t w = orbits[i].mask;
        ItemResult& r = results[i];
        r.fixing = detail::mask_is_fixing(w, n);
        if (!r.fixing)
            return;
        if (bitset) {
            auto c = detail::close_blank_set(table, w, n);
            r.failing = c.failing_precolorings;
            r.first_failing = c.first_failing;
            return;
        }
        std::vector<int> comp;
        for (int x = 0; x < n; ++x)
            if (!((w >> x) & 1ULL))
                comp.push_back(x);
        std::vector<Color> colors(static_cast<std::size_t>(n), kBlank);
        detail::for_each_assignment(colors, comp, k, [&] {
            PartialColoring pre(size, k, colors);
            if (!precoloring_extends(pre)) {
                ++r.failing;
                if (!r.first_failing) {
                    // Only meaningful for k = 2, where it doubles as a mask.
                    std::uint64_t m = 0;
                    for (int x : comp)
                        if (colors[static_cast<std::size_t>(x)] == kBlue)
                            m |= 1ULL << x;
                    r.first_failing = m;
                }
            }
            return false;
        });
    });

    ExtReport rep;
    rep.n = n;
    rep.k = k;
    rep.per_size.resize(static_cast<std::size_t>(n));
    for (int m = n; m >= 1; --m) {
        auto& s = rep.per_size[static_cast<std::size_t>(n - m)];
        s.m = m;
        s.blank_sets = detail::binomial(n, m);
    }
    int worst = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& r = results[i];
        const int m = std::popcount(orbits[i].mask);
        auto& s = rep.per_size[static_cast<std::size_t>(n - m)];
        if (!r.fixing)
            continue;
        s.fixing_sets += orbits[i].orbit_size;
        if (r.failing == 0)
            continue;
        s.failing_sets += orbits[i].orbit_size;
        s.failing_precolorings += r.failing * orbits[i].orbit_size;
        if (m > worst) {
            worst = m;
            // Orbits are sorted lexicographically within a size; keep the first.
            std::vector<Color> colors(static_cast<std::size_t>(n), kBlank);
            if (k == 2) {
                rep.worst_failing =
                    FailureWitness{detail::from_mask(orbits[i].mask),
                                   detail::precoloring_from_mask(*r.first_failing, orbits[i].mask, n)};
            } else {
                // Recover the first failing precoloring of this blank set in counter order.
                std::vector<int> comp;
                for (int x = 0; x < n; ++x)
                    if (!((orbits[i].mask >> x) & 1ULL))
                        comp.push_back(x);
                std::optional<PartialColoring> first;
                detail::for_each_assignment(colors, comp, k, [&] {
                    PartialColoring pre(size, k, colors);
                    if (!precoloring_extends(pre)) {
                        first = pre;
                        return true;
                    }
                    return false;
                });
                rep.worst_failing = FailureWitness{detail::from_mask(orbits[i].mask), *first};
            }
        }
    }
    if (worst > 0) {
        rep.value = worst + 1;
    } else {
        rep.vacuous = true;
        for (int m = 1; m <= n; ++m)
            if (rep.per_size[static_cast<std::size_t>(n - m)].fixing_sets > 0) {
                rep.value = m;
                break;
            }
    }
    return rep;
}

/// Non-extendible two-color precoloring census for blank sets of one size.
struct CensusEntry
{
    std::vector<int> blanks;
    std::uint64_t orbit_size = 0;
    std::uint64_t failing = 0;
    std::uint64_t failing_two_colored = 0;
    std::optional<PartialColoring> two_colored_witness;
};

inline std::vector<CensusEntry> census_nonextendible(int n, int m, unsigned jobs = 1)
{
    CycleSize size(n);
    if (n > 26)
        throw BudgetExceeded("census limited to n <= 26");
    const auto orbits = detail::blank_set_orbits(size, true, m);
    const auto table = detail::distinguishing_table(n);
    std::vector<CensusEntry> out(orbits.size());
    parallel_for(orbits.size(), jobs, [&](std::size_t i) {
        const std::uint64_t w = orbits[i].mask;
        CensusEntry& e = out[i];
        e.blanks = detail::from_mask(w);
        e.orbit_size = orbits[i].orbit_size;
        if (!detail::mask_is_fixing(w, n))
            return;
        auto c = detail::close_blank_set(table, w, n, true);
        e.failing = c.failing_precolorings;
        e.failing_two_colored = c.failing_two_colored;
        if (c.first_failing_two_colored)
            e.two_colored_witness = detail::precoloring_from_mask(*c.first_failing_two_colored, w, n);
    });
    return out;
}

} // namespace distext

#endif // DISTEXT_ORACLE_HPP
