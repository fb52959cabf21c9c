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

// The dihedral action on Z_n: symmetries, colorings and the predicates
// (preserves, permits, distinguishing, fixing set) everything else uses.

#ifndef DISTEXT_DIHEDRAL_HPP
#define DISTEXT_DIHEDRAL_HPP

#include "distext/error.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distext {

/// Number of vertices of the cycle; always at least 3.
class CycleSize
{
public:
    explicit CycleSize(int n) : n_(n)
    {
        if (n < 3)
            throw PreconditionError("cycle size must be at least 3, got " + std::to_string(n));
    }

    int value() const noexcept { return n_; }
    operator int() const noexcept { return n_; }

private:
    int n_;
};

inline int mod(long long a, int n) noexcept
{
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

enum class SymmetryKind : std::uint8_t { Rotation = 0, Reflection = 1 };

/// Rotation(k): x -> x + k.  Reflection(c): x -> c - x.  All mod n.
class Symmetry
{
public:
    static Symmetry rotation(int n, long long k) { return Symmetry(n, SymmetryKind::Rotation, k); }
    static Symmetry reflection(int n, long long c) { return Symmetry(n, SymmetryKind::Reflection, c); }
    static Symmetry identity(int n) { return rotation(n, 0); }

    int n() const noexcept { return n_; }
    SymmetryKind kind() const noexcept { return kind_; }
    int param() const noexcept { return param_; }
    bool is_rotation() const noexcept { return kind_ == SymmetryKind::Rotation; }
    bool is_reflection() const noexcept { return kind_ == SymmetryKind::Reflection; }
    bool is_identity() const noexcept { return is_rotation() && param_ == 0; }

    int operator()(int x) const noexcept
    {
        return is_rotation() ? mod(static_cast<long long>(x) + param_, n_)
                             : mod(static_cast<long long>(param_) - x, n_);
    }

    friend bool operator==(const Symmetry&, const Symmetry&) = default;
    /// Canonical order: all rotations by parameter, then all reflections.
    friend auto operator<=>(const Symmetry& a, const Symmetry& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        if (auto c = a.kind_ <=> b.kind_; c != 0)
            return c;
        return a.param_ <=> b.param_;
    }

private:
    Symmetry(int n, SymmetryKind kind, long long param) : n_(n), kind_(kind), param_(mod(param, n))
    {
        if (n < 1)
            throw PreconditionError("symmetry of an empty cycle");
    }

    int n_;
    SymmetryKind kind_;
    int param_;
};

inline int apply(const Symmetry& s, int x) { return s(x); }

/// outer o inner, i.e. x -> outer(inner(x)).
inline Symmetry compose(const Symmetry& outer, const Symmetry& inner)
{
    if (outer.n() != inner.n())
        throw SizeMismatch("compose: symmetries of C_" + std::to_string(outer.n()) + " and C_" +
                           std::to_string(inner.n()));
    const int n = outer.n();
    const long long a = outer.param(), b = inner.param();
    if (outer.is_rotation())
        return inner.is_rotation() ? Symmetry::rotation(n, a + b) : Symmetry::reflection(n, a + b);
    return inner.is_rotation() ? Symmetry::reflection(n, a - b) : Symmetry::rotation(n, a - b);
}

inline Symmetry inverse(const Symmetry& s)
{
    return s.is_rotation() ? Symmetry::rotation(s.n(), -static_cast<long long>(s.param())) : s;
}

inline int order(const Symmetry& s)
{
    if (s.is_reflection())
        return 2;
    return s.n() / std::gcd(s.n(), s.param());
}

/// x, s(x), s^2(x), ... up to the first repeat.
inline std::vector<int> orbit(const Symmetry& s, int x)
{
    std::vector<int> out{x};
    for (int y = s(x); y != x; y = s(y))
        out.push_back(y);
    return out;
}

/// s^e for any integer e.
inline Symmetry power(const Symmetry& s, long long e)
{
    if (s.is_rotation())
        return Symmetry::rotation(s.n(), static_cast<long long>(s.param()) * mod(e, s.n()));
    return (e % 2 == 0) ? Symmetry::identity(s.n()) : s;
}

/// Rotation(1..n-1) then Reflection(0..n-1).
inline std::vector<Symmetry> non_identity_symmetries(int n)
{
    std::vector<Symmetry> out;
    out.reserve(2 * static_cast<std::size_t>(n) - 1);
    for (int k = 1; k < n; ++k)
        out.push_back(Symmetry::rotation(n, k));
    for (int c = 0; c < n; ++c)
        out.push_back(Symmetry::reflection(n, c));
    return out;
}

inline std::vector<Symmetry> all_symmetries(int n)
{
    std::vector<Symmetry> out{Symmetry::identity(n)};
    auto rest = non_identity_symmetries(n);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

/// The reflection fixing x (x -> 2x - x').
inline Symmetry reflection_about(int n, int x) { return Symmetry::reflection(n, 2LL * x); }

inline std::string to_string(const Symmetry& s)
{
    return (s.is_rotation() ? "Rotation(" : "Reflection(") + std::to_string(s.param()) + ")";
}

using Color = std::uint8_t;
inline constexpr Color kBlank = 0;
inline constexpr Color kRed = 1;
inline constexpr Color kBlue = 2;
inline constexpr int kMaxColors = 9;

namespace detail {

inline void check_colors(std::span<const Color> colors, int k, bool allow_blank)
{
    if (k < 1 || k > kMaxColors)
        throw PreconditionError("color count must be in 1..9, got " + std::to_string(k));
    for (std::size_t i = 0; i < colors.size(); ++i) {
        Color c = colors[i];
        if ((c == kBlank && !allow_blank) || c > k)
            throw PreconditionError("color " + std::to_string(int(c)) + " at position " + std::to_string(i) +
                                    " outside 1.." + std::to_string(k));
    }
}

} // namespace detail

/// A total k-coloring of Z_n with colors 1..k.
class Coloring
{
public:
    Coloring(CycleSize n, int k, std::vector<Color> colors) : k_(k), colors_(std::move(colors))
    {
        if (static_cast<int>(colors_.size()) != n.value())
            throw PreconditionError("coloring has " + std::to_string(colors_.size()) + " entries, expected " +
                                    std::to_string(n.value()));
        detail::check_colors(colors_, k_, false);
    }

    static Coloring uniform(CycleSize n, int k, Color c)
    {
        return Coloring(n, k, std::vector<Color>(static_cast<std::size_t>(n.value()), c));
    }

    int n() const noexcept { return static_cast<int>(colors_.size()); }
    int k() const noexcept { return k_; }
    Color operator[](int x) const { return colors_[static_cast<std::size_t>(x)]; }
    std::span<const Color> colors() const noexcept { return colors_; }

    Coloring with(int x, Color c) const
    {
        auto copy = colors_;
        copy[static_cast<std::size_t>(x)] = c;
        return Coloring(CycleSize(n()), k_, std::move(copy));
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    int k_;
    std::vector<Color> colors_;
};

/// A k-coloring of Z_n minus a blank set W; blanks are stored as kBlank.
class PartialColoring
{
public:
    PartialColoring(CycleSize n, int k, std::vector<Color> colors) : k_(k), colors_(std::move(colors))
    {
        if (static_cast<int>(colors_.size()) != n.value())
            throw PreconditionError("precoloring has " + std::to_string(colors_.size()) + " entries, expected " +
                                    std::to_string(n.value()));
        detail::check_colors(colors_, k_, true);
    }

    /// c restricted to the complement of `blanks`.
    static PartialColoring blank_out(const Coloring& c, std::span<const int> blanks)
    {
        std::vector<Color> colors(c.colors().begin(), c.colors().end());
        for (int w : blanks) {
            if (w < 0 || w >= c.n())
                throw PreconditionError("blank " + std::to_string(w) + " outside Z_" + std::to_string(c.n()));
            colors[static_cast<std::size_t>(w)] = kBlank;
        }
        return PartialColoring(CycleSize(c.n()), c.k(), std::move(colors));
    }

    static PartialColoring all_blank(CycleSize n, int k)
    {
        return PartialColoring(n, k, std::vector<Color>(static_cast<std::size_t>(n.value()), kBlank));
    }

    int n() const noexcept { return static_cast<int>(colors_.size()); }
    int k() const noexcept { return k_; }
    Color operator[](int x) const { return colors_[static_cast<std::size_t>(x)]; }
    bool is_blank(int x) const { return colors_[static_cast<std::size_t>(x)] == kBlank; }
    std::span<const Color> colors() const noexcept { return colors_; }

    std::vector<int> blanks() const
    {
        std::vector<int> out;
        for (int x = 0; x < n(); ++x)
            if (is_blank(x))
                out.push_back(x);
        return out;
    }

    PartialColoring with(int x, Color c) const
    {
        auto copy = colors_;
        copy[static_cast<std::size_t>(x)] = c;
        return PartialColoring(CycleSize(n()), k_, std::move(copy));
    }

    /// Same colors over a larger palette.
    PartialColoring with_palette(int k) const { return PartialColoring(CycleSize(n()), k, colors_); }

    /// Total coloring; throws if any blank remains.
    Coloring complete() const { return Coloring(CycleSize(n()), k_, colors_); }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    int k_;
    std::vector<Color> colors_;
};

// String format: one digit 1..k per position, '.' for a blank, index 0 leftmost.

inline std::string format_colors(std::span<const Color> colors)
{
    std::string s;
    s.reserve(colors.size());
    for (Color c : colors)
        s.push_back(c == kBlank ? '.' : static_cast<char>('0' + c));
    return s;
}

inline std::string to_string(const Coloring& c) { return format_colors(c.colors()); }
inline std::string to_string(const PartialColoring& c) { return format_colors(c.colors()); }

inline PartialColoring parse_partial_coloring(std::string_view s, int k)
{
    std::vector<Color> colors;
    colors.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '.')
            colors.push_back(kBlank);
        else if (ch >= '1' && ch <= '9')
            colors.push_back(static_cast<Color>(ch - '0'));
        else
            throw PreconditionError(std::string("invalid color character '") + ch + "' at position " +
                                    std::to_string(i));
    }
    const CycleSize n(static_cast<int>(colors.size()));
    return PartialColoring(n, k, std::move(colors));
}

inline Coloring parse_coloring(std::string_view s, int k) { return parse_partial_coloring(s, k).complete(); }

namespace detail {

// Two-color bitmask kernel, n <= 64: bit x set iff x has color 2.

inline std::uint64_t full_mask(int n) noexcept { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

/// Bit x of the result is bit (x + k) mod n of m.
inline std::uint64_t rotr(std::uint64_t m, int k, int n) noexcept
{
    if (k == 0)
        return m;
    return ((m >> k) | (m << (n - k))) & full_mask(n);
}

/// Bit x of the result is bit (x - k) mod n of m, i.e. the set translated by +k.
inline std::uint64_t rotl(std::uint64_t m, int k, int n) noexcept { return rotr(m, k == 0 ? 0 : n - k, n); }

/// Bit x of the result is bit (-x) mod n of m.
inline std::uint64_t negate(std::uint64_t m, int n) noexcept
{
    std::uint64_t out = m & 1ULL;
    for (int x = 1; x < n; ++x)
        if ((m >> (n - x)) & 1ULL)
            out |= 1ULL << x;
    return out;
}

/// Image of the point set m under s.
inline std::uint64_t image(std::uint64_t m, const Symmetry& s) noexcept
{
    const int n = s.n();
    return s.is_rotation() ? rotl(m, s.param(), n) : rotl(negate(m, n), s.param(), n);
}

inline std::optional<std::uint64_t> two_color_mask(std::span<const Color> colors)
{
    if (colors.size() > 64)
        return std::nullopt;
    std::uint64_t m = 0;
    for (std::size_t x = 0; x < colors.size(); ++x) {
        if (colors[x] == kBlue)
            m |= 1ULL << x;
        else if (colors[x] != kRed)
            return std::nullopt;
    }
    return m;
}

/// First non-identity symmetry preserving the two-coloring m, in canonical order.
inline std::optional<Symmetry> first_preserving(std::uint64_t m, int n) noexcept
{
    for (int k = 1; k < n; ++k)
        if (rotr(m, k, n) == m)
            return Symmetry::rotation(n, k);
    const std::uint64_t neg = negate(m, n);
    for (int c = 0; c < n; ++c)
        if (rotl(neg, c, n) == m)
            return Symmetry::reflection(n, c);
    return std::nullopt;
}

inline bool mask_distinguishing(std::uint64_t m, int n) noexcept { return !first_preserving(m, n).has_value(); }

} // namespace detail

/// True iff c(s(x)) == c(x) for every x.
inline bool preserves(const Coloring& c, const Symmetry& s)
{
    if (c.n() != s.n())
        throw SizeMismatch("preserves: coloring of C_" + std::to_string(c.n()) + " vs symmetry of C_" +
                           std::to_string(s.n()));
    for (int x = 0; x < c.n(); ++x)
        if (c[s(x)] != c[x])
            return false;
    return true;
}

struct DistinguishingResult
{
    bool distinguishing = false;
    /// Smallest preserving non-identity symmetry, when not distinguishing.
    std::optional<Symmetry> witness;

    explicit operator bool() const noexcept { return distinguishing; }
};

inline DistinguishingResult is_distinguishing(const Coloring& c)
{
    if (auto m = detail::two_color_mask(c.colors())) {
        auto w = detail::first_preserving(*m, c.n());
        return {!w.has_value(), w};
    }
    for (const auto& s : non_identity_symmetries(c.n()))
        if (preserves(c, s))
            return {false, s};
    return {true, std::nullopt};
}

/// Exact list of non-identity symmetries preserving c, canonical order.
inline std::vector<Symmetry> preserving_symmetries(const Coloring& c)
{
    std::vector<Symmetry> out;
    for (const auto& s : non_identity_symmetries(c.n()))
        if (preserves(c, s))
            out.push_back(s);
    return out;
}

/// Some extension of p is preserved by s: every <s>-orbit is monochromatic on its colored part.
inline bool permits(const PartialColoring& p, const Symmetry& s)
{
    if (p.n() != s.n())
        throw SizeMismatch("permits: precoloring of C_" + std::to_string(p.n()) + " vs symmetry of C_" +
                           std::to_string(s.n()));
    const int n = p.n();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        if (seen[static_cast<std::size_t>(x)])
            continue;
        Color orbit_color = kBlank;
        int y = x;
        do {
            seen[static_cast<std::size_t>(y)] = 1;
            Color c = p[y];
            if (c != kBlank) {
                if (orbit_color == kBlank)
                    orbit_color = c;
                else if (orbit_color != c)
                    return false;
            }
            y = s(y);
        } while (y != x);
    }
    return true;
}

/// No non-identity symmetry fixes every point of S.
inline bool is_fixing_set(int n, std::span<const int> points)
{
    for (const auto& s : non_identity_symmetries(n)) {
        bool fixes_all = true;
        for (int x : points)
            if (s(mod(x, n)) != mod(x, n)) {
                fixes_all = false;
                break;
            }
        if (fixes_all)
            return false;
    }
    return true;
}

} // namespace distext

#endif // DISTEXT_DIHEDRAL_HPP
