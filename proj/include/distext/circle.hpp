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

// Exact rational model of the circle R/Z and of the line R: blank sets, the
// divisibility condition, the reflection centre w0, the five-interval
// pigeonhole selection, cycle embeddings and rescaling of line blank sets.

#ifndef DISTEXT_CIRCLE_HPP
#define DISTEXT_CIRCLE_HPP

#include "distext/error.hpp"
#include "distext/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace distext {

enum class Mode { Circle, Line };

inline const char* to_string(Mode m) { return m == Mode::Circle ? "circle" : "line"; }

/// A rational point; on the circle the value is kept in [0, 1).
class RatPoint
{
public:
    RatPoint(Rational value, Mode mode) : value_(mode == Mode::Circle ? value.frac() : value), mode_(mode) {}

    static RatPoint circle(Rational v) { return RatPoint(v, Mode::Circle); }
    static RatPoint line(Rational v) { return RatPoint(v, Mode::Line); }

    const Rational& value() const noexcept { return value_; }
    Mode mode() const noexcept { return mode_; }

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    friend auto operator<=>(const RatPoint& a, const RatPoint& b) { return a.value_ <=> b.value_; }

private:
    Rational value_;
    Mode mode_;
};

/// Translate(a): x -> x + a.  Reflect(b): x -> b - x.  Mod 1 on the circle.
class IsometryQ
{
public:
    enum class Kind { Translate, Reflect };

    static IsometryQ translate(Rational a, Mode m) { return IsometryQ(Kind::Translate, a, m); }
    static IsometryQ reflect(Rational b, Mode m) { return IsometryQ(Kind::Reflect, b, m); }
    /// The reflection fixing p.
    static IsometryQ reflection_about(const RatPoint& p)
    {
        return reflect(p.value() + p.value(), p.mode());
    }

    Kind kind() const noexcept { return kind_; }
    const Rational& param() const noexcept { return param_; }
    Mode mode() const noexcept { return mode_; }
    bool is_identity() const noexcept { return kind_ == Kind::Translate && param_.is_zero(); }

    RatPoint operator()(const RatPoint& x) const
    {
        Rational v = kind_ == Kind::Translate ? x.value() + param_ : param_ - x.value();
        return RatPoint(v, mode_);
    }

    friend bool operator==(const IsometryQ&, const IsometryQ&) = default;

private:
    IsometryQ(Kind kind, Rational p, Mode m) : kind_(kind), param_(m == Mode::Circle ? p.frac() : p), mode_(m) {}

    Kind kind_;
    Rational param_;
    Mode mode_;
};

/// Finite set of pairwise distinct points of one mode, kept sorted.
class BlankSet
{
public:
    BlankSet(Mode mode, std::vector<Rational> values) : mode_(mode)
    {
        points_.reserve(values.size());
        for (const auto& v : values)
            points_.emplace_back(v, mode);
        normalize();
    }

    BlankSet(Mode mode, std::vector<RatPoint> points) : mode_(mode), points_(std::move(points))
    {
        for (const auto& p : points_)
            if (p.mode() != mode)
                throw PreconditionError("blank set mixes circle and line points");
        normalize();
    }

    Mode mode() const noexcept { return mode_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const std::vector<RatPoint>& points() const noexcept { return points_; }
    const RatPoint& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const RatPoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    friend bool operator==(const BlankSet&, const BlankSet&) = default;

private:
    void normalize()
    {
        std::sort(points_.begin(), points_.end());
        if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
            throw PreconditionError("blank set has repeated points");
    }

    Mode mode_;
    std::vector<RatPoint> points_;
};

/// w' - w = i/k (mod 1 on the circle) with 2 <= k <= 5, 1 <= i < k; i/k in lowest terms.
struct DivisibilityViolation
{
    RatPoint w;
    RatPoint w_prime;
    int i;
    int k;
};

struct DivisibilityResult
{
    bool holds = true;
    std::optional<DivisibilityViolation> violation;

    explicit operator bool() const noexcept { return holds; }
};

/// True iff d is i/k for some 2 <= k <= 5 and 1 <= i < k.
inline bool is_small_fraction(const Rational& d)
{
    return d.num() > 0 && d.den() >= 2 && d.den() <= 5 && d.num() < d.den();
}

inline DivisibilityResult divisibility_condition(const BlankSet& w)
{
    const auto& pts = w.points();
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = 0; b < pts.size(); ++b) {
            if (a == b)
                continue;
            Rational d = pts[b].value() - pts[a].value();
            if (w.mode() == Mode::Circle)
                d = d.frac();
            if (is_small_fraction(d))
                return {false, DivisibilityViolation{pts[a], pts[b], static_cast<int>(d.num()),
                                                     static_cast<int>(d.den())}};
        }
    return {};
}

/// Reflection centre w0 in W such that the reflection about w0 maps W \ {w0} outside W.
/// Line: min W.  Circle: |W| must be 4; candidates are tried in increasing order.
inline RatPoint find_w0(const BlankSet& w)
{
    if (w.empty())
        throw PreconditionError("find_w0: empty blank set");
    if (w.mode() == Mode::Line)
        return w[0];
    if (w.size() != 4)
        throw PreconditionError("find_w0: circle blank set must have 4 points, got " + std::to_string(w.size()));
    for (const auto& cand : w) {
        auto tau = IsometryQ::reflection_about(cand);
        bool ok = true;
        for (const auto& x : w)
            if (x != cand && w.contains(tau(x))) {
                ok = false;
                break;
            }
        if (ok)
            return cand;
    }
    throw NoW0Error("find_w0: no point of the blank set reflects the others outside it");
}

/// Four points of W inside one interval [i/5, (i+1)/5), lowest interval first,
/// the four smallest in it; none if no interval holds four points.
inline std::optional<BlankSet> pigeonhole_subset(const BlankSet& w)
{
    if (w.mode() != Mode::Circle)
        throw PreconditionError("pigeonhole_subset: circle mode only");
    std::vector<std::vector<RatPoint>> bins(5);
    for (const auto& p : w) {
        auto i = (p.value() * Rational(5)).floor();
        bins[static_cast<std::size_t>(i)].push_back(p);
    }
    for (auto& bin : bins) {
        if (bin.size() < 4)
            continue;
        bin.erase(bin.begin() + 4, bin.end());
        BlankSet out(Mode::Circle, bin);
        if (!divisibility_condition(out))
            throw ConsistencyError("pigeonhole_subset: interval subset violates the divisibility condition");
        return out;
    }
    if (w.size() >= 16)
        throw ConsistencyError("pigeonhole_subset: 16 points but no interval holds four");
    return std::nullopt;
}

/// {j / ell : 0 <= j < ell} on the circle.
inline BlankSet embed_cycle_in_circle(int ell)
{
    if (ell < 1)
        throw PreconditionError("embed_cycle: ell must be positive");
    std::vector<Rational> v;
    for (int j = 0; j < ell; ++j)
        v.emplace_back(j, ell);
    return BlankSet(Mode::Circle, std::move(v));
}

/// {j * n / ell : 0 <= j < ell} in Z_n.
inline std::vector<int> embed_cycle_in_cycle(int ell, int n)
{
    if (ell < 1 || n < 1)
        throw PreconditionError("embed_cycle: sizes must be positive");
    if (n % ell != 0)
        throw PreconditionError("embed_cycle: " + std::to_string(ell) + " does not divide " + std::to_string(n));
    std::vector<int> out;
    for (int j = 0; j < ell; ++j)
        out.push_back(j * (n / ell));
    return out;
}

/// Z_n viewed on the circle: x -> x / n.
inline BlankSet cycle_points_on_circle(int n, const std::vector<int>& points)
{
    std::vector<Rational> v;
    for (int x : points)
        v.emplace_back(x, n);
    return BlankSet(Mode::Circle, std::move(v));
}

struct RescaleResult
{
    Rational alpha;
    BlankSet scaled;
};

namespace detail {

inline bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline BlankSet scale(const BlankSet& w, const Rational& alpha)
{
    std::vector<Rational> v;
    for (const auto& p : w)
        v.push_back(p.value() * alpha);
    return BlankSet(Mode::Line, std::move(v));
}

} // namespace detail

/// alpha != 0 with alpha * W satisfying the line divisibility condition:
/// 1 if W already does, else 1/p for the first prime p >= 7 that works.
inline RescaleResult rescale_line_blanks(const BlankSet& w)
{
    if (w.mode() != Mode::Line)
        throw PreconditionError("rescale_line_blanks: line mode only");
    if (divisibility_condition(w))
        return {Rational(1), w};
    for (std::int64_t p = 7;; p += 2) {
        if (!detail::is_prime(p))
            continue;
        Rational alpha(1, p);
        auto scaled = detail::scale(w, alpha);
        if (divisibility_condition(scaled))
            return {alpha, std::move(scaled)};
    }
}

} // namespace distext

#endif // DISTEXT_CIRCLE_HPP
