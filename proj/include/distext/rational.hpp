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

#ifndef DISTEXT_RATIONAL_HPP
#define DISTEXT_RATIONAL_HPP

#include "distext/error.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

namespace distext {

namespace detail {
__extension__ using i128 = __int128;
} // namespace detail

/// Exact p/q in lowest terms with q >= 1.  Every result is computed in 128 bits
/// and must fit back into int64 (excluding INT64_MIN), otherwise OverflowError.
class Rational
{
    using i128 = detail::i128;

public:
    constexpr Rational() = default;
    Rational(std::int64_t num) : num_(num), den_(1) { check_range(num); } // NOLINT: implicit by design of arithmetic
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    /// Accepts "p/q" or "p", optional leading '-'.
    static Rational parse(std::string_view s)
    {
        auto slash = s.find('/');
        auto num = parse_int(s.substr(0, slash), s);
        std::int64_t den = 1;
        if (slash != std::string_view::npos)
            den = parse_int(s.substr(slash + 1), s);
        if (den == 0)
            throw PreconditionError("zero denominator in \"" + std::string(s) + "\"");
        return Rational(num, den);
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Largest integer <= value.
    std::int64_t floor() const noexcept
    {
        std::int64_t q = num_ / den_;
        return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
    }

    /// value - floor(value), in [0, 1).
    Rational frac() const { return from_wide(static_cast<detail::i128>(num_) - static_cast<detail::i128>(floor()) * den_, den_); }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw PreconditionError("division by zero rational");
        return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
    }

private:
    static i128 wide(std::int64_t v) { return static_cast<i128>(v); }

    static void check_range(i128 v)
    {
        if (v > std::numeric_limits<std::int64_t>::max() || v <= std::numeric_limits<std::int64_t>::min())
            throw OverflowError("rational component out of 64-bit range");
    }

    static i128 gcd128(i128 a, i128 b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(i128 num, i128 den)
    {
        if (den == 0)
            throw PreconditionError("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        check_range(num);
        check_range(den);
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

    static std::int64_t parse_int(std::string_view part, std::string_view whole)
    {
        if (part.empty())
            throw PreconditionError("malformed rational \"" + std::string(whole) + "\"");
        bool neg = part.front() == '-';
        if (neg)
            part.remove_prefix(1);
        if (part.empty())
            throw PreconditionError("malformed rational \"" + std::string(whole) + "\"");
        i128 v = 0;
        for (char ch : part) {
            if (ch < '0' || ch > '9')
                throw PreconditionError("malformed rational \"" + std::string(whole) + "\"");
            v = v * 10 + (ch - '0');
            if (v > std::numeric_limits<std::int64_t>::max())
                throw OverflowError("rational literal \"" + std::string(whole) + "\" exceeds 64 bits");
        }
        return static_cast<std::int64_t>(neg ? -v : v);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace distext

#endif // DISTEXT_RATIONAL_HPP
