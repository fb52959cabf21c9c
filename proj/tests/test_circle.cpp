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

#include "distext/circle.hpp"
#include "distext/dihedral.hpp"
#include "distext/rng.hpp"
#include "distext/suites.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <set>

using namespace distext;

namespace {

BlankSet circle(std::initializer_list<Rational> v) { return BlankSet(Mode::Circle, std::vector<Rational>(v)); }
BlankSet line(std::initializer_list<Rational> v) { return BlankSet(Mode::Line, std::vector<Rational>(v)); }

/// Direct reading of the condition: is (W + i/k) disjoint from W for all small i/k?
bool shifted_disjoint(const BlankSet& w)
{
    for (int k = 2; k <= 5; ++k)
        for (int i = 1; i < k; ++i)
            for (const auto& p : w) {
                const RatPoint q(p.value() + Rational(i, k), w.mode());
                if (w.contains(q))
                    return false;
            }
    return true;
}

} // namespace

TEST(Rational, NormalizesAndCompares)
{
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(5).str(), "5/1");
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(-7, 3).floor(), -3);
    EXPECT_EQ(Rational(-7, 3).frac(), Rational(2, 3));
    EXPECT_EQ(Rational(1, 6) + Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
    EXPECT_THROW(Rational(1, 0), PreconditionError);
    EXPECT_THROW(Rational(1) / Rational(0), PreconditionError);
}

TEST(Rational, Parse)
{
    EXPECT_EQ(Rational::parse("3/9"), Rational(1, 3));
    EXPECT_EQ(Rational::parse("-2"), Rational(-2));
    EXPECT_THROW(Rational::parse("1/0"), PreconditionError);
    EXPECT_THROW(Rational::parse("a/3"), PreconditionError);
    EXPECT_THROW(Rational::parse("1/"), PreconditionError);
    EXPECT_THROW(Rational::parse("99999999999999999999/2"), OverflowError);
}

TEST(Rational, OverflowIsReported)
{
    const auto big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(Rational(big) + Rational(1), OverflowError);
    EXPECT_THROW(Rational(1, big) * Rational(1, big - 1), OverflowError);
    EXPECT_NO_THROW(Rational(big, 3) * Rational(3, big));
}

TEST(RatPoint, CircleReducesModOne)
{
    EXPECT_EQ(RatPoint::circle(Rational(7, 5)).value(), Rational(2, 5));
    EXPECT_EQ(RatPoint::circle(Rational(-1, 5)).value(), Rational(4, 5));
    EXPECT_EQ(RatPoint::line(Rational(-1, 5)).value(), Rational(-1, 5));
}

TEST(IsometryQ, Actions)
{
    const auto t = IsometryQ::translate(Rational(3, 4), Mode::Circle);
    EXPECT_EQ(t(RatPoint::circle(Rational(1, 2))).value(), Rational(1, 4));
    const auto r = IsometryQ::reflect(Rational(1, 3), Mode::Circle);
    EXPECT_EQ(r(RatPoint::circle(Rational(1, 2))).value(), Rational(5, 6));
    EXPECT_TRUE(IsometryQ::translate(Rational(1), Mode::Circle).is_identity());
    const auto about = IsometryQ::reflection_about(RatPoint::line(Rational(2)));
    EXPECT_EQ(about(RatPoint::line(Rational(5))).value(), Rational(-1));
}

TEST(BlankSet, RejectsDuplicates)
{
    EXPECT_THROW(circle({Rational(1, 3), Rational(4, 3)}), PreconditionError);
    EXPECT_NO_THROW(line({Rational(1, 3), Rational(4, 3)}));
}

TEST(Divisibility, Examples)
{
    EXPECT_TRUE(divisibility_condition(circle({0, Rational(1, 7), Rational(2, 7), Rational(3, 7)})));
    const auto half = divisibility_condition(circle({0, Rational(1, 2)}));
    ASSERT_FALSE(half);
    EXPECT_EQ(half.violation->w.value(), Rational(0));
    EXPECT_EQ(half.violation->w_prime.value(), Rational(1, 2));
    EXPECT_EQ(half.violation->i, 1);
    EXPECT_EQ(half.violation->k, 2);
    EXPECT_FALSE(divisibility_condition(circle({0, Rational(1, 3), Rational(2, 3)})));
    EXPECT_TRUE(divisibility_condition(line({0, Rational(3, 2)})));
    EXPECT_FALSE(divisibility_condition(circle({0, Rational(3, 2)})));
}

TEST(Divisibility, MatchesShiftedSetDefinition)
{
    CounterRng rng(3);
    for (int trial = 0; trial < 3000; ++trial) {
        const int count = static_cast<int>(rng.between(2, 6));
        const auto w = trial % 2 ? random_circle_set(rng, count, 60) : random_line_set(rng, count, 3, 12);
        ASSERT_EQ(static_cast<bool>(divisibility_condition(w)), shifted_disjoint(w));
    }
}

TEST(Divisibility, VacuousOnCyclesCoprimeToThirty)
{
    for (int n : {7, 11, 13})
        for (const auto& w : detail::subsets_of_size(n, 4))
            ASSERT_TRUE(divisibility_condition(cycle_points_on_circle(n, w)));
}

TEST(FindW0, Examples)
{
    EXPECT_EQ(find_w0(line({0, 1, 2, 3})).value(), Rational(0));
    const auto w = circle({0, Rational(1, 7), Rational(2, 7), Rational(3, 7)});
    const auto w0 = find_w0(w);
    const auto tau = IsometryQ::reflection_about(w0);
    for (const auto& x : w)
        if (x != w0) {
            EXPECT_FALSE(w.contains(tau(x)));
        }
    EXPECT_THROW(find_w0(circle({0, Rational(1, 15), Rational(2, 15)})), PreconditionError);
    EXPECT_THROW(find_w0(circle({0, Rational(1, 4), Rational(1, 2), Rational(3, 4)})), NoW0Error);
}

TEST(FindW0, RandomCircleSetsWithCondition)
{
    CounterRng rng(5);
    int checked = 0;
    while (checked < 10000) {
        const auto w = random_circle_set(rng, 4, 40);
        if (!divisibility_condition(w))
            continue;
        ++checked;
        const auto w0 = find_w0(w);
        const auto tau = IsometryQ::reflection_about(w0);
        for (const auto& x : w)
            if (x != w0) {
                ASSERT_FALSE(w.contains(tau(x)));
            }
    }
}

TEST(Pigeonhole, Examples)
{
    const auto small = circle({Rational(1, 100), Rational(1, 50), Rational(1, 7), Rational(1, 6), Rational(1, 2)});
    const auto sub = pigeonhole_subset(small);
    ASSERT_TRUE(sub);
    EXPECT_EQ(*sub, circle({Rational(1, 100), Rational(1, 50), Rational(1, 7), Rational(1, 6)}));
    std::vector<Rational> fifteen;
    for (int i = 0; i < 15; ++i)
        fifteen.emplace_back(i, 15);
    EXPECT_FALSE(pigeonhole_subset(BlankSet(Mode::Circle, fifteen)));
    EXPECT_THROW(pigeonhole_subset(line({0, 1})), PreconditionError);
}

TEST(Pigeonhole, FifteenPointsHaveNoGoodQuadruple)
{
    std::vector<int> idx(15);
    for (int i = 0; i < 15; ++i)
        idx[i] = i;
    for (const auto& w : detail::subsets_of_size(15, 4))
        ASSERT_FALSE(divisibility_condition(cycle_points_on_circle(15, w)));
}

TEST(Pigeonhole, SixteenRandomPointsAlwaysYieldAQuadruple)
{
    CounterRng rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        const auto w = random_circle_set(rng, static_cast<int>(rng.between(16, 40)));
        const auto sub = pigeonhole_subset(w);
        ASSERT_TRUE(sub);
        ASSERT_EQ(sub->size(), 4u);
        EXPECT_TRUE(divisibility_condition(*sub));
        const auto bin = ((*sub)[0].value() * Rational(5)).floor();
        for (const auto& p : *sub) {
            EXPECT_TRUE(w.contains(p));
            EXPECT_EQ((p.value() * Rational(5)).floor(), bin);
        }
    }
}

TEST(Embedding, Examples)
{
    EXPECT_EQ(embed_cycle_in_cycle(5, 10), (std::vector<int>{0, 2, 4, 6, 8}));
    EXPECT_EQ(embed_cycle_in_circle(5), circle({0, Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}));
    EXPECT_THROW(embed_cycle_in_cycle(4, 10), PreconditionError);
}

TEST(Embedding, StabilizerInducesTheSubcycleGroup)
{
    for (int n = 3; n <= 30; ++n)
        for (int ell = 3; ell <= n; ++ell) {
            if (n % ell)
                continue;
            const auto img = embed_cycle_in_cycle(ell, n);
            const int step = n / ell;
            std::set<std::vector<int>> induced;
            int stabilizer = 0;
            for (const auto& s : all_symmetries(n)) {
                std::vector<int> perm;
                bool maps_in = true;
                for (int x : img) {
                    const int y = s(x);
                    maps_in = maps_in && y % step == 0;
                    perm.push_back(y / step);
                }
                if (!maps_in)
                    continue;
                ++stabilizer;
                induced.insert(perm);
            }
            std::set<std::vector<int>> expected;
            for (const auto& s : all_symmetries(ell)) {
                std::vector<int> perm;
                for (int j = 0; j < ell; ++j)
                    perm.push_back(s(j));
                expected.insert(perm);
            }
            ASSERT_EQ(stabilizer, 2 * ell) << n << " " << ell;
            ASSERT_EQ(induced, expected) << n << " " << ell;
        }
}

TEST(Rescale, Examples)
{
    const auto res = rescale_line_blanks(line({0, Rational(1, 2), 1, Rational(3, 2)}));
    EXPECT_EQ(res.alpha, Rational(1, 7));
    EXPECT_TRUE(divisibility_condition(res.scaled));
    const auto ok = line({0, Rational(1, 7)});
    EXPECT_EQ(rescale_line_blanks(ok).alpha, Rational(1));
    EXPECT_EQ(rescale_line_blanks(line({0, Rational(1, 4)})).alpha, Rational(1, 7));
    EXPECT_THROW(rescale_line_blanks(circle({0})), PreconditionError);
}

TEST(Rescale, AlphaIsFirstWorkingPrimeReciprocal)
{
    CounterRng rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto w = random_line_set(rng, static_cast<int>(rng.between(2, 6)), 4, 6);
        const auto res = rescale_line_blanks(w);
        ASSERT_TRUE(divisibility_condition(res.scaled));
        if (divisibility_condition(w)) {
            EXPECT_EQ(res.alpha, Rational(1));
            continue;
        }
        ASSERT_EQ(res.alpha.num(), 1);
        for (std::int64_t p = 7; p < res.alpha.den(); ++p) {
            bool prime = true;
            for (std::int64_t d = 2; d * d <= p; ++d)
                prime = prime && p % d;
            if (!prime)
                continue;
            std::vector<Rational> v;
            for (const auto& x : w)
                v.push_back(x.value() / Rational(p));
            ASSERT_FALSE(divisibility_condition(BlankSet(Mode::Line, v))) << "earlier prime " << p << " works";
        }
    }
}
