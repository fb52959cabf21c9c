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

#include "distext/bounds.hpp"
#include "reference_oracle.hpp"

#include <gtest/gtest.h>

using namespace distext;

namespace {

std::vector<int> ref_colors(const PartialColoring& p)
{
    std::vector<int> v;
    for (Color c : p.colors())
        v.push_back(c == kBlank ? -1 : c - 1);
    return v;
}

} // namespace

TEST(UpperBound, Examples)
{
    EXPECT_EQ(corollary_upper_bound(7).value, 4);
    EXPECT_EQ(corollary_upper_bound(60).value, 31);
    EXPECT_EQ(corollary_upper_bound(9).value, 10);
    const auto b = corollary_upper_bound(60);
    EXPECT_EQ(b.chi2 + b.chi3 + b.chi4 + b.chi5, 4);
    EXPECT_THROW(corollary_upper_bound(5), PreconditionError);
}

TEST(UpperBound, IndicatorFormula)
{
    for (int n = 6; n <= 400; ++n) {
        int weight = 1;
        const int weights[] = {0, 0, 1, 2, 2, 4};
        for (int d = 2; d <= 5; ++d)
            if (n % d == 0)
                weight += weights[d];
        EXPECT_EQ(corollary_upper_bound(n).value, 3 * weight + 1) << n;
    }
}

TEST(EmbeddingBound, Examples)
{
    EXPECT_EQ(embedding_lower_bound(5, 10, 2), 6);
    EXPECT_EQ(embedding_lower_bound(4, 12, 2), 5);
    EXPECT_EQ(embedding_lower_bound(3, 21, 2), 4);
    EXPECT_EQ(embedding_lower_bound(6, 12, 2), 4);
    EXPECT_EQ(embedding_lower_bound(8, 16, 2), 5);
    EXPECT_THROW(embedding_lower_bound(4, 10, 2), PreconditionError);
    EXPECT_THROW(embedding_lower_bound(2, 10, 2), PreconditionError);
}

TEST(EmbeddingBound, NonDecreasingAlongChains)
{
    EXPECT_LE(embedding_lower_bound(5, 10, 2), embedding_lower_bound(10, 20, 2));
    EXPECT_LE(embedding_lower_bound(5, 20, 2), embedding_lower_bound(10, 20, 2));
    EXPECT_LE(embedding_lower_bound(3, 12, 2), embedding_lower_bound(6, 12, 2));
    EXPECT_LE(embedding_lower_bound(4, 16, 2), embedding_lower_bound(8, 16, 2));
    EXPECT_EQ(embedding_lower_bound(5, 30, 2), 6);
    EXPECT_EQ(best_embedding_lower_bound(30, 2), 6);
}

TEST(EmbeddingBound, LargeSubcycleUsesItsOwnDivisors)
{
    // Past the exact limit, a subcycle is bounded through its own subcycles (C_3, C_5).
    EXPECT_EQ(embedding_lower_bound(15, 30, 2), 6);
    EXPECT_EQ(embedding_lower_bound(25, 25, 2), 6);
}

TEST(Sharpness, ReferenceCycles)
{
    struct Case
    {
        int n;
        const char* construction;
        int bound;
        std::size_t blanks;
    };
    for (const auto& c : {Case{21, "embed-C3", 4, 3}, Case{23, "three-point", 4, 3}, Case{24, "embed-C4", 5, 4},
                          Case{25, "embed-C5", 6, 5}}) {
        const auto s = sharpness_instance(c.n);
        EXPECT_EQ(s.construction, c.construction);
        EXPECT_EQ(s.claimed_bound, c.bound);
        EXPECT_EQ(s.blanks.size(), c.blanks);
        EXPECT_EQ(s.pre.blanks(), s.blanks);
        EXPECT_FALSE(ref::extends(ref_colors(s.pre), 2)) << c.n;
        EXPECT_TRUE(ref::fixing(s.blanks, ref::nontrivial_perms(c.n)));
    }
    EXPECT_EQ(sharpness_instance(23).blanks, (std::vector<int>{0, 1, 22}));
}

TEST(Sharpness, EveryCycleUpToForty)
{
    for (int n = 6; n <= 40; ++n) {
        const auto s = sharpness_instance(n);
        EXPECT_FALSE(precoloring_extends(s.pre)) << n;
        EXPECT_EQ(s.claimed_bound, static_cast<int>(s.blanks.size()) + 1);
        EXPECT_LE(s.claimed_bound, corollary_upper_bound(n).value);
    }
    EXPECT_THROW(sharpness_instance(5), PreconditionError);
}

TEST(Bounds, SandwichComputedValues)
{
    for (int n = 6; n <= 16; ++n) {
        const int value = ext_number(n, 2).value;
        EXPECT_GE(value, sharpness_instance(n).claimed_bound) << n;
        EXPECT_GE(value, best_embedding_lower_bound(n, 2)) << n;
        EXPECT_LE(value, corollary_upper_bound(n).value) << n;
    }
}

TEST(ThreeBlankCensus, TwentyOneCycle)
{
    const auto c = three_blank_census(21);
    EXPECT_EQ(c.blank_sets, 37u);
    EXPECT_EQ(c.failing_sets, 10u);
    EXPECT_EQ(c.failing_precolorings, 32u);
    EXPECT_EQ(c.failing_two_colored, 12u);
    ASSERT_TRUE(c.two_colored_witness);
    EXPECT_EQ(to_string(*c.two_colored_witness), ".11.11.11211211211211");
    const auto v = ref_colors(*c.two_colored_witness);
    EXPECT_FALSE(ref::extends(v, 2));
    EXPECT_NE(std::find(v.begin(), v.end(), 1), v.end()) << "uses the second color";
}
