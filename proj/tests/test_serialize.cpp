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

#include "distext/serialize.hpp"
#include "distext/suites.hpp"

#include <gtest/gtest.h>

using namespace distext;

namespace {

PartialColoring colors_of(const Json& j, int k) { return parse_partial_coloring(j.get<std::string>(), k); }

/// Re-checks a serialized trace from its JSON form alone.
void replay(const Json& j)
{
    ASSERT_EQ(j.at("schema"), kTraceSchema);
    const int n = j.at("n");
    const int w0 = j.at("w0");
    const auto pre = colors_of(j.at("precoloring"), 2);
    ASSERT_EQ(pre.blanks(), j.at("blanks").get<std::vector<int>>());
    ASSERT_TRUE(pre.is_blank(w0));

    for (const auto& f : j.at("forbidden")) {
        const auto e = colors_of(f, 2);
        EXPECT_TRUE(is_forbidden(e, w0));
    }
    for (const auto& e : j.at("examined")) {
        const auto c1 = colors_of(e.at("extension"), 2);
        EXPECT_EQ(c1.blanks(), std::vector<int>{w0});
        for (int x = 0; x < n; ++x)
            if (!pre.is_blank(x)) {
                EXPECT_EQ(c1[x], pre[x]);
            }
        if (e.at("pair").is_null())
            continue;
        const auto& p = e.at("pair");
        ReflectionPair pair{symmetry_from_json(p.at("tau_red"), n), symmetry_from_json(p.at("tau_blue"), n),
                            symmetry_from_json(p.at("sigma"), n), {}, {}};
        EXPECT_EQ(pair.sigma, compose(pair.tau_blue, pair.tau_red));
        EXPECT_TRUE(preserves(c1.with(w0, kRed).complete(), pair.tau_red));
        EXPECT_TRUE(preserves(c1.with(w0, kBlue).complete(), pair.tau_blue));
        EXPECT_TRUE(check_fact31(c1, pair, w0).all_pass());
    }
    if (!j.at("c2").is_null()) {
        auto flipped = colors_of(j.at("c1"), 2);
        for (int w : j.at("wprime"))
            flipped = flipped.with(w, flipped[w] == kRed ? kBlue : kRed);
        EXPECT_EQ(to_string(flipped), j.at("c2").get<std::string>());
    }
    if (!j.at("result").is_null()) {
        const auto result = parse_coloring(j.at("result").get<std::string>(), 2);
        EXPECT_TRUE(is_distinguishing(result));
        for (int x = 0; x < n; ++x)
            if (!pre.is_blank(x)) {
                EXPECT_EQ(result[x], pre[x]);
            }
    }
}

} // namespace

TEST(Serialize, GameInstanceRoundTrip)
{
    const auto pre = parse_partial_coloring("..1.21112.112", 2);
    const auto j = to_json(pre);
    EXPECT_EQ(j.at("n"), 13);
    EXPECT_EQ(j.at("blanks"), (std::vector<int>{0, 1, 3, 9}));
    const auto g = game_instance_from_json(parse_json(j.dump()));
    EXPECT_EQ(g.pre, pre);
    EXPECT_EQ(g.k, 2);
}

TEST(Serialize, GameInstanceErrors)
{
    EXPECT_THROW(game_instance_from_json(parse_json(R"({"n": 5, "k": 2, "colors": "1.1"})")), InputError);
    EXPECT_THROW(game_instance_from_json(parse_json(R"({"k": 2, "colors": "1.11", "blanks": [0]})")), InputError);
    EXPECT_THROW(game_instance_from_json(parse_json(R"({"k": 2, "colors": "1.13"})")), InputError);
    EXPECT_THROW(game_instance_from_json(parse_json(R"({"k": 2})")), InputError);
    EXPECT_THROW(game_instance_from_json(parse_json(R"({"k": "two", "colors": "1.1"})")), InputError);
    try {
        parse_json("{\"n\": 7,, }");
        FAIL() << "parse error expected";
    } catch (const InputError& e) {
        ASSERT_TRUE(e.offset());
        EXPECT_EQ(*e.offset(), 9u) << "1-based byte of the second comma";
    }
}

TEST(Serialize, ExtReportCarriesSchema)
{
    const auto j = to_json(ext_number(8, 2));
    EXPECT_EQ(j.at("schema"), kExtReportSchema);
    EXPECT_EQ(j.at("value"), 5);
    EXPECT_EQ(j.at("per_size").size(), 8u);
    EXPECT_EQ(j.at("worst_failing").at("blanks").size(), 4u);
}

TEST(Serialize, BlankSetRoundTrip)
{
    const auto j = parse_json(R"({"mode": "circle", "points": ["1/7", "8/7", "3/6"]})");
    EXPECT_THROW(blank_set_from_json(j), InputError) << "1/7 and 8/7 coincide on the circle";
    const auto w = blank_set_from_json(parse_json(R"({"mode": "line", "points": ["-1/2", "2", "3/6"]})"));
    EXPECT_EQ(to_json(w).at("points"), (std::vector<std::string>{"-1/2", "1/2", "2/1"}));
    EXPECT_EQ(blank_set_from_json(to_json(w)), w);
    EXPECT_THROW(blank_set_from_json(parse_json(R"({"mode": "plane", "points": []})")), InputError);
    EXPECT_THROW(blank_set_from_json(parse_json(R"({"mode": "line", "points": ["1/0"]})")), InputError);
}

TEST(Serialize, TraceReplayOnThirteenCycle)
{
    int replayed = 0;
    for (const auto& w : detail::subsets_of_size(13, 4)) {
        if (w[0] != 0 || w[1] > 2)
            continue;
        for (std::uint64_t a = 0; a < 512; a += 61) {
            const auto out = extend_distinguishing(GameInstance(detail::nth_precoloring(13, w, a)));
            replay(parse_json(to_json(out.trace).dump()));
            ++replayed;
        }
    }
    EXPECT_GT(replayed, 100);
}

TEST(Serialize, TraceReplayOnSigmaPath)
{
    const auto pre = PartialColoring::blank_out(Coloring::uniform(CycleSize(12), 2, kRed), std::vector<int>{0, 1, 11});
    const auto t = run_pipeline(pre, 1);
    ASSERT_TRUE(t.pair1);
    const auto j = to_json(t);
    EXPECT_FALSE(j.at("pair1").is_null());
    EXPECT_EQ(j.at("pair1").at("sigma").at("kind"), "rotation");
    replay(parse_json(j.dump()));
}

TEST(Serialize, SymmetryJson)
{
    const auto s = Symmetry::reflection(9, 4);
    EXPECT_EQ(to_json(s).dump(), R"({"kind":"reflection","param":4})");
    EXPECT_EQ(symmetry_from_json(to_json(s), 9), s);
    EXPECT_THROW(symmetry_from_json(parse_json(R"({"kind":"glide","param":1})"), 9), InputError);
}
