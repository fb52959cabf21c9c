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

// JSON forms of instances, reports and traces.  Colorings use the digit
// string format with '.' for blanks; symmetries are {"kind", "param"};
// rationals are "p/q".

#ifndef DISTEXT_SERIALIZE_HPP
#define DISTEXT_SERIALIZE_HPP

#include "distext/bounds.hpp"
#include "distext/circle.hpp"
#include "distext/dihedral.hpp"
#include "distext/extender.hpp"
#include "distext/oracle.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace distext {

using Json = nlohmann::ordered_json;

inline constexpr const char* kExtReportSchema = "distext-ext-report/1";
inline constexpr const char* kTraceSchema = "distext-extension-trace/1";
inline constexpr const char* kInstanceSchema = "distext-game-instance/1";

/// Malformed input document; offset is the byte position when known.
class InputError : public std::runtime_error
{
public:
    InputError(const std::string& what, std::optional<std::size_t> offset = std::nullopt)
        : std::runtime_error(offset ? what + " (at byte " + std::to_string(*offset) + ")" : what), offset_(offset)
    {
    }
    std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
    std::optional<std::size_t> offset_;
};

inline Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(e.what(), e.byte);
    }
}

inline Json to_json(const Symmetry& s)
{
    return {{"kind", s.is_rotation() ? "rotation" : "reflection"}, {"param", s.param()}};
}

inline Symmetry symmetry_from_json(const Json& j, int n)
{
    if (!j.is_object() || !j.contains("kind") || !j.contains("param"))
        throw InputError("symmetry must be an object with kind and param");
    const auto kind = j.at("kind").get<std::string>();
    const auto param = j.at("param").get<long long>();
    if (kind == "rotation")
        return Symmetry::rotation(n, param);
    if (kind == "reflection")
        return Symmetry::reflection(n, param);
    throw InputError("unknown symmetry kind '" + kind + "'");
}

inline Json to_json(const GameInstance& g)
{
    return {{"schema", kInstanceSchema}, {"n", g.n}, {"k", g.k}, {"blanks", g.blanks}, {"colors", to_string(g.pre)}};
}

inline Json to_json(const PartialColoring& p) { return to_json(GameInstance(p)); }

/// {"n", "k", "blanks", "colors"}; blanks, when given, must match the '.' positions.
inline GameInstance game_instance_from_json(const Json& j)
{
    try {
        if (!j.is_object())
            throw InputError("game instance must be a JSON object");
        if (!j.contains("colors"))
            throw InputError("game instance needs a \"colors\" string");
        const auto colors = j.at("colors").get<std::string>();
        const int k = j.value("k", 2);
        if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(colors.size()))
            throw InputError("n = " + std::to_string(j.at("n").get<int>()) + " but colors has length " +
                             std::to_string(colors.size()));
        PartialColoring pre = [&] {
            try {
                return parse_partial_coloring(colors, k);
            } catch (const PreconditionError& e) {
                throw InputError(std::string("colors: ") + e.what());
            }
        }();
        GameInstance g(std::move(pre));
        if (j.contains("blanks")) {
            auto b = j.at("blanks").get<std::vector<int>>();
            std::sort(b.begin(), b.end());
            if (b != g.blanks)
                throw InputError("blanks do not match the '.' positions of colors");
        }
        return g;
    } catch (const Json::exception& e) {
        throw InputError(std::string("game instance: ") + e.what());
    }
}

inline Json to_json(const ExtReport& r)
{
    Json sizes = Json::array();
    for (const auto& s : r.per_size)
        sizes.push_back({{"m", s.m},
                         {"blank_sets", s.blank_sets},
                         {"fixing_sets", s.fixing_sets},
                         {"failing_sets", s.failing_sets},
                         {"failing_precolorings", s.failing_precolorings}});
    Json j{{"schema", kExtReportSchema}, {"n", r.n}, {"k", r.k}, {"value", r.value}, {"vacuous", r.vacuous}};
    j["worst_failing"] = r.worst_failing ? to_json(r.worst_failing->pre) : Json(nullptr);
    j["per_size"] = std::move(sizes);
    return j;
}

inline Json to_json(const ReflectionPair& p)
{
    Json reds = Json::array(), blues = Json::array();
    for (const auto& s : p.red_reflections)
        reds.push_back(to_json(s));
    for (const auto& s : p.blue_reflections)
        blues.push_back(to_json(s));
    return {{"tau_red", to_json(p.tau_red)},
            {"tau_blue", to_json(p.tau_blue)},
            {"sigma", to_json(p.sigma)},
            {"red_reflections", reds},
            {"blue_reflections", blues}};
}

inline Json to_json(const OrbitStats& s)
{
    return {{"orbit", s.orbit},
            {"red_count", s.red_count},
            {"blue_count", s.blue_count},
            {"blank_positions", s.blank_positions},
            {"w_positions", s.w_positions}};
}

inline Json to_json(const TraceFlags& f)
{
    return {{"forbidden_overflow", f.forbidden_overflow}, {"no_candidate", f.no_candidate},
            {"c1_filter_nonvacuous", f.c1_filter_nonvacuous}, {"wprime_undefined", f.wprime_undefined},
            {"c2_forbidden", f.c2_forbidden}, {"fallback_fired", f.fallback_fired},
            {"no_extension", f.no_extension}};
}

template <typename T>
Json optional_json(const std::optional<T>& v)
{
    if (!v)
        return nullptr;
    if constexpr (std::is_same_v<T, PartialColoring> || std::is_same_v<T, Coloring>)
        return to_string(*v);
    else
        return to_json(*v);
}

inline Json to_json(const ExtensionTrace& t)
{
    Json forbidden = Json::array();
    for (const auto& f : t.forbidden)
        forbidden.push_back(to_string(f));
    Json examined = Json::array();
    for (const auto& c : t.examined) {
        Json e{{"extension", to_string(c.extension)}, {"forbidden", c.forbidden}};
        e["distinguishing_completion"] = optional_json(c.distinguishing_completion);
        e["pair"] = optional_json(c.pair);
        examined.push_back(std::move(e));
    }
    Json j{{"schema", kTraceSchema},
           {"n", t.pre.n()},
           {"k", t.pre.k()},
           {"precoloring", to_string(t.pre)},
           {"blanks", t.pre.blanks()},
           {"w0", t.w0},
           {"forbidden", forbidden},
           {"examined", examined}};
    j["c1"] = optional_json(t.c1);
    j["pair1"] = optional_json(t.pair1);
    j["stats"] = optional_json(t.stats);
    j["wprime_case"] = t.wprime_case;
    j["wprime"] = t.wprime;
    j["c2"] = optional_json(t.c2);
    j["pair2"] = optional_json(t.pair2);
    j["result"] = optional_json(t.result);
    j["route"] = to_string(t.route);
    j["flags"] = to_json(t.flags);
    j["note"] = t.note;
    return j;
}

inline Json to_json(const SharpnessInstance& s)
{
    Json j = to_json(s.pre);
    j["claimed_bound"] = s.claimed_bound;
    j["construction"] = s.construction;
    return j;
}

inline Json to_json(const IndicatorBound& b)
{
    return {{"n", b.n}, {"chi2", b.chi2}, {"chi3", b.chi3}, {"chi4", b.chi4}, {"chi5", b.chi5}, {"value", b.value}};
}

inline Json to_json(const BlankSet& w)
{
    Json pts = Json::array();
    for (const auto& p : w)
        pts.push_back(p.value().str());
    return {{"mode", to_string(w.mode())}, {"points", pts}};
}

/// {"mode": "circle" | "line", "points": ["p/q", ...]}.
inline BlankSet blank_set_from_json(const Json& j)
{
    try {
        const auto mode_name = j.value("mode", std::string("circle"));
        Mode mode;
        if (mode_name == "circle")
            mode = Mode::Circle;
        else if (mode_name == "line")
            mode = Mode::Line;
        else
            throw InputError("mode must be circle or line, got '" + mode_name + "'");
        std::vector<Rational> v;
        for (const auto& p : j.at("points")) {
            try {
                v.push_back(Rational::parse(p.get<std::string>()));
            } catch (const PreconditionError& e) {
                throw InputError(std::string("points: ") + e.what());
            }
        }
        try {
            return BlankSet(mode, std::move(v));
        } catch (const PreconditionError& e) {
            throw InputError(e.what());
        }
    } catch (const Json::exception& e) {
        throw InputError(std::string("blank set: ") + e.what());
    }
}

} // namespace distext

#endif // DISTEXT_SERIALIZE_HPP
