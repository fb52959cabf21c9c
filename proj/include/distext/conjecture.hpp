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

// Computed extension numbers of small cycles against the piecewise
// conjecture: 6 when 5 | n, 5 when 4 | n, 4 otherwise.

#ifndef DISTEXT_CONJECTURE_HPP
#define DISTEXT_CONJECTURE_HPP

#include "distext/bounds.hpp"
#include "distext/error.hpp"
#include "distext/oracle.hpp"
#include "distext/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace distext {

/// Candidate conjectured values, ascending.  Both 5 and 6 when 20 | n.
inline std::vector<int> conjectured_ext(int n)
{
    if (n < 6)
        throw PreconditionError("conjectured_ext: n >= 6 required");
    const bool by5 = n % 5 == 0, by4 = n % 4 == 0;
    if (by5 && by4)
        return {5, 6};
    if (by5)
        return {6};
    if (by4)
        return {5};
    return {4};
}

inline std::string format_candidates(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "|" : "") + std::to_string(v[i]);
    return s;
}

struct ConjectureRow
{
    int n = 0;
    int k = 2;
    std::optional<int> computed;
    bool vacuous = false;
    /// Empty for n < 6, where the conjecture says nothing.
    std::vector<int> conjectured;
    std::optional<int> corollary_bound;
    /// "yes", "no", "n/a" (no conjecture) or "skipped".
    std::string agree;
    double seconds = 0;
    bool skipped = false;
    std::string skip_reason;
};

struct ConjectureOptions
{
    unsigned jobs = 1;
    bool force = false;
    /// Per-n wall-clock budget.
    std::optional<std::chrono::milliseconds> timeout;
};

inline ConjectureRow conjecture_row(int n, const ConjectureOptions& opt = {})
{
    ConjectureRow row;
    row.n = n;
    row.k = n < 6 ? 3 : 2;
    if (n >= 6) {
        row.conjectured = conjectured_ext(n);
        row.corollary_bound = corollary_upper_bound(n).value;
    }
    ExtOptions eo;
    eo.jobs = opt.jobs;
    eo.force = opt.force;
    const auto start = Clock::now();
    if (opt.timeout)
        eo.deadline = start + *opt.timeout;
    try {
        auto rep = ext_number(n, row.k, eo);
        row.computed = rep.value;
        row.vacuous = rep.vacuous;
    } catch (const Timeout& e) {
        row.skipped = true;
        row.skip_reason = e.what();
    } catch (const BudgetExceeded& e) {
        row.skipped = true;
        row.skip_reason = e.what();
    }
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (row.skipped)
        row.agree = "skipped";
    else if (row.conjectured.empty())
        row.agree = "n/a";
    else
        row.agree = std::find(row.conjectured.begin(), row.conjectured.end(), *row.computed) != row.conjectured.end()
                        ? "yes"
                        : "no";
    return row;
}

inline std::vector<ConjectureRow> verify_conjecture(int lo, int hi, const ConjectureOptions& opt = {})
{
    if (lo < 3 || hi < lo)
        throw PreconditionError("verify_conjecture: need 3 <= lo <= hi");
    std::vector<ConjectureRow> rows;
    for (int n = lo; n <= hi; ++n)
        rows.push_back(conjecture_row(n, opt));
    return rows;
}

inline constexpr const char* kConjectureCsvSchema = "distext-conjecture-csv/1";

/// CSV with a versioned comment header; the seconds column only when requested.
inline std::string conjecture_csv(const std::vector<ConjectureRow>& rows, bool timing)
{
    std::string out = std::string("# schema: ") + kConjectureCsvSchema + "\n";
    out += "n,k,computed,conjectured,corollary_bound,agree";
    out += timing ? ",seconds\n" : "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.k) + ",";
        out += r.computed ? std::to_string(*r.computed) : "";
        out += "," + format_candidates(r.conjectured) + ",";
        out += r.corollary_bound ? std::to_string(*r.corollary_bound) : "";
        out += "," + r.agree;
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, ",%.3f", r.seconds);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

} // namespace distext

#endif // DISTEXT_CONJECTURE_HPP
