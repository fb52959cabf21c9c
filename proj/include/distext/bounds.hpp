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

// Lower bounds from faithful subcycle embeddings and non-extendible
// sharpness instances, and the indicator upper bound.  Every lower-bound
// instance is checked against the oracle before it is returned.

#ifndef DISTEXT_BOUNDS_HPP
#define DISTEXT_BOUNDS_HPP

#include "distext/circle.hpp"
#include "distext/dihedral.hpp"
#include "distext/error.hpp"
#include "distext/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace distext {

struct IndicatorBound
{
    int n = 0;
    int chi2 = 0, chi3 = 0, chi4 = 0, chi5 = 0;
    int value = 0;
};

inline IndicatorBound corollary_upper_bound(int n)
{
    if (n < 6)
        throw PreconditionError("corollary_upper_bound: n >= 6 required, got " + std::to_string(n));
    IndicatorBound b;
    b.n = n;
    b.chi2 = n % 2 == 0;
    b.chi3 = n % 3 == 0;
    b.chi4 = n % 4 == 0;
    b.chi5 = n % 5 == 0;
    b.value = 3 * (1 + b.chi2 + 2 * b.chi3 + 2 * b.chi4 + 4 * b.chi5) + 1;
    return b;
}

/// Subcycles up to this size have their extension number computed exactly.
inline constexpr int kExactEmbeddingLimit = 14;

/// Lower bound on ext(C_n; k) from the embedding C_ell -> C_n (ell | n).
/// D(C_ell) > k gives 1 + ell; otherwise ext(C_ell; k) itself, computed for
/// small ell and bounded through further subcycles of C_ell beyond that.
inline int embedding_lower_bound(int ell, int n, int k)
{
    if (ell < 3 || n < 3 || n % ell != 0)
        throw PreconditionError("embedding_lower_bound: need 3 <= ell, ell | n; got ell = " + std::to_string(ell) +
                                ", n = " + std::to_string(n));
    if (k < 1)
        throw PreconditionError("embedding_lower_bound: k >= 1 required");
    if (distinguishing_number(ell) > k)
        return 1 + ell;
    if (ell <= kExactEmbeddingLimit && within_budget(ell, k))
        return ext_number(ell, k).value;
    int best = 1;
    for (int d = 3; d < ell; ++d)
        if (ell % d == 0)
            best = std::max(best, embedding_lower_bound(d, ell, k));
    return best;
}

/// Best embedding bound over all subcycles C_ell of C_n, ell < n.
inline int best_embedding_lower_bound(int n, int k)
{
    int best = 1;
    for (int ell = 3; ell < n; ++ell)
        if (n % ell == 0)
            best = std::max(best, embedding_lower_bound(ell, n, k));
    return best;
}

struct SharpnessInstance
{
    SharpnessInstance(int size, std::vector<int> w, PartialColoring p, std::string how)
        : n(size), blanks(std::move(w)), pre(std::move(p)), claimed_bound(static_cast<int>(blanks.size()) + 1),
          construction(std::move(how))
    {
    }

    int n = 0;
    int k = 2;
    std::vector<int> blanks;
    PartialColoring pre;
    int claimed_bound = 0;
    std::string construction;
};

/// Non-extendible two-color instance: an embedded C5, C4 or C3 of blanks, or
/// three consecutive blanks, with a monochromatic complement.
inline SharpnessInstance sharpness_instance(int n)
{
    if (n < 6)
        throw PreconditionError("sharpness_instance: n >= 6 required, got " + std::to_string(n));
    std::vector<int> w;
    std::string how;
    if (n % 5 == 0) {
        w = embed_cycle_in_cycle(5, n);
        how = "embed-C5";
    } else if (n % 4 == 0) {
        w = embed_cycle_in_cycle(4, n);
        how = "embed-C4";
    } else if (n % 3 == 0) {
        w = embed_cycle_in_cycle(3, n);
        how = "embed-C3";
    } else {
        w = {0, 1, n - 1};
        how = "three-point";
    }
    auto pre = PartialColoring::blank_out(Coloring::uniform(CycleSize(n), 2, kRed), w);
    SharpnessInstance s(n, std::move(w), std::move(pre), std::move(how));
    if (!is_fixing_set(n, s.blanks) || precoloring_extends(s.pre))
        throw ConsistencyError("sharpness instance " + to_string(s.pre) + " (" + s.construction +
                               ") is not a non-extendible fixing-set instance");
    return s;
}

struct ThreeBlankCensus
{
    int n = 0;
    std::uint64_t blank_sets = 0;
    std::uint64_t failing_sets = 0;
    std::uint64_t failing_precolorings = 0;
    std::uint64_t failing_two_colored = 0;
    /// First non-extendible instance whose complement uses both colors.
    std::optional<PartialColoring> two_colored_witness;
};

/// Census of non-extendible two-color precolorings with three blanks.
inline ThreeBlankCensus three_blank_census(int n, unsigned jobs = 1)
{
    ThreeBlankCensus c;
    c.n = n;
    for (const auto& e : census_nonextendible(n, 3, jobs)) {
        ++c.blank_sets;
        if (e.failing == 0)
            continue;
        ++c.failing_sets;
        c.failing_precolorings += e.failing;
        c.failing_two_colored += e.failing_two_colored;
        if (!c.two_colored_witness && e.two_colored_witness)
            c.two_colored_witness = e.two_colored_witness;
    }
    return c;
}

} // namespace distext

#endif // DISTEXT_BOUNDS_HPP
