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

// Slow, direct reference implementation used to cross-check the library.
// Symmetries are explicit permutation tables; nothing here shares code with
// the mask kernels under test.

#ifndef DISTEXT_TESTS_REFERENCE_ORACLE_HPP
#define DISTEXT_TESTS_REFERENCE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace ref {

using Perm = std::vector<int>;

/// The 2n - 1 non-identity dihedral permutations of Z_n.
inline std::vector<Perm> nontrivial_perms(int n)
{
    std::vector<Perm> out;
    for (int k = 0; k < n; ++k) {
        Perm rot(n), ref(n);
        for (int x = 0; x < n; ++x) {
            rot[x] = (x + k) % n;
            ref[x] = ((k - x) % n + n) % n;
        }
        if (k != 0)
            out.push_back(rot);
        out.push_back(ref);
    }
    return out;
}

inline bool distinguishing(const std::vector<int>& c, const std::vector<Perm>& perms)
{
    for (const auto& p : perms) {
        bool keeps = true;
        for (std::size_t x = 0; x < c.size() && keeps; ++x)
            keeps = c[p[x]] == c[x];
        if (keeps)
            return false;
    }
    return true;
}

inline bool fixing(const std::vector<int>& s, const std::vector<Perm>& perms)
{
    for (const auto& p : perms) {
        bool fixes = true;
        for (int x : s)
            fixes = fixes && p[x] == x;
        if (fixes)
            return false;
    }
    return true;
}

/// Colors in 0..k-1 of every k-coloring, index = base-k number with position 0 least significant.
inline std::vector<int> decode(std::uint64_t idx, int n, int k)
{
    std::vector<int> c(n);
    for (int x = 0; x < n; ++x) {
        c[x] = static_cast<int>(idx % k);
        idx /= k;
    }
    return c;
}

inline int dnum(int n)
{
    auto perms = nontrivial_perms(n);
    for (int k = 1;; ++k) {
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i)
            total *= k;
        for (std::uint64_t i = 0; i < total; ++i)
            if (distinguishing(decode(i, n, k), perms))
                return k;
    }
}

/// pre[x] < 0 marks a blank.
inline bool extends(const std::vector<int>& pre, int k)
{
    const int n = static_cast<int>(pre.size());
    auto perms = nontrivial_perms(n);
    std::vector<int> blanks;
    for (int x = 0; x < n; ++x)
        if (pre[x] < 0)
            blanks.push_back(x);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < blanks.size(); ++i)
        total *= k;
    for (std::uint64_t i = 0; i < total; ++i) {
        auto c = pre;
        std::uint64_t v = i;
        for (int b : blanks) {
            c[b] = static_cast<int>(v % k);
            v /= k;
        }
        if (distinguishing(c, perms))
            return true;
    }
    return false;
}

struct ExtValue
{
    int value = 0;
    bool vacuous = false;
};

/// Direct reading of the definition over every blank set and precoloring.
inline ExtValue ext(int n, int k)
{
    auto perms = nontrivial_perms(n);
    std::uint64_t colorings = 1;
    for (int i = 0; i < n; ++i)
        colorings *= static_cast<std::uint64_t>(k);
    std::vector<char> good(colorings);
    for (std::uint64_t i = 0; i < colorings; ++i)
        good[i] = distinguishing(decode(i, n, k), perms);
    std::vector<std::uint64_t> pow(n + 1, 1);
    for (int i = 1; i <= n; ++i)
        pow[i] = pow[i - 1] * k;

    int smallest_fixing = 0;
    for (int m = n; m >= 1; --m) {
        bool any_fail = false;
        for (std::uint64_t w = 0; w < (1ULL << n) && !any_fail; ++w) {
            std::vector<int> ws, rest;
            for (int x = 0; x < n; ++x)
                ((w >> x) & 1 ? ws : rest).push_back(x);
            if (static_cast<int>(ws.size()) != m || !fixing(ws, perms))
                continue;
            smallest_fixing = m;
            std::uint64_t pres = pow[rest.size()];
            for (std::uint64_t a = 0; a < pres && !any_fail; ++a) {
                std::uint64_t base = 0, v = a;
                for (int x : rest) {
                    base += (v % k) * pow[x];
                    v /= k;
                }
                bool ok = false;
                for (std::uint64_t b = 0; b < pow[m] && !ok; ++b) {
                    std::uint64_t idx = base, u = b;
                    for (int x : ws) {
                        idx += (u % k) * pow[x];
                        u /= k;
                    }
                    ok = good[idx];
                }
                any_fail = !ok;
            }
        }
        if (any_fail)
            return {m + 1, false};
    }
    return {smallest_fixing, true};
}

} // namespace ref

#endif // DISTEXT_TESTS_REFERENCE_ORACLE_HPP
