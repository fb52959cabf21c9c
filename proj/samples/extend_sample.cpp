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

// Extends a two-color precoloring of C_13 with four blanks and prints the
// certificate, then compares the cycle's extension number with its bounds.

#include "distext/distext.hpp"

#include <iostream>

int main()
{
    using namespace distext;

    const auto pre = parse_partial_coloring("..1.21112.112", 2);
    const GameInstance game(pre);
    const auto out = extend_distinguishing(game);
    const auto& t = out.trace;

    std::cout << "precoloring   " << to_string(pre) << "\n";
    std::cout << "w0            " << t.w0 << "\n";
    std::cout << "forbidden     " << t.forbidden.size() << "\n";
    std::cout << "route         " << to_string(t.route) << "\n";
    std::cout << "result        " << to_string(out.result) << "\n";
    std::cout << "distinguishes " << (is_distinguishing(out.result) ? "yes" : "no") << "\n";

    for (int n : {12, 13, 15}) {
        const auto rep = ext_number(n, 2);
        std::cout << "ext(C_" << n << ") = " << rep.value << ", lower " << sharpness_instance(n).claimed_bound
                  << ", upper " << corollary_upper_bound(n).value << "\n";
    }
    return 0;
}
