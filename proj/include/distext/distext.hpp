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

#ifndef DISTEXT_DISTEXT_HPP
#define DISTEXT_DISTEXT_HPP

#include "distext/bounds.hpp"
#include "distext/circle.hpp"
#include "distext/conjecture.hpp"
#include "distext/dihedral.hpp"
#include "distext/error.hpp"
#include "distext/extender.hpp"
#include "distext/oracle.hpp"
#include "distext/parallel.hpp"
#include "distext/rational.hpp"
#include "distext/rng.hpp"
#include "distext/serialize.hpp"
#include "distext/suites.hpp"

#endif // DISTEXT_DISTEXT_HPP
