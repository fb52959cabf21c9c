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

#ifndef DISTEXT_ERROR_HPP
#define DISTEXT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace distext {

/// Input outside an operation's documented domain.
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Two objects that must share a cycle size do not.
class SizeMismatch : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

/// Exact arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

/// The quantity asked for does not exist (e.g. ext_D with too few colors).
class UndefinedQuantity : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// An exhaustive computation would exceed the desk-scale budget.
class BudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A cooperative deadline expired before the computation finished.
class Timeout : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// No reflection centre with the required property exists in the blank set.
class NoW0Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant that the construction guarantees did not hold.
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace distext

#endif // DISTEXT_ERROR_HPP
