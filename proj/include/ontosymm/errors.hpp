// Copyright 2026 The onto-symm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOSYMM_ERRORS_HPP
#define ONTOSYMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ontosymm {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// Exact and float scalars never combine silently.
struct MixedModes : Error {
    using Error::Error;
};

/// An exact result no longer fits into 64-bit numerator/denominator.
struct OverflowError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    using Error::Error;
};

struct InvalidDirection : Error {
    using Error::Error;
};

/// Exact mode was requested but a direction is only known in float form.
struct InexactDirection : Error {
    using Error::Error;
};

struct DomainMismatch : Error {
    using Error::Error;
};

struct CardinalityMismatch : Error {
    using Error::Error;
};

/// The ontological time-reverse relation is only defined over a pair of
/// experiments that are operational time reverses of each other.
struct ExperimentsNotOperationalReverses : Error {
    using Error::Error;
};

struct SpaceTooLarge : Error {
    using Error::Error;
};

struct NotSelfReverse : Error {
    using Error::Error;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

struct SignallingPreparation : Error {
    using Error::Error;
};

struct NonBinaryOutcomes : Error {
    using Error::Error;
};

struct UnknownBuilder : Error {
    using Error::Error;
};

}  // namespace ontosymm

#endif
