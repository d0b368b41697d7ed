// Copyright 2026 The ctxflow Authors
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

#ifndef CTXFLOW_ERRORS_H
#define CTXFLOW_ERRORS_H

#include <stdexcept>
#include <string>

namespace ctxflow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A vector with (numerically) zero norm was given where a direction is needed.
class ZeroVectorError : public Error {
   public:
    using Error::Error;
};

/// A state that should be unit-norm is not.
class NotNormalizedError : public Error {
   public:
    using Error::Error;
};

/// A path label is not part of the network (or not a label at all).
class UnknownPathError : public Error {
   public:
    using Error::Error;
};

/// A stage index outside 1..stage_count.
class BadStageError : public Error {
   public:
    using Error::Error;
};

/// A weak value was requested for an outcome that has zero probability.
class UndefinedPostselectionError : public Error {
   public:
    using Error::Error;
};

/// A network description violates the interferometer invariants.
class InvalidNetworkError : public Error {
   public:
    using Error::Error;
};

/// Malformed textual input (state literal, network document, ...).
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace ctxflow

#endif
