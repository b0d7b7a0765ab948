// Copyright 2026 The akq Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace akq {

/// Base for every error thrown by the library. Callers that only care about
/// "the input was bad" can catch this.
struct AkqError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidBlochVector : AkqError {
    using AkqError::AkqError;
};

struct InvalidConfiguration : AkqError {
    using AkqError::AkqError;
};

struct DimensionMismatch : AkqError {
    using AkqError::AkqError;
};

struct InvalidState : AkqError {
    using AkqError::AkqError;
};

}  // namespace akq
