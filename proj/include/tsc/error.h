// Copyright 2026 The tsc Authors
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

#ifndef TSC_ERROR_H
#define TSC_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsc {

enum class ErrorCode {
    DisconnectedGraph,
    LoopEdge,
    MalformedRotation,
    OddChi,
    LoopCreated,
    ContractionDisconnects,
    NotBipartite,
    NotTrivalent,
    MissingParentage,
    BadFaceSize,
    MixedColorF,
    BadPromoteColor,
    UnclassifiedFace,
    NotEdgeColorable,
    ColorMissing,
    SizeMismatch,
    NotACycle,
    GaugeMismatch,
    OddDegreeSeed,
    Degree2Seed,
    QuotientTooLarge,
    LemmaViolation,
    DependencyViolation,
    NoValidDecomposition,
    ScheduleConflict,
    InconsistentOutcome,
    BadParams,
    UnknownFormat,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI and the tests can dispatch on it without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace tsc

#endif
