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

#include "tsc/error.h"

namespace tsc {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::MalformedRotation: return "MalformedRotation";
        case ErrorCode::OddChi: return "OddChi";
        case ErrorCode::LoopCreated: return "LoopCreated";
        case ErrorCode::ContractionDisconnects: return "ContractionDisconnects";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::NotTrivalent: return "NotTrivalent";
        case ErrorCode::MissingParentage: return "MissingParentage";
        case ErrorCode::BadFaceSize: return "BadFaceSize";
        case ErrorCode::MixedColorF: return "MixedColorF";
        case ErrorCode::BadPromoteColor: return "BadPromoteColor";
        case ErrorCode::UnclassifiedFace: return "UnclassifiedFace";
        case ErrorCode::NotEdgeColorable: return "NotEdgeColorable";
        case ErrorCode::ColorMissing: return "ColorMissing";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::GaugeMismatch: return "GaugeMismatch";
        case ErrorCode::OddDegreeSeed: return "OddDegreeSeed";
        case ErrorCode::Degree2Seed: return "Degree2Seed";
        case ErrorCode::QuotientTooLarge: return "QuotientTooLarge";
        case ErrorCode::LemmaViolation: return "LemmaViolation";
        case ErrorCode::DependencyViolation: return "DependencyViolation";
        case ErrorCode::NoValidDecomposition: return "NoValidDecomposition";
        case ErrorCode::ScheduleConflict: return "ScheduleConflict";
        case ErrorCode::InconsistentOutcome: return "InconsistentOutcome";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::UnknownFormat: return "UnknownFormat";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace tsc
