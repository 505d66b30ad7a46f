// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#include "kfactor/error.hpp"

namespace kfactor {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidKab: return "InvalidKab";
    case ErrorCode::ConnectedBoundUnavailable: return "ConnectedBoundUnavailable";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::ParityUnfixable: return "ParityUnfixable";
    case ErrorCode::KFactorabilityFailed: return "KFactorabilityFailed";
    case ErrorCode::NoValidX: return "NoValidX";
    case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorCode::InvalidPackingParams: return "InvalidPackingParams";
    case ErrorCode::PackingFailed: return "PackingFailed";
    case ErrorCode::NotGraphic: return "NotGraphic";
    case ErrorCode::InfeasibleRegular: return "InfeasibleRegular";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::SwitchNotFound: return "SwitchNotFound";
    case ErrorCode::InvalidSwitch: return "InvalidSwitch";
    case ErrorCode::VertexCountMismatch: return "VertexCountMismatch";
    case ErrorCode::InconsistentReport: return "InconsistentReport";
    }
    return "Unknown";
}

bool is_internal(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SwitchNotFound:
    case ErrorCode::InconsistentReport:
    case ErrorCode::InvalidSwitch:
        return true;
    default:
        return false;
    }
}

}  // namespace kfactor
