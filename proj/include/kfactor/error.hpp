// Copyright (c) kfactor contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kfactor {

enum class ErrorCode {
    InvalidSequence,
    InvalidParams,
    InvalidKab,
    ConnectedBoundUnavailable,
    KTooLarge,
    RetriesExhausted,
    ParityUnfixable,
    KFactorabilityFailed,
    NoValidX,
    InvalidFamilyParams,
    InvalidPackingParams,
    PackingFailed,
    NotGraphic,
    InfeasibleRegular,
    NotFactorable,
    SwitchNotFound,
    InvalidSwitch,
    VertexCountMismatch,
    InconsistentReport,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that indicate a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace kfactor
