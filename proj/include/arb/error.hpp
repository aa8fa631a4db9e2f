// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_ERROR_HPP
#define ARB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace arb {

enum class ErrorCode {
    kInvalidArgument = 1,
    kParse,
    kIo,
    kTooLarge,
    kInfeasible,
    kNotConverged,
    kCapacityViolation,
    kCausalityViolation,
    kDecodeFailure,
    kVerificationFailure,
    kInternal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorCode::kInvalidArgument, what);
}

}  // namespace arb

#endif  // ARB_ERROR_HPP
