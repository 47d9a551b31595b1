// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace adiabat {

enum class ErrorCode {
  invalid_argument = 1,
  capacity,
  degenerate,
  numerical,
  parse,
  io,
  not_applicable,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception type thrown by every module of the core library. The C API maps
/// the code onto its status enumeration.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adiabat
