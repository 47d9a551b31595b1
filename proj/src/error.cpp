// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/error.hpp"

namespace adiabat {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument:
      return "invalid_argument";
    case ErrorCode::capacity:
      return "capacity";
    case ErrorCode::degenerate:
      return "degenerate";
    case ErrorCode::numerical:
      return "numerical";
    case ErrorCode::parse:
      return "parse";
    case ErrorCode::io:
      return "io";
    case ErrorCode::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

}  // namespace adiabat
