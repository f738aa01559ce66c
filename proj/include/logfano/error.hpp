/*
 * Copyright 2026 The logfano Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOGFANO_ERROR_HPP
#define LOGFANO_ERROR_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logfano {

enum class ErrorCode {
  NonSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZeroPattern,
  UnknownType,
  InvalidRank,
  IndexOutOfRange,
  NotReduced,
  MTooSmall,
  LengthMismatch,
  NotPositiveRoot,
  NotSymmetrizable,
  NotFiniteType,
  CapExceeded,
  Overflow,
  InvalidInput,
  InternalError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::AsymmetricZeroPattern: return "AsymmetricZeroPattern";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotPositiveRoot: return "NotPositiveRoot";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code that
/// callers (notably the CLI) can map to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return out;
}

}  // namespace detail
}  // namespace logfano

#endif  // LOGFANO_ERROR_HPP
