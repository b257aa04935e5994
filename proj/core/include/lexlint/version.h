// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LEXLINT_VERSION_H_
#define LEXLINT_VERSION_H_

#include <string_view>

namespace lexlint {

inline constexpr std::string_view kToolVersion = "0.1.0";
// Bumped only when the report layout changes.
inline constexpr std::string_view kReportSchemaVersion = "1";
// srcML schema the reader was written against.
inline constexpr std::string_view kSrcmlSchemaVersion = "1.0";

}  // namespace lexlint

#endif  // LEXLINT_VERSION_H_
