// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LEXLINT_SRC_BUILTIN_DATA_H_
#define LEXLINT_SRC_BUILTIN_DATA_H_

#include <string_view>

namespace lexlint::builtin {

// Contents of core/data/*, compiled in.
std::string_view antonyms_tsv();
std::string_view stopwords_txt();

}  // namespace lexlint::builtin

#endif  // LEXLINT_SRC_BUILTIN_DATA_H_
