// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// Umbrella header.

#ifndef LEXLINT_LEXLINT_H_
#define LEXLINT_LEXLINT_H_

#include "lexlint/analysis.h"
#include "lexlint/code_model.h"
#include "lexlint/config.h"
#include "lexlint/errors.h"
#include "lexlint/evaluation.h"
#include "lexlint/identifier.h"
#include "lexlint/lexicon.h"
#include "lexlint/report.h"
#include "lexlint/rules.h"
#include "lexlint/srcml.h"
#include "lexlint/type_ref.h"
#include "lexlint/version.h"

#endif  // LEXLINT_LEXLINT_H_
