// Copyright 2026 The Sublab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBLAB_NORMALIZER_H_
#define SUBLAB_NORMALIZER_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace sublab {

enum class NormalizationForm { kNFC, kNFKC, kNone };

std::string_view NormalizationFormName(NormalizationForm form);
absl::StatusOr<NormalizationForm> ParseNormalizationForm(std::string_view name);

// Text normalization applied before pre-tokenization. Every model records the
// configuration it was trained with.
struct NormalizationConfig {
  NormalizationForm form = NormalizationForm::kNFKC;
  bool lowercase = false;
  bool collapse_whitespace = true;

  friend bool operator==(const NormalizationConfig&,
                         const NormalizationConfig&) = default;
};

// Applies the Unicode normalization form, optional lowercasing, then maps
// every whitespace character to U+0020, collapses runs when configured and
// strips leading/trailing whitespace. Input must be valid UTF-8.
std::string NormalizeText(std::string_view raw, const NormalizationConfig& cfg);

}  // namespace sublab

#endif  // SUBLAB_NORMALIZER_H_
