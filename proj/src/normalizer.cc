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

#include "sublab/normalizer.h"

#include <cctype>

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "sublab/string_util.h"
#include "sublab/utf8.h"

namespace sublab {
namespace {

const icu::Normalizer2* GetNormalizer(NormalizationForm form) {
  UErrorCode status = U_ZERO_ERROR;
  switch (form) {
    case NormalizationForm::kNFC:
      return icu::Normalizer2::getNFCInstance(status);
    case NormalizationForm::kNFKC:
      return icu::Normalizer2::getNFKCInstance(status);
    case NormalizationForm::kNone:
      return nullptr;
  }
  return nullptr;
}

bool IsAscii(std::string_view s) {
  for (char c : s) {
    if (static_cast<unsigned char>(c) >= 0x80) return false;
  }
  return true;
}

}  // namespace

std::string_view NormalizationFormName(NormalizationForm form) {
  switch (form) {
    case NormalizationForm::kNFC:
      return "NFC";
    case NormalizationForm::kNFKC:
      return "NFKC";
    case NormalizationForm::kNone:
      return "None";
  }
  return "None";
}

absl::StatusOr<NormalizationForm> ParseNormalizationForm(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "nfc") return NormalizationForm::kNFC;
  if (lower == "nfkc") return NormalizationForm::kNFKC;
  if (lower == "none" || lower == "identity") return NormalizationForm::kNone;
  return absl::InvalidArgumentError(
      StrCat("unknown normalization form \"", name, "\""));
}

std::string NormalizeText(std::string_view raw, const NormalizationConfig& cfg) {
  std::string text;
  // ASCII is invariant under NFC/NFKC, so the ICU round trip is skipped.
  const bool needs_icu = !IsAscii(raw) && (cfg.form != NormalizationForm::kNone ||
                                           cfg.lowercase);
  if (needs_icu) {
    icu::UnicodeString u = icu::UnicodeString::fromUTF8(
        icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
    const icu::Normalizer2* norm = GetNormalizer(cfg.form);
    UErrorCode status = U_ZERO_ERROR;
    if (norm != nullptr) u = norm->normalize(u, status);
    if (cfg.lowercase) {
      u.toLower(icu::Locale::getRoot());
      if (norm != nullptr) u = norm->normalize(u, status);
    }
    u.toUTF8String(text);
  } else {
    text.assign(raw);
    if (cfg.lowercase) {
      for (char& c : text) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
    }
  }

  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool any = false;
  for (char32_t c : DecodeUtf8(text)) {
    if (u_isUWhiteSpace(static_cast<UChar32>(c))) {
      if (!any) continue;
      if (cfg.collapse_whitespace) {
        pending_space = true;
      } else {
        out.push_back(' ');
      }
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    any = true;
    AppendUtf8(c, &out);
  }
  if (!cfg.collapse_whitespace) {
    while (!out.empty() && out.back() == ' ') out.pop_back();
  }
  return out;
}

}  // namespace sublab
