// Copyright (c) 2026 The WordVIS Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wordvis::unicode {

/// Replacement scalar substituted for every malformed UTF-8 sequence.
inline constexpr char32_t kReplacement = U'�';

// Decodes UTF-8 into scalars. Invalid bytes, overlong forms, surrogates and
// truncated sequences each decode to one U+FFFD; decoding never fails.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view scalars);
void append_utf8(std::string& out, char32_t scalar);

/// Number of scalars `decode_utf8` would produce.
std::size_t scalar_count(std::string_view bytes);

/// Simple (1:1) lowercase mapping. Covers ASCII, Latin-1, Latin Extended-A,
/// basic Greek and Cyrillic; other scalars map to themselves.
char32_t fold_case(char32_t c);

bool is_space(char32_t c);

/// Strips leading/trailing whitespace (ASCII and the common Unicode spaces).
std::u32string_view trim(std::u32string_view s);
std::string trim_utf8(std::string_view s);

}  // namespace wordvis::unicode
