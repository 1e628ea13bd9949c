// Copyright 2026 The ists Authors.
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

// Small string helpers shared by the file readers.

#ifndef ISTS_TEXT_HPP_
#define ISTS_TEXT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ists {

std::string_view trim(std::string_view text);
std::string_view rtrim(std::string_view text);
std::vector<std::string> split_ws(std::string_view text);
// Splits on every occurrence of `sep`; pieces are not trimmed.
std::vector<std::string> split_on(std::string_view text, std::string_view sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// `key=value` lines; '#' starts a comment line. Later keys override
// earlier ones. Throws ParseError on a line without '='.
std::map<std::string, std::string> read_key_values(const std::string& path);

// 32-bit FNV-1a; stable across platforms.
std::uint32_t fnv1a(std::string_view text);

}  // namespace ists

#endif  // ISTS_TEXT_HPP_
