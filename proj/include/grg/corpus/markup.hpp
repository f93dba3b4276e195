// Copyright 2026 The GRG Engine Authors
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

#pragma once

#include <string>
#include <string_view>

namespace grg::corpus {

/// Removes HTML tags (keeping their text), script/style/comment content,
/// hyperlink URLs, wiki/markdown link syntax and `{{...}}` templates, then
/// normalizes whitespace: runs without a newline become one space, runs with
/// a newline become a single paragraph break.
///
/// The result never contains `<`, `>`, `{{`, `}}` or a `scheme://` URL, and
/// the function is idempotent.
std::string strip_markup(std::string_view body);

}  // namespace grg::corpus
