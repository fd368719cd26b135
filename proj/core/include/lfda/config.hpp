// Copyright (c) 2026 The lfdanet-toolkit Authors. All Rights Reserved.
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

#include <filesystem>
#include <iosfwd>

#include "lfda/net_params.hpp"

namespace lfda {

/// Applies `key = value` lines to `base`. Keys are NetConfig field names;
/// kpe_widths takes a comma separated list (optionally in brackets). Blank
/// lines, `#` comments and `[section]` headers are ignored. Throws
/// InvalidArgument naming the line on unknown keys or malformed values.
NetConfig apply_config(NetConfig base, std::istream& in);

/// Throws IoError when the file cannot be read.
NetConfig load_config(const std::filesystem::path& path, NetConfig base = {});

}  // namespace lfda
