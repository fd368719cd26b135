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

#include "lfda/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>

#include "lfda/error.hpp"
#include "lfda/parallel.hpp"

namespace lfda {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\"'");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"'");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InvalidArgument(where + ": cannot parse '" + text + "'");
  }
  return value;
}

std::size_t env_cap() {
  const char* env = std::getenv("LFDANET_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  std::size_t cap = 0;
  const std::string_view text(env);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || end != text.data() + text.size() || cap == 0) return 0;
  return cap;
}

}  // namespace

std::size_t default_thread_count() {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t cap = env_cap();
  return cap == 0 ? hw : std::min(hw, cap);
}

std::size_t resolve_thread_count(std::size_t requested) {
  if (requested == 0) return default_thread_count();
  const std::size_t cap = env_cap();
  return cap == 0 ? requested : std::min(requested, cap);
}

NetConfig apply_config(NetConfig cfg, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty() || body.front() == '[') continue;
    const auto eq = body.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string::npos) throw InvalidArgument(where + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    const std::string at = where + " (" + key + ")";

    if (key == "A") cfg.A = parse_number<std::size_t>(value, at);
    else if (key == "C") cfg.C = parse_number<std::size_t>(value, at);
    else if (key == "n_groups") cfg.n_groups = parse_number<std::size_t>(value, at);
    else if (key == "blocks_per_group") cfg.blocks_per_group = parse_number<std::size_t>(value, at);
    else if (key == "dak") cfg.dak = parse_number<std::size_t>(value, at);
    else if (key == "alpha") cfg.alpha = parse_number<int>(value, at);
    else if (key == "leaky_slope") cfg.leaky_slope = parse_number<double>(value, at);
    else if (key == "da_hidden") cfg.da_hidden = parse_number<std::size_t>(value, at);
    else if (key == "epi_spatial_kernel") cfg.epi_spatial_kernel = parse_number<std::size_t>(value, at);
    else if (key == "kpe_widths") {
      std::string list = value;
      std::erase_if(list, [](char c) { return c == '[' || c == ']'; });
      cfg.kpe_widths.clear();
      std::size_t start = 0;
      while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const std::string item = trim(std::string_view(list).substr(start, comma - start));
        cfg.kpe_widths.push_back(parse_number<std::size_t>(item, at));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else {
      throw InvalidArgument(where + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

NetConfig load_config(const std::filesystem::path& path, NetConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  return apply_config(std::move(base), in);
}

}  // namespace lfda
