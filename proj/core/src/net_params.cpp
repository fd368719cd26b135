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

#include "lfda/net_params.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "lfda/error.hpp"
#include "lfda/philox.hpp"

namespace lfda {

using nlohmann::json;

namespace {

void add_layer(std::vector<ParamSpec>& specs, const std::string& module, std::vector<std::size_t> weight_shape) {
  std::size_t fan_in = 1;
  for (std::size_t i = 1; i < weight_shape.size(); ++i) fan_in *= weight_shape[i];
  const std::size_t out = weight_shape.front();
  specs.push_back({module + ".weight", std::move(weight_shape), fan_in});
  specs.push_back({module + ".bias", {out}, fan_in});
}

json config_to_json(const NetConfig& c) {
  return {{"A", c.A},
          {"C", c.C},
          {"n_groups", c.n_groups},
          {"blocks_per_group", c.blocks_per_group},
          {"dak", c.dak},
          {"kpe_widths", c.kpe_widths},
          {"alpha", c.alpha},
          {"leaky_slope", c.leaky_slope},
          {"da_hidden", c.da_hidden},
          {"epi_spatial_kernel", c.epi_spatial_kernel}};
}

NetConfig config_from_json(const json& j) {
  NetConfig c;
  c.A = j.at("A").get<std::size_t>();
  c.C = j.at("C").get<std::size_t>();
  c.n_groups = j.at("n_groups").get<std::size_t>();
  c.blocks_per_group = j.at("blocks_per_group").get<std::size_t>();
  c.dak = j.at("dak").get<std::size_t>();
  c.kpe_widths = j.at("kpe_widths").get<std::vector<std::size_t>>();
  c.alpha = j.at("alpha").get<int>();
  c.leaky_slope = j.at("leaky_slope").get<double>();
  c.da_hidden = j.at("da_hidden").get<std::size_t>();
  c.epi_spatial_kernel = j.at("epi_spatial_kernel").get<std::size_t>();
  return c;
}

}  // namespace

std::size_t NetConfig::tail_stages() const {
  std::size_t stages = 0;
  for (int a = alpha; a > 1; a /= 2) ++stages;
  return stages;
}

void NetConfig::validate() const {
  if (A == 0) throw InvalidArgument("NetConfig: A must be positive");
  if (C == 0 || C % 4 != 0) throw InvalidArgument("NetConfig: C must be a positive multiple of 4");
  if (n_groups == 0) throw InvalidArgument("NetConfig: n_groups must be positive");
  if (dak % 2 == 0) throw InvalidArgument("NetConfig: dak must be odd");
  if (epi_spatial_kernel % 2 == 0) throw InvalidArgument("NetConfig: epi_spatial_kernel must be odd");
  if (kpe_widths.size() < 2 || kpe_widths.front() != 441 || kpe_widths.back() != 15) {
    throw InvalidArgument("NetConfig: kpe_widths must start at 441 and end at 15");
  }
  if (alpha < 1 || !std::has_single_bit(static_cast<unsigned>(alpha))) {
    throw InvalidArgument("NetConfig: alpha must be a power of two");
  }
  if (da_hidden == 0) throw InvalidArgument("NetConfig: da_hidden must be positive");
  if (!(leaky_slope >= 0.0)) throw InvalidArgument("NetConfig: leaky_slope must be ≥ 0");
}

std::size_t ParamSpec::size() const {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<ParamSpec> param_specs(const NetConfig& c) {
  c.validate();
  std::vector<ParamSpec> specs;
  const std::size_t b = c.branch_channels();
  for (std::size_t i = 1; i < c.kpe_widths.size(); ++i) {
    add_layer(specs, "kpe.fc" + std::to_string(i), {c.kpe_widths[i], c.kpe_widths[i - 1]});
  }
  add_layer(specs, "head", {c.C, 3, 3, 3});
  for (std::size_t g = 1; g <= c.n_groups; ++g) {
    const std::string da = "group" + std::to_string(g) + ".dablock.";
    add_layer(specs, da + "kgen_fc1", {c.da_hidden, 16});
    add_layer(specs, da + "kgen_fc2", {c.C * c.dak * c.dak, c.da_hidden});
    add_layer(specs, da + "conv1x1", {c.C, c.C, 1, 1});
    add_layer(specs, da + "ca_fc1", {c.da_hidden, 16});
    add_layer(specs, da + "ca_fc2", {c.C, c.da_hidden});
    for (std::size_t k = 1; k <= c.blocks_per_group; ++k) {
      const std::string p = "group" + std::to_string(g) + ".distg" + std::to_string(k) + ".";
      add_layer(specs, p + "spa1", {c.C, c.C, 3, 3});
      add_layer(specs, p + "spa2", {c.C, c.C, 3, 3});
      add_layer(specs, p + "ang_conv", {b, c.C, c.A, c.A});
      add_layer(specs, p + "ang_up", {c.A * c.A * b, b, 1, 1});
      add_layer(specs, p + "epih_conv", {b, c.C, c.A, c.epi_spatial_kernel});
      add_layer(specs, p + "epih_up", {c.A * b, b, 1, 1});
      add_layer(specs, p + "epiv_conv", {b, c.C, c.A, c.epi_spatial_kernel});
      add_layer(specs, p + "epiv_up", {c.A * b, b, 1, 1});
      add_layer(specs, p + "fuse", {c.C, c.C + 3 * b, 1, 1});
    }
  }
  for (std::size_t s = 1; s <= c.tail_stages(); ++s) {
    add_layer(specs, "tail.up" + std::to_string(s), {4 * c.C, c.C, 3, 3});
  }
  add_layer(specs, "tail.out", {3, c.C, 3, 3});
  return specs;
}

NetParams::NetParams(NetConfig config) : config_(std::move(config)) {
  for (ParamSpec& s : param_specs(config_)) {
    const std::size_t n = s.size();
    tensors_.emplace(std::move(s.name), ParamTensor{std::move(s.shape), std::vector<double>(n, 0.0), s.fan_in});
  }
}

const ParamTensor& NetParams::at(const std::string& name) const {
  const auto it = tensors_.find(name);
  if (it == tensors_.end()) throw InvalidArgument("unknown parameter '" + name + "'");
  return it->second;
}

ParamTensor& NetParams::at(const std::string& name) {
  const auto it = tensors_.find(name);
  if (it == tensors_.end()) throw InvalidArgument("unknown parameter '" + name + "'");
  return it->second;
}

nn::ConvRef NetParams::conv(const std::string& module) const {
  const ParamTensor& w = at(module + ".weight");
  const ParamTensor& b = at(module + ".bias");
  if (w.shape.size() != 4) throw InvalidArgument("'" + module + "' is not a convolution");
  return {w.values, b.values, {w.shape[0], w.shape[1], w.shape[2], w.shape[3]}};
}

nn::LinearRef NetParams::linear(const std::string& module) const {
  const ParamTensor& w = at(module + ".weight");
  const ParamTensor& b = at(module + ".bias");
  if (w.shape.size() != 2) throw InvalidArgument("'" + module + "' is not a linear layer");
  return {w.values, b.values, w.shape[0], w.shape[1]};
}

std::size_t NetParams::total_count() const {
  std::size_t n = 0;
  for (const auto& [name, t] : tensors_) n += t.values.size();
  return n;
}

void NetParams::fill(const std::string& prefix, double value) {
  for (auto& [name, t] : tensors_) {
    if (name.starts_with(prefix)) std::fill(t.values.begin(), t.values.end(), value);
  }
}

NetParams init_params(std::uint64_t seed, const NetConfig& config) {
  NetParams params(config);
  const Philox4x32 gen(mix64(seed));
  std::uint64_t counter = 0;
  for (const ParamSpec& spec : param_specs(config)) {
    ParamTensor& t = params.at(spec.name);
    const bool is_bias = spec.name.ends_with(".bias");
    const double fan = static_cast<double>(spec.fan_in);
    const double bound = is_bias ? 1.0 / std::sqrt(fan) : std::sqrt(6.0 / fan);
    for (double& v : t.values) {
      const auto w = gen.at(counter++);
      const double unit = to_unit((std::uint64_t{w[0]} << 32) | w[1]);
      v = bound * (2.0 * unit - 1.0);
    }
  }
  return params;
}

void save_params(const std::filesystem::path& path, const NetParams& params) {
  json tensors = json::object();
  std::uint64_t offset = 0;
  for (const auto& [name, t] : params.tensors()) {
    tensors[name] = {{"shape", t.shape}, {"dtype", "f64"}, {"offset", offset}};
    offset += t.values.size() * sizeof(double);
  }
  const json header = {{"version", kParamsVersion}, {"config", config_to_json(params.config())}, {"tensors", tensors}};
  const std::string text = header.dump();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  std::uint64_t len = text.size();
  unsigned char len_bytes[8];
  for (int i = 0; i < 8; ++i) len_bytes[i] = static_cast<unsigned char>(len >> (8 * i));
  out.write(reinterpret_cast<const char*>(len_bytes), 8);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (const auto& [name, t] : params.tensors()) {
    for (double v : t.values) {
      auto bits = std::bit_cast<std::uint64_t>(v);
      unsigned char bytes[8];
      for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
      out.write(reinterpret_cast<const char*>(bytes), 8);
    }
  }
  if (!out) throw IoError("failed writing " + path.string());
}

NetParams load_params(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open parameter file " + path.string());
  unsigned char len_bytes[8];
  if (!in.read(reinterpret_cast<char*>(len_bytes), 8)) throw IoError(path.string() + ": truncated header");
  std::uint64_t len = 0;
  for (int i = 0; i < 8; ++i) len |= std::uint64_t{len_bytes[i]} << (8 * i);
  if (len > (std::uint64_t{1} << 30)) throw IoError(path.string() + ": implausible header length");
  std::string text(len, '\0');
  if (!in.read(text.data(), static_cast<std::streamsize>(len))) throw IoError(path.string() + ": truncated header");
  std::vector<char> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  try {
    const json header = json::parse(text);
    if (header.at("version").get<std::string>() != kParamsVersion) {
      throw IoError(path.string() + ": unsupported version " + header.at("version").get<std::string>());
    }
    NetParams params(config_from_json(header.at("config")));
    const json& tensors = header.at("tensors");
    if (tensors.size() != params.tensors().size()) throw IoError(path.string() + ": tensor count mismatch");
    for (auto& [name, t] : params.tensors()) {
      const json& rec = tensors.at(name);
      if (rec.at("dtype").get<std::string>() != "f64") throw IoError(path.string() + ": '" + name + "' is not f64");
      if (rec.at("shape").get<std::vector<std::size_t>>() != t.shape) {
        throw IoError(path.string() + ": shape of '" + name + "' does not match its config");
      }
      const auto offset = rec.at("offset").get<std::uint64_t>();
      if (offset + t.values.size() * 8 > data.size()) throw IoError(path.string() + ": truncated data for " + name);
      ParamTensor& dst = params.at(name);
      for (std::size_t i = 0; i < dst.values.size(); ++i) {
        std::uint64_t bits = 0;
        for (int b = 0; b < 8; ++b) {
          bits |= std::uint64_t{static_cast<unsigned char>(data[offset + i * 8 + static_cast<std::size_t>(b)])} << (8 * b);
        }
        dst.values[i] = std::bit_cast<double>(bits);
      }
    }
    return params;
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": malformed header: " + e.what());
  } catch (const InvalidArgument& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

}  // namespace lfda
