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

#include "lfdanet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lfda/config.hpp"
#include "lfda/danet.hpp"
#include "lfda/error.hpp"
#include "lfda/grid.hpp"
#include "lfda/image_io.hpp"
#include "lfda/metrics.hpp"
#include "lfda/parallel.hpp"
#include "lfda/patch.hpp"
#include "lfda/philox.hpp"
#include "lfda/scene.hpp"

namespace lfda::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kReferenceParams = 3.80e6;
constexpr double kReferenceFlops = 65.93e9;

struct Globals {
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::string config;
};

std::uint64_t name_hash(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

std::uint64_t scene_seed(std::uint64_t seed, const std::string& name) { return mix64(seed ^ name_hash(name)); }

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::vector<NamedLightField> load_dataset(const fs::path& root, std::optional<std::size_t> views = std::nullopt) {
  if (!fs::exists(root)) throw IoError("no such directory: " + root.string());
  std::vector<NamedLightField> scenes;
  for (const fs::path& dir : list_scenes(root)) {
    SceneManifest m = read_manifest(dir);
    if (views && (m.U > *views || m.V > *views)) m = central_views(m, *views);
    scenes.push_back({m.name, load_scene(m)});
  }
  if (scenes.empty()) throw IoError("no scenes found under " + root.string());
  return scenes;
}

NetConfig resolve_config(const Globals& g) {
  return g.config.empty() ? NetConfig{} : load_config(g.config);
}

NetParams resolve_params(const std::string& path, const Globals& g) {
  if (!path.empty()) return load_params(path);
  return init_params(g.seed, resolve_config(g));
}

Degradation make_degradation(double sigma, double noise, int alpha) {
  Degradation d{sigma, noise, alpha};
  d.validate();
  return d;
}

struct DegradeArgs {
  std::string in, out;
  double sigma = 0.0, noise = 0.0;
  int alpha = 4;
};

int cmd_degrade(const DegradeArgs& a, const Globals& g, std::ostream& out) {
  const Degradation d = make_degradation(a.sigma, a.noise, a.alpha);
  const std::size_t threads = resolve_thread_count(g.threads);
  const auto scenes = load_dataset(a.in);
  for (const NamedLightField& s : scenes) {
    const std::uint64_t seed = scene_seed(g.seed, s.name);
    const LightField lr = degrade_lf(s.lf, d, seed, threads);
    save_scene(lr, fs::path(a.out) / s.name, s.name, DegradationRecord{d, seed});
    out << s.name << ": " << s.lf.dims().H << "x" << s.lf.dims().W << " -> " << lr.dims().H << "x" << lr.dims().W
        << "\n";
  }
  return kExitOk;
}

struct PatchifyArgs {
  std::string in, out;
  double sigma = 0.0, noise = 0.0;
  int alpha = 4;
  bool random = false;
  bool augment = false;
};

int cmd_patchify(const PatchifyArgs& a, const Globals& g, std::ostream& out) {
  const std::size_t threads = resolve_thread_count(g.threads);
  const auto scenes = load_dataset(a.in);
  std::mt19937_64 rng(g.seed);
  std::vector<PatchPair> all;
  for (const NamedLightField& s : scenes) {
    const std::uint64_t seed = scene_seed(g.seed, s.name);
    std::vector<PatchPair> patches =
        a.random ? patchify_sampled(s.lf, rng, seed, s.name, threads)
                 : patchify(s.lf, make_degradation(a.sigma, a.noise, a.alpha), seed, s.name, threads);
    for (PatchPair& p : patches) {
      if (a.augment) {
        std::uniform_int_distribution<int> pick(0, AugCode::kCount - 1);
        p = lfda::augment(p, AugCode(pick(rng)));
      }
      all.push_back(std::move(p));
    }
    out << s.name << ": " << patches.size() << " patches\n";
  }
  write_patch_store(a.out, all);
  out << "total: " << all.size() << " patches\n";
  return kExitOk;
}

struct MetricsArgs {
  std::string pred, gt, csv, dataset;
};

int cmd_metrics(const MetricsArgs& a, const Globals& g, std::ostream& out) {
  const auto gt = load_dataset(a.gt);
  const auto pred = load_dataset(a.pred);
  const std::string name = a.dataset.empty() ? fs::path(a.gt).filename().string() : a.dataset;
  const MetricReport report = dataset_score(pred, gt, name, resolve_thread_count(g.threads));
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw IoError("cannot write " + a.csv);
    write_csv(csv, report);
  }
  for (const SceneScore& s : report.scenes) {
    out << s.scene << ": " << format("%.2f", s.psnr) << "/" << format("%.3f", s.ssim) << "\n";
  }
  out << summary_line(report) << "\n";
  return kExitOk;
}

struct GridArgs {
  std::string in, params, csv;
  double gt_sigma = 0.0, gt_noise = 0.0;
  std::string b_in = "0:3:0.3";
  std::string n_in = "0:50:5";
};

int cmd_grid(const GridArgs& a, const Globals& g, std::ostream& out) {
  GridSpec spec;
  spec.b_in = Range::parse(a.b_in);
  spec.n_in = Range::parse(a.n_in);
  spec.gt_sigma = a.gt_sigma;
  spec.gt_noise = a.gt_noise;
  spec.validate();
  const NetParams params = resolve_params(a.params, g);
  const auto scenes = load_dataset(a.in, params.config().A);
  const GridResult result = run_mismatch_grid(scenes, spec, params, g.seed, resolve_thread_count(g.threads));
  if (a.csv.empty()) {
    write_grid_csv(out, result);
  } else {
    std::ofstream csv(a.csv);
    if (!csv) throw IoError("cannot write " + a.csv);
    write_grid_csv(csv, result);
    out << "grid " << result.b_values.size() << "x" << result.n_values.size() << " -> " << a.csv << "\n";
  }
  return kExitOk;
}

struct ForwardArgs {
  std::string in, out, params;
  std::optional<double> sigma, noise;
};

int cmd_forward(const ForwardArgs& a, const Globals& g, std::ostream& out) {
  if (a.sigma.has_value() != a.noise.has_value()) throw InvalidArgument("--sigma and --noise must be given together");
  const NetParams params = resolve_params(a.params, g);
  const std::size_t threads = resolve_thread_count(g.threads);
  if (!fs::exists(a.in)) throw IoError("no such directory: " + a.in);
  for (const fs::path& dir : list_scenes(a.in)) {
    SceneManifest m = read_manifest(dir);
    if (m.U > params.config().A || m.V > params.config().A) m = central_views(m, params.config().A);
    Degradation d;
    if (a.sigma) {
      d = make_degradation(*a.sigma, *a.noise, params.config().alpha);
    } else if (m.degradation) {
      d = m.degradation->degradation;
    } else {
      throw InvalidArgument("scene '" + m.name + "' has no degradation record; pass --sigma and --noise");
    }
    LightField sr = network_forward(load_scene(m), d, params, threads);
    clip(sr.values());
    save_scene(sr, fs::path(a.out) / m.name, m.name);
    out << m.name << ": " << sr.dims().H << "x" << sr.dims().W << "\n";
  }
  return kExitOk;
}

struct InspectArgs {
  std::string what, params, out = "kernels.png";
  std::size_t height = 32, width = 32;
  std::string inputs = "0,0;1.5,15;3,30;4.5,50";
};

std::vector<Degradation> parse_inputs(const std::string& text, int alpha) {
  std::vector<Degradation> list;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw InvalidArgument("--inputs items must be sigma,noise: '" + item + "'");
    try {
      list.push_back(make_degradation(std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1)), alpha));
    } catch (const std::logic_error&) {
      throw InvalidArgument("--inputs: cannot parse '" + item + "'");
    }
  }
  if (list.empty()) throw InvalidArgument("--inputs is empty");
  return list;
}

std::string signed_percent(double ratio) { return format("%+.1f%%", 100.0 * ratio); }

int cmd_inspect(const InspectArgs& a, const Globals& g, std::ostream& out) {
  const NetParams params = a.params.empty() ? NetParams(resolve_config(g)) : load_params(a.params);
  const NetConfig& cfg = params.config();
  if (a.what == "count") {
    for (const ModuleCount& row : param_breakdown(cfg)) out << row.module << " " << row.count << "\n";
    const auto total = static_cast<double>(count_params(cfg));
    out << "total " << count_params(cfg) << " (" << format("%.2fM", total / 1e6) << ")\n";
    out << "reference 3.80M delta " << format("%+.2fM", (total - kReferenceParams) / 1e6) << " ("
        << signed_percent(total / kReferenceParams - 1.0) << ")\n";
  } else if (a.what == "flops") {
    const FlopReport r = estimate_flops(cfg, {cfg.A, cfg.A, 3, a.height, a.width});
    for (const auto& [module, macs] : r.breakdown) out << module << " " << macs << "\n";
    const auto macs = static_cast<double>(r.macs);
    out << "input " << cfg.A << "x" << cfg.A << "x" << a.height << "x" << a.width << "\n";
    out << "MACs " << r.macs << " (" << format("%.2fG", macs / 1e9) << ")\n";
    out << "2*MACs " << r.flops << " (" << format("%.2fG", 2.0 * macs / 1e9) << ")\n";
    out << "reference 65.93G delta (MACs) " << format("%+.2fG", (macs - kReferenceFlops) / 1e9) << " ("
        << signed_percent(macs / kReferenceFlops - 1.0) << ")\n";
  } else if (a.what == "kernels") {
    const KernelGrid grid = dump_da_kernels(params, parse_inputs(a.inputs, cfg.alpha));
    write_png(a.out, grid.image);
    out << "kernel grid " << grid.rows << "x" << grid.cols << " (" << grid.image.height() << "x"
        << grid.image.width() << " px) -> " << a.out << "\n";
  } else {
    throw InvalidArgument("inspect expects count, flops or kernels, got '" + a.what + "'");
  }
  return kExitOk;
}

int cmd_init(const std::string& path, const Globals& g, std::ostream& out) {
  const NetParams params = init_params(g.seed, resolve_config(g));
  save_params(path, params);
  out << "wrote " << params.total_count() << " parameters to " << path << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Light-field degradation and SR evaluation toolkit", "lfdanet"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware, capped by LFDANET_THREADS)");
  app.add_option("--config", g.config, "key = value network config file");

  DegradeArgs deg;
  auto* degrade = app.add_subcommand("degrade", "Blur, downsample and add noise to every scene");
  degrade->add_option("--in", deg.in, "HR dataset or scene directory")->required();
  degrade->add_option("--out", deg.out, "Output dataset directory")->required();
  degrade->add_option("--sigma", deg.sigma, "Gaussian kernel width on the HR grid");
  degrade->add_option("--noise", deg.noise, "Noise level on the 0-255 scale");
  degrade->add_option("--alpha", deg.alpha, "Downscale factor")->capture_default_str();

  PatchifyArgs pat;
  auto* patchify_cmd = app.add_subcommand("patchify", "Cut HR/LR training patch pairs");
  patchify_cmd->add_option("--in", pat.in, "HR dataset or scene directory")->required();
  patchify_cmd->add_option("--out", pat.out, "Patch store directory")->required();
  patchify_cmd->add_option("--sigma", pat.sigma, "Fixed kernel width");
  patchify_cmd->add_option("--noise", pat.noise, "Fixed noise level");
  patchify_cmd->add_option("--alpha", pat.alpha, "Downscale factor")->capture_default_str();
  patchify_cmd->add_flag("--random", pat.random, "Sample a degradation per patch");
  patchify_cmd->add_flag("--augment", pat.augment, "Apply a random augmentation code per patch");

  MetricsArgs met;
  auto* metrics = app.add_subcommand("metrics", "Score predictions against ground truth");
  metrics->add_option("--pred", met.pred, "Predicted dataset")->required();
  metrics->add_option("--gt", met.gt, "Ground-truth dataset")->required();
  metrics->add_option("--csv", met.csv, "CSV report path");
  metrics->add_option("--dataset", met.dataset, "Dataset label (default: ground-truth directory name)");

  GridArgs gr;
  auto* grid = app.add_subcommand("grid", "Sweep input degradations against a fixed ground truth");
  grid->add_option("--in", gr.in, "HR dataset or scene directory")->required();
  grid->add_option("--gt-sigma", gr.gt_sigma, "Ground-truth kernel width");
  grid->add_option("--gt-noise", gr.gt_noise, "Ground-truth noise level");
  grid->add_option("--b-in", gr.b_in, "Input kernel widths start:stop:step")->capture_default_str();
  grid->add_option("--n-in", gr.n_in, "Input noise levels start:stop:step")->capture_default_str();
  grid->add_option("--params", gr.params, "Parameter file (default: fresh init from --seed)");
  grid->add_option("--csv", gr.csv, "Grid CSV path (default: stdout)");

  ForwardArgs fw;
  auto* forward = app.add_subcommand("forward", "Run the reference network on LR scenes");
  forward->add_option("--in", fw.in, "LR dataset or scene directory")->required();
  forward->add_option("--out", fw.out, "Output dataset directory")->required();
  forward->add_option("--params", fw.params, "Parameter file (default: fresh init from --seed)");
  forward->add_option("--sigma", fw.sigma, "Kernel width fed to the network (default: scene record)");
  forward->add_option("--noise", fw.noise, "Noise level fed to the network (default: scene record)");

  InspectArgs ins;
  auto* inspect = app.add_subcommand("inspect", "Report parameter counts, FLOPs or DA kernels");
  inspect->add_option("what", ins.what, "count | flops | kernels")->required();
  inspect->add_option("--params", ins.params, "Parameter file (default: config only)");
  inspect->add_option("--height", ins.height, "LR height for flops")->capture_default_str();
  inspect->add_option("--width", ins.width, "LR width for flops")->capture_default_str();
  inspect->add_option("--inputs", ins.inputs, "sigma,noise;... for kernels")->capture_default_str();
  inspect->add_option("--out", ins.out, "Kernel grid PNG")->capture_default_str();

  std::string init_out;
  auto* init = app.add_subcommand("init", "Write freshly initialized parameters");
  init->add_option("--out", init_out, "Parameter file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (degrade->parsed()) return cmd_degrade(deg, g, out);
    if (patchify_cmd->parsed()) return cmd_patchify(pat, g, out);
    if (metrics->parsed()) return cmd_metrics(met, g, out);
    if (grid->parsed()) return cmd_grid(gr, g, out);
    if (forward->parsed()) return cmd_forward(fw, g, out);
    if (inspect->parsed()) return cmd_inspect(ins, g, out);
    if (init->parsed()) return cmd_init(init_out, g, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitInvalid;
}

}  // namespace lfda::cli
