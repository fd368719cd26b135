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

#include "lfda/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "lfda/error.hpp"
#include "lfda/parallel.hpp"

namespace lfda {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

std::array<double, kWindow> gaussian_window() {
  std::array<double, kWindow> g{};
  double sum = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double x = i - kWindow / 2;
    g[static_cast<std::size_t>(i)] = std::exp(-x * x / (2.0 * kSigma * kSigma));
    sum += g[static_cast<std::size_t>(i)];
  }
  for (double& x : g) x /= sum;
  return g;
}

// Valid-region separable filtering of an H x W plane.
std::vector<double> filter_valid(std::span<const double> src, std::size_t H, std::size_t W,
                                 const std::array<double, kWindow>& g) {
  const std::size_t oh = H - kWindow + 1;
  const std::size_t ow = W - kWindow + 1;
  std::vector<double> tmp(H * ow);
  for (std::size_t y = 0; y < H; ++y)
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < kWindow; ++k) acc += g[k] * src[y * W + x + k];
      tmp[y * ow + x] = acc;
    }
  std::vector<double> out(oh * ow);
  for (std::size_t y = 0; y < oh; ++y)
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < kWindow; ++k) acc += g[k] * tmp[(y + k) * ow + x];
      out[y * ow + x] = acc;
    }
  return out;
}

std::string format4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

double psnr(const Image& a, const Image& b) {
  if (!a.same_dims(b)) throw InvalidArgument("psnr: image dims differ");
  if (a.size() == 0) throw InvalidArgument("psnr: empty image");
  const auto x = a.values();
  const auto y = b.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    sum += d * d;
  }
  const double mse = sum / static_cast<double>(x.size());
  if (mse == 0.0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(1.0 / mse));
}

double ssim(const Image& a, const Image& b) {
  if (!a.same_dims(b)) throw InvalidArgument("ssim: image dims differ");
  const std::size_t H = a.height();
  const std::size_t W = a.width();
  if (H < kWindow || W < kWindow) throw InvalidArgument("ssim: image is smaller than the 11x11 window");
  const auto g = gaussian_window();

  double total = 0.0;
  std::vector<double> xx(H * W), yy(H * W), xy(H * W);
  for (std::size_t c = 0; c < a.channels(); ++c) {
    const auto x = a.plane(c);
    const auto y = b.plane(c);
    for (std::size_t i = 0; i < H * W; ++i) {
      xx[i] = x[i] * x[i];
      yy[i] = y[i] * y[i];
      xy[i] = x[i] * y[i];
    }
    const auto mu_x = filter_valid(x, H, W, g);
    const auto mu_y = filter_valid(y, H, W, g);
    const auto e_xx = filter_valid(xx, H, W, g);
    const auto e_yy = filter_valid(yy, H, W, g);
    const auto e_xy = filter_valid(xy, H, W, g);
    double sum = 0.0;
    for (std::size_t i = 0; i < mu_x.size(); ++i) {
      const double mx2 = mu_x[i] * mu_x[i];
      const double my2 = mu_y[i] * mu_y[i];
      const double mxy = mu_x[i] * mu_y[i];
      const double var_x = e_xx[i] - mx2;
      const double var_y = e_yy[i] - my2;
      const double cov = e_xy[i] - mxy;
      sum += ((2.0 * mxy + kC1) * (2.0 * cov + kC2)) / ((mx2 + my2 + kC1) * (var_x + var_y + kC2));
    }
    total += sum / static_cast<double>(mu_x.size());
  }
  return total / static_cast<double>(a.channels());
}

MetricReport dataset_score(std::span<const NamedLightField> pred, std::span<const NamedLightField> gt,
                           const std::string& dataset, std::size_t threads) {
  std::map<std::string, const LightField*> by_name;
  for (const auto& p : pred) by_name[p.name] = &p.lf;
  for (const auto& g : gt) {
    if (!by_name.contains(g.name)) throw IoError("scene '" + g.name + "' is missing from the predictions");
  }
  if (by_name.size() != gt.size()) {
    for (const auto& p : pred) {
      const bool known = std::any_of(gt.begin(), gt.end(), [&](const auto& g) { return g.name == p.name; });
      if (!known) throw IoError("scene '" + p.name + "' has no ground truth");
    }
  }

  MetricReport report;
  report.dataset = dataset;
  for (const auto& g : gt) {
    const LightField& p = *by_name.at(g.name);
    if (!(p.dims() == g.lf.dims())) throw InvalidArgument("scene '" + g.name + "': prediction dims differ");
    for (std::size_t u = 0; u < g.lf.dims().U; ++u)
      for (std::size_t v = 0; v < g.lf.dims().V; ++v) report.views.push_back({g.name, u, v, 0.0, 0.0, false});
  }

  std::map<std::string, const LightField*> gt_by_name;
  for (const auto& g : gt) gt_by_name[g.name] = &g.lf;
  parallel_for(report.views.size(), threads, [&](std::size_t i) {
    ViewScore& s = report.views[i];
    const Image a = by_name.at(s.scene)->view(s.u, s.v);
    const Image b = gt_by_name.at(s.scene)->view(s.u, s.v);
    s.psnr = psnr(a, b);
    s.ssim = ssim(a, b);
    s.capped = s.psnr >= kPsnrCap;
  });
  aggregate(report);
  return report;
}

void aggregate(MetricReport& report) {
  report.scenes.clear();
  report.capped_views = 0;
  std::vector<std::size_t> counts;
  for (const ViewScore& s : report.views) {
    if (report.scenes.empty() || report.scenes.back().scene != s.scene) {
      report.scenes.push_back({s.scene, 0.0, 0.0});
      counts.push_back(0);
    }
    report.scenes.back().psnr += s.psnr;
    report.scenes.back().ssim += s.ssim;
    ++counts.back();
    if (s.capped) ++report.capped_views;
  }
  report.psnr = 0.0;
  report.ssim = 0.0;
  for (std::size_t i = 0; i < report.scenes.size(); ++i) {
    report.scenes[i].psnr /= static_cast<double>(counts[i]);
    report.scenes[i].ssim /= static_cast<double>(counts[i]);
    report.psnr += report.scenes[i].psnr;
    report.ssim += report.scenes[i].ssim;
  }
  if (!report.scenes.empty()) {
    report.psnr /= static_cast<double>(report.scenes.size());
    report.ssim /= static_cast<double>(report.scenes.size());
  }
}

void write_csv(std::ostream& out, const MetricReport& r) {
  out << "dataset,scene,u,v,psnr,ssim\n";
  for (const ViewScore& s : r.views) {
    out << r.dataset << ',' << s.scene << ',' << s.u << ',' << s.v << ',' << format4(s.psnr) << ','
        << format4(s.ssim) << '\n';
  }
  for (const SceneScore& s : r.scenes) {
    out << r.dataset << ',' << s.scene << ",all,all," << format4(s.psnr) << ',' << format4(s.ssim) << '\n';
  }
  out << r.dataset << ",all,all,all," << format4(r.psnr) << ',' << format4(r.ssim) << '\n';
}

MetricReport read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "dataset,scene,u,v,psnr,ssim") throw IoError("metrics CSV: bad header");
  MetricReport r;
  bool have_total = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 6) throw IoError("metrics CSV: expected 6 fields in '" + line + "'");
    r.dataset = f[0];
    try {
      const double p = std::stod(f[4]);
      const double s = std::stod(f[5]);
      if (f[1] == "all") {
        r.psnr = p;
        r.ssim = s;
        have_total = true;
      } else if (f[2] == "all") {
        r.scenes.push_back({f[1], p, s});
      } else {
        r.views.push_back({f[1], std::stoul(f[2]), std::stoul(f[3]), p, s, p >= kPsnrCap});
        if (p >= kPsnrCap) ++r.capped_views;
      }
    } catch (const std::logic_error&) {
      throw IoError("metrics CSV: malformed number in '" + line + "'");
    }
  }
  if (!have_total) throw IoError("metrics CSV: missing dataset row");
  return r;
}

std::string summary_line(const MetricReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "PSNR/SSIM: %.2f/%.3f", r.psnr, r.ssim);
  return buf;
}

}  // namespace lfda
