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

#include "lfda/tensor.hpp"

namespace lfda {

/// Reads an 8-bit PNG as a 3-channel image with values v/255. Grayscale is
/// expanded to RGB and any alpha channel is dropped. Throws IoError.
Image read_png(const std::filesystem::path& path);

/// Writes an RGB (3-channel) or grayscale (1-channel) 8-bit PNG, storing
/// round(clip(v, 0, 1) * 255). Output bytes depend only on the pixel values.
void write_png(const std::filesystem::path& path, const Image& image);

/// The 8-bit code value written for v.
unsigned char quantize_8bit(double v);

}  // namespace lfda
