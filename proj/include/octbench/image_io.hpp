#pragma once

#include <filesystem>
#include <variant>

#include "octbench/image.hpp"

namespace octbench {

enum class LoadMode { gray, rgb };

/// Decodes a PNG or JPG file. Gray mode applies BT.601 luma to color inputs.
std::variant<Frame, FundusImage> load_image(const std::filesystem::path& path, LoadMode mode);

Frame load_frame(const std::filesystem::path& path);
FundusImage load_fundus(const std::filesystem::path& path);

/// PNG-encodes (lossless) to `path`. Round-trips byte-for-byte on pixel data.
void save_image(const Frame& img, const std::filesystem::path& path);
void save_image(const FundusImage& img, const std::filesystem::path& path);

}  // namespace octbench
