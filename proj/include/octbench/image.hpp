#pragma once

#include <cstdint>
#include <vector>

#include "octbench/errors.hpp"

namespace octbench {

/// Single-channel 8-bit raster, row-major. One OCT B-scan.
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // width * height

    Frame() = default;
    Frame(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const Frame&) const = default;
};

/// Interleaved RGB 8-bit raster, row-major.
struct FundusImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // width * height * 3

    FundusImage() = default;
    FundusImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y, int c) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::uint8_t& at(int x, int y, int c) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    bool operator==(const FundusImage&) const = default;
};

/// Exactly six directional B-scans of identical size.
struct OctVolume {
    std::vector<Frame> frames;  // always size 6

    static constexpr int kFrameCount = 6;

    OctVolume() = default;
    explicit OctVolume(std::vector<Frame> f);

    int width() const { return frames.empty() ? 0 : frames[0].width; }
    int height() const { return frames.empty() ? 0 : frames[0].height; }

    bool operator==(const OctVolume&) const = default;
};

/// BT.601 luma, rounded to nearest.
std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Per-pixel luma conversion of an RGB image.
Frame to_gray(const FundusImage& img);

Frame mirror_horizontal(const Frame& img);
FundusImage mirror_horizontal(const FundusImage& img);

// Bilinear resize with half-pixel-center source mapping
// (src = (dst + 0.5) * scale - 0.5, clamped to borders).
Frame resize_bilinear(const Frame& img, int out_w, int out_h);
FundusImage resize_bilinear(const FundusImage& img, int out_w, int out_h);

// Rotation about the image center, theta degrees CCW, same output dims,
// bilinear sampling, out-of-bounds reads as 0.
Frame rotate_about_center(const Frame& img, double theta_deg);
FundusImage rotate_about_center(const FundusImage& img, double theta_deg);

Frame crop_rect(const Frame& img, int x0, int y0, int w, int h);
FundusImage crop_rect(const FundusImage& img, int x0, int y0, int w, int h);

}  // namespace octbench
