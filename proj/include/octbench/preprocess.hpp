#pragma once

#include <array>

#include "octbench/image.hpp"

namespace octbench {

/// Rectangle covering an equipment marker (e.g. the bottom-left ruler).
struct RulerRegion {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;
};

// Radial scan-direction layout: theta_k = 90 - 30k degrees, CCW from the
// horizontal axis of the en-face image. Under a horizontal mirror direction k
// maps to (6 - k) mod 6, matching the collaborative flip frame permutation.
struct DirectionModel {
    static constexpr int kDirections = 6;

    double angle_of(int k) const;  // degrees; throws InvalidDirectionError
};

/// 6 directions x 8 lateral offsets x 256 samples, intensities in [0,1].
struct SequenceStack {
    static constexpr int kDirs = 6;
    static constexpr int kWidth = 8;
    static constexpr int kLength = 256;

    std::array<float, kDirs * kWidth * kLength> values{};

    float at(int k, int j, int i) const { return values[(k * kWidth + j) * kLength + i]; }
    float& at(int k, int j, int i) { return values[(k * kWidth + j) * kLength + i]; }
};

/// Normalized frame produced by truncate_normalize, values in [0,1].
struct NormalizedFrame {
    int width = 0;
    int height = 0;
    std::vector<float> values;
};

// Tight bounding box of pixels whose luma exceeds tau.
FundusImage crop_black_border(const FundusImage& img, int tau = 10);

// Overwrites the region with the column just right of it (left if the region
// touches the right edge). Pixels outside the region are untouched.
Frame remove_ruler(const Frame& frame, const RulerRegion& region);

// v -> (clamp(v, lo, hi) - lo) / (hi - lo)
NormalizedFrame truncate_normalize(const Frame& frame, int lo = 62, int hi = 255);

// Keeps the central keep_v fraction of rows and keep_h fraction of columns,
// zeroing everything else (round-based index arithmetic).
FundusImage mask_central_roi(const FundusImage& img, double keep_v = 0.20,
                             double keep_h = 0.60);

// Rotates by -theta_k so scan direction k becomes horizontal.
FundusImage orient_for_direction(const FundusImage& img, int k,
                                 const DirectionModel& model = {});

// Samples six 8x256 bands along the scan directions of a 256x256 image.
SequenceStack extract_sequences(const FundusImage& img, const DirectionModel& model = {});

/// Sampling radius of extract_sequences on the 256x256 grid.
inline constexpr double kSequenceRadius = 124.0;

}  // namespace octbench
