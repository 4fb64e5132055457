#pragma once

#include <cstdint>
#include <utility>

#include "octbench/image.hpp"

namespace octbench {

/// Seeded fundus-side photometric augmentation parameters.
struct PhotometricParams {
    double brightness_delta = 0.0;  // [-32, 32]
    double contrast_gain = 1.0;     // [0.8, 1.2]
    double saturation_gain = 1.0;   // [0.8, 1.2]
    double gamma = 1.0;             // [0.8, 1.25]
    double blur_sigma = 0.0;        // [0, 1.5] px
    double noise_sigma = 0.0;       // [0, 8] intensity levels
    std::uint64_t seed = 0;

    static PhotometricParams identity(std::uint64_t seed = 0);
    bool in_range() const;
};

// Horizontal mirror of the fundus with the matching B-scan permutation:
// frame 0 stays, frame k (k >= 1) moves to (6 - k) mod 6 mirrored. Involution.
std::pair<FundusImage, OctVolume> collaborative_flip(const FundusImage& fundus,
                                                     const OctVolume& volume);

// Deterministic pipeline: contrast -> brightness -> saturation -> gamma ->
// blur -> noise; clamped and quantized once at the end.
FundusImage photometric_augment(const FundusImage& fundus, const PhotometricParams& params);

// Uniform draw of each field within its range, reproducible from the seed.
PhotometricParams sample_photometric(std::uint64_t seed);

}  // namespace octbench
