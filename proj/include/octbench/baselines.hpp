#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "octbench/dataset.hpp"
#include "octbench/image.hpp"

namespace octbench {

// Linear forward-noising schedule: T = 1000 steps, beta from 1e-4 to 0.02,
// alpha_bar_t = prod_{s<=t} (1 - beta_s), alpha_bar_0 = 1.
struct NoiseSchedule {
    int total_steps = 1000;
    std::vector<double> alpha_bar;  // size total_steps + 1

    NoiseSchedule(int T = 1000, double beta_lo = 1e-4, double beta_hi = 0.02);
};

enum class CorruptionKind { gaussian_noise, random_crop, identity };

CorruptionKind corruption_kind_from_string(const std::string& s);
std::string to_string(CorruptionKind k);

struct CorruptionSpec {
    CorruptionKind kind = CorruptionKind::identity;
    int steps = 0;              // gaussian_noise
    double scale_lo = 0.7;      // random_crop
    double scale_hi = 0.9;
    std::uint64_t seed = 0;
};

// Forward-noises each frame: x_t = sqrt(abar_t) x0 + sqrt(1 - abar_t) eps in
// [-1, 1] space, re-quantized to 8 bit. t = 0 is the identity.
OctVolume gaussian_noise_corrupt(const OctVolume& volume, int steps,
                                 const NoiseSchedule& schedule, std::uint64_t seed);

// One scale and offset drawn per volume; the same rectangle is cropped from
// all six frames, then each is resized back to the original dims.
OctVolume random_crop_corrupt(const OctVolume& volume, double scale_lo, double scale_hi,
                              std::uint64_t seed);

OctVolume apply_corruption(const OctVolume& volume, const CorruptionSpec& spec,
                           std::uint64_t sample_seed, const NoiseSchedule& schedule);

// Writes a corrupted copy of every sample of the split in submission layout
// (<out_dir>/<sample_id>/<k>.png). Per-sample seeds derive from
// (spec.seed, sample_id) so the output is independent of processing order.
SubmissionSet generate_baseline_submission(const Manifest& manifest, Split split,
                                           const CorruptionSpec& spec,
                                           const std::filesystem::path& out_dir);

}  // namespace octbench
