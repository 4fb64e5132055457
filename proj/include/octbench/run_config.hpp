#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "octbench/baselines.hpp"
#include "octbench/metrics.hpp"
#include "octbench/preprocess.hpp"

namespace octbench {

/// Geometry constants of the preprocessing pipeline, all overridable.
struct PreprocessConfig {
    int border_tau = 10;
    RulerRegion ruler{0, 0, 90, 40};  // y0 resolved against the frame height at use
    double keep_v = 0.20;
    double keep_h = 0.60;
    int fundus_resize = 224;
    int sequence_resize = 256;
    int oriented_w = 768;
    int oriented_h = 496;
};

struct RunConfig {
    std::optional<std::filesystem::path> dataset;
    std::optional<Split> split;
    SsimParams ssim;
    PreprocessConfig preprocess;
    CorruptionSpec corruption;
    std::optional<std::filesystem::path> pred_embeddings;
    std::optional<std::filesystem::path> gt_embeddings;
};

/// Loads a JSON run config; every field is optional and falls back to the
/// defaults above.
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace octbench
