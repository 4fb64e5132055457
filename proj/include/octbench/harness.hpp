#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "octbench/dataset.hpp"
#include "octbench/metrics.hpp"

namespace octbench {

struct LeaderboardEntry {
    int rank = 0;
    std::string submission_id;
    double fvd = 0.0;
    double ssim_mean = 0.0;
    double psnr_mean = 0.0;
};

struct EvalConfig {
    SsimParams ssim;
    // When set, FVD uses externally computed embeddings (one CSV per set,
    // keyed by sample_id) instead of the reference embedder.
    std::optional<std::filesystem::path> pred_embeddings;
    std::optional<std::filesystem::path> gt_embeddings;
};

// Full evaluation: validates the submission, computes per-sample
// PSNR/SSIM means and one set-level FVD against the split's ground truth.
// Per-sample work may run in parallel; results are reduced in id order so the
// report is identical for any worker count.
MetricReport evaluate(const Manifest& manifest, Split split,
                      const std::filesystem::path& submission_dir,
                      const EvalConfig& config = {});

/// Same computation over in-memory volumes (gt and pred keyed by sample id).
MetricReport evaluate_volumes(const std::string& submission_id,
                              const std::map<std::string, OctVolume>& pred,
                              const std::map<std::string, OctVolume>& gt,
                              const EvalConfig& config = {});

// FVD-primary ranking; ties broken by ssim desc, psnr desc, then id.
std::vector<LeaderboardEntry> rank(const std::vector<MetricReport>& reports);

// Report / leaderboard serialization. Numbers are rounded to 6 decimals.
std::string report_to_json(const MetricReport& report);
MetricReport report_from_json_file(const std::filesystem::path& path);
void write_report_json(const MetricReport& report, const std::filesystem::path& path);
std::string report_to_csv(const MetricReport& report);
std::string leaderboard_to_csv(const std::vector<LeaderboardEntry>& board);

int cli_main(int argc, char** argv);

}  // namespace octbench
