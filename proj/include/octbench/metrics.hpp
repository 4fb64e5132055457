#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "octbench/image.hpp"

namespace octbench {

struct SsimParams {
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 255.0;
    int window_size = 11;
    double window_sigma = 1.5;

    double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
    double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
};

inline constexpr double kPsnrCap = 100.0;  // dB returned when MSE == 0

struct Embedding {
    std::vector<double> values;

    std::size_t dim() const { return values.size(); }
};

/// Dimension of the reference embedder: 6 frames x 4x4 pooled means + 5
/// adjacent-frame mean absolute differences.
inline constexpr std::size_t kReferenceEmbeddingDim = 101;

struct GaussianStats {
    std::vector<double> mu;     // d
    std::vector<double> sigma;  // d*d, row-major, symmetric

    std::size_t dim() const { return mu.size(); }
};

struct PerSampleScore {
    std::string sample_id;
    double psnr = 0.0;
    double ssim = 0.0;
};

struct MetricReport {
    std::string submission_id;
    double fvd = 0.0;
    double ssim_mean = 0.0;
    double psnr_mean = 0.0;
    std::vector<PerSampleScore> per_sample;
};

double psnr(const Frame& a, const Frame& b, double max_val = 255.0);
double ssim(const Frame& a, const Frame& b, const SsimParams& p = {});

/// Arithmetic mean of the six per-frame PSNR and SSIM values.
std::pair<double, double> volume_pixel_scores(const OctVolume& pred, const OctVolume& gt,
                                              const SsimParams& p = {});

/// Deterministic training-free reference embedder (d = 101).
Embedding embed_volume(const OctVolume& volume);

GaussianStats gaussian_stats(const std::vector<Embedding>& set);

/// 2-Wasserstein distance between Gaussians; matrix square roots via
/// symmetric eigendecomposition with negative eigenvalues clamped to 0.
double frechet_distance(const GaussianStats& a, const GaussianStats& b);

using Embedder = std::function<Embedding(const std::string& sample_id, const OctVolume&)>;

/// Wraps embed_volume, ignoring the sample id.
Embedder reference_embedder();

/// Looks embeddings up in an externally computed table.
Embedder table_embedder(std::map<std::string, Embedding> table);

// Set-level FVD. Embeddings are accumulated in sample-id-sorted order so the
// result is bit-identical under permutation of either input list.
double fvd(const std::vector<std::pair<std::string, OctVolume>>& pred_set,
           const std::vector<std::pair<std::string, OctVolume>>& gt_set,
           const Embedder& embedder);

/// FVD directly over id-keyed embeddings (both maps iterate id-sorted).
double fvd_from_embeddings(const std::map<std::string, Embedding>& pred,
                           const std::map<std::string, Embedding>& gt);

/// CSV with header sample_id,v0,...,v{d-1}.
std::map<std::string, Embedding> load_external_embeddings(const std::filesystem::path& path);
void save_embeddings(const std::map<std::string, Embedding>& table,
                     const std::filesystem::path& path);

}  // namespace octbench
