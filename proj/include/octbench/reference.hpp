#pragma once

#include "octbench/metrics.hpp"

namespace octbench::ref {

// Serial reference kernels: direct, unoptimized evaluations of the same
// definitions the parallel implementations use. Kept for tests and the
// benchmark target.

/// SSIM via an explicit 2D Gaussian window at every valid position.
double ssim_naive(const Frame& a, const Frame& b, const SsimParams& p = {});

/// PSNR with a simple serial accumulation.
double psnr_naive(const Frame& a, const Frame& b, double max_val = 255.0);

/// Fréchet distance for diagonal covariances:
/// sum_i (mu_a_i - mu_b_i)^2 + (sqrt(s_a_i) - sqrt(s_b_i))^2.
double frechet_diagonal(const GaussianStats& a, const GaussianStats& b);

}  // namespace octbench::ref
