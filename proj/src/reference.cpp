#include "octbench/reference.hpp"

#include <cmath>
#include <vector>

namespace octbench::ref {

double ssim_naive(const Frame& a, const Frame& b, const SsimParams& p) {
    if (a.width != b.width || a.height != b.height)
        throw DimMismatchError("ssim_naive: frame dims differ");
    const int w = a.width, h = a.height, win = p.window_size;
    if (w < win || h < win) throw TooSmallError("ssim_naive: image smaller than the window");

    std::vector<double> g(static_cast<std::size_t>(win) * win);
    const double c = (win - 1) * 0.5;
    double sum = 0.0;
    for (int y = 0; y < win; ++y)
        for (int x = 0; x < win; ++x) {
            const double d2 = (x - c) * (x - c) + (y - c) * (y - c);
            g[static_cast<std::size_t>(y) * win + x] =
                std::exp(-d2 / (2.0 * p.window_sigma * p.window_sigma));
            sum += g[static_cast<std::size_t>(y) * win + x];
        }
    for (double& v : g) v /= sum;

    const double C1 = p.c1(), C2 = p.c2();
    double total = 0.0;
    int count = 0;
    for (int y0 = 0; y0 + win <= h; ++y0) {
        for (int x0 = 0; x0 + win <= w; ++x0) {
            double mu_a = 0, mu_b = 0, e_aa = 0, e_bb = 0, e_ab = 0;
            for (int y = 0; y < win; ++y)
                for (int x = 0; x < win; ++x) {
                    const double wgt = g[static_cast<std::size_t>(y) * win + x];
                    const double va = a.at(x0 + x, y0 + y);
                    const double vb = b.at(x0 + x, y0 + y);
                    mu_a += wgt * va;
                    mu_b += wgt * vb;
                    e_aa += wgt * va * va;
                    e_bb += wgt * vb * vb;
                    e_ab += wgt * va * vb;
                }
            const double var_a = e_aa - mu_a * mu_a;
            const double var_b = e_bb - mu_b * mu_b;
            const double cov = e_ab - mu_a * mu_b;
            total += ((2.0 * mu_a * mu_b + C1) * (2.0 * cov + C2)) /
                     ((mu_a * mu_a + mu_b * mu_b + C1) * (var_a + var_b + C2));
            ++count;
        }
    }
    return total / count;
}

double psnr_naive(const Frame& a, const Frame& b, double max_val) {
    if (a.width != b.width || a.height != b.height)
        throw DimMismatchError("psnr_naive: frame dims differ");
    double se = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        se += d * d;
    }
    if (se == 0.0) return kPsnrCap;
    return 10.0 * std::log10(max_val * max_val * a.pixels.size() / se);
}

double frechet_diagonal(const GaussianStats& a, const GaussianStats& b) {
    const std::size_t d = a.dim();
    if (b.dim() != d) throw DimMismatchError("frechet_diagonal: dims differ");
    double total = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double dm = a.mu[i] - b.mu[i];
        const double ds = std::sqrt(std::max(a.sigma[i * d + i], 0.0)) -
                          std::sqrt(std::max(b.sigma[i * d + i], 0.0));
        total += dm * dm + ds * ds;
    }
    return total;
}

}  // namespace octbench::ref
