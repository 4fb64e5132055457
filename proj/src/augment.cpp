#include "octbench/augment.hpp"

#include <algorithm>
#include <cmath>

#include "octbench/rng.hpp"

namespace octbench {

PhotometricParams PhotometricParams::identity(std::uint64_t seed) {
    PhotometricParams p;
    p.seed = seed;
    return p;
}

bool PhotometricParams::in_range() const {
    return brightness_delta >= -32.0 && brightness_delta <= 32.0 &&
           contrast_gain >= 0.8 && contrast_gain <= 1.2 &&
           saturation_gain >= 0.8 && saturation_gain <= 1.2 &&
           gamma >= 0.8 && gamma <= 1.25 &&
           blur_sigma >= 0.0 && blur_sigma <= 1.5 &&
           noise_sigma >= 0.0 && noise_sigma <= 8.0;
}

std::pair<FundusImage, OctVolume> collaborative_flip(const FundusImage& fundus,
                                                     const OctVolume& volume) {
    std::vector<Frame> out(OctVolume::kFrameCount);
    out[0] = volume.frames[0];
    for (int k = 1; k < OctVolume::kFrameCount; ++k)
        out[(OctVolume::kFrameCount - k) % OctVolume::kFrameCount] =
            mirror_horizontal(volume.frames[k]);
    return {mirror_horizontal(fundus), OctVolume(std::move(out))};
}

namespace {

// Separable Gaussian blur on a float plane, replicated borders.
void gaussian_blur_inplace(std::vector<double>& plane, int w, int h, int ch, double sigma) {
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
        sum += kernel[i + radius];
    }
    for (double& k : kernel) k /= sum;

    std::vector<double> tmp(plane.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                double v = 0.0;
                for (int i = -radius; i <= radius; ++i) {
                    const int xs = std::clamp(x + i, 0, w - 1);
                    v += kernel[i + radius] * plane[(static_cast<std::size_t>(y) * w + xs) * ch + c];
                }
                tmp[(static_cast<std::size_t>(y) * w + x) * ch + c] = v;
            }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                double v = 0.0;
                for (int i = -radius; i <= radius; ++i) {
                    const int ys = std::clamp(y + i, 0, h - 1);
                    v += kernel[i + radius] * tmp[(static_cast<std::size_t>(ys) * w + x) * ch + c];
                }
                plane[(static_cast<std::size_t>(y) * w + x) * ch + c] = v;
            }
}

}  // namespace

FundusImage photometric_augment(const FundusImage& fundus, const PhotometricParams& p) {
    const std::size_t n = static_cast<std::size_t>(fundus.width) * fundus.height;
    std::vector<double> buf(fundus.pixels.begin(), fundus.pixels.end());

    // contrast, pivot at mid-gray
    if (p.contrast_gain != 1.0)
        for (double& v : buf) v = 127.5 + p.contrast_gain * (v - 127.5);
    // brightness
    if (p.brightness_delta != 0.0)
        for (double& v : buf) v += p.brightness_delta;
    // saturation, luma-preserving: channels move toward/away from their luma
    if (p.saturation_gain != 1.0) {
        for (std::size_t i = 0; i < n; ++i) {
            double& r = buf[i * 3];
            double& g = buf[i * 3 + 1];
            double& b = buf[i * 3 + 2];
            const double l = 0.299 * r + 0.587 * g + 0.114 * b;
            r = l + p.saturation_gain * (r - l);
            g = l + p.saturation_gain * (g - l);
            b = l + p.saturation_gain * (b - l);
        }
    }
    // gamma on [0,1] after clamping
    if (p.gamma != 1.0)
        for (double& v : buf)
            v = 255.0 * std::pow(std::clamp(v, 0.0, 255.0) / 255.0, p.gamma);
    // blur
    if (p.blur_sigma > 0.0)
        gaussian_blur_inplace(buf, fundus.width, fundus.height, 3, p.blur_sigma);
    // noise, seeded
    if (p.noise_sigma > 0.0) {
        Rng rng(p.seed);
        for (double& v : buf) v += p.noise_sigma * rng.gaussian();
    }

    FundusImage out(fundus.width, fundus.height);
    for (std::size_t i = 0; i < buf.size(); ++i)
        out.pixels[i] =
            static_cast<std::uint8_t>(std::lround(std::clamp(buf[i], 0.0, 255.0)));
    return out;
}

PhotometricParams sample_photometric(std::uint64_t seed) {
    Rng rng(seed);
    PhotometricParams p;
    p.brightness_delta = rng.uniform(-32.0, 32.0);
    p.contrast_gain = rng.uniform(0.8, 1.2);
    p.saturation_gain = rng.uniform(0.8, 1.2);
    p.gamma = rng.uniform(0.8, 1.25);
    p.blur_sigma = rng.uniform(0.0, 1.5);
    p.noise_sigma = rng.uniform(0.0, 8.0);
    p.seed = seed;
    return p;
}

}  // namespace octbench
