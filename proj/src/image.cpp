#include "octbench/image.hpp"

#include <algorithm>
#include <cmath>

namespace octbench {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shared kernels over interleaved data with `ch` channels.

std::vector<std::uint8_t> mirror_h(const std::uint8_t* src, int w, int h, int ch) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h * ch);
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = src + static_cast<std::size_t>(y) * w * ch;
        std::uint8_t* orow = out.data() + static_cast<std::size_t>(y) * w * ch;
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c)
                orow[x * ch + c] = row[(w - 1 - x) * ch + c];
    }
    return out;
}

std::vector<std::uint8_t> resize_bl(const std::uint8_t* src, int w, int h, int ch,
                                    int ow, int oh) {
    if (ow <= 0 || oh <= 0) throw InvalidDimensionsError("resize target must be positive");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(ow) * oh * ch);
    const double sx = static_cast<double>(w) / ow;
    const double sy = static_cast<double>(h) / oh;
#pragma omp parallel for if (static_cast<std::size_t>(ow) * oh > 65536)
    for (int oy = 0; oy < oh; ++oy) {
        double fy = (oy + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(h - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, h - 1);
        const double wy = fy - y0;
        for (int ox = 0; ox < ow; ++ox) {
            double fx = (ox + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(w - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, w - 1);
            const double wx = fx - x0;
            for (int c = 0; c < ch; ++c) {
                const double p00 = src[(static_cast<std::size_t>(y0) * w + x0) * ch + c];
                const double p01 = src[(static_cast<std::size_t>(y0) * w + x1) * ch + c];
                const double p10 = src[(static_cast<std::size_t>(y1) * w + x0) * ch + c];
                const double p11 = src[(static_cast<std::size_t>(y1) * w + x1) * ch + c];
                const double v = (1 - wy) * ((1 - wx) * p00 + wx * p01) +
                                 wy * ((1 - wx) * p10 + wx * p11);
                out[(static_cast<std::size_t>(oy) * ow + ox) * ch + c] =
                    static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    }
    return out;
}

std::vector<std::uint8_t> rotate_cc(const std::uint8_t* src, int w, int h, int ch,
                                    double theta_deg) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h * ch, 0);
    const double t = theta_deg * kPi / 180.0;
    const double ct = std::cos(t), st = std::sin(t);
    const double cx = (w - 1) * 0.5, cy = (h - 1) * 0.5;
#pragma omp parallel for if (static_cast<std::size_t>(w) * h > 65536)
    for (int oy = 0; oy < h; ++oy) {
        for (int ox = 0; ox < w; ++ox) {
            const double dx = ox - cx, dy = oy - cy;
            // inverse of a visually-CCW rotation in y-down image coordinates
            const double fx = cx + ct * dx - st * dy;
            const double fy = cy + st * dx + ct * dy;
            if (fx < -1.0 || fy < -1.0 || fx > w || fy > h) continue;
            const int x0 = static_cast<int>(std::floor(fx));
            const int y0 = static_cast<int>(std::floor(fy));
            const double wx = fx - x0, wy = fy - y0;
            for (int c = 0; c < ch; ++c) {
                auto sample = [&](int x, int y) -> double {
                    if (x < 0 || y < 0 || x >= w || y >= h) return 0.0;
                    return src[(static_cast<std::size_t>(y) * w + x) * ch + c];
                };
                const double v = (1 - wy) * ((1 - wx) * sample(x0, y0) + wx * sample(x0 + 1, y0)) +
                                 wy * ((1 - wx) * sample(x0, y0 + 1) + wx * sample(x0 + 1, y0 + 1));
                out[(static_cast<std::size_t>(oy) * w + ox) * ch + c] =
                    static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    }
    return out;
}

std::vector<std::uint8_t> crop(const std::uint8_t* src, int w, int h, int ch,
                               int x0, int y0, int cw, int chh) {
    if (cw <= 0 || chh <= 0 || x0 < 0 || y0 < 0 || x0 + cw > w || y0 + chh > h)
        throw OutOfBoundsError("crop rectangle outside image bounds");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(cw) * chh * ch);
    for (int y = 0; y < chh; ++y) {
        const std::uint8_t* s = src + ((static_cast<std::size_t>(y0 + y) * w) + x0) * ch;
        std::copy(s, s + static_cast<std::size_t>(cw) * ch,
                  out.begin() + static_cast<std::size_t>(y) * cw * ch);
    }
    return out;
}

}  // namespace

Frame::Frame(int w, int h, std::uint8_t fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw InvalidDimensionsError("Frame dims must be positive");
}

FundusImage::FundusImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, fill) {
    if (w <= 0 || h <= 0) throw InvalidDimensionsError("FundusImage dims must be positive");
}

OctVolume::OctVolume(std::vector<Frame> f) : frames(std::move(f)) {
    if (frames.size() != kFrameCount)
        throw InvalidDimensionsError("OctVolume requires exactly 6 frames");
    for (const Frame& fr : frames)
        if (fr.width != frames[0].width || fr.height != frames[0].height)
            throw DimMismatchError("OctVolume frames must share dimensions");
}

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return static_cast<std::uint8_t>(std::lround(0.299 * r + 0.587 * g + 0.114 * b));
}

Frame to_gray(const FundusImage& img) {
    Frame out(img.width, img.height);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    for (std::size_t i = 0; i < n; ++i)
        out.pixels[i] = luma(img.pixels[i * 3], img.pixels[i * 3 + 1], img.pixels[i * 3 + 2]);
    return out;
}

Frame mirror_horizontal(const Frame& img) {
    Frame out(img.width, img.height);
    out.pixels = mirror_h(img.pixels.data(), img.width, img.height, 1);
    return out;
}

FundusImage mirror_horizontal(const FundusImage& img) {
    FundusImage out(img.width, img.height);
    out.pixels = mirror_h(img.pixels.data(), img.width, img.height, 3);
    return out;
}

Frame resize_bilinear(const Frame& img, int out_w, int out_h) {
    auto px = resize_bl(img.pixels.data(), img.width, img.height, 1, out_w, out_h);
    Frame out(out_w, out_h);
    out.pixels = std::move(px);
    return out;
}

FundusImage resize_bilinear(const FundusImage& img, int out_w, int out_h) {
    auto px = resize_bl(img.pixels.data(), img.width, img.height, 3, out_w, out_h);
    FundusImage out(out_w, out_h);
    out.pixels = std::move(px);
    return out;
}

Frame rotate_about_center(const Frame& img, double theta_deg) {
    Frame out(img.width, img.height);
    if (theta_deg == 0.0) { out.pixels = img.pixels; return out; }
    out.pixels = rotate_cc(img.pixels.data(), img.width, img.height, 1, theta_deg);
    return out;
}

FundusImage rotate_about_center(const FundusImage& img, double theta_deg) {
    FundusImage out(img.width, img.height);
    if (theta_deg == 0.0) { out.pixels = img.pixels; return out; }
    out.pixels = rotate_cc(img.pixels.data(), img.width, img.height, 3, theta_deg);
    return out;
}

Frame crop_rect(const Frame& img, int x0, int y0, int w, int h) {
    auto px = crop(img.pixels.data(), img.width, img.height, 1, x0, y0, w, h);
    Frame out(w, h);
    out.pixels = std::move(px);
    return out;
}

FundusImage crop_rect(const FundusImage& img, int x0, int y0, int w, int h) {
    auto px = crop(img.pixels.data(), img.width, img.height, 3, x0, y0, w, h);
    FundusImage out(w, h);
    out.pixels = std::move(px);
    return out;
}

}  // namespace octbench
