#include "octbench/preprocess.hpp"

#include <algorithm>
#include <cmath>

namespace octbench {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double DirectionModel::angle_of(int k) const {
    if (k < 0 || k >= kDirections)
        throw InvalidDirectionError("direction index out of range: " + std::to_string(k));
    return 90.0 - 30.0 * k;
}

FundusImage crop_black_border(const FundusImage& img, int tau) {
    int xmin = img.width, xmax = -1, ymin = img.height, ymax = -1;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const int l = luma(img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2));
            if (l > tau) {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    if (xmax < 0) throw NoForegroundError("no pixel above threshold " + std::to_string(tau));
    return crop_rect(img, xmin, ymin, xmax - xmin + 1, ymax - ymin + 1);
}

Frame remove_ruler(const Frame& frame, const RulerRegion& r) {
    if (r.w <= 0 || r.h <= 0 || r.x0 < 0 || r.y0 < 0 || r.x0 + r.w > frame.width ||
        r.y0 + r.h > frame.height)
        throw OutOfBoundsError("ruler region outside frame");
    if (r.w >= frame.width)
        throw RegionSpansWidthError("ruler region spans the full width");
    Frame out = frame;
    const int src_x = (r.x0 + r.w < frame.width) ? r.x0 + r.w : r.x0 - 1;
    for (int y = r.y0; y < r.y0 + r.h; ++y) {
        const std::uint8_t v = frame.at(src_x, y);
        for (int x = r.x0; x < r.x0 + r.w; ++x) out.at(x, y) = v;
    }
    return out;
}

NormalizedFrame truncate_normalize(const Frame& frame, int lo, int hi) {
    if (lo >= hi) throw InvalidRangeError("truncation range requires lo < hi");
    NormalizedFrame out;
    out.width = frame.width;
    out.height = frame.height;
    out.values.resize(frame.pixels.size());
    const float scale = 1.0f / static_cast<float>(hi - lo);
    for (std::size_t i = 0; i < frame.pixels.size(); ++i) {
        const int v = std::clamp(static_cast<int>(frame.pixels[i]), lo, hi);
        out.values[i] = static_cast<float>(v - lo) * scale;
    }
    return out;
}

FundusImage mask_central_roi(const FundusImage& img, double keep_v, double keep_h) {
    if (keep_v <= 0.0 || keep_v > 1.0 || keep_h <= 0.0 || keep_h > 1.0)
        throw InvalidFractionError("keep fractions must be in (0, 1]");
    const int y0 = static_cast<int>(std::lround(img.height * (1.0 - keep_v) / 2.0));
    const int y1 = static_cast<int>(std::lround(img.height * (1.0 + keep_v) / 2.0));
    const int x0 = static_cast<int>(std::lround(img.width * (1.0 - keep_h) / 2.0));
    const int x1 = static_cast<int>(std::lround(img.width * (1.0 + keep_h) / 2.0));
    FundusImage out = img;
    for (int y = 0; y < img.height; ++y) {
        const bool row_in = (y >= y0 && y < y1);
        for (int x = 0; x < img.width; ++x) {
            if (!row_in || x < x0 || x >= x1)
                out.at(x, y, 0) = out.at(x, y, 1) = out.at(x, y, 2) = 0;
        }
    }
    return out;
}

FundusImage orient_for_direction(const FundusImage& img, int k, const DirectionModel& model) {
    return rotate_about_center(img, -model.angle_of(k));
}

SequenceStack extract_sequences(const FundusImage& img, const DirectionModel& model) {
    if (img.width != SequenceStack::kLength || img.height != SequenceStack::kLength)
        throw WrongInputSizeError("extract_sequences expects a 256x256 image");
    const Frame gray = to_gray(img);
    const double cx = (gray.width - 1) * 0.5;
    const double cy = (gray.height - 1) * 0.5;

    auto sample = [&](double fx, double fy) -> double {
        if (fx < -1.0 || fy < -1.0 || fx > gray.width || fy > gray.height) return 0.0;
        const int x0 = static_cast<int>(std::floor(fx));
        const int y0 = static_cast<int>(std::floor(fy));
        const double wx = fx - x0, wy = fy - y0;
        auto px = [&](int x, int y) -> double {
            if (x < 0 || y < 0 || x >= gray.width || y >= gray.height) return 0.0;
            return gray.at(x, y);
        };
        return (1 - wy) * ((1 - wx) * px(x0, y0) + wx * px(x0 + 1, y0)) +
               wy * ((1 - wx) * px(x0, y0 + 1) + wx * px(x0 + 1, y0 + 1));
    };

    SequenceStack stack;
    for (int k = 0; k < SequenceStack::kDirs; ++k) {
        const double t = model.angle_of(k) * kPi / 180.0;
        const double ux = std::cos(t), uy = -std::sin(t);  // image coords, y down
        const double nx = std::sin(t), ny = std::cos(t);
        for (int j = 0; j < SequenceStack::kWidth; ++j) {
            const double off = j - 3.5;
            for (int i = 0; i < SequenceStack::kLength; ++i) {
                const double along = (static_cast<double>(i) / 255.0) * 2.0 - 1.0;
                const double fx = cx + along * kSequenceRadius * ux + off * nx;
                const double fy = cy + along * kSequenceRadius * uy + off * ny;
                stack.at(k, j, i) = static_cast<float>(sample(fx, fy) / 255.0);
            }
        }
    }
    return stack;
}

}  // namespace octbench
