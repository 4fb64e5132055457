#include "octbench/image_io.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

namespace octbench {

namespace fs = std::filesystem;

std::variant<Frame, FundusImage> load_image(const fs::path& path, LoadMode mode) {
    if (!fs::exists(path)) throw FileNotFoundError("no such file: " + path.string());
    // Decode as-is, convert channels ourselves so the luma weights stay ours.
    cv::Mat m = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
    if (m.empty()) throw DecodeError("cannot decode image: " + path.string());
    if (m.depth() != CV_8U) throw DecodeError("unsupported pixel depth: " + path.string());
    if (m.channels() == 4) {  // drop alpha
        cv::Mat bgr;
        cv::cvtColor(m, bgr, cv::COLOR_BGRA2BGR);
        m = bgr;
    }
    const int w = m.cols, h = m.rows;
    if (mode == LoadMode::gray) {
        Frame out(w, h);
        for (int y = 0; y < h; ++y) {
            const std::uint8_t* row = m.ptr<std::uint8_t>(y);
            for (int x = 0; x < w; ++x) {
                if (m.channels() == 1) {
                    out.at(x, y) = row[x];
                } else {  // OpenCV stores BGR
                    out.at(x, y) = luma(row[x * 3 + 2], row[x * 3 + 1], row[x * 3]);
                }
            }
        }
        return out;
    }
    FundusImage out(w, h);
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = m.ptr<std::uint8_t>(y);
        for (int x = 0; x < w; ++x) {
            if (m.channels() == 1) {
                out.at(x, y, 0) = out.at(x, y, 1) = out.at(x, y, 2) = row[x];
            } else {
                out.at(x, y, 0) = row[x * 3 + 2];
                out.at(x, y, 1) = row[x * 3 + 1];
                out.at(x, y, 2) = row[x * 3];
            }
        }
    }
    return out;
}

Frame load_frame(const fs::path& path) {
    return std::get<Frame>(load_image(path, LoadMode::gray));
}

FundusImage load_fundus(const fs::path& path) {
    return std::get<FundusImage>(load_image(path, LoadMode::rgb));
}

void save_image(const Frame& img, const fs::path& path) {
    cv::Mat m(img.height, img.width, CV_8UC1, const_cast<std::uint8_t*>(img.pixels.data()));
    try {
        if (!cv::imwrite(path.string(), m))
            throw IoError("cannot write image: " + path.string());
    } catch (const cv::Exception& e) {
        throw IoError("cannot write image: " + path.string() + " (" + e.what() + ")");
    }
}

void save_image(const FundusImage& img, const fs::path& path) {
    cv::Mat m(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        std::uint8_t* row = m.ptr<std::uint8_t>(y);
        for (int x = 0; x < img.width; ++x) {
            row[x * 3] = img.at(x, y, 2);  // BGR on disk buffer
            row[x * 3 + 1] = img.at(x, y, 1);
            row[x * 3 + 2] = img.at(x, y, 0);
        }
    }
    try {
        if (!cv::imwrite(path.string(), m))
            throw IoError("cannot write image: " + path.string());
    } catch (const cv::Exception& e) {
        throw IoError("cannot write image: " + path.string() + " (" + e.what() + ")");
    }
}

}  // namespace octbench
