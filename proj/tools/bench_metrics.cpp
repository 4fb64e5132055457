// Compares the parallel metric kernels against the serial reference
// implementations on synthetic frames, printing throughput for both.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "octbench/metrics.hpp"
#include "octbench/reference.hpp"
#include "octbench/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace octbench;

namespace {

Frame smooth_frame(int w, int h, std::uint64_t seed) {
    Rng rng(seed);
    const double fx = rng.uniform(1.0, 4.0), fy = rng.uniform(1.0, 4.0);
    const double phase = rng.uniform(0.0, 6.28);
    Frame f(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double v =
                127.5 + 100.0 * std::sin(fx * 6.28 * x / w + phase) * std::cos(fy * 6.28 * y / h);
            f.at(x, y) = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
        }
    return f;
}

template <typename F>
double time_ms(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    const int w = 768, h = 496, pairs = 24;
    std::vector<Frame> a, b;
    for (int i = 0; i < pairs; ++i) {
        a.push_back(smooth_frame(w, h, 1000 + i));
        b.push_back(smooth_frame(w, h, 2000 + i));
    }

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled\n");
#endif
    std::printf("frame size: %dx%d, pairs: %d\n\n", w, h, pairs);

    double acc = 0.0;
    const double t_par = time_ms([&] {
        for (int i = 0; i < pairs; ++i) acc += ssim(a[i], b[i]);
    });
    double acc_ref = 0.0;
    const double t_ref = time_ms([&] {
        for (int i = 0; i < pairs; ++i) acc_ref += ref::ssim_naive(a[i], b[i]);
    });
    std::printf("ssim   parallel: %8.1f ms  (%.2f ms/frame)\n", t_par, t_par / pairs);
    std::printf("ssim   serial  : %8.1f ms  (%.2f ms/frame)\n", t_ref, t_ref / pairs);
    std::printf("ssim   max |diff| vs reference: %.3e\n\n",
                std::abs(acc - acc_ref) / pairs);

    double pacc = 0.0;
    const double tp = time_ms([&] {
        for (int i = 0; i < pairs; ++i) pacc += psnr(a[i], b[i]);
    });
    double pref = 0.0;
    const double tpr = time_ms([&] {
        for (int i = 0; i < pairs; ++i) pref += ref::psnr_naive(a[i], b[i]);
    });
    std::printf("psnr   parallel: %8.1f ms\n", tp);
    std::printf("psnr   serial  : %8.1f ms\n", tpr);
    std::printf("psnr   max |diff| vs reference: %.3e\n", std::abs(pacc - pref) / pairs);
    return 0;
}
