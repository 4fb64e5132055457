#include "octbench/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "octbench/image_io.hpp"
#include "octbench/rng.hpp"

namespace octbench {

NoiseSchedule::NoiseSchedule(int T, double beta_lo, double beta_hi) : total_steps(T) {
    alpha_bar.resize(T + 1);
    alpha_bar[0] = 1.0;
    double prod = 1.0;
    for (int t = 1; t <= T; ++t) {
        const double beta =
            (T > 1) ? beta_lo + (beta_hi - beta_lo) * (t - 1) / static_cast<double>(T - 1)
                    : beta_lo;
        prod *= 1.0 - beta;
        alpha_bar[t] = prod;
    }
}

CorruptionKind corruption_kind_from_string(const std::string& s) {
    if (s == "gaussian_noise") return CorruptionKind::gaussian_noise;
    if (s == "random_crop") return CorruptionKind::random_crop;
    if (s == "identity") return CorruptionKind::identity;
    throw ParseError("unknown corruption kind: '" + s + "'");
}

std::string to_string(CorruptionKind k) {
    switch (k) {
        case CorruptionKind::gaussian_noise: return "gaussian_noise";
        case CorruptionKind::random_crop: return "random_crop";
        case CorruptionKind::identity: return "identity";
    }
    return "?";
}

OctVolume gaussian_noise_corrupt(const OctVolume& volume, int steps,
                                 const NoiseSchedule& schedule, std::uint64_t seed) {
    if (steps < 0 || steps > schedule.total_steps)
        throw InvalidStepsError("steps must be in [0, " +
                                std::to_string(schedule.total_steps) + "]");
    if (steps == 0) return volume;
    const double abar = schedule.alpha_bar[steps];
    const double signal = std::sqrt(abar);
    const double noise = std::sqrt(1.0 - abar);

    Rng rng(seed);
    std::vector<Frame> out;
    out.reserve(volume.frames.size());
    for (const Frame& f : volume.frames) {
        Frame g(f.width, f.height);
        for (std::size_t i = 0; i < f.pixels.size(); ++i) {
            const double x0 = f.pixels[i] / 127.5 - 1.0;
            const double xt = signal * x0 + noise * rng.gaussian();
            g.pixels[i] = static_cast<std::uint8_t>(
                std::lround(std::clamp((xt + 1.0) * 127.5, 0.0, 255.0)));
        }
        out.push_back(std::move(g));
    }
    return OctVolume(std::move(out));
}

OctVolume random_crop_corrupt(const OctVolume& volume, double scale_lo, double scale_hi,
                              std::uint64_t seed) {
    if (!(scale_lo > 0.0 && scale_lo <= scale_hi && scale_hi <= 1.0))
        throw InvalidScaleError("crop scales must satisfy 0 < lo <= hi <= 1");
    const int w = volume.width(), h = volume.height();

    Rng rng(seed);
    const double s = rng.uniform(scale_lo, scale_hi);
    const int cw = std::max(1, static_cast<int>(std::lround(s * w)));
    const int ch = std::max(1, static_cast<int>(std::lround(s * h)));
    const int x0 = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(w - cw) + 1));
    const int y0 = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(h - ch) + 1));

    std::vector<Frame> out;
    out.reserve(volume.frames.size());
    for (const Frame& f : volume.frames)
        out.push_back(resize_bilinear(crop_rect(f, x0, y0, cw, ch), w, h));
    return OctVolume(std::move(out));
}

OctVolume apply_corruption(const OctVolume& volume, const CorruptionSpec& spec,
                           std::uint64_t sample_seed, const NoiseSchedule& schedule) {
    switch (spec.kind) {
        case CorruptionKind::gaussian_noise:
            return gaussian_noise_corrupt(volume, spec.steps, schedule, sample_seed);
        case CorruptionKind::random_crop:
            return random_crop_corrupt(volume, spec.scale_lo, spec.scale_hi, sample_seed);
        case CorruptionKind::identity:
            return volume;
    }
    throw Error("unreachable corruption kind");
}

SubmissionSet generate_baseline_submission(const Manifest& manifest, Split split,
                                           const CorruptionSpec& spec,
                                           const std::filesystem::path& out_dir) {
    const auto ids = manifest.sample_ids(split);
    if (ids.empty()) throw EmptyInputError("split has no samples: " + to_string(split));
    const NoiseSchedule schedule;

    SubmissionSet set;
    set.submission_id = out_dir.filename().string();
    for (const std::string& id : ids) {
        const PairingRecord* rec = manifest.find(id);
        const OctVolume gt = load_volume(manifest.root / rec->oct_dir);
        const OctVolume corrupted =
            apply_corruption(gt, spec, derive_seed(spec.seed, id), schedule);
        const std::filesystem::path sdir = out_dir / id;
        std::filesystem::create_directories(sdir);
        for (int k = 0; k < OctVolume::kFrameCount; ++k)
            save_image(corrupted.frames[k], sdir / (std::to_string(k) + ".png"));
        set.volumes.emplace(id, corrupted);
    }
    return set;
}

}  // namespace octbench
