#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "octbench/baselines.hpp"
#include "octbench/metrics.hpp"
#include "octbench/rng.hpp"
#include "test_util.hpp"

using namespace octbench;
using testutil::TempDir;

TEST_CASE("noise schedule shape") {
    const NoiseSchedule s;
    CHECK(s.total_steps == 1000);
    CHECK(s.alpha_bar[0] == 1.0);
    for (int t = 1; t <= 1000; ++t) CHECK(s.alpha_bar[t] < s.alpha_bar[t - 1]);
    CHECK(s.alpha_bar[1] == doctest::Approx(1.0 - 1e-4));
    CHECK(s.alpha_bar[1000] > 0.0);
}

TEST_CASE("gaussian_noise_corrupt t=0 is byte-exact identity") {
    const NoiseSchedule s;
    const OctVolume v = testutil::smooth_volume(32, 24, 40);
    CHECK(gaussian_noise_corrupt(v, 0, s, 123) == v);
    CHECK_THROWS_AS(gaussian_noise_corrupt(v, 1001, s, 1), InvalidStepsError);
    CHECK_THROWS_AS(gaussian_noise_corrupt(v, -1, s, 1), InvalidStepsError);
}

TEST_CASE("gaussian_noise_corrupt deterministic in the seed") {
    const NoiseSchedule s;
    const OctVolume v = testutil::smooth_volume(32, 24, 41);
    CHECK(gaussian_noise_corrupt(v, 100, s, 9) == gaussian_noise_corrupt(v, 100, s, 9));
    CHECK(gaussian_noise_corrupt(v, 100, s, 9) != gaussian_noise_corrupt(v, 100, s, 10));
}

TEST_CASE("mean PSNR strictly decreases with the noise step") {
    const NoiseSchedule sched;
    const int steps[] = {50, 100, 150, 300};
    double prev = 1e9;
    for (int t : steps) {
        double total = 0.0;
        int n = 0;
        for (std::uint64_t vol_seed = 0; vol_seed < 8; ++vol_seed) {
            const OctVolume v = testutil::smooth_volume(48, 48, 4000 + vol_seed);
            for (std::uint64_t s = 0; s < 3; ++s) {
                const OctVolume c = gaussian_noise_corrupt(v, t, sched, s);
                for (int k = 0; k < 6; ++k) total += psnr(c.frames[k], v.frames[k]);
                n += 6;
            }
        }
        const double mean = total / n;
        CHECK(mean < prev);
        prev = mean;
    }
}

TEST_CASE("noising variance matches 1 - alpha_bar") {
    const NoiseSchedule sched;
    const int t = 200;
    const OctVolume v(std::vector<Frame>(6, Frame(512, 512, 128)));
    const OctVolume c = gaussian_noise_corrupt(v, t, sched, 77);
    const double signal = std::sqrt(sched.alpha_bar[t]);
    double var = 0.0;
    std::size_t n = 0;
    for (int k = 0; k < 6; ++k)
        for (std::size_t i = 0; i < c.frames[k].pixels.size(); ++i) {
            const double x0 = v.frames[k].pixels[i] / 127.5 - 1.0;
            const double xt = c.frames[k].pixels[i] / 127.5 - 1.0;
            const double resid = xt - signal * x0;
            var += resid * resid;
            ++n;
        }
    var /= static_cast<double>(n);
    CHECK(n >= 1000000);
    CHECK(var == doctest::Approx(1.0 - sched.alpha_bar[t]).epsilon(0.05));
}

TEST_CASE("random_crop_corrupt with scale 1 is the identity") {
    const OctVolume v = testutil::smooth_volume(40, 30, 42);
    CHECK(random_crop_corrupt(v, 1.0, 1.0, 5) == v);
    CHECK_THROWS_AS(random_crop_corrupt(v, 0.0, 0.9, 5), InvalidScaleError);
    CHECK_THROWS_AS(random_crop_corrupt(v, 0.9, 0.7, 5), InvalidScaleError);
}

TEST_CASE("random_crop_corrupt keeps dims and constants") {
    const OctVolume v = testutil::smooth_volume(40, 30, 43);
    const OctVolume c = random_crop_corrupt(v, 0.7, 0.9, 11);
    CHECK(c.width() == 40);
    CHECK(c.height() == 30);

    const OctVolume k(std::vector<Frame>(6, Frame(33, 21, 99)));
    const OctVolume ck = random_crop_corrupt(k, 0.7, 0.9, 12);
    for (const Frame& f : ck.frames)
        for (auto p : f.pixels) CHECK(p == 99);
}

TEST_CASE("random_crop_corrupt uses one rectangle for all six frames") {
    // marker volume: frame k is a shifted copy of the same pattern, so equal
    // crops keep the frames equal to each other after the identical shift
    Frame base = testutil::smooth_frame(64, 48, 44);
    const OctVolume v(std::vector<Frame>(6, base));
    const OctVolume c = random_crop_corrupt(v, 0.7, 0.9, 13);
    for (int k = 1; k < 6; ++k) CHECK(c.frames[k] == c.frames[0]);
}

TEST_CASE("generate_baseline_submission is order-independent and valid") {
    TempDir tmp("base_gen");
    const Manifest m = testutil::write_synthetic_dataset(tmp.path() / "data", 6);

    CorruptionSpec spec;
    spec.kind = CorruptionKind::gaussian_noise;
    spec.steps = 100;
    spec.seed = 31337;

    const SubmissionSet a =
        generate_baseline_submission(m, Split::final_test, spec, tmp.path() / "outA");

    // same spec against a manifest listing the samples in reverse order
    Manifest reversed = m;
    std::reverse(reversed.records.begin(), reversed.records.end());
    const SubmissionSet b =
        generate_baseline_submission(reversed, Split::final_test, spec, tmp.path() / "outB");

    REQUIRE(a.volumes.size() == 6);
    for (const auto& [id, vol] : a.volumes) CHECK(b.volumes.at(id) == vol);

    // written files scan back as a complete submission with identical bytes
    const auto ids = m.sample_ids(Split::final_test);
    const SubmissionSet scanned =
        scan_submission(tmp.path() / "outA", {ids.begin(), ids.end()});
    for (const auto& [id, vol] : scanned.volumes) CHECK(vol == a.volumes.at(id));
}

TEST_CASE("identity spec reproduces the ground truth exactly") {
    TempDir tmp("base_id");
    const Manifest m = testutil::write_synthetic_dataset(tmp.path() / "data", 3);
    CorruptionSpec spec;  // identity
    const SubmissionSet s =
        generate_baseline_submission(m, Split::final_test, spec, tmp.path() / "out");
    for (const auto& [id, vol] : s.volumes) {
        const OctVolume gt = load_volume(tmp.path() / "data" / "oct" / id);
        CHECK(vol == gt);
    }
}
