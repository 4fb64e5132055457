#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octbench/image.hpp"
#include "octbench/image_io.hpp"
#include "test_util.hpp"

using namespace octbench;
using testutil::TempDir;

TEST_CASE("load_image gray converts pure black/white") {
    TempDir tmp("img_bw");
    FundusImage img(2, 1);
    img.at(1, 0, 0) = img.at(1, 0, 1) = img.at(1, 0, 2) = 255;
    save_image(img, tmp.path() / "bw.png");
    const Frame f = load_frame(tmp.path() / "bw.png");
    CHECK(f.width == 2);
    CHECK(f.pixels == std::vector<std::uint8_t>{0, 255});
}

TEST_CASE("gray conversion uses rounded BT.601 luma") {
    CHECK(luma(255, 0, 0) == 76);  // round(0.299 * 255)
    CHECK(luma(0, 255, 0) == 150);
    CHECK(luma(0, 0, 255) == 29);
}

TEST_CASE("load_image missing file") {
    CHECK_THROWS_AS(load_frame("/nonexistent/img.png"), FileNotFoundError);
}

TEST_CASE("load_image corrupt file") {
    TempDir tmp("img_bad");
    std::ofstream(tmp.path() / "bad.png") << "not an image";
    CHECK_THROWS_AS(load_frame(tmp.path() / "bad.png"), DecodeError);
}

TEST_CASE("png round-trip is lossless") {
    TempDir tmp("img_rt");
    const Frame f = testutil::gradient_frame(3, 3);
    save_image(f, tmp.path() / "g.png");
    CHECK(load_frame(tmp.path() / "g.png") == f);

    const FundusImage rgb = testutil::random_fundus(17, 9, 42);
    save_image(rgb, tmp.path() / "c.png");
    CHECK(load_fundus(tmp.path() / "c.png") == rgb);
}

TEST_CASE("save all-255 frame decodes to all-255") {
    TempDir tmp("img_255");
    const Frame f(4, 4, 255);
    save_image(f, tmp.path() / "w.png");
    const Frame g = load_frame(tmp.path() / "w.png");
    for (auto p : g.pixels) CHECK(p == 255);
}

TEST_CASE("save to unwritable path") {
    CHECK_THROWS_AS(save_image(Frame(2, 2), "/no/such/dir/x.png"), IoError);
}

TEST_CASE("mirror_horizontal reverses rows") {
    Frame f(3, 1);
    f.pixels = {1, 2, 3};
    CHECK(mirror_horizontal(f).pixels == std::vector<std::uint8_t>{3, 2, 1});
}

TEST_CASE("mirror_horizontal is an involution") {
    const Frame f = testutil::random_frame(13, 7, 3);
    CHECK(mirror_horizontal(mirror_horizontal(f)) == f);
    const FundusImage img = testutil::random_fundus(9, 5, 4);
    CHECK(mirror_horizontal(mirror_horizontal(img)) == img);
}

TEST_CASE("mirror of a column-symmetric image is identity") {
    Frame f(5, 2);
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 5; ++x) f.at(x, y) = static_cast<std::uint8_t>(std::abs(x - 2));
    CHECK(mirror_horizontal(f) == f);
}

TEST_CASE("resize_bilinear half-pixel oracle 2x1 -> 4x1") {
    Frame f(2, 1);
    f.pixels = {0, 255};
    const Frame r = resize_bilinear(f, 4, 1);
    CHECK(r.pixels == std::vector<std::uint8_t>{0, 64, 191, 255});
}

TEST_CASE("resize of a constant image is constant") {
    const Frame f(6, 4, 137);
    const Frame r = resize_bilinear(f, 13, 29);
    for (auto p : r.pixels) CHECK(p == 137);
}

TEST_CASE("resize to same dims is identity") {
    const Frame f = testutil::random_frame(11, 8, 5);
    CHECK(resize_bilinear(f, 11, 8) == f);
}

TEST_CASE("resize output stays inside input min/max") {
    const Frame f = testutil::random_frame(16, 16, 6);
    const auto [mn, mx] = std::minmax_element(f.pixels.begin(), f.pixels.end());
    const Frame r = resize_bilinear(f, 37, 11);
    for (auto p : r.pixels) {
        CHECK(p >= *mn);
        CHECK(p <= *mx);
    }
}

TEST_CASE("resize rejects zero targets") {
    CHECK_THROWS_AS(resize_bilinear(Frame(2, 2), 0, 3), InvalidDimensionsError);
}

TEST_CASE("rotate by 0 is byte-exact identity") {
    const Frame f = testutil::random_frame(10, 10, 7);
    CHECK(rotate_about_center(f, 0.0) == f);
}

TEST_CASE("rotate by 360 is identity within one level") {
    const Frame f = testutil::smooth_frame(32, 32, 8);
    const Frame r = rotate_about_center(f, 360.0);
    for (std::size_t i = 0; i < f.pixels.size(); ++i)
        CHECK(std::abs(static_cast<int>(f.pixels[i]) - static_cast<int>(r.pixels[i])) <= 1);
}

TEST_CASE("rotating a radially symmetric disc by 90 degrees preserves it") {
    const int n = 33;
    Frame f(n, n);
    const double c = (n - 1) * 0.5;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            const double r = std::hypot(x - c, y - c);
            f.at(x, y) = r <= 14.0 ? static_cast<std::uint8_t>(200.0 - 10.0 * r) : 0;
        }
    const Frame rot = rotate_about_center(f, 90.0);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (std::hypot(x - c, y - c) < 13.0)
                CHECK(std::abs(static_cast<int>(f.at(x, y)) - static_cast<int>(rot.at(x, y))) <=
                      1);
        }
}

TEST_CASE("crop_rect") {
    const Frame f = testutil::gradient_frame(3, 3);
    CHECK(crop_rect(f, 0, 0, 3, 3) == f);
    const Frame c = crop_rect(f, 1, 1, 1, 1);
    CHECK(c.pixels[0] == f.at(1, 1));
    CHECK_THROWS_AS(crop_rect(f, 2, 0, 2, 1), OutOfBoundsError);
}

TEST_CASE("crop_rect pixel mapping property") {
    const Frame f = testutil::random_frame(12, 9, 9);
    const Frame c = crop_rect(f, 3, 2, 5, 4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 5; ++i) CHECK(c.at(i, j) == f.at(3 + i, 2 + j));
}

TEST_CASE("jpg is accepted on input") {
    TempDir tmp("img_jpg");
    const Frame f(20, 20, 128);
    save_image(f, tmp.path() / "x.jpg");
    const Frame g = load_frame(tmp.path() / "x.jpg");
    CHECK(g.width == 20);
    CHECK(g.height == 20);
}
