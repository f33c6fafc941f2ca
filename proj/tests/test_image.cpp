#include <doctest.h>

#include <random>

#include "ancc/image.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using ancc::GrayImage;
using ancc::Intensity;

TEST_CASE("GrayImage validates its invariants") {
  CHECK_THROWS_AS(GrayImage(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(GrayImage(3, 3, 12), std::invalid_argument);
  CHECK_THROWS_AS(GrayImage(2, 2, 8, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(GrayImage(1, 1, 8, {256}), std::invalid_argument);
  CHECK_NOTHROW(GrayImage(1, 1, 16, {65535}));
  GrayImage img(2, 2);
  CHECK_THROWS_AS(img.set(0, 0, 300), std::out_of_range);
  CHECK_THROWS_AS(ancc::BinaryImage(2, 1, {0, 2}), std::invalid_argument);
}

TEST_CASE("min_max") {
  CHECK(ancc::min_max(GrayImage(4, 3, 8, std::vector<Intensity>(12, 7))) ==
        ancc::IntensityRange{7, 7});
  CHECK(ancc::min_max(GrayImage(3, 1, 8, {12, 0, 255})) == ancc::IntensityRange{0, 255});

  gen::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto img = gen::random_noise(rng, 64, 64, 16, 3, 60000);
    Intensity lo = 65535;
    Intensity hi = 0;
    for (int y = 0; y < 64; ++y) {
      for (int x = 0; x < 64; ++x) {
        lo = std::min(lo, img.at(x, y));
        hi = std::max(hi, img.at(x, y));
      }
    }
    CHECK(ancc::min_max(img) == ancc::IntensityRange{lo, hi});
  }
}

TEST_CASE("binarize uses strict greater-than") {
  const GrayImage img(3, 1, 8, {3, 5, 7});
  const auto bin = ancc::binarize(img, 5.0);
  CHECK(std::vector<std::uint8_t>(bin.pixels().begin(), bin.pixels().end()) ==
        std::vector<std::uint8_t>{0, 0, 1});
  CHECK(ancc::binarize(img, 4.999).foreground_count() == 2);
  CHECK(ancc::binarize(img, 7.0).foreground_count() == 0);
  CHECK(ancc::binarize(img, 9.5).foreground_count() == 0);
  CHECK(ancc::binarize(img, 2.5).foreground_count() == 3);
}

TEST_CASE("binarize foreground count is monotone in the threshold") {
  gen::Rng rng(3);
  const auto img = gen::random_noise(rng, 40, 30, 8, 0, 255);
  std::size_t previous = img.pixels().size() + 1;
  for (double t = -1.0; t <= 256.0; t += 0.37) {
    const auto count = ancc::binarize(img, t).foreground_count();
    CHECK(count <= previous);
    previous = count;
  }
}

TEST_CASE("binarize commutes with positive affine maps") {
  gen::Rng rng(5);
  const auto img = gen::random_noise(rng, 32, 32, 8, 0, 60);
  for (const auto [gain, offset] : {std::pair{1, 0}, {2, 0}, {2, 10}, {4, 3}}) {
    const auto mapped = ancc::affine(img, gain, offset);
    for (int t2 = -2; t2 <= 124; ++t2) {
      // t = t2 / 2 is exactly representable, so gain * t + offset is exact.
      const double t = t2 / 2.0;
      CHECK(ancc::binarize(mapped, gain * t + offset) == ancc::binarize(img, t));
    }
  }
  CHECK_THROWS_AS((void)ancc::affine(img, 5, 0), std::out_of_range);
}

TEST_CASE("max_in_rect") {
  gen::Rng rng(9);
  const auto img = gen::random_noise(rng, 37, 23, 16, 0, 65535);
  CHECK(ancc::max_in_rect(img, {4, 7, 1, 1}) == img.at(4, 7));
  CHECK(ancc::max_in_rect(img, img.bounds()) == ancc::min_max(img).max);

  std::uniform_int_distribution<int> px(0, 36);
  std::uniform_int_distribution<int> py(0, 22);
  for (int i = 0; i < 300; ++i) {
    const int x = px(rng);
    const int y = py(rng);
    const int w = std::uniform_int_distribution<int>(1, 37 - x)(rng);
    const int h = std::uniform_int_distribution<int>(1, 23 - y)(rng);
    CHECK(ancc::max_in_rect(img, {x, y, w, h}) == oracle::scan_max(img, x, y, w, h));
  }

  CHECK_THROWS_AS((void)ancc::max_in_rect(img, {30, 0, 8, 1}), std::out_of_range);
  CHECK_THROWS_AS((void)ancc::max_in_rect(img, {-1, 0, 2, 1}), std::out_of_range);
  CHECK_THROWS_AS((void)ancc::max_in_rect(img, {0, 0, 0, 1}), std::out_of_range);
}
