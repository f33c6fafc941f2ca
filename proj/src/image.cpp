#include "ancc/image.hpp"

#include <algorithm>
#include <string>

namespace ancc {
namespace {

void check_geometry(std::int32_t width, std::int32_t height) {
  if (width < 1 || height < 1 || width > kMaxImageDimension || height > kMaxImageDimension) {
    throw std::invalid_argument("image dimensions out of range: " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

std::size_t pixel_count(std::int32_t width, std::int32_t height) {
  return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

std::size_t checked_pixel_count(std::int32_t width, std::int32_t height) {
  check_geometry(width, height);
  return pixel_count(width, height);
}

}  // namespace

GrayImage::GrayImage(std::int32_t width, std::int32_t height, int depth)
    : GrayImage(width, height, depth,
                std::vector<Intensity>(checked_pixel_count(width, height))) {}

GrayImage::GrayImage(std::int32_t width, std::int32_t height, int depth,
                     std::vector<Intensity> data)
    : width_(width), height_(height), depth_(depth), data_(std::move(data)) {
  check_geometry(width, height);
  if (depth != 8 && depth != 16) {
    throw std::invalid_argument("unsupported depth " + std::to_string(depth));
  }
  if (data_.size() != pixel_count(width, height)) {
    throw std::invalid_argument("pixel buffer does not match image size");
  }
  const auto limit = max_value();
  if (std::any_of(data_.begin(), data_.end(), [limit](Intensity v) { return v > limit; })) {
    throw std::invalid_argument("pixel value exceeds image depth");
  }
}

void GrayImage::set(std::int32_t x, std::int32_t y, Intensity value) {
  if (value > max_value()) {
    throw std::out_of_range("pixel value exceeds image depth");
  }
  data_[index(x, y)] = value;
}

BinaryImage::BinaryImage(std::int32_t width, std::int32_t height)
    : BinaryImage(width, height,
                  std::vector<std::uint8_t>(checked_pixel_count(width, height))) {}

BinaryImage::BinaryImage(std::int32_t width, std::int32_t height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_geometry(width, height);
  if (data_.size() != pixel_count(width, height)) {
    throw std::invalid_argument("mask buffer does not match image size");
  }
  if (std::any_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v > 1; })) {
    throw std::invalid_argument("mask values must be 0 or 1");
  }
}

std::size_t BinaryImage::foreground_count() const {
  return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

IntensityRange min_max(const GrayImage& img) {
  const auto [lo, hi] = std::minmax_element(img.pixels().begin(), img.pixels().end());
  return {*lo, *hi};
}

BinaryImage binarize(const GrayImage& img, double threshold) {
  std::vector<std::uint8_t> mask(img.pixels().size());
  std::transform(img.pixels().begin(), img.pixels().end(), mask.begin(),
                 [threshold](Intensity v) -> std::uint8_t { return v > threshold ? 1 : 0; });
  return BinaryImage(img.width(), img.height(), std::move(mask));
}

Intensity max_in_rect(const GrayImage& img, const Rect& r) {
  if (r.empty() || r.x < 0 || r.y < 0 || r.w > img.width() - r.x || r.h > img.height() - r.y) {
    throw std::out_of_range("rectangle outside image");
  }
  Intensity best = 0;
  for (std::int32_t y = r.y; y < r.bottom(); ++y) {
    const auto row = img.pixels().subspan(
        static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width()) +
            static_cast<std::size_t>(r.x),
        static_cast<std::size_t>(r.w));
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

GrayImage affine(const GrayImage& img, int gain, int offset) {
  std::vector<Intensity> out(img.pixels().size());
  const long limit = img.max_value();
  std::transform(img.pixels().begin(), img.pixels().end(), out.begin(),
                 [&](Intensity v) {
                   const long mapped = static_cast<long>(gain) * v + offset;
                   if (mapped < 0 || mapped > limit) {
                     throw std::out_of_range("affine map leaves the depth range");
                   }
                   return static_cast<Intensity>(mapped);
                 });
  return GrayImage(img.width(), img.height(), img.depth(), std::move(out));
}

}  // namespace ancc
