#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ancc/rect.hpp"

namespace ancc {

using Intensity = std::uint16_t;

/// Single-channel image with 8- or 16-bit samples, stored row-major.
///
/// Both depths share 16-bit storage; depth only bounds the value range.
class GrayImage {
 public:
  /// Zero-filled image.
  GrayImage(std::int32_t width, std::int32_t height, int depth = 8);
  /// Takes ownership of `data`; throws std::invalid_argument when the size or
  /// any value violates the geometry or depth.
  GrayImage(std::int32_t width, std::int32_t height, int depth, std::vector<Intensity> data);

  [[nodiscard]] std::int32_t width() const { return width_; }
  [[nodiscard]] std::int32_t height() const { return height_; }
  [[nodiscard]] int depth() const { return depth_; }
  [[nodiscard]] Intensity max_value() const {
    return static_cast<Intensity>((1u << depth_) - 1u);
  }
  [[nodiscard]] Rect bounds() const { return {0, 0, width_, height_}; }

  [[nodiscard]] Intensity at(std::int32_t x, std::int32_t y) const {
    return data_[index(x, y)];
  }
  /// Throws std::out_of_range when `value` exceeds the depth.
  void set(std::int32_t x, std::int32_t y, Intensity value);

  [[nodiscard]] std::span<const Intensity> pixels() const { return data_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  [[nodiscard]] std::size_t index(std::int32_t x, std::int32_t y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  std::int32_t width_;
  std::int32_t height_;
  int depth_;
  std::vector<Intensity> data_;
};

/// Foreground/background mask; 1 = foreground.
class BinaryImage {
 public:
  BinaryImage(std::int32_t width, std::int32_t height);
  /// Throws std::invalid_argument on size mismatch or values other than 0/1.
  BinaryImage(std::int32_t width, std::int32_t height, std::vector<std::uint8_t> data);

  [[nodiscard]] std::int32_t width() const { return width_; }
  [[nodiscard]] std::int32_t height() const { return height_; }

  [[nodiscard]] bool at(std::int32_t x, std::int32_t y) const {
    return data_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                 static_cast<std::size_t>(x)] != 0;
  }
  void set(std::int32_t x, std::int32_t y, bool foreground) {
    data_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
          static_cast<std::size_t>(x)] = foreground ? 1 : 0;
  }

  [[nodiscard]] std::span<const std::uint8_t> pixels() const { return data_; }
  [[nodiscard]] std::size_t foreground_count() const;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::int32_t width_;
  std::int32_t height_;
  std::vector<std::uint8_t> data_;
};

struct IntensityRange {
  Intensity min = 0;
  Intensity max = 0;

  friend bool operator==(const IntensityRange&, const IntensityRange&) = default;
};

[[nodiscard]] IntensityRange min_max(const GrayImage& img);

/// Foreground iff the pixel is strictly greater than `threshold`.
[[nodiscard]] BinaryImage binarize(const GrayImage& img, double threshold);

/// Maximum over the pixels covered by `r`. Throws std::out_of_range when `r`
/// is empty or leaves the image.
[[nodiscard]] Intensity max_in_rect(const GrayImage& img, const Rect& r);

/// Pixel-wise `gain * v + offset`. Throws std::out_of_range when any result
/// leaves the depth range.
[[nodiscard]] GrayImage affine(const GrayImage& img, int gain, int offset);

}  // namespace ancc
