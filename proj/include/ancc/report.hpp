#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ancc/image.hpp"
#include "ancc/segmenter.hpp"

namespace ancc {

/// `{"objects":[{"center":[cx,cy],"disparity":d,"bbox":{"x":..,"y":..,"w":..,"h":..}},...]}`
/// with objects in the given order. No trailing newline.
[[nodiscard]] std::string objects_to_json(const std::vector<DetectedObject>& objects);

/// Writes objects_to_json() plus a newline. Throws std::runtime_error on I/O failure.
void write_json(const std::vector<DetectedObject>& objects, const std::filesystem::path& path);

/// 8-bit interleaved RGB raster.
struct RgbImage {
  std::int32_t width = 0;
  std::int32_t height = 0;
  std::vector<std::array<std::uint8_t, 3>> pixels;

  [[nodiscard]] const std::array<std::uint8_t, 3>& at(std::int32_t x, std::int32_t y) const {
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
};

/// Gray to RGB. 16-bit images are scaled linearly so their maximum maps to 255.
[[nodiscard]] RgbImage to_rgb(const GrayImage& img);

/// to_rgb() with a one-pixel pure red outline on each bbox perimeter.
[[nodiscard]] RgbImage annotate(const GrayImage& img, const std::vector<DetectedObject>& objects);

/// Binary P6 with maxval 255.
void write_ppm(const RgbImage& img, std::ostream& out);

void write_annotated(const GrayImage& img, const std::vector<DetectedObject>& objects,
                     const std::filesystem::path& path);

}  // namespace ancc
