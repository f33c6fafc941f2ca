#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ancc/image.hpp"
#include "ancc/rect.hpp"

namespace ancc {

enum class Connectivity { Four = 4, Eight = 8 };

/// Storage width of component labels. Narrow labels cap the component count
/// at 65535.
enum class LabelWidth { Bits16 = 16, Bits32 = 32 };

/// Labeling algorithm selector. Only the two-pass union-find scan exists.
enum class CclAlgorithm { TwoPassUnionFind };

[[nodiscard]] std::uint32_t max_label(LabelWidth width);

/// Thrown when an image has more components than the label width can hold.
class LabelOverflowError : public std::runtime_error {
 public:
  LabelOverflowError(LabelWidth width, std::uint64_t components);
  [[nodiscard]] LabelWidth label_width() const { return width_; }

 private:
  LabelWidth width_;
};

/// Per-pixel component labels, 0 for background, 1..component_count otherwise.
struct LabelImage {
  std::int32_t width = 0;
  std::int32_t height = 0;
  LabelWidth label_width = LabelWidth::Bits16;
  std::uint32_t component_count = 0;
  std::vector<std::uint32_t> labels;

  [[nodiscard]] std::uint32_t at(std::int32_t x, std::int32_t y) const {
    return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
};

struct Centroid {
  double x = 0.0;
  double y = 0.0;
};

struct ComponentStats {
  std::uint32_t label = 0;
  Rect bbox;
  std::int64_t area = 0;
  Centroid centroid;
};

/// Labels foreground components. Labels are numbered in raster order of each
/// component's first pixel, so the result is fully determined by the input.
[[nodiscard]] LabelImage label_components(const BinaryImage& bin, Connectivity conn,
                                          LabelWidth width = LabelWidth::Bits32,
                                          CclAlgorithm algorithm = CclAlgorithm::TwoPassUnionFind);

/// One entry per component, ordered by label.
[[nodiscard]] std::vector<ComponentStats> component_stats(const LabelImage& labels);

[[nodiscard]] std::vector<ComponentStats> components_with_stats(
    const BinaryImage& bin, Connectivity conn, LabelWidth width = LabelWidth::Bits32,
    CclAlgorithm algorithm = CclAlgorithm::TwoPassUnionFind);

}  // namespace ancc
