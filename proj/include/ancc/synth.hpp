#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "ancc/image.hpp"
#include "ancc/rect.hpp"

namespace ancc::synth {

struct FilledRect {
  Rect rect;
};

/// Closed disk: pixels with (px-x)^2 + (py-y)^2 <= radius^2.
struct FilledCircle {
  Point center;
  std::int32_t radius = 1;
};

struct Shape {
  std::variant<FilledRect, FilledCircle> kind;
  Intensity value = 0;
};

/// Scene on a zero background; shapes are painted in order.
struct SceneSpec {
  std::int32_t width = 0;
  std::int32_t height = 0;
  int depth = 8;
  std::vector<Shape> shapes;
};

/// Tight bounding box of a shape.
[[nodiscard]] Rect bounding_box(const Shape& shape);

/// Throws std::invalid_argument when a shape leaves the image or its value
/// does not fit the depth.
[[nodiscard]] GrayImage render(const SceneSpec& spec);

struct TestScene {
  SceneSpec spec;
  std::size_t expected_objects = 0;
};

/// 320x240: three disjoint filled rectangles of distinct intensity plus a
/// zero-valued rectangle standing in for failed disparity.
[[nodiscard]] TestScene testcase1();

/// 320x240: three disjoint filled circles of distinct intensity.
[[nodiscard]] TestScene testcase2();

}  // namespace ancc::synth
