#pragma once

#include <cstdint>
#include <optional>

namespace ancc {

/// Integer pixel coordinate.
struct Point {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned pixel rectangle covering [x, x+w) x [y, y+h).
///
/// Coordinates are 32-bit signed. Images are capped at kMaxImageDimension per
/// side, so x+w and y+h always fit.
struct Rect {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t w = 0;
  std::int32_t h = 0;

  [[nodiscard]] std::int32_t right() const { return x + w; }
  [[nodiscard]] std::int32_t bottom() const { return y + h; }
  [[nodiscard]] std::int64_t area() const {
    return static_cast<std::int64_t>(w) * static_cast<std::int64_t>(h);
  }
  [[nodiscard]] bool empty() const { return w <= 0 || h <= 0; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Largest supported image width or height.
inline constexpr std::int32_t kMaxImageDimension = 1 << 24;

[[nodiscard]] bool contains(const Rect& r, Point p);

/// Shared pixels of two rectangles, or nullopt when they share none.
/// Edge-touching rectangles share no pixel.
[[nodiscard]] std::optional<Rect> intersect(const Rect& a, const Rect& b);

/// Fraction of `inner` covered by `outer`: area(inner & outer) / area(inner).
[[nodiscard]] double containment_ratio(const Rect& inner, const Rect& outer);

}  // namespace ancc
