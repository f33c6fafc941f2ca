#include "ancc/rect.hpp"

#include <algorithm>

namespace ancc {

bool contains(const Rect& r, Point p) {
  return r.x <= p.x && p.x < r.right() && r.y <= p.y && p.y < r.bottom();
}

std::optional<Rect> intersect(const Rect& a, const Rect& b) {
  // Widen before adding so that arbitrary int32 inputs cannot overflow.
  const std::int64_t x0 = std::max<std::int64_t>(a.x, b.x);
  const std::int64_t y0 = std::max<std::int64_t>(a.y, b.y);
  const std::int64_t x1 = std::min(std::int64_t{a.x} + a.w, std::int64_t{b.x} + b.w);
  const std::int64_t y1 = std::min(std::int64_t{a.y} + a.h, std::int64_t{b.y} + b.h);
  if (x1 <= x0 || y1 <= y0) {
    return std::nullopt;
  }
  return Rect{static_cast<std::int32_t>(x0), static_cast<std::int32_t>(y0),
              static_cast<std::int32_t>(x1 - x0), static_cast<std::int32_t>(y1 - y0)};
}

double containment_ratio(const Rect& inner, const Rect& outer) {
  if (inner.empty()) {
    return 0.0;
  }
  const auto common = intersect(inner, outer);
  if (!common) {
    return 0.0;
  }
  return static_cast<double>(common->area()) / static_cast<double>(inner.area());
}

}  // namespace ancc
