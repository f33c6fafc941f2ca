#include "ancc/synth.hpp"

#include <stdexcept>

namespace ancc::synth {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Rect bounding_box(const Shape& shape) {
  return std::visit(overloaded{
                        [](const FilledRect& r) { return r.rect; },
                        [](const FilledCircle& c) {
                          return Rect{c.center.x - c.radius, c.center.y - c.radius,
                                      2 * c.radius + 1, 2 * c.radius + 1};
                        },
                    },
                    shape.kind);
}

GrayImage render(const SceneSpec& spec) {
  GrayImage img(spec.width, spec.height, spec.depth);
  const Rect frame = img.bounds();
  for (const auto& shape : spec.shapes) {
    if (shape.value > img.max_value()) {
      throw std::invalid_argument("synth: shape value exceeds image depth");
    }
    if (const auto* c = std::get_if<FilledCircle>(&shape.kind); c != nullptr && c->radius < 1) {
      throw std::invalid_argument("synth: circle radius must be >= 1");
    }
    const Rect box = bounding_box(shape);
    if (box.empty() || intersect(box, frame) != box) {
      throw std::invalid_argument("synth: shape outside image bounds");
    }
    for (std::int32_t y = box.y; y < box.bottom(); ++y) {
      for (std::int32_t x = box.x; x < box.right(); ++x) {
        if (const auto* c = std::get_if<FilledCircle>(&shape.kind)) {
          const std::int64_t dx = x - c->center.x;
          const std::int64_t dy = y - c->center.y;
          if (dx * dx + dy * dy > std::int64_t{c->radius} * c->radius) {
            continue;
          }
        }
        img.set(x, y, shape.value);
      }
    }
  }
  return img;
}

TestScene testcase1() {
  SceneSpec spec{320, 240, 8, {}};
  spec.shapes = {
      {FilledRect{{20, 30, 80, 60}}, 200},
      {FilledRect{{140, 40, 60, 90}}, 150},
      {FilledRect{{230, 120, 70, 80}}, 100},
      {FilledRect{{40, 150, 100, 50}}, 0},
  };
  return {spec, 3};
}

TestScene testcase2() {
  SceneSpec spec{320, 240, 8, {}};
  spec.shapes = {
      {FilledCircle{{60, 60}, 30}, 220},
      {FilledCircle{{160, 140}, 40}, 160},
      {FilledCircle{{265, 70}, 25}, 90},
  };
  return {spec, 3};
}

}  // namespace ancc::synth
