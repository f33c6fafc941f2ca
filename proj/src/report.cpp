#include "ancc/report.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace ancc {

static_assert(sizeof(std::array<std::uint8_t, 3>) == 3, "RGB pixels must be tightly packed");

std::string objects_to_json(const std::vector<DetectedObject>& objects) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& o : objects) {
    nlohmann::ordered_json entry;
    entry["center"] = {o.center.x, o.center.y};
    entry["disparity"] = o.disparity;
    entry["bbox"] = {{"x", o.bbox.x}, {"y", o.bbox.y}, {"w", o.bbox.w}, {"h", o.bbox.h}};
    list.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["objects"] = std::move(list);
  return doc.dump();
}

void write_json(const std::vector<DetectedObject>& objects, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  out << objects_to_json(objects) << '\n';
  out.close();
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
}

RgbImage to_rgb(const GrayImage& img) {
  RgbImage out{img.width(), img.height(), {}};
  out.pixels.reserve(img.pixels().size());
  const auto peak = img.depth() == 16 ? min_max(img).max : Intensity{255};
  for (const auto v : img.pixels()) {
    const auto g = peak == 0 ? std::uint8_t{0}
                             : static_cast<std::uint8_t>(static_cast<std::uint32_t>(v) * 255u / peak);
    out.pixels.push_back({g, g, g});
  }
  return out;
}

RgbImage annotate(const GrayImage& img, const std::vector<DetectedObject>& objects) {
  auto out = to_rgb(img);
  constexpr std::array<std::uint8_t, 3> red{255, 0, 0};
  auto paint = [&](std::int32_t x, std::int32_t y) {
    out.pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(out.width) +
               static_cast<std::size_t>(x)] = red;
  };
  for (const auto& o : objects) {
    const Rect& r = o.bbox;
    if (r.empty() || intersect(r, img.bounds()) != r) {
      throw std::out_of_range("annotate: bbox outside image");
    }
    for (std::int32_t x = r.x; x < r.right(); ++x) {
      paint(x, r.y);
      paint(x, r.bottom() - 1);
    }
    for (std::int32_t y = r.y; y < r.bottom(); ++y) {
      paint(r.x, y);
      paint(r.right() - 1, y);
    }
  }
  return out;
}

void write_ppm(const RgbImage& img, std::ostream& out) {
  out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size() * 3));
}

void write_annotated(const GrayImage& img, const std::vector<DetectedObject>& objects,
                     const std::filesystem::path& path) {
  const auto rgb = annotate(img, objects);
  std::ofstream out(path, std::ios::binary);
  write_ppm(rgb, out);
  out.close();
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace ancc
