#include "ancc/ccl.hpp"

#include <limits>
#include <numeric>

namespace ancc {
namespace {

// Disjoint sets over provisional labels. Index 0 is the background sentinel.
class EquivalenceTable {
 public:
  EquivalenceTable() : parent_{0}, size_{0} {}

  std::uint32_t make_set() {
    const auto id = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(id);
    size_.push_back(1);
    return id;
  }

  std::uint32_t find(std::uint32_t v) {
    std::uint32_t root = v;
    while (parent_[root] != root) {
      root = parent_[root];
    }
    while (parent_[v] != root) {
      const auto next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return a;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

  [[nodiscard]] std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

std::uint32_t max_label(LabelWidth width) {
  return width == LabelWidth::Bits16 ? std::numeric_limits<std::uint16_t>::max()
                                     : std::numeric_limits<std::uint32_t>::max();
}

LabelOverflowError::LabelOverflowError(LabelWidth width, std::uint64_t components)
    : std::runtime_error("ccl: " + std::to_string(components) + " components exceed the " +
                         std::to_string(static_cast<int>(width)) + "-bit label range"),
      width_(width) {}

LabelImage label_components(const BinaryImage& bin, Connectivity conn, LabelWidth width,
                            CclAlgorithm algorithm) {
  if (algorithm != CclAlgorithm::TwoPassUnionFind) {
    throw std::invalid_argument("ccl: unknown labeling algorithm");
  }
  const std::int32_t w = bin.width();
  const std::int32_t h = bin.height();
  LabelImage out{w, h, width, 0, std::vector<std::uint32_t>(bin.pixels().size(), 0)};
  auto& lab = out.labels;
  const auto fg = bin.pixels();
  const bool diagonal = conn == Connectivity::Eight;
  EquivalenceTable eq;

  // First pass: provisional labels from the already-visited neighbours
  // (west, and north-west/north/north-east for the previous row).
  for (std::int32_t y = 0; y < h; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * static_cast<std::size_t>(w);
    const std::size_t prev = row - static_cast<std::size_t>(w);
    for (std::int32_t x = 0; x < w; ++x) {
      const std::size_t i = row + static_cast<std::size_t>(x);
      if (!fg[i]) {
        continue;
      }
      std::uint32_t current = 0;
      auto merge = [&](std::uint32_t neighbour) {
        if (neighbour == 0) {
          return;
        }
        current = current == 0 ? neighbour : eq.unite(current, neighbour);
      };
      if (x > 0) {
        merge(lab[i - 1]);
      }
      if (y > 0) {
        merge(lab[prev + static_cast<std::size_t>(x)]);
        if (diagonal && x > 0) {
          merge(lab[prev + static_cast<std::size_t>(x) - 1]);
        }
        if (diagonal && x + 1 < w) {
          merge(lab[prev + static_cast<std::size_t>(x) + 1]);
        }
      }
      lab[i] = current == 0 ? eq.make_set() : current;
    }
  }

  // Second pass: resolve equivalences and renumber roots by first encounter.
  std::vector<std::uint32_t> final_label(eq.size(), 0);
  std::uint64_t next = 0;
  const std::uint64_t limit = max_label(width);
  for (auto& v : lab) {
    if (v == 0) {
      continue;
    }
    const auto root = eq.find(v);
    if (final_label[root] == 0) {
      if (++next > limit) {
        throw LabelOverflowError(width, next);
      }
      final_label[root] = static_cast<std::uint32_t>(next);
    }
    v = final_label[root];
  }
  out.component_count = static_cast<std::uint32_t>(next);
  return out;
}

std::vector<ComponentStats> component_stats(const LabelImage& labels) {
  struct Accumulator {
    std::int32_t x0 = std::numeric_limits<std::int32_t>::max();
    std::int32_t y0 = std::numeric_limits<std::int32_t>::max();
    std::int32_t x1 = -1;
    std::int32_t y1 = -1;
    std::int64_t area = 0;
    std::int64_t sum_x = 0;
    std::int64_t sum_y = 0;
  };
  std::vector<Accumulator> acc(labels.component_count);
  for (std::int32_t y = 0; y < labels.height; ++y) {
    for (std::int32_t x = 0; x < labels.width; ++x) {
      const auto l = labels.at(x, y);
      if (l == 0) {
        continue;
      }
      auto& a = acc[l - 1];
      a.x0 = std::min(a.x0, x);
      a.y0 = std::min(a.y0, y);
      a.x1 = std::max(a.x1, x);
      a.y1 = std::max(a.y1, y);
      ++a.area;
      a.sum_x += x;
      a.sum_y += y;
    }
  }
  std::vector<ComponentStats> stats;
  stats.reserve(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const auto& a = acc[i];
    const auto n = static_cast<double>(a.area);
    stats.push_back({static_cast<std::uint32_t>(i + 1),
                     Rect{a.x0, a.y0, a.x1 - a.x0 + 1, a.y1 - a.y0 + 1},
                     a.area,
                     {static_cast<double>(a.sum_x) / n, static_cast<double>(a.sum_y) / n}});
  }
  return stats;
}

std::vector<ComponentStats> components_with_stats(const BinaryImage& bin, Connectivity conn,
                                                  LabelWidth width, CclAlgorithm algorithm) {
  return component_stats(label_components(bin, conn, width, algorithm));
}

}  // namespace ancc
