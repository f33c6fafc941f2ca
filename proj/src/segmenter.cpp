#include "ancc/segmenter.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace ancc {
namespace {

bool is_fraction(double v) { return v >= 0.0 && v <= 1.0; }

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw std::invalid_argument("segmentation params: " + message);
  }
}

struct Threshold {
  double drop = 0.0;       ///< distance below the peak intensity
  double cut = 0.0;        ///< real-valued threshold reported to callers
  double exact_cut = 0.0;  ///< integer cut equivalent to `max - p < drop`
};

// Thresholds maxV - k*step for k = 1, 2, ... while above the minimum.
// Comparing the integer distance `maxV - p` against k*step keeps the sweep
// exact under positive affine intensity maps with power-of-two gains.
std::vector<Threshold> sweep_thresholds(IntensityRange range, double step_fraction) {
  std::vector<Threshold> out;
  const double span = static_cast<double>(range.max) - static_cast<double>(range.min);
  const double step = step_fraction * span;
  for (std::uint64_t k = 1;; ++k) {
    const double drop = static_cast<double>(k) * step;
    if (!(drop < span)) {
      break;
    }
    out.push_back({drop, static_cast<double>(range.max) - drop,
                   static_cast<double>(range.max) - std::ceil(drop)});
  }
  return out;
}

std::vector<ComponentStats> candidates_at(const GrayImage& img, const Threshold& t,
                                          const SegmentationParams& params, int max_dim) {
  auto components = components_with_stats(binarize(img, t.exact_cut), params.connectivity,
                                           params.label_width, params.ccl_algorithm);
  const auto fits = [&](std::int32_t side) {
    return side >= params.min_obj_dimension && side <= max_dim;
  };
  std::erase_if(components,
                [&](const ComponentStats& c) { return !fits(c.bbox.w) || !fits(c.bbox.h); });
  return components;
}

// Labels every threshold up front on a pool of worker threads. Errors are
// kept per threshold so the caller can rethrow the one the serial sweep
// would have hit first.
struct LabeledLevel {
  std::vector<ComponentStats> candidates;
  std::exception_ptr error;
};

std::vector<LabeledLevel> label_levels_parallel(const GrayImage& img,
                                                const std::vector<Threshold>& thresholds,
                                                const SegmentationParams& params, int max_dim,
                                                unsigned max_threads) {
  std::vector<LabeledLevel> levels(thresholds.size());
  unsigned workers = max_threads != 0 ? max_threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(
                                                 std::max<std::size_t>(thresholds.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < thresholds.size(); i = next++) {
      try {
        levels[i].candidates = candidates_at(img, thresholds[i], params, max_dim);
      } catch (...) {
        levels[i].error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned i = 1; i < workers; ++i) {
      pool.emplace_back(work);
    }
    work();
  }
  return levels;
}

bool sorted_before(const DetectedObject& a, const DetectedObject& b) {
  if (a.disparity != b.disparity) {
    return a.disparity > b.disparity;
  }
  if (a.bbox.area() != b.bbox.area()) {
    return a.bbox.area() > b.bbox.area();
  }
  if (a.bbox.y != b.bbox.y) {
    return a.bbox.y < b.bbox.y;
  }
  if (a.bbox.x != b.bbox.x) {
    return a.bbox.x < b.bbox.x;
  }
  // Same disparity, origin and area; order by the remaining fields.
  if (a.bbox.w != b.bbox.w) {
    return a.bbox.w < b.bbox.w;
  }
  if (a.center.y != b.center.y) {
    return a.center.y < b.center.y;
  }
  return a.center.x < b.center.x;
}

}  // namespace

void validate(const SegmentationParams& params) {
  require(params.threshold_step_size > 0.0 && params.threshold_step_size <= 1.0,
          "threshold_step_size must be in (0, 1]");
  require(params.num_same_iterations_to_stop >= 0 && params.num_same_iterations_to_stop <= 255,
          "num_same_iterations_to_stop must be in [0, 255]");
  require(params.min_obj_dimension >= 0 && params.min_obj_dimension <= 65535,
          "min_obj_dimension must be in [0, 65535]");
  require(params.max_obj_dimension >= 0 && params.max_obj_dimension <= 65535,
          "max_obj_dimension must be in [0, 65535]");
  require(params.min_obj_dimension <= params.max_obj_dimension,
          "min_obj_dimension exceeds max_obj_dimension");
  require(is_fraction(params.common_area_to_consider_background),
          "common_area_to_consider_background must be in [0, 1]");
  require(is_fraction(params.common_area_to_consider_growing),
          "common_area_to_consider_growing must be in [0, 1]");
  require(params.connectivity == Connectivity::Four || params.connectivity == Connectivity::Eight,
          "connectivity must be 4 or 8");
  require(params.label_width == LabelWidth::Bits16 || params.label_width == LabelWidth::Bits32,
          "label width must be 16 or 32 bits");
  require(params.ccl_algorithm == CclAlgorithm::TwoPassUnionFind, "unknown CCL algorithm");
}

int effective_max_dimension(const SegmentationParams& params, std::int32_t width,
                            std::int32_t height) {
  return std::min(params.max_obj_dimension, std::min(width, height) - 1);
}

Point center_of(const ComponentStats& component) {
  return {static_cast<std::int32_t>(std::lround(component.centroid.x)),
          static_cast<std::int32_t>(std::lround(component.centroid.y))};
}

UpdateOutcome classify_candidate(const ComponentStats& candidate,
                                 const std::vector<DetectedObject>& stored,
                                 const SegmentationParams& params) {
  const Rect& box = candidate.bbox;

  const bool background = std::any_of(stored.begin(), stored.end(), [&](const DetectedObject& s) {
    return containment_ratio(box, s.bbox) >= params.common_area_to_consider_background;
  });
  if (background) {
    return {UpdateKind::DiscardedBackground, std::nullopt};
  }

  const bool touches_any = std::any_of(stored.begin(), stored.end(), [&](const DetectedObject& s) {
    return intersect(box, s.bbox).has_value();
  });
  if (!touches_any) {
    return {UpdateKind::Added, std::nullopt};
  }

  const auto centers_inside = std::count_if(
      stored.begin(), stored.end(), [&](const DetectedObject& s) { return contains(box, s.center); });
  if (centers_inside >= 2) {
    return {UpdateKind::DiscardedMerge, std::nullopt};
  }

  for (std::size_t i = 0; i < stored.size(); ++i) {
    const auto& s = stored[i];
    if (containment_ratio(s.bbox, box) >= params.common_area_to_consider_growing &&
        contains(box, s.center)) {
      return {UpdateKind::Grew, i};
    }
  }
  return {UpdateKind::DiscardedAmbiguous, std::nullopt};
}

bool parallel_sweep_available(const SegmentationParams& params) {
  return params.num_same_iterations_to_stop == 0;
}

SegmentationResult segment_traced(const GrayImage& img, const SegmentationParams& params,
                                  const SegmentOptions& options) {
  validate(params);
  SegmentationResult result;
  const auto range = min_max(img);
  if (range.min == range.max) {
    return result;
  }
  const int max_dim = effective_max_dimension(params, img.width(), img.height());
  const auto thresholds = sweep_thresholds(range, params.threshold_step_size);

  std::vector<LabeledLevel> prelabeled;
  if (options.parallel && parallel_sweep_available(params)) {
    prelabeled = label_levels_parallel(img, thresholds, params, max_dim, options.max_threads);
  }

  std::vector<DetectedObject> stored;
  int unchanged_run = 0;
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    std::vector<ComponentStats> candidates;
    if (prelabeled.empty()) {
      candidates = candidates_at(img, thresholds[k], params, max_dim);
    } else {
      if (prelabeled[k].error) {
        std::rethrow_exception(prelabeled[k].error);
      }
      candidates = std::move(prelabeled[k].candidates);
    }

    SweepStep step{thresholds[k].cut, candidates.size(), 0, 0, 0};
    for (const auto& candidate : candidates) {
      const auto outcome = classify_candidate(candidate, stored, params);
      if (outcome.kind == UpdateKind::Added) {
        stored.push_back({center_of(candidate), 0, candidate.bbox});
        ++step.added;
      } else if (outcome.kind == UpdateKind::Grew) {
        auto& target = stored[*outcome.target_index];
        target.bbox = candidate.bbox;
        target.center = center_of(candidate);
        ++step.grown;
      }
    }
    step.stored_after = stored.size();
    result.steps.push_back(step);

    unchanged_run = (step.added + step.grown == 0) ? unchanged_run + 1 : 0;
    if (params.num_same_iterations_to_stop > 0 &&
        unchanged_run >= params.num_same_iterations_to_stop) {
      result.stopped_early = k + 1 < thresholds.size();
      break;
    }
  }

  for (auto& object : stored) {
    object.disparity = max_in_rect(img, object.bbox);
  }
  std::sort(stored.begin(), stored.end(), sorted_before);
  result.objects = std::move(stored);
  return result;
}

std::vector<DetectedObject> segment(const GrayImage& img, const SegmentationParams& params,
                                    const SegmentOptions& options) {
  return segment_traced(img, params, options).objects;
}

}  // namespace ancc
