#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ancc/ccl.hpp"
#include "ancc/image.hpp"
#include "ancc/rect.hpp"

namespace ancc {

/// Tunables of the adaptive threshold sweep.
struct SegmentationParams {
  /// Threshold decrement as a fraction of (max - min) intensity. Must be > 0.
  double threshold_step_size = 0.05;
  /// Stop after this many consecutive iterations without an add or grow.
  /// 0 sweeps the whole intensity range.
  int num_same_iterations_to_stop = 0;
  /// Both bbox sides of a candidate must lie in [min, max].
  int min_obj_dimension = 10;
  /// Clamped to min(width, height) - 1 so the whole frame is never an object.
  int max_obj_dimension = 400;
  /// A candidate at least this much inside a stored object is background.
  double common_area_to_consider_background = 0.9;
  /// A stored object at least this much inside a candidate grows into it.
  double common_area_to_consider_growing = 0.9;
  Connectivity connectivity = Connectivity::Eight;
  LabelWidth label_width = LabelWidth::Bits16;
  CclAlgorithm ccl_algorithm = CclAlgorithm::TwoPassUnionFind;
};

/// Throws std::invalid_argument when any field is outside its domain.
void validate(const SegmentationParams& params);

/// max_obj_dimension after clamping to the frame.
[[nodiscard]] int effective_max_dimension(const SegmentationParams& params, std::int32_t width,
                                          std::int32_t height);

struct DetectedObject {
  Point center;
  Intensity disparity = 0;
  Rect bbox;

  friend bool operator==(const DetectedObject&, const DetectedObject&) = default;
};

enum class UpdateKind { DiscardedBackground, Added, DiscardedMerge, Grew, DiscardedAmbiguous };

struct UpdateOutcome {
  UpdateKind kind = UpdateKind::DiscardedAmbiguous;
  /// Index of the stored object to update; set only for Grew.
  std::optional<std::size_t> target_index;

  friend bool operator==(const UpdateOutcome&, const UpdateOutcome&) = default;
};

/// Centroid rounded to the nearest pixel.
[[nodiscard]] Point center_of(const ComponentStats& component);

/// Decides what a new candidate does to the stored list. Rules are checked in
/// order and the first match wins:
///   1. mostly inside some stored bbox            -> DiscardedBackground
///   2. intersects no stored bbox                  -> Added
///   3. holds the centers of 2+ stored objects     -> DiscardedMerge
///   4. first stored object mostly inside it whose
///      center it also holds                       -> Grew
///   5. anything else                              -> DiscardedAmbiguous
[[nodiscard]] UpdateOutcome classify_candidate(const ComponentStats& candidate,
                                               const std::vector<DetectedObject>& stored,
                                               const SegmentationParams& params);

/// True when the sweep has no early stop, so every threshold's labeling is
/// independent of the others and can be computed concurrently.
[[nodiscard]] bool parallel_sweep_available(const SegmentationParams& params);

struct SegmentOptions {
  /// Label all thresholds concurrently when parallel_sweep_available().
  /// Results are identical to the serial sweep.
  bool parallel = false;
  /// 0 uses std::thread::hardware_concurrency().
  unsigned max_threads = 0;
};

/// One labeled threshold level of the sweep.
struct SweepStep {
  double threshold = 0.0;
  std::size_t candidates = 0;  ///< components passing the dimension filter
  std::size_t added = 0;
  std::size_t grown = 0;
  std::size_t stored_after = 0;
};

struct SegmentationResult {
  /// Sorted by disparity descending, then bbox area descending, then (y, x).
  std::vector<DetectedObject> objects;
  std::vector<SweepStep> steps;
  bool stopped_early = false;

  [[nodiscard]] std::size_t iterations() const { return steps.size(); }
};

[[nodiscard]] SegmentationResult segment_traced(const GrayImage& img,
                                                const SegmentationParams& params,
                                                const SegmentOptions& options = {});

[[nodiscard]] std::vector<DetectedObject> segment(const GrayImage& img,
                                                  const SegmentationParams& params = {},
                                                  const SegmentOptions& options = {});

}  // namespace ancc
