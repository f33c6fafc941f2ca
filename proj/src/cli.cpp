#include "ancc/cli.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "ancc/ccl.hpp"
#include "ancc/pgm.hpp"
#include "ancc/report.hpp"
#include "ancc/segmenter.hpp"

namespace ancc::cli {
namespace {

struct CliConfig {
  std::string input_path;
  std::string json_path;
  std::string annotated_path;
  SegmentationParams params;
  int connectivity = 8;
  int label_bits = 16;
  bool parallel = false;
  int verbosity = 0;
};

void print_objects(const std::vector<DetectedObject>& objects, std::ostream& out) {
  out << objects.size() << (objects.size() == 1 ? " object\n" : " objects\n");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& o = objects[i];
    out << "  #" << i << " center=(" << o.center.x << ',' << o.center.y
        << ") disparity=" << o.disparity << " bbox=(" << o.bbox.x << ',' << o.bbox.y << ','
        << o.bbox.w << ',' << o.bbox.h << ")\n";
  }
}

void print_trace(const SegmentationResult& result, std::ostream& out) {
  for (std::size_t k = 0; k < result.steps.size(); ++k) {
    const auto& s = result.steps[k];
    out << "  step " << k + 1 << " threshold=" << s.threshold << " candidates=" << s.candidates
        << " added=" << s.added << " grown=" << s.grown << " stored=" << s.stored_after << '\n';
  }
  if (result.stopped_early) {
    out << "  stopped early after " << result.steps.size() << " steps\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  auto& p = cfg.params;

  CLI::App app{"Segment a grayscale disparity image into bounding-boxed objects", "ancc"};
  app.add_option("--input", cfg.input_path, "Input PGM (P2 or P5, 8 or 16 bit)")->required();
  app.add_option("--json-out", cfg.json_path, "Write detected objects as JSON");
  app.add_option("--annotated-out", cfg.annotated_path, "Write a PPM with red bounding boxes");
  app.add_option("--threshold-step", p.threshold_step_size,
                 "Threshold step as a fraction of the intensity range")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--stop-iterations", p.num_same_iterations_to_stop,
                 "Stop after this many unchanged steps (0 = full sweep)")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  app.add_option("--min-dim", p.min_obj_dimension, "Minimum object width and height")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  app.add_option("--max-dim", p.max_obj_dimension, "Maximum object width and height")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  app.add_option("--bg-ratio", p.common_area_to_consider_background,
                 "Containment ratio that marks a new blob as background")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--grow-ratio", p.common_area_to_consider_growing,
                 "Containment ratio that lets a stored object grow")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--connectivity", cfg.connectivity, "Pixel connectivity")
      ->check(CLI::IsMember({4, 8}))
      ->capture_default_str();
  app.add_option("--label-bits", cfg.label_bits, "Label width")
      ->check(CLI::IsMember({16, 32}))
      ->capture_default_str();
  app.add_flag("--parallel", cfg.parallel, "Label all thresholds concurrently when possible");
  app.add_flag("-v,--verbose", cfg.verbosity, "Print the per-step sweep trace");

  std::vector<const char*> argv{"ancc"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  p.connectivity = cfg.connectivity == 4 ? Connectivity::Four : Connectivity::Eight;
  p.label_width = cfg.label_bits == 32 ? LabelWidth::Bits32 : LabelWidth::Bits16;
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::optional<GrayImage> img;
  try {
    img = load_pgm(cfg.input_path);
  } catch (const PgmError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }

  SegmentationResult result;
  try {
    result = segment_traced(*img, p, SegmentOptions{cfg.parallel, 0});
  } catch (const LabelOverflowError& e) {
    err << "error: " << e.what() << " (try --label-bits 32)\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }

  if (cfg.verbosity > 0) {
    out << cfg.input_path << ": " << img->width() << 'x' << img->height() << ", "
        << img->depth() << "-bit, " << result.iterations() << " threshold steps\n";
    print_trace(result, out);
  }
  print_objects(result.objects, out);

  try {
    if (!cfg.json_path.empty()) {
      write_json(result.objects, cfg.json_path);
    }
    if (!cfg.annotated_path.empty()) {
      write_annotated(*img, result.objects, cfg.annotated_path);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}

}  // namespace ancc::cli
