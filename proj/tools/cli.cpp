#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "arcinterp/arcinterp.hpp"

namespace arcinterp::cli {

namespace fs = std::filesystem;

std::string format_number(double value) {
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  if (std::isnan(value)) {
    return "nan";
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, ptr);
  if (s.find_first_of(".eE") == std::string::npos) {
    s += ".0";
  }
  return s;
}

namespace {

struct InterpolateArgs {
  std::string frame0, frame1, flow01, flow10, sigma01, sigma10, out, dump_dir;
  double t = 0.5;
  double sigma_threshold = 0.01;
  bool force_linear = false;
};

struct SceneArgs {
  std::string spec_path, outdir, motion, texture;
  std::vector<double> times{0.5};
  std::optional<int> width, height;
  std::optional<std::uint64_t> seed;
  std::vector<double> center, offset, object_center;
  std::optional<double> omega, omega_deg, background, feature_size, object_radius;
};

struct EvalArgs {
  std::string a, b;
  double epsilon = kCharbonnierEpsilon;
};

struct FlowArcArgs {
  std::string flow, sigma, out;
  double t = 0.5;
  double sigma_threshold = 0.01;
  bool force_linear = false;
};

struct FlowVizArgs {
  std::string flow, out;
  std::optional<double> max_magnitude;
};

SigmaMap load_sigma(const std::string& path, Extent fallback, std::ostream& err) {
  if (path.empty()) {
    return SigmaMap(fallback);
  }
  auto loaded = read_sigma(path);
  if (loaded.clamped_count > 0) {
    err << "warning: " << path << ": clamped " << loaded.clamped_count
        << " sigma value(s) to [-1, 1]\n";
  }
  return std::move(loaded.map);
}

Image load_image(const std::string& path) {
  return fs::path(path).extension() == ".pfm" ? read_pfm(path) : read_ppm(path);
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create directory " + dir + ": " + ec.message());
  }
}

int run_interpolate(const InterpolateArgs& a, std::ostream& err) {
  const Image frame0 = read_ppm(a.frame0);
  const Image frame1 = read_ppm(a.frame1);
  const FlowField flow01 = read_flo(a.flow01);
  const FlowField flow10 = read_flo(a.flow10);
  const SigmaMap sigma01 = load_sigma(a.sigma01, flow01.extent(), err);
  const SigmaMap sigma10 = load_sigma(a.sigma10, flow10.extent(), err);

  ArcConfig config;
  config.sigma_threshold = a.sigma_threshold;
  config.force_linear = a.force_linear;

  const Interpolation result =
      interpolate({frame0, frame1, flow01, flow10, sigma01, sigma10}, a.t, config);
  write_ppm(a.out, result.frame);

  if (!a.dump_dir.empty()) {
    ensure_directory(a.dump_dir);
    const fs::path dir(a.dump_dir);
    write_flo(dir / "flow0t.flo", result.flow0t);
    write_flo(dir / "flow1t.flo", result.flow1t);
    write_ppm(dir / "flow0t.ppm", flow_to_color(result.flow0t));
    write_ppm(dir / "flow1t.ppm", flow_to_color(result.flow1t));
    write_pfm(dir / "sigma01_warped.pfm", result.warped_sigma01);
    write_pfm(dir / "sigma10_warped.pfm", result.warped_sigma10);
    write_pfm(dir / "warped0.pfm", result.warped0.image);
    write_pfm(dir / "warped1.pfm", result.warped1.image);
    write_pfm(dir / "frame_t.pfm", result.frame);
    write_ppm(dir / "mask0.pgm", mask_to_image(result.warped0.mask));
    write_ppm(dir / "mask1.pgm", mask_to_image(result.warped1.mask));
  }
  return kExitOk;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (double d : v) {
    if (!s.empty()) {
      s += ' ';
    }
    s += format_number(d);
  }
  return s;
}

SceneSpec scene_from_args(const SceneArgs& a) {
  std::ostringstream text;
  bool inline_flags = false;
  const auto emit = [&](const char* key, const std::string& value) {
    text << key << " = " << value << "\n";
    inline_flags = true;
  };
  if (a.width) emit("width", std::to_string(*a.width));
  if (a.height) emit("height", std::to_string(*a.height));
  if (!a.motion.empty()) emit("motion", a.motion);
  if (!a.center.empty()) emit("center", join(a.center));
  if (a.omega) emit("omega", format_number(*a.omega));
  if (a.omega_deg) emit("omega_deg", format_number(*a.omega_deg));
  if (!a.offset.empty()) emit("offset", join(a.offset));
  if (!a.texture.empty()) emit("texture", a.texture);
  if (a.background) emit("background", format_number(*a.background));
  if (a.feature_size) emit("feature_size", format_number(*a.feature_size));
  if (!a.object_center.empty()) emit("object_center", join(a.object_center));
  if (a.object_radius) emit("object_radius", format_number(*a.object_radius));

  SceneSpec spec;
  if (!a.spec_path.empty()) {
    if (inline_flags) {
      throw InputError("inline scene flags cannot be combined with --spec (only --seed may override)");
    }
    spec = load_scene_spec(a.spec_path);
  } else {
    spec = parse_scene_spec(text.str());
  }
  if (a.seed) {
    spec.seed = *a.seed;
  }
  return spec;
}

std::string time_tag(double t) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << t;
  return s.str();
}

int run_gen_scene(const SceneArgs& a, std::ostream& out) {
  const SceneSpec spec = scene_from_args(a);
  for (double t : a.times) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw InputError("--t " + format_number(t) + " outside [0, 1]");
    }
  }
  ensure_directory(a.outdir);
  const fs::path dir(a.outdir);

  const GroundTruthFields fields = ground_truth_fields(spec);
  write_ppm(dir / "frame0.ppm", ground_truth_frame(spec, 0.0));
  write_ppm(dir / "frame1.ppm", ground_truth_frame(spec, 1.0));
  write_flo(dir / "flow01.flo", fields.flow01);
  write_flo(dir / "flow10.flo", fields.flow10);
  write_sigma(dir / "sigma01.pfm", fields.sigma01);
  write_sigma(dir / "sigma10.pfm", fields.sigma10);
  for (double t : a.times) {
    write_ppm(dir / ("frame_t" + time_tag(t) + ".ppm"), ground_truth_frame(spec, t));
  }
  const std::string canonical = format_scene_spec(spec);
  write_file(dir / "scene.txt",
             std::span(reinterpret_cast<const std::uint8_t*>(canonical.data()), canonical.size()));
  out << "wrote scene to " << dir.string() << "\n";
  return kExitOk;
}

int run_eval(const EvalArgs& a, std::ostream& out) {
  const Image first = load_image(a.a);
  const Image second = load_image(a.b);
  // Compute everything before printing so a failure leaves no partial output.
  const double p = psnr(first, second);
  const double s = ssim(first, second);
  const double ie = interpolation_error(first, second);
  const double ch = charbonnier(first, second, a.epsilon);
  out << "psnr=" << format_number(p) << "\n";
  out << "ssim=" << format_number(s) << "\n";
  out << "ie=" << format_number(ie) << "\n";
  out << "charbonnier=" << format_number(ch) << "\n";
  return kExitOk;
}

int run_flow_arc(const FlowArcArgs& a, std::ostream& err) {
  const FlowField flow = read_flo(a.flow);
  const SigmaMap sigma = load_sigma(a.sigma, flow.extent(), err);
  ArcConfig config;
  config.sigma_threshold = a.sigma_threshold;
  config.force_linear = a.force_linear;
  write_flo(a.out, intermediate_flow(flow, sigma, a.t, config));
  return kExitOk;
}

int run_flow_viz(const FlowVizArgs& a) {
  write_ppm(a.out, flow_to_color(read_flo(a.flow), a.max_magnitude));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arc-trajectory video frame interpolation toolkit", "arcinterp"};
  app.require_subcommand(1);

  InterpolateArgs ia;
  auto* interp = app.add_subcommand("interpolate", "Synthesize the frame at time t");
  interp->add_option("--frame0", ia.frame0, "First frame (PPM)")->required();
  interp->add_option("--frame1", ia.frame1, "Second frame (PPM)")->required();
  interp->add_option("--flow01", ia.flow01, "Flow frame0 -> frame1 (.flo)")->required();
  interp->add_option("--flow10", ia.flow10, "Flow frame1 -> frame0 (.flo)")->required();
  interp->add_option("--sigma01", ia.sigma01, "Curvature map for flow01 (PFM); default 0");
  interp->add_option("--sigma10", ia.sigma10, "Curvature map for flow10 (PFM); default 0");
  interp->add_option("--t", ia.t, "Temporal position in [0, 1]")->capture_default_str();
  interp->add_option("--sigma-threshold", ia.sigma_threshold,
                     "Straight-line trajectory when |sigma| <= threshold")
      ->capture_default_str();
  interp->add_flag("--force-linear", ia.force_linear, "Use straight-line trajectories everywhere");
  interp->add_option("--dump-intermediates", ia.dump_dir,
                     "Directory for intermediate flows, warped maps and masks");
  interp->add_option("--out", ia.out, "Output frame (PPM)")->required();

  SceneArgs sa;
  auto* scene = app.add_subcommand("gen-scene", "Render a synthetic scene with exact ground truth");
  scene->add_option("--spec", sa.spec_path, "Scene description file (key = value)");
  scene->add_option("--outdir", sa.outdir, "Output directory")->required();
  scene->add_option("--t", sa.times, "Times of ground-truth midframes")->capture_default_str();
  scene->add_option("--seed", sa.seed, "Texture seed");
  scene->add_option("--width", sa.width);
  scene->add_option("--height", sa.height);
  scene->add_option("--motion", sa.motion, "rotation | translation");
  scene->add_option("--center", sa.center, "Rotation center x y")->expected(2);
  scene->add_option("--omega", sa.omega, "Rotation angle, radians");
  scene->add_option("--omega-deg", sa.omega_deg, "Rotation angle, degrees");
  scene->add_option("--offset", sa.offset, "Translation dx dy")->expected(2);
  scene->add_option("--texture", sa.texture, "noise | checker");
  scene->add_option("--background", sa.background);
  scene->add_option("--feature-size", sa.feature_size);
  scene->add_option("--object-center", sa.object_center)->expected(2);
  scene->add_option("--object-radius", sa.object_radius);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Print PSNR, SSIM, IE and Charbonnier of two images");
  eval->add_option("a", ea.a, "Image (PPM/PGM, or PFM by extension)")->required();
  eval->add_option("b", ea.b, "Image (PPM/PGM, or PFM by extension)")->required();
  eval->add_option("--epsilon", ea.epsilon, "Charbonnier epsilon")->capture_default_str();

  FlowArcArgs fa;
  auto* flow_arc = app.add_subcommand("flow-arc", "Write the intermediate flow F_0->t");
  flow_arc->add_option("--flow", fa.flow, "Flow (.flo)")->required();
  flow_arc->add_option("--sigma", fa.sigma, "Curvature map (PFM); default 0");
  flow_arc->add_option("--t", fa.t)->capture_default_str();
  flow_arc->add_option("--sigma-threshold", fa.sigma_threshold)->capture_default_str();
  flow_arc->add_flag("--force-linear", fa.force_linear);
  flow_arc->add_option("--out", fa.out, "Output flow (.flo)")->required();

  FlowVizArgs va;
  auto* viz = app.add_subcommand("flow-viz", "Render a flow field with the color wheel");
  viz->add_option("--flow", va.flow, "Flow (.flo)")->required();
  viz->add_option("--max", va.max_magnitude, "Magnitude of full saturation; default: field max");
  viz->add_option("--out", va.out, "Output image (PPM)")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*interp) return run_interpolate(ia, err);
    if (*scene) return run_gen_scene(sa, out);
    if (*eval) return run_eval(ea, out);
    if (*flow_arc) return run_flow_arc(fa, err);
    if (*viz) return run_flow_viz(va);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitInput;
}

}  // namespace arcinterp::cli
