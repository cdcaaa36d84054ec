#include "arcinterp/scene.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "arcinterp/errors.hpp"
#include "arcinterp/imgio.hpp"

namespace arcinterp {

namespace {

constexpr int kSupersample = 4;

std::uint64_t mix(std::uint64_t z) {
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double lattice_value(std::uint64_t seed, std::int64_t ix, std::int64_t iy, int channel) {
  std::uint64_t h = mix(seed);
  h = mix(h ^ static_cast<std::uint64_t>(ix));
  h = mix(h ^ static_cast<std::uint64_t>(iy));
  h = mix(h ^ static_cast<std::uint64_t>(channel));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double smoothstep(double f) { return f * f * (3.0 - 2.0 * f); }

double noise_octave(std::uint64_t seed, double x, double y, double cell, int channel) {
  const double gx = x / cell;
  const double gy = y / cell;
  const double fx0 = std::floor(gx);
  const double fy0 = std::floor(gy);
  const auto ix = static_cast<std::int64_t>(fx0);
  const auto iy = static_cast<std::int64_t>(fy0);
  const double sx = smoothstep(gx - fx0);
  const double sy = smoothstep(gy - fy0);
  const double v00 = lattice_value(seed, ix, iy, channel);
  const double v10 = lattice_value(seed, ix + 1, iy, channel);
  const double v01 = lattice_value(seed, ix, iy + 1, channel);
  const double v11 = lattice_value(seed, ix + 1, iy + 1, channel);
  const double top = v00 + (v10 - v00) * sx;
  const double bottom = v01 + (v11 - v01) * sx;
  return top + (bottom - top) * sy;
}

Vec2 object_center_of(const SceneSpec& spec) {
  return spec.object_center.value_or(Vec2{spec.extent.width / 2.0, spec.extent.height / 2.0});
}

// Texture value at a point given in t = 0 coordinates.
double texture_at(const SceneSpec& spec, Vec2 p, int channel) {
  if (spec.object_radius > 0.0) {
    const Vec2 c = object_center_of(spec);
    if (std::hypot(p.x - c.x, p.y - c.y) > spec.object_radius) {
      return spec.background;
    }
  }
  switch (spec.texture) {
    case Texture::value_noise: {
      const double coarse = noise_octave(spec.seed, p.x, p.y, spec.feature_size, channel);
      const double fine = noise_octave(spec.seed + 1, p.x, p.y, spec.feature_size / 2.0, channel);
      return 0.1 + 0.8 * (0.65 * coarse + 0.35 * fine);
    }
    case Texture::checkerboard: {
      const auto cx = static_cast<std::int64_t>(std::floor(p.x / spec.feature_size));
      const auto cy = static_cast<std::int64_t>(std::floor(p.y / spec.feature_size));
      const bool odd = ((cx + cy) & 1) != 0;
      const double jitter = lattice_value(spec.seed, odd ? 1 : 0, 0, channel);
      return odd ? 0.65 + 0.2 * jitter : 0.15 + 0.2 * jitter;
    }
  }
  return spec.background;
}

Vec2 rotate_about(Vec2 p, Vec2 center, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double dx = p.x - center.x;
  const double dy = p.y - center.y;
  return {center.x + c * dx - s * dy, center.y + s * dx + c * dy};
}

// Inverse of the motion at time t: where a point seen at time t was at t = 0.
Vec2 source_position(const SceneSpec& spec, Vec2 q, double t) {
  if (const auto* r = std::get_if<Rotation>(&spec.motion)) {
    return rotate_about(q, r->center, -r->omega * t);
  }
  const auto& tr = std::get<Translation>(spec.motion);
  return {q.x - t * tr.offset.x, q.y - t * tr.offset.y};
}

void require_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InputError("scene: time t = " + std::to_string(t) + " outside [0, 1]");
  }
}

}  // namespace

void SceneSpec::validate() const {
  if (extent.width <= 0 || extent.height <= 0) {
    throw InputError("scene: width and height must be positive");
  }
  if (const auto* r = std::get_if<Rotation>(&motion)) {
    if (!std::isfinite(r->omega) || std::abs(r->omega) > std::numbers::pi) {
      throw InputError("scene: |omega| must be at most pi");
    }
    if (!std::isfinite(r->center.x) || !std::isfinite(r->center.y)) {
      throw InputError("scene: rotation center must be finite");
    }
  } else {
    const auto& tr = std::get<Translation>(motion);
    if (!std::isfinite(tr.offset.x) || !std::isfinite(tr.offset.y)) {
      throw InputError("scene: translation must be finite");
    }
  }
  if (!(background >= 0.0 && background <= 1.0)) {
    throw InputError("scene: background must lie in [0, 1]");
  }
  if (!(feature_size > 0.0) || !std::isfinite(feature_size)) {
    throw InputError("scene: feature_size must be positive");
  }
  if (!(object_radius >= 0.0) || !std::isfinite(object_radius)) {
    throw InputError("scene: object_radius must be nonnegative");
  }
}

Vec2 oracle_intermediate_position(const SceneSpec& spec, Vec2 p, double t) {
  require_time(t);
  if (const auto* r = std::get_if<Rotation>(&spec.motion)) {
    return rotate_about(p, r->center, r->omega * t);
  }
  const auto& tr = std::get<Translation>(spec.motion);
  return {p.x + t * tr.offset.x, p.y + t * tr.offset.y};
}

GroundTruthFields ground_truth_fields(const SceneSpec& spec) {
  spec.validate();
  GroundTruthFields out{FlowField(spec.extent), SigmaMap(spec.extent), FlowField(spec.extent),
                        SigmaMap(spec.extent)};
  if (const auto* r = std::get_if<Rotation>(&spec.motion)) {
    for (int y = 0; y < spec.extent.height; ++y) {
      for (int x = 0; x < spec.extent.width; ++x) {
        const Vec2 p{static_cast<double>(x), static_cast<double>(y)};
        const Vec2 forward = rotate_about(p, r->center, r->omega);
        const Vec2 backward = rotate_about(p, r->center, -r->omega);
        out.flow01.set(x, y, {forward.x - p.x, forward.y - p.y});
        out.flow10.set(x, y, {backward.x - p.x, backward.y - p.y});
      }
    }
    // The arc sweeps its polar angle by -2 beta; matching +omega needs
    // beta = -omega / 2.
    const double s = std::sin(r->omega / 2.0);
    out.sigma01 = SigmaMap(spec.extent, -s);
    out.sigma10 = SigmaMap(spec.extent, s);
  } else {
    const Vec2 d = std::get<Translation>(spec.motion).offset;
    out.flow01 = FlowField::uniform(spec.extent, d);
    out.flow10 = FlowField::uniform(spec.extent, {-d.x, -d.y});
  }
  return out;
}

Image ground_truth_frame(const SceneSpec& spec, double t) {
  spec.validate();
  require_time(t);
  constexpr int kChannels = 3;
  constexpr double kSamples = kSupersample * kSupersample;
  Image out(spec.extent, kChannels);
  for (int y = 0; y < spec.extent.height; ++y) {
    for (int x = 0; x < spec.extent.width; ++x) {
      double acc[kChannels] = {0.0, 0.0, 0.0};
      for (int sy = 0; sy < kSupersample; ++sy) {
        for (int sx = 0; sx < kSupersample; ++sx) {
          const Vec2 q{x + (sx + 0.5) / kSupersample - 0.5, y + (sy + 0.5) / kSupersample - 0.5};
          const Vec2 p = source_position(spec, q, t);
          for (int c = 0; c < kChannels; ++c) {
            acc[c] += texture_at(spec, p, c);
          }
        }
      }
      for (int c = 0; c < kChannels; ++c) {
        out.at(x, y, c) = static_cast<float>(acc[c] / kSamples);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// key = value text format

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<double> parse_numbers(const std::string& key, const std::string& value,
                                  std::size_t count) {
  std::vector<double> out;
  std::istringstream in(value);
  std::string tok;
  while (in >> tok) {
    double d = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InputError("scene: key '" + key + "': bad number '" + tok + "'");
    }
    out.push_back(d);
  }
  if (out.size() != count) {
    throw InputError("scene: key '" + key + "' expects " + std::to_string(count) + " number(s)");
  }
  return out;
}

double parse_number(const std::string& key, const std::string& value) {
  return parse_numbers(key, value, 1)[0];
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

SceneSpec parse_scene_spec(std::string_view text) {
  std::map<std::string, std::string> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string content = trim(line);
    if (content.empty()) {
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw InputError("scene: line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw InputError("scene: line " + std::to_string(line_no) + ": empty key or value");
    }
    if (!entries.emplace(key, value).second) {
      throw InputError("scene: duplicate key '" + key + "'");
    }
  }

  SceneSpec spec;
  const auto take = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = entries.find(key);
    if (it == entries.end()) {
      return std::nullopt;
    }
    std::string v = it->second;
    entries.erase(it);
    return v;
  };
  const auto take_int = [&](const std::string& key, int fallback) {
    const auto v = take(key);
    if (!v) {
      return fallback;
    }
    const double d = parse_number(key, *v);
    if (d != std::floor(d) || d < 1 || d > 1 << 16) {
      throw InputError("scene: key '" + key + "' must be a positive integer");
    }
    return static_cast<int>(d);
  };

  spec.extent.width = take_int("width", spec.extent.width);
  spec.extent.height = take_int("height", spec.extent.height);

  const std::string motion = take("motion").value_or("rotation");
  if (motion == "rotation") {
    Rotation r{{spec.extent.width / 2.0, spec.extent.height / 2.0}, 0.0};
    if (const auto c = take("center")) {
      const auto xy = parse_numbers("center", *c, 2);
      r.center = {xy[0], xy[1]};
    }
    const auto rad = take("omega");
    const auto deg = take("omega_deg");
    if (rad && deg) {
      throw InputError("scene: give omega or omega_deg, not both");
    }
    if (rad) {
      r.omega = parse_number("omega", *rad);
    } else if (deg) {
      r.omega = parse_number("omega_deg", *deg) * std::numbers::pi / 180.0;
    }
    spec.motion = r;
  } else if (motion == "translation") {
    Translation tr;
    if (const auto o = take("offset")) {
      const auto xy = parse_numbers("offset", *o, 2);
      tr.offset = {xy[0], xy[1]};
    }
    spec.motion = tr;
  } else {
    throw InputError("scene: unknown motion '" + motion + "'");
  }

  if (const auto tex = take("texture")) {
    if (*tex == "noise") {
      spec.texture = Texture::value_noise;
    } else if (*tex == "checker") {
      spec.texture = Texture::checkerboard;
    } else {
      throw InputError("scene: unknown texture '" + *tex + "'");
    }
  }
  if (const auto s = take("seed")) {
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), seed);
    if (ec != std::errc{} || ptr != s->data() + s->size()) {
      throw InputError("scene: bad seed '" + *s + "'");
    }
    spec.seed = seed;
  }
  if (const auto b = take("background")) {
    spec.background = parse_number("background", *b);
  }
  if (const auto f = take("feature_size")) {
    spec.feature_size = parse_number("feature_size", *f);
  }
  if (const auto c = take("object_center")) {
    const auto xy = parse_numbers("object_center", *c, 2);
    spec.object_center = Vec2{xy[0], xy[1]};
  }
  if (const auto r = take("object_radius")) {
    spec.object_radius = parse_number("object_radius", *r);
  }

  if (!entries.empty()) {
    throw InputError("scene: unknown or misplaced key '" + entries.begin()->first + "'");
  }
  spec.validate();
  return spec;
}

SceneSpec load_scene_spec(const std::filesystem::path& path) {
  const Bytes bytes = read_file(path);
  try {
    return parse_scene_spec(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_scene_spec(const SceneSpec& spec) {
  std::ostringstream out;
  out << "width = " << spec.extent.width << "\n";
  out << "height = " << spec.extent.height << "\n";
  if (const auto* r = std::get_if<Rotation>(&spec.motion)) {
    out << "motion = rotation\n";
    out << "center = " << shortest(r->center.x) << " " << shortest(r->center.y) << "\n";
    out << "omega = " << shortest(r->omega) << "\n";
  } else {
    const auto& tr = std::get<Translation>(spec.motion);
    out << "motion = translation\n";
    out << "offset = " << shortest(tr.offset.x) << " " << shortest(tr.offset.y) << "\n";
  }
  out << "texture = " << (spec.texture == Texture::value_noise ? "noise" : "checker") << "\n";
  out << "seed = " << spec.seed << "\n";
  out << "background = " << shortest(spec.background) << "\n";
  out << "feature_size = " << shortest(spec.feature_size) << "\n";
  if (spec.object_center) {
    out << "object_center = " << shortest(spec.object_center->x) << " "
        << shortest(spec.object_center->y) << "\n";
  }
  out << "object_radius = " << shortest(spec.object_radius) << "\n";
  return out.str();
}

}  // namespace arcinterp
