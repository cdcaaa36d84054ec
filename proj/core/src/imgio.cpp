#include "arcinterp/imgio.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <numbers>
#include <string>

#include "arcinterp/errors.hpp"

namespace arcinterp {

namespace {

constexpr float kFloMagic = 202021.25f;
constexpr std::size_t kFloHeaderBytes = 12;

// Rejects dimensions whose payload could not fit in memory or a file.
constexpr std::int64_t kMaxPixels = std::int64_t{1} << 31;

void put_u32_le(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xffu));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xffu));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xffu));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xffu));
}

void put_f32_le(Bytes& out, float f) { put_u32_le(out, std::bit_cast<std::uint32_t>(f)); }

std::uint32_t get_u32(std::span<const std::uint8_t> bytes, std::size_t at, bool little) {
  const std::uint32_t b0 = bytes[at];
  const std::uint32_t b1 = bytes[at + 1];
  const std::uint32_t b2 = bytes[at + 2];
  const std::uint32_t b3 = bytes[at + 3];
  return little ? (b0 | (b1 << 8) | (b2 << 16) | (b3 << 24))
                : (b3 | (b2 << 8) | (b1 << 16) | (b0 << 24));
}

float get_f32(std::span<const std::uint8_t> bytes, std::size_t at, bool little) {
  return std::bit_cast<float>(get_u32(bytes, at, little));
}

[[noreturn]] void format_error(std::string_view source, const std::string& what) {
  throw FormatError(std::string(source) + ": " + what);
}

void check_dims(std::int64_t width, std::int64_t height, std::string_view source) {
  if (width <= 0 || height <= 0) {
    format_error(source, "nonpositive dimensions " + std::to_string(width) + "x" +
                             std::to_string(height));
  }
  if (width > std::numeric_limits<int>::max() || height > std::numeric_limits<int>::max() ||
      width * height > kMaxPixels) {
    format_error(source, "dimensions too large");
  }
}

// Tokenizer for the ASCII headers of PFM and PPM.
class HeaderReader {
 public:
  HeaderReader(std::span<const std::uint8_t> bytes, std::string_view source)
      : bytes_(bytes), source_(source) {}

  std::string token() {
    skip_space_and_comments();
    std::string out;
    while (pos_ < bytes_.size() && !is_space(bytes_[pos_])) {
      out.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (out.empty()) {
      format_error(source_, "truncated header");
    }
    return out;
  }

  std::int64_t integer(const char* what) {
    const std::string t = token();
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      format_error(source_, std::string("bad ") + what + " '" + t + "'");
    }
    return value;
  }

  double real(const char* what) {
    const std::string t = token();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value)) {
      format_error(source_, std::string("bad ") + what + " '" + t + "'");
    }
    return value;
  }

  // Exactly one whitespace byte separates the header from the payload.
  std::size_t end_of_header() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      format_error(source_, "truncated header");
    }
    return pos_ + 1;
  }

 private:
  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::string_view source_;
  std::size_t pos_ = 0;
};

void check_payload(std::size_t available, std::size_t needed, std::string_view source) {
  if (available < needed) {
    format_error(source, "truncated payload: expected " + std::to_string(needed) +
                             " bytes, found " + std::to_string(available));
  }
  if (available > needed) {
    format_error(source, "trailing data after payload");
  }
}

void append_text(Bytes& out, const std::string& text) { out.insert(out.end(), text.begin(), text.end()); }

}  // namespace

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("error reading " + path.string());
  }
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("error writing " + path.string());
  }
}

Bytes encode_flo(const FlowField& flow) {
  if (flow.width() <= 0 || flow.height() <= 0) {
    throw InputError("encode_flo: empty flow field");
  }
  Bytes out;
  out.reserve(kFloHeaderBytes + flow.extent().pixels() * 8);
  put_f32_le(out, kFloMagic);
  put_u32_le(out, static_cast<std::uint32_t>(flow.width()));
  put_u32_le(out, static_cast<std::uint32_t>(flow.height()));
  const auto u = flow.u();
  const auto v = flow.v();
  for (std::size_t i = 0; i < u.size(); ++i) {
    put_f32_le(out, static_cast<float>(u[i]));
    put_f32_le(out, static_cast<float>(v[i]));
  }
  return out;
}

FlowField decode_flo(std::span<const std::uint8_t> bytes, std::string_view source) {
  if (bytes.size() < kFloHeaderBytes) {
    format_error(source, "truncated .flo header");
  }
  if (get_f32(bytes, 0, true) != kFloMagic) {
    format_error(source, "bad .flo magic (expected PIEH / 202021.25)");
  }
  const auto width = static_cast<std::int32_t>(get_u32(bytes, 4, true));
  const auto height = static_cast<std::int32_t>(get_u32(bytes, 8, true));
  check_dims(width, height, source);

  const Extent extent{width, height};
  check_payload(bytes.size() - kFloHeaderBytes, extent.pixels() * 8, source);
  FlowField flow(extent);
  auto u = flow.u();
  auto v = flow.v();
  std::size_t at = kFloHeaderBytes;
  for (std::size_t i = 0; i < u.size(); ++i, at += 8) {
    u[i] = get_f32(bytes, at, true);
    v[i] = get_f32(bytes, at + 4, true);
  }
  return flow;
}

FlowField read_flo(const std::filesystem::path& path) {
  return decode_flo(read_file(path), path.string());
}

void write_flo(const std::filesystem::path& path, const FlowField& flow) {
  write_file(path, encode_flo(flow));
}

Bytes encode_pfm(const Image& image) {
  if (image.channels() != 1 && image.channels() != 3) {
    throw InputError("encode_pfm: PFM holds 1 or 3 channels");
  }
  if (image.width() <= 0 || image.height() <= 0) {
    throw InputError("encode_pfm: empty image");
  }
  Bytes out;
  append_text(out, image.channels() == 1 ? "Pf\n" : "PF\n");
  append_text(out, std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n");
  append_text(out, "-1.0\n");
  for (int y = image.height() - 1; y >= 0; --y) {
    for (int x = 0; x < image.width(); ++x) {
      for (int c = 0; c < image.channels(); ++c) {
        put_f32_le(out, image.at(x, y, c));
      }
    }
  }
  return out;
}

Image decode_pfm(std::span<const std::uint8_t> bytes, std::string_view source) {
  HeaderReader header(bytes, source);
  const std::string magic = header.token();
  int channels = 0;
  if (magic == "Pf") {
    channels = 1;
  } else if (magic == "PF") {
    channels = 3;
  } else {
    format_error(source, "bad PFM magic '" + magic + "'");
  }
  const std::int64_t width = header.integer("width");
  const std::int64_t height = header.integer("height");
  check_dims(width, height, source);
  const double scale = header.real("scale");
  if (scale == 0.0) {
    format_error(source, "PFM scale must be nonzero");
  }
  const bool little = scale < 0.0;
  const std::size_t start = header.end_of_header();

  const Extent extent{static_cast<int>(width), static_cast<int>(height)};
  check_payload(bytes.size() - start, extent.pixels() * static_cast<std::size_t>(channels) * 4,
                source);
  Image image(extent, channels);
  std::size_t at = start;
  for (int y = image.height() - 1; y >= 0; --y) {
    for (int x = 0; x < image.width(); ++x) {
      for (int c = 0; c < channels; ++c, at += 4) {
        image.at(x, y, c) = get_f32(bytes, at, little);
      }
    }
  }
  return image;
}

Image read_pfm(const std::filesystem::path& path) {
  return decode_pfm(read_file(path), path.string());
}

void write_pfm(const std::filesystem::path& path, const Image& image) {
  write_file(path, encode_pfm(image));
}

SigmaMap::Clamped read_sigma(const std::filesystem::path& path) {
  const Image image = read_pfm(path);
  if (image.channels() != 1) {
    throw FormatError(path.string() + ": sigma map must be a 1-channel PFM");
  }
  const auto samples = image.samples();
  std::vector<double> values(samples.begin(), samples.end());
  try {
    return SigmaMap::from_values_clamped(image.extent(), std::move(values));
  } catch (const NumericError& e) {
    throw NumericError(path.string() + ": " + e.what());
  }
}

void write_sigma(const std::filesystem::path& path, const SigmaMap& sigma) {
  write_pfm(path, sigma_to_image(sigma));
}

Bytes encode_ppm(const Image& image) {
  if (image.channels() != 1 && image.channels() != 3) {
    throw InputError("encode_ppm: PPM/PGM holds 1 or 3 channels");
  }
  if (image.width() <= 0 || image.height() <= 0) {
    throw InputError("encode_ppm: empty image");
  }
  Bytes out;
  append_text(out, image.channels() == 3 ? "P6\n" : "P5\n");
  append_text(out, std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n");
  for (float s : image.samples()) {
    const double clamped = std::clamp(static_cast<double>(s), 0.0, 1.0);
    // std::lround rounds halfway cases away from zero.
    out.push_back(static_cast<std::uint8_t>(std::lround(clamped * 255.0)));
  }
  return out;
}

Image decode_ppm(std::span<const std::uint8_t> bytes, std::string_view source) {
  HeaderReader header(bytes, source);
  const std::string magic = header.token();
  int channels = 0;
  if (magic == "P6") {
    channels = 3;
  } else if (magic == "P5") {
    channels = 1;
  } else {
    format_error(source, "bad PPM magic '" + magic + "' (binary P6/P5 only)");
  }
  const std::int64_t width = header.integer("width");
  const std::int64_t height = header.integer("height");
  check_dims(width, height, source);
  const std::int64_t maxval = header.integer("maxval");
  if (maxval != 255) {
    format_error(source, "unsupported maxval " + std::to_string(maxval) + " (only 255)");
  }
  const std::size_t start = header.end_of_header();

  const Extent extent{static_cast<int>(width), static_cast<int>(height)};
  check_payload(bytes.size() - start, extent.pixels() * static_cast<std::size_t>(channels), source);
  Image image(extent, channels);
  auto samples = image.samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = static_cast<float>(bytes[start + i]) / 255.0f;
  }
  return image;
}

Image read_ppm(const std::filesystem::path& path) {
  return decode_ppm(read_file(path), path.string());
}

void write_ppm(const std::filesystem::path& path, const Image& image) {
  write_file(path, encode_ppm(image));
}

Image flow_to_color(const FlowField& flow, std::optional<double> max_magnitude) {
  flow.require_finite("flow_to_color");
  const auto u = flow.u();
  const auto v = flow.v();

  double scale = 0.0;
  if (max_magnitude) {
    if (!(*max_magnitude > 0.0)) {
      throw InputError("flow_to_color: max magnitude must be positive");
    }
    scale = *max_magnitude;
  } else {
    for (std::size_t i = 0; i < u.size(); ++i) {
      scale = std::max(scale, std::hypot(u[i], v[i]));
    }
    if (scale == 0.0) {
      scale = 1.0;
    }
  }

  Image out(flow.extent(), 3);
  for (int y = 0; y < flow.height(); ++y) {
    for (int x = 0; x < flow.width(); ++x) {
      const Vec2 f = flow.at(x, y);
      const double saturation = std::min(std::hypot(f.x, f.y) / scale, 1.0);
      double hue = std::atan2(f.y, f.x);
      if (hue < 0.0) {
        hue += 2.0 * std::numbers::pi;
      }
      // HSV -> RGB with value 1.
      const double h6 = hue / (std::numbers::pi / 3.0);
      for (int c = 0; c < 3; ++c) {
        const double n = c == 0 ? 5.0 : (c == 1 ? 3.0 : 1.0);
        const double k = std::fmod(n + h6, 6.0);
        const double ramp = std::clamp(std::min(k, 4.0 - k), 0.0, 1.0);
        out.at(x, y, c) = static_cast<float>(1.0 - saturation * ramp);
      }
    }
  }
  return out;
}

}  // namespace arcinterp
