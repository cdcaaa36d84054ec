#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "arcinterp/types.hpp"

namespace arcinterp {

using Bytes = std::vector<std::uint8_t>;

// Middlebury .flo: "PIEH" magic (float 202021.25 little-endian), int32 width,
// int32 height, then interleaved little-endian float32 (u, v), row-major.
Bytes encode_flo(const FlowField& flow);
FlowField decode_flo(std::span<const std::uint8_t> bytes, std::string_view source = "<memory>");
FlowField read_flo(const std::filesystem::path& path);
void write_flo(const std::filesystem::path& path, const FlowField& flow);

// PFM: "Pf" (1 channel) or "PF" (3 channels), "width height", scale line
// whose sign gives the byte order (negative = little-endian), then float32
// rows bottom to top. Written little-endian with scale -1.0.
Bytes encode_pfm(const Image& image);
Image decode_pfm(std::span<const std::uint8_t> bytes, std::string_view source = "<memory>");
Image read_pfm(const std::filesystem::path& path);
void write_pfm(const std::filesystem::path& path, const Image& image);

/// Reads a 1-channel PFM as a sigma map, clamping values beyond +-1.
SigmaMap::Clamped read_sigma(const std::filesystem::path& path);
void write_sigma(const std::filesystem::path& path, const SigmaMap& sigma);

// Binary PPM (P6, 3 channels) or PGM (P5, 1 channel), maxval 255. Bytes map
// to b / 255; writing clamps to [0, 1] and rounds half away from zero.
Bytes encode_ppm(const Image& image);
Image decode_ppm(std::span<const std::uint8_t> bytes, std::string_view source = "<memory>");
Image read_ppm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const Image& image);

/// Color-wheel rendering: hue = atan2(v, u), saturation = |flow| / max
/// (clamped to 1), value 1, so zero flow is white. Without `max_magnitude`
/// the largest magnitude in the field is used.
Image flow_to_color(const FlowField& flow, std::optional<double> max_magnitude = std::nullopt);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace arcinterp
