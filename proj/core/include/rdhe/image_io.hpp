#pragma once

// Binary PGM (P5, maxval 255) and the on-disk container layout:
//
//   "RDHE" | version=1 | mode (1|2) | width u32 BE | height u32 BE |
//   trailing-pixel flag (0|1) | body
//
// Readers throw ParseError (MalformedPayloadError for a body of the wrong size).

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "rdhe/container.hpp"
#include "rdhe/raster.hpp"

namespace rdhe::io {

inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 15;

GrayRaster read_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pgm(const GrayRaster& raster);

MarkedContainer read_container(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_container(const MarkedContainer& container);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace rdhe::io
