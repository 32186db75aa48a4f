#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rdhe {

/// 8-bit grayscale image, pixels stored row-major.
struct GrayRaster {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;

  std::size_t pixel_count() const noexcept { return std::size_t{width} * height; }
  bool consistent() const noexcept { return pixels.size() == pixel_count(); }

  std::uint8_t at(std::uint32_t x, std::uint32_t y) const { return pixels[std::size_t{y} * width + x]; }

  friend bool operator==(const GrayRaster&, const GrayRaster&) = default;
};

}  // namespace rdhe
