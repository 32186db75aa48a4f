#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rdhe/poly_codec.hpp"

namespace rdhe {

/// Encrypted image after polynomial encoding, with or without an embedded
/// payload. The body holds one three-byte triple per 2x1 pixel block in
/// row-major scan order, followed by the XOR-encrypted trailing pixel when the
/// pixel count is odd.
struct MarkedContainer {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  codec::EmbedMode mode = codec::EmbedMode::TwoBit;
  bool trailing_pixel = false;
  std::vector<std::uint8_t> body;

  std::size_t pixel_count() const noexcept { return std::size_t{width} * height; }
  std::size_t triple_count() const noexcept { return pixel_count() / 2; }

  /// 3 * floor(m*n / 2), plus one byte for an odd pixel count.
  static std::size_t expected_body_size(std::uint32_t width, std::uint32_t height) noexcept {
    const std::size_t pixels = std::size_t{width} * height;
    return 3 * (pixels / 2) + pixels % 2;
  }

  codec::MarkedTriple triple(std::size_t index) const {
    const std::size_t at = 3 * index;
    return {body[at], body[at + 1], body[at + 2]};
  }

  void set_triple(std::size_t index, codec::MarkedTriple t) {
    const std::size_t at = 3 * index;
    body[at] = t.c2;
    body[at + 1] = t.c1;
    body[at + 2] = t.c0;
  }

  friend bool operator==(const MarkedContainer&, const MarkedContainer&) = default;
};

}  // namespace rdhe
